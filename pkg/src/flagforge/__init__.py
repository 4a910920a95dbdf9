"""Optimum distance flag codes from square MRD codes.

Typical use::

    from flagforge import construct_odfc, verify_odfc
    code = construct_odfc(5, 2, f=2)
    report = verify_odfc(code)
"""

from .analysis import (VerificationReport, cdc_upper_bound, is_disjoint, max_flag_distance_bound,
                       min_flag_distance, odfc_bounds, odfc_size_formula, partial_spread_check,
                       projected_code, verify_odfc)
from .flag import (Flag, FlagCode, FlagType, build_matrix_set, construct_odfc, flag_distance,
                   flag_from_matrix, flag_type_set)
from .galois import FieldElement, FieldSpec, field_make, field_of_order
from .matgfq import MatGF, inv_rref, rank, rref
from .rankmetric import MrdCode, enumerate_codewords, gabidulin_square, rank_distance
from .subspace import Subspace, subspace_distance, subspace_from_matrix

__version__ = "0.1.0"
