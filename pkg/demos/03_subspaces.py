"""
Subspaces, pivots and rank distance
===================================

A subspace is stored by its reduced row echelon basis.  When two subspaces of
the same dimension share their pivot columns, their subspace distance is twice
the rank distance of what is left after deleting those columns.
"""

import numpy as np

from flagforge import MatGF, field_make, rank_distance
from flagforge.subspace import (hamming_distance, identifying_vector, pivot_complement, random_subspace,
                                subspace_distance, subspace_from_matrix)

f = field_make(2, 1)
u = subspace_from_matrix(MatGF(f, [[1, 1, 0, 0], [1, 0, 1, 1]]))
v = subspace_from_matrix(MatGF(f, [[1, 0, 0, 1], [0, 1, 1, 1]]))
print("U basis", u.basis.tolist(), "pivots", identifying_vector(u))
print("V basis", v.basis.tolist(), "pivots", identifying_vector(v))

d = subspace_distance(u, v)
r = rank_distance(pivot_complement(u), pivot_complement(v))
print(f"subspace distance {d}, rank distance of complements {r}")

# random pairs: the pivot pattern never overshoots the distance
rng = np.random.default_rng(1)
g = field_make(3, 1)
for _ in range(5):
    a, b = random_subspace(g, 6, 3, rng), random_subspace(g, 6, 3, rng)
    ia, ib = identifying_vector(a), identifying_vector(b)
    print(ia, ib, "hamming", hamming_distance(ia, ib), "distance", subspace_distance(a, b))
