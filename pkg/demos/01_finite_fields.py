"""
Finite fields as integer codes
==============================

Elements of GF(p^e) are plain ints whose base-p digits are polynomial
coefficients, constant term first.  Arithmetic runs through log/exp tables so
it vectorises over numpy arrays.
"""

import numpy as np

from flagforge import field_make

# GF(4): the modulus is the first monic irreducible in encoding order, x^2 + x + 1
f = field_make(2, 2)
print(f, "modulus", f.modulus)

# multiplication table; 2 encodes x, so x*x = x + 1 shows up as 3
els = np.arange(f.q)
print(f.mul(els[:, None], els[None, :]))

# inverses, element-wise
print("inverses of 1..3:", f.inv(els[1:]))

# a bigger field, same interface
g = field_make(3, 4)
x = g.element(3)          # digits (0, 1, 0, 0) -> the polynomial x
print(g, "order of x:", next(n for n in range(1, g.q) if (x ** n).value == 1))
print("x^5 has coefficients", (x ** 5).coeffs)
