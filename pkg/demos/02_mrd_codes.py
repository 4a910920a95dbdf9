"""
Gabidulin codes as matrix codes
===============================

Each codeword is a linearized polynomial over GF(q^m) written out as an m x m
matrix over GF(q).  With delta = m the code is just multiplication by the
elements of GF(q^m), so every nonzero codeword is invertible.
"""

from flagforge.matgfq import rank
from flagforge.rankmetric import enumerate_codewords, gabidulin_square, min_rank_distance, truncate_code

code = gabidulin_square(3, 3, 2)
words = enumerate_codewords(code)
print(f"{len(words)} codewords, extension modulus {code.ext_modulus}")
for w in words[:4]:
    print(w.tolist(), "rank", rank(w))

# keeping only the top t rows still gives distance t
for t in (1, 2, 3):
    print("top", t, "rows -> min rank distance", min_rank_distance(truncate_code(words, t)))

# smaller delta means more codewords at a lower distance
code = gabidulin_square(3, 2, 2)
words = enumerate_codewords(code)
print(f"delta=2: {len(words)} codewords, min rank distance {min_rank_distance(words)}")
