"""Three routes to the determinant, and why they agree.

Run with ``python demos/02_determinants.py``.
"""

import random

from grassmann import GF, SquareMatrix, det_cofactor, det_leibniz, det_uniqueness_check, det_wedge

A = SquareMatrix.from_rows([[2, -1, 0], [1, 3, 4], [0, 5, "1/2"]])
print("A =")
for row in A.rows:
    print("  ", " ".join(f"{x:>4}" for x in map(str, row)))
print("Leibniz :", det_leibniz(A))
print("cofactor:", ", ".join(str(det_cofactor(A, r)) for r in (1, 2, 3)), "(rows 1, 2, 3)")
print("wedge   :", det_wedge(A))

# an alternating multilinear functional is fixed by its value c on e1..en
for c in (1, 0, 5):
    print(f"F with F(e1..en)={c}:", det_uniqueness_check(c, A))

# a repeated column kills the top wedge
S = SquareMatrix.from_columns([[1, 2, 3], [4, 5, 6], [1, 2, 3]])
print("\nrepeated column:", det_wedge(S))

# agreement on random input, over Q and over GF(7)
rng = random.Random(0)
for field in (SquareMatrix.identity(1).field, GF(7)):
    ok = 0
    for _ in range(100):
        M = SquareMatrix.random(rng.randint(1, 6), rng, field)
        vals = {det_leibniz(M), det_wedge(M)} | {det_cofactor(M, r) for r in range(1, M.n + 1)}
        ok += len(vals) == 1
    print(f"{field}: {ok}/100 matrices agree")

# the wedge route scales past the Leibniz limit
big = SquareMatrix.random(10, rng)
print("\n10x10: wedge", det_wedge(big), "| cofactor", det_cofactor(big))
