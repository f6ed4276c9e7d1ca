"""Wedge products in three dimensions.

Run with ``python demos/01_wedge_products.py``.
"""

from fractions import Fraction

from grassmann import AlgebraSignature, grade_project, parse_expr, wedge

A = AlgebraSignature(3)
e1, e2, e3 = A.gens()

# the sign rule
print("e2^e1          =", e2 ^ e1)
print("e1^e2^e1       =", e1 ^ e2 ^ e1)
print("(e1+e2)^(e1+e2) =", wedge(e1 + e2, e1 + e2))

# two vectors give the cross-product coordinates on the bivector basis
x = A.vector([1, 2, 3])
y = A.vector([4, 5, 6])
print("\nx^y =", x ^ y)

# three vectors give the determinant on the top blade
z = A.vector([Fraction(1, 2), 0, 7])
print("x^y^z =", x ^ y ^ z)

# expressions parse straight into canonical form
w = parse_expr("2 + 3*e2^e1 - e3 + 1/2*e1^e2^e3", A)
print("\nw =", w)
for k in range(4):
    print(f"  grade {k}:", grade_project(w, k))
print("  even part:", grade_project(w, "even"))

# graded commutativity: odd with odd anticommutes, everything else commutes
b = e1 ^ e2
print("\ne1^e3 vs e3^e1:", e1 ^ e3, "|", e3 ^ e1)
print("b^e3 vs e3^b:  ", b ^ e3, "|", e3 ^ b)
