"""Automorphisms of the exterior algebra: validation, inner automorphisms, factorization.

Run with ``python demos/03_automorphisms.py``.
"""

from grassmann import (
    AlgebraSignature,
    LinearMap,
    MorphismValidationError,
    compose,
    exp_inner_derivation,
    invert_automorphism,
    lift_linear,
    morphism_from_images,
    random_automorphism,
    semidirect_factor,
)
from grassmann.morphisms import identity_morphism

A = AlgebraSignature(4)
e1, e2, e3, e4 = A.gens()

# generator images must square to zero and anticommute
try:
    morphism_from_images([e1 + (e2 ^ e3), e2, e3, e4])
except MorphismValidationError as err:
    print("rejected:", err)

f = morphism_from_images([e1 + (e2 ^ e3 ^ e4), e2, e3, e4])
print("odd tail accepted:", f)

# exp(D_a) = 1 + D_a for odd a
g = exp_inner_derivation(e1)
print("\nexp(D_e1):", g)
print("  on e2^e3:", g(e2 ^ e3))
print("  inverse :", invert_automorphism(g))

# every automorphism is n o g(tau) with n trivial on degree one
B = AlgebraSignature(3)
sigma = random_automorphism(B, 11)
n_part, tau = semidirect_factor(sigma)
print("\nsigma =", sigma)
print("tau (columns are images of e1..e3):")
print(tau)
print("n_part =", n_part)
print("recomposes:", compose(n_part, lift_linear(tau, B)) == sigma)
print("inverse round trip:", compose(invert_automorphism(sigma), sigma) == identity_morphism(B))

# the section is a group homomorphism
s = LinearMap.from_columns([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 2]])
print("g(s)g(s) == g(s s):", compose(lift_linear(s), lift_linear(s)) == lift_linear(s @ s))
