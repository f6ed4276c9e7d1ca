"""Algebra endomorphisms of the exterior algebra and the structure of its automorphism group.

An endomorphism is fixed by the images of the generators; it is well defined
exactly when those images square to zero and pairwise anticommute, and it is
then extended multiplicatively.  Every automorphism factors uniquely as
``sigma = n o g(tau)`` where ``tau`` is its action on ``A_1``, ``g`` lifts a
linear map to the grade-preserving automorphism, and ``n`` acts trivially on
``A_1`` (the kernel ``N``).

Characteristic 2 is refused throughout: odd elements need not square to zero
there.
"""

from __future__ import annotations

import itertools
import random
from typing import Sequence

from .errors import (
    CharacteristicError,
    MorphismValidationError,
    NotAnAutomorphismError,
    SignatureMismatchError,
)
from .exterior import (
    MAX_ENUM_N,
    AlgebraSignature,
    Blade,
    Multivector,
    all_blades,
    basis_enumerate,
    grade_project,
    wedge,
)
from .linalg import EchelonSpan, LinearMap

__all__ = [
    "AlgebraMorphism",
    "morphism_from_images",
    "identity_morphism",
    "apply_morphism",
    "lift_linear",
    "induced_grade_map",
    "is_automorphism",
    "compose",
    "invert_automorphism",
    "semidirect_factor",
    "commutator",
    "inner_derivation",
    "exp_inner_derivation",
    "center_basis",
    "comm_subalgebra_basis",
    "random_automorphism",
    "filtration_degree",
    "PROFILES",
]

PROFILES = ("linear", "inner", "unipotent", "composite")


def _require_char_not_2(sig: AlgebraSignature):
    if sig.field.characteristic == 2:
        raise CharacteristicError(
            "automorphism machinery requires characteristic != 2 "
            "(odd elements need not square to zero in characteristic 2)"
        )


class AlgebraMorphism:
    """Validated endomorphism given by generator images.

    Instances are only created through :func:`morphism_from_images` (or the
    helpers built on it), so ``validated`` is always True.
    """

    __slots__ = ("signature", "images", "validated", "_cache")

    def __init__(self, signature: AlgebraSignature, images: tuple[Multivector, ...], _token=None):
        if _token is not _TOKEN:
            raise TypeError("use morphism_from_images() to build an AlgebraMorphism")
        object.__setattr__(self, "signature", signature)
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "validated", True)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraMorphism is immutable")

    def __call__(self, x: Multivector) -> Multivector:
        return apply_morphism(self, x)

    def image(self, i: int) -> Multivector:
        """Image of ``e_i`` (1-based)."""
        return self.images[i - 1]

    def __eq__(self, other):
        if not isinstance(other, AlgebraMorphism):
            return NotImplemented
        return self.signature == other.signature and self.images == other.images

    def __hash__(self):
        return hash((self.signature, self.images))

    def __repr__(self):
        body = ", ".join(f"e{i}->{img}" for i, img in enumerate(self.images, 1))
        return f"AlgebraMorphism({body})"


_TOKEN = object()


def morphism_from_images(images: Sequence[Multivector], signature: AlgebraSignature | None = None) -> AlgebraMorphism:
    """Validate generator images and build the endomorphism they determine.

    Raises :class:`MorphismValidationError` naming the first pair ``(i, j)``
    whose product ``f(e_i) f(e_j) + f(e_j) f(e_i)`` (or square, for ``i == j``)
    is nonzero.
    """
    images = tuple(images)
    if signature is None:
        if not images:
            raise ValueError("need a signature or at least one image")
        signature = images[0].signature
    if len(images) != signature.n:
        raise ValueError(f"expected {signature.n} images, got {len(images)}")
    for img in images:
        if img.signature != signature:
            raise SignatureMismatchError(f"{img.signature} vs {signature}")
    _require_char_not_2(signature)
    for i, img in enumerate(images, 1):
        if img.coeff(()):
            raise MorphismValidationError(
                f"image of e{i} has a nonzero scalar part", (i, i), grade_project(img, 0)
            )
    for i, j in itertools.combinations_with_replacement(range(len(images)), 2):
        a, b = images[i], images[j]
        if i == j:
            prod = wedge(a, a)
            what = f"f(e{i + 1})^f(e{i + 1})"
        else:
            prod = wedge(a, b) + wedge(b, a)
            what = f"f(e{i + 1})^f(e{j + 1}) + f(e{j + 1})^f(e{i + 1})"
        if prod:
            raise MorphismValidationError(f"{what} = {prod} != 0", (i + 1, j + 1), prod)
    return AlgebraMorphism(signature, images, _TOKEN)


def identity_morphism(sig: AlgebraSignature) -> AlgebraMorphism:
    return morphism_from_images(sig.gens(), sig)


def _blade_image(f: AlgebraMorphism, mask: int) -> Multivector:
    cache = f._cache
    hit = cache.get(mask)
    if hit is not None:
        return hit
    sig = f.signature
    if mask == 0:
        out = sig.one()
    else:
        low = (mask & -mask).bit_length()  # lowest index present
        rest = mask & (mask - 1)
        out = wedge(f.images[low - 1], _blade_image(f, rest))
    cache[mask] = out
    return out


def apply_morphism(f: AlgebraMorphism, x: Multivector) -> Multivector:
    """Extend ``f`` multiplicatively to blades (factors in index order), then linearly."""
    if x.signature != f.signature:
        raise SignatureMismatchError(f"{x.signature} vs {f.signature}")
    acc: dict = {}
    for mask, c in x._terms.items():
        for m, v in _blade_image(f, mask)._terms.items():
            s = acc.get(m)
            acc[m] = c * v if s is None else s + c * v
    return Multivector._from_masks(f.signature, {m: c for m, c in acc.items() if c})


def lift_linear(tau: LinearMap, signature: AlgebraSignature | None = None) -> AlgebraMorphism:
    """The grade-preserving endomorphism ``g(tau)``; column ``j`` of ``tau`` is the image of ``e_j``."""
    if signature is None:
        signature = AlgebraSignature(tau.size, tau.field)
    if tau.size != signature.n or tau.field != signature.field:
        raise SignatureMismatchError(f"{tau.size}x{tau.size} map over {tau.field} vs {signature}")
    return morphism_from_images(
        [signature.vector(tau.column(j)) for j in range(signature.n)], signature
    )


def induced_grade_map(f: AlgebraMorphism, i: int) -> LinearMap:
    """Matrix of the map induced by ``f`` on ``M^i / M^(i+1)``, identified with ``A_i``."""
    sig = f.signature
    if sig.n > MAX_ENUM_N:
        raise ValueError(f"induced maps limited to n <= {MAX_ENUM_N}")
    basis = basis_enumerate(sig, i)
    columns = []
    for b in basis:
        img = grade_project(apply_morphism(f, Multivector(sig, {b: 1})), i)
        columns.append([img.coeff(c) for c in basis])
    return LinearMap.from_columns(columns, sig.field)


def linear_part(f: AlgebraMorphism) -> LinearMap:
    """``f_1(f)``: the action on ``A_1``, read directly from the generator images."""
    sig = f.signature
    cols = [[img.coeff((r,)) for r in range(1, sig.n + 1)] for img in f.images]
    return LinearMap.from_columns(cols, sig.field)


def is_automorphism(f: AlgebraMorphism) -> bool:
    """True iff the induced map on ``A_1`` is invertible.

    Whatever ``f`` does beyond ``A_1`` raises the filtration degree, so the
    remaining factor is unipotent and always invertible (see
    :func:`invert_automorphism`).
    """
    return bool(linear_part(f).determinant())


def compose(f: AlgebraMorphism, g: AlgebraMorphism) -> AlgebraMorphism:
    """``f o g``: apply ``g`` first."""
    if f.signature != g.signature:
        raise SignatureMismatchError(f"{f.signature} vs {g.signature}")
    return morphism_from_images([apply_morphism(f, img) for img in g.images], f.signature)


def _invert_unipotent(u: AlgebraMorphism) -> AlgebraMorphism:
    # u = 1 + eta with eta raising filtration degree, so sum (-eta)^k terminates
    sig = u.signature
    images = []
    for e in sig.gens():
        term, total = e, e
        for _ in range(sig.n + 1):
            term = term - apply_morphism(u, term)  # (-eta)(term)
            if not term:
                break
            total = total + term
        else:
            raise AssertionError("Neumann series failed to terminate")
        images.append(total)
    return morphism_from_images(images, sig)


def invert_automorphism(f: AlgebraMorphism) -> AlgebraMorphism:
    """Exact inverse via ``f = n o g(tau)``, ``f^-1 = g(tau^-1) o n^-1``."""
    n_part, tau = semidirect_factor(f)
    return compose(lift_linear(tau.inverse(), f.signature), _invert_unipotent(n_part))


def semidirect_factor(sigma: AlgebraMorphism) -> tuple[AlgebraMorphism, LinearMap]:
    """Split ``sigma`` as ``n_part o lift_linear(tau)`` with ``n_part`` trivial on ``A_1``."""
    if not is_automorphism(sigma):
        raise NotAnAutomorphismError("linear part is singular")
    tau = linear_part(sigma)
    n_part = compose(sigma, lift_linear(tau.inverse(), sigma.signature))
    return n_part, tau


def commutator(a: Multivector, b: Multivector) -> Multivector:
    return wedge(a, b) - wedge(b, a)


def inner_derivation(a: Multivector):
    """``D_a : x -> a^x - x^a`` as a callable."""
    return lambda x: commutator(a, x)


def exp_inner_derivation(a: Multivector) -> AlgebraMorphism:
    """``exp(D_a) = 1 + D_a`` for odd ``a``; ``D_a`` squares to zero so the series stops."""
    if grade_project(a, "even"):
        raise ValueError("exp(D_a) requires a purely odd element a")
    sig = a.signature
    _require_char_not_2(sig)
    return morphism_from_images([e + commutator(a, e) for e in sig.gens()], sig)


def center_basis(sig: AlgebraSignature) -> list[Blade]:
    """Blades commuting with every generator, found by brute force."""
    if sig.n > 12:
        raise ValueError("center_basis limited to n <= 12")
    gens = sig.gens()
    return [
        b
        for b in all_blades(sig)
        if not any(commutator(Multivector(sig, {b: 1}), e) for e in gens)
    ]


def comm_subalgebra_basis(sig: AlgebraSignature) -> list[Blade]:
    """Blade basis of the subalgebra generated by all commutators.

    The span of ``{1}`` and the commutators of basis blades is closed under
    the wedge product until it stops growing.  For ``n = 1`` the algebra is
    commutative and the answer is ``[()]``.
    """
    if sig.n > 10:
        raise ValueError("comm_subalgebra_basis limited to n <= 10")
    blades = [Multivector(sig, {b: 1}) for b in all_blades(sig)]
    span = EchelonSpan()
    span.add(sig.one())
    for x, y in itertools.combinations(blades, 2):
        span.add(commutator(x, y))
    grew = True
    while grew:
        basis = span.basis()
        grew = span.extend(wedge(x, y) for x in basis for y in basis)
    out = []
    for v in span.basis():
        if len(v) != 1:
            raise AssertionError(f"commutator span is not spanned by blades: {v}")
        out.append(next(iter(v.terms)))
    return out


def filtration_degree(x: Multivector) -> int | None:
    """Lowest grade present; ``None`` stands for the zero element (bottom)."""
    return min(x.grades()) if x else None


# --- random sampling over the automorphism group ------------------------


def _random_odd(sig: AlgebraSignature, rng: random.Random, min_grade: int = 1, max_terms: int = 4) -> Multivector:
    grades = [k for k in range(min_grade, sig.n + 1) if k % 2 == 1]
    return sig.random(rng, grades, max_terms=max_terms)


def random_automorphism(sig: AlgebraSignature, rng, profile: str = "composite") -> AlgebraMorphism:
    """Sample an automorphism; ``rng`` is a seed or a :class:`random.Random`.

    ``linear``: lift of a random invertible map; ``inner``: ``exp(D_a)`` for a
    random odd ``a``; ``unipotent``: ``e_i -> e_i + w_i`` with ``w_i`` odd of
    grade >= 3; ``composite``: inner o linear o unipotent.
    """
    _require_char_not_2(sig)
    if sig.n > 12:
        raise ValueError("random_automorphism limited to n <= 12")
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    if profile == "linear":
        return lift_linear(LinearMap.random_invertible(sig.n, rng, sig.field), sig)
    if profile == "inner":
        return exp_inner_derivation(_random_odd(sig, rng))
    if profile == "unipotent":
        return morphism_from_images(
            [e + _random_odd(sig, rng, min_grade=3, max_terms=3) for e in sig.gens()], sig
        )
    if profile == "composite":
        inner = random_automorphism(sig, rng, "inner")
        lin = random_automorphism(sig, rng, "linear")
        uni = random_automorphism(sig, rng, "unipotent")
        return compose(inner, compose(lin, uni))
    raise ValueError(f"unknown profile {profile!r}; expected one of {PROFILES}")
