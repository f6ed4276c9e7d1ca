"""Blades, sparse multivectors and the wedge product.

A blade ``e_I`` is identified with its strictly increasing index tuple ``I``;
internally it is stored as a bitmask with bit ``i - 1`` set for index ``i``.
A :class:`Multivector` is an immutable map from blades to nonzero scalars.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence, Tuple, Union

from .errors import SignatureMismatchError
from .scalars import QQ, FieldSpec, Scalar

__all__ = [
    "AlgebraSignature",
    "Blade",
    "Multivector",
    "blade_wedge_sign",
    "wedge",
    "add_scale",
    "grade_project",
    "basis_enumerate",
    "MAX_N",
    "MAX_ENUM_N",
]

MAX_N = 62
MAX_ENUM_N = 16

Blade = Tuple[int, ...]
GradeSelector = Union[int, str]


@lru_cache(maxsize=None)
def blade_to_mask(blade: Blade) -> int:
    mask = 0
    for i in blade:
        mask |= 1 << (i - 1)
    return mask


@lru_cache(maxsize=None)
def mask_to_blade(mask: int) -> Blade:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _sort_key(mask: int):
    return (bin(mask).count("1"), mask_to_blade(mask))


@lru_cache(maxsize=1 << 16)
def _mask_sign(u: int, v: int) -> int:
    # parity of #{(i in u, j in v) : i > j}
    u >>= 1
    count = 0
    while u:
        count += bin(u & v).count("1")
        u >>= 1
    return -1 if count & 1 else 1


def blade_wedge_sign(u: Blade, v: Blade) -> tuple[int, Blade | None]:
    """Return ``(sign, blade)`` with ``e_u ^ e_v = sign * e_blade``.

    The sign is 0 (and the blade ``None``) when the index sets overlap.
    """
    mu, mv = blade_to_mask(tuple(u)), blade_to_mask(tuple(v))
    if mu & mv:
        return 0, None
    return _mask_sign(mu, mv), mask_to_blade(mu | mv)


@dataclass(frozen=True)
class AlgebraSignature:
    """Exterior algebra on ``n`` generators over ``field``."""

    n: int
    field: FieldSpec = QQ

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"n must lie in [1, {MAX_N}], got {self.n}")

    @property
    def dimension(self) -> int:
        return 1 << self.n

    def zero(self) -> Multivector:
        return Multivector(self, {})

    def one(self) -> Multivector:
        return self.scalar(1)

    def scalar(self, c) -> Multivector:
        return Multivector(self, {(): c})

    def gen(self, i: int) -> Multivector:
        return Multivector(self, {(i,): 1})

    def gens(self) -> list[Multivector]:
        return [self.gen(i) for i in range(1, self.n + 1)]

    def blade(self, indices: Sequence[int], coeff=1) -> Multivector:
        """``coeff * e_{i1} ^ ... ^ e_{ik}`` for indices in any order."""
        x = self.scalar(coeff)
        for i in indices:
            x = x ^ self.gen(i)
        return x

    def vector(self, coords: Sequence) -> Multivector:
        """Grade-1 element with the given coordinates on ``e_1..e_n``."""
        if len(coords) != self.n:
            raise ValueError(f"expected {self.n} coordinates, got {len(coords)}")
        return Multivector(self, {(i + 1,): c for i, c in enumerate(coords)})

    def random(
        self,
        rng: random.Random,
        grades: Iterable[int] | None = None,
        max_terms: int = 6,
        density: float | None = None,
    ) -> Multivector:
        """Sparse random element supported on ``grades`` (all grades by default)."""
        grades = range(self.n + 1) if grades is None else [k for k in grades if 0 <= k <= self.n]
        grades = list(grades)
        if not grades:
            return self.zero()
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            k = rng.choice(grades)
            blade = tuple(sorted(rng.sample(range(1, self.n + 1), k)))
            terms[blade] = self.field.random_nonzero(rng)
        return Multivector(self, terms)


class Multivector:
    """Immutable element of the exterior algebra of ``signature``.

    ``terms`` maps blades (index tuples) to scalars; zero coefficients are
    dropped, unordered or repeated indices are rejected (use
    :meth:`AlgebraSignature.blade` to build a blade from unsorted indices).
    """

    __slots__ = ("signature", "_terms", "_hash")

    def __init__(self, signature: AlgebraSignature, terms: Mapping[Blade, object] = ()):
        field = signature.field
        n = signature.n
        data: dict[int, Scalar] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for blade, c in items:
            blade = tuple(blade)
            if any(not 1 <= i <= n for i in blade):
                raise ValueError(f"blade {blade} out of range for n={n}")
            if any(a >= b for a, b in zip(blade, blade[1:])):
                raise ValueError(f"blade {blade} is not strictly increasing")
            c = field(c)
            if c:
                mask = blade_to_mask(blade)
                data[mask] = data.get(mask, field.zero) + c
                if not data[mask]:
                    del data[mask]
        object.__setattr__(self, "signature", signature)
        object.__setattr__(self, "_terms", data)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _from_masks(cls, signature: AlgebraSignature, data: dict[int, Scalar]) -> Multivector:
        # trusted constructor: data already canonical, zero-free
        obj = object.__new__(cls)
        object.__setattr__(obj, "signature", signature)
        object.__setattr__(obj, "_terms", data)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # --- inspection ---------------------------------------------------

    @property
    def field(self) -> FieldSpec:
        return self.signature.field

    @property
    def terms(self) -> Mapping[Blade, Scalar]:
        """Blade -> coefficient in canonical order (grade-major, then lexicographic)."""
        return MappingProxyType({mask_to_blade(m): self._terms[m] for m in self._sorted_masks()})

    def _sorted_masks(self) -> list[int]:
        return sorted(self._terms, key=_sort_key)

    def items(self) -> Iterator[tuple[Blade, Scalar]]:
        for m in self._sorted_masks():
            yield mask_to_blade(m), self._terms[m]

    def coeff(self, blade: Sequence[int]) -> Scalar:
        return self._terms.get(blade_to_mask(tuple(blade)), self.field.zero)

    def grades(self) -> set[int]:
        return {bin(m).count("1") for m in self._terms}

    def is_zero(self) -> bool:
        return not self._terms

    def is_homogeneous(self) -> bool:
        return len(self.grades()) <= 1

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return self.signature == other.signature and self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash((self.signature, frozenset(self._terms.items())))
            )
        return self._hash

    def __repr__(self):
        from .parsing import format_canonical

        return f"Multivector(n={self.signature.n}, {format_canonical(self)!r})"

    def __str__(self):
        from .parsing import format_canonical

        return format_canonical(self)

    # --- arithmetic ---------------------------------------------------

    def _check(self, other: Multivector):
        if other.signature != self.signature:
            raise SignatureMismatchError(f"{self.signature} vs {other.signature}")

    def _lift(self, other) -> Multivector:
        if isinstance(other, Multivector):
            self._check(other)
            return other
        return self.signature.scalar(other)

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return add_scale(self, other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return add_scale(self, other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Multivector._from_masks(self.signature, {m: -c for m, c in self._terms.items()})

    def scale(self, c) -> Multivector:
        c = self.field(c)
        if not c:
            return self.signature.zero()
        return Multivector._from_masks(self.signature, {m: c * v for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return NotImplemented
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __xor__(self, other):
        if isinstance(other, Multivector):
            return wedge(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rxor__(self, other):
        return self.__xor__(other)


def _require_same(x: Multivector, y: Multivector):
    if x.signature != y.signature:
        raise SignatureMismatchError(f"{x.signature} vs {y.signature}")


def wedge(x: Multivector, y: Multivector) -> Multivector:
    """Exterior product, bilinear extension of :func:`blade_wedge_sign`."""
    _require_same(x, y)
    out: dict[int, Scalar] = {}
    for mu, cu in x._terms.items():
        for mv, cv in y._terms.items():
            if mu & mv:
                continue
            c = cu * cv
            if _mask_sign(mu, mv) < 0:
                c = -c
            key = mu | mv
            prev = out.get(key)
            out[key] = c if prev is None else prev + c
    return Multivector._from_masks(x.signature, {m: c for m, c in out.items() if c})


def wedge_all(factors: Iterable[Multivector], signature: AlgebraSignature) -> Multivector:
    acc = signature.one()
    for f in factors:
        acc = wedge(acc, f)
    return acc


def add_scale(x: Multivector, y: Multivector, c) -> Multivector:
    """``x + c*y``."""
    _require_same(x, y)
    c = x.field(c)
    out = dict(x._terms)
    if c:
        for m, v in y._terms.items():
            s = out.get(m)
            s = c * v if s is None else s + c * v
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return Multivector._from_masks(x.signature, out)


def _selector(n: int, k: GradeSelector):
    if k == "even":
        return lambda g: g % 2 == 0
    if k == "odd":
        return lambda g: g % 2 == 1
    if k == "top":
        return lambda g: g == n
    if isinstance(k, int) and not isinstance(k, bool):
        if not 0 <= k <= n:
            raise ValueError(f"grade {k} out of range [0, {n}]")
        return lambda g: g == k
    raise ValueError(f"unknown grade selector {k!r}")


def grade_project(x: Multivector, k: GradeSelector) -> Multivector:
    """Part of ``x`` whose grade matches ``k`` (an int, 'even', 'odd' or 'top')."""
    keep = _selector(x.signature.n, k)
    return Multivector._from_masks(
        x.signature, {m: c for m, c in x._terms.items() if keep(bin(m).count("1"))}
    )


def basis_enumerate(sig: AlgebraSignature, k: int) -> list[Blade]:
    """All grade-``k`` blades, lexicographically ordered."""
    if sig.n > MAX_ENUM_N:
        raise ValueError(f"enumeration limited to n <= {MAX_ENUM_N}, got n={sig.n}")
    if not 0 <= k <= sig.n:
        raise ValueError(f"grade {k} out of range [0, {sig.n}]")
    return list(itertools.combinations(range(1, sig.n + 1), k))


def all_blades(sig: AlgebraSignature) -> list[Blade]:
    """Every blade, grade-major."""
    return [b for k in range(sig.n + 1) for b in basis_enumerate(sig, k)]


def basis_dimension(n: int, k: int) -> int:
    return math.comb(n, k)
