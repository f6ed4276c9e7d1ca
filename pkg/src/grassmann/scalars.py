"""Exact scalars over the rationals and over prime fields.

Rational scalars are plain :class:`fractions.Fraction` objects, which are
already stored reduced with a positive denominator.  Prime-field scalars are
:class:`Residue` objects holding a representative in ``[0, p)``.
"""

from __future__ import annotations

import math
import operator
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import FieldMismatchError, ParseError

__all__ = [
    "FieldSpec",
    "Residue",
    "Scalar",
    "QQ",
    "GF",
    "field_arith",
    "field_of",
    "is_prime",
]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))


class Residue:
    """An element of the prime field of order ``p``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "value", value % p)

    def __setattr__(self, name, value):
        raise AttributeError("Residue is immutable")

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.p != self.p:
                raise FieldMismatchError(f"GF({self.p}) vs GF({other.p})")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            raise FieldMismatchError(f"GF({self.p}) vs QQ")
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> Residue:
        if self.value == 0:
            raise ZeroDivisionError(f"zero has no inverse in GF({self.p})")
        return Residue(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * Residue(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(o, self.p) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return Residue(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Residue({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


Scalar = Union[Fraction, Residue]

_SCALAR_RE = re.compile(r"\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (``p is None``) or the prime field of order ``p``."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def kind(self) -> str:
        return "rationals" if self.p is None else "prime_field"

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def label(self) -> str:
        return "q" if self.p is None else f"fp:{self.p}"

    @classmethod
    def from_label(cls, label: str) -> FieldSpec:
        label = label.strip().lower()
        if label in ("q", "qq", "rationals"):
            return cls()
        m = re.fullmatch(r"(?:fp|gf):?(\d+)", label)
        if m is None:
            raise ValueError(f"unknown field {label!r}; expected 'q' or 'fp:P'")
        return cls(int(m.group(1)))

    def __call__(self, value) -> Scalar:
        """Coerce ``value`` (int, Fraction, Residue or literal string)."""
        if isinstance(value, str):
            return self.parse(value)
        if self.p is None:
            if isinstance(value, Residue):
                raise FieldMismatchError(f"GF({value.p}) vs QQ")
            return Fraction(value)
        if isinstance(value, Residue):
            if value.p != self.p:
                raise FieldMismatchError(f"GF({value.p}) vs GF({self.p})")
            return value
        if isinstance(value, Fraction):
            return Residue(value.numerator, self.p) / value.denominator
        return Residue(operator.index(value), self.p)

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def contains(self, x) -> bool:
        if self.p is None:
            return isinstance(x, Fraction)
        return isinstance(x, Residue) and x.p == self.p

    def parse(self, text: str) -> Scalar:
        """Parse ``int`` or ``int/posint``."""
        m = _SCALAR_RE.match(text)
        if m is None:
            raise ParseError(f"invalid scalar literal {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise ParseError(f"zero denominator in {text!r}")
        if self.p is not None and den % self.p == 0:
            raise ParseError(f"denominator {den} vanishes in GF({self.p})")
        return self(Fraction(num, den))

    def format(self, x: Scalar) -> str:
        return str(x)

    def random(self, rng: random.Random, bound: int = 3, fractions: bool = True) -> Scalar:
        """Small random scalar, zero included."""
        if self.p is not None:
            return Residue(rng.randrange(self.p), self.p)
        num = rng.randint(-bound, bound)
        den = rng.randint(1, bound) if fractions else 1
        return Fraction(num, den)

    def random_nonzero(self, rng: random.Random, bound: int = 3, fractions: bool = True) -> Scalar:
        while True:
            x = self.random(rng, bound, fractions)
            if x:
                return x

    def __str__(self):
        return "QQ" if self.p is None else f"GF({self.p})"


QQ = FieldSpec()


def GF(p: int) -> FieldSpec:
    return FieldSpec(p)


def field_of(x: Scalar) -> FieldSpec:
    if isinstance(x, Residue):
        return FieldSpec(x.p)
    if isinstance(x, (Fraction, int)):
        return QQ
    raise TypeError(f"not a field scalar: {x!r}")


_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def field_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Apply ``op`` in {add, sub, mul, div} to two scalars of one field."""
    fa, fb = field_of(a), field_of(b)
    if fa != fb:
        raise FieldMismatchError(f"{fa} vs {fb}")
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fa(fn(fa(a), fa(b)))
