"""Exact matrices over a :class:`FieldSpec` and echelon spans of multivectors."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .exterior import Multivector, _sort_key
from .scalars import QQ, FieldSpec, Scalar


@dataclass(frozen=True)
class LinearMap:
    """A square matrix acting on coordinate columns.

    For maps on ``A_k`` the rows and columns follow ``basis_enumerate`` order;
    column ``j`` holds the image of the ``j``-th basis blade.
    """

    rows: tuple[tuple[Scalar, ...], ...]
    field: FieldSpec = QQ

    def __post_init__(self):
        rows = tuple(tuple(self.field(x) for x in r) for r in self.rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("LinearMap must be square")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, n: int, field: FieldSpec = QQ) -> LinearMap:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), field)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], field: FieldSpec = QQ) -> LinearMap:
        return cls(tuple(zip(*columns)) if columns else (), field)

    @classmethod
    def random_invertible(cls, n: int, rng: random.Random, field: FieldSpec = QQ) -> LinearMap:
        while True:
            m = cls(
                tuple(tuple(field.random(rng, 3, fractions=False) for _ in range(n)) for _ in range(n)),
                field,
            )
            if m.determinant():
                return m

    @property
    def size(self) -> int:
        return len(self.rows)

    def column(self, j: int) -> tuple[Scalar, ...]:
        """0-based column."""
        return tuple(r[j] for r in self.rows)

    def __matmul__(self, other: LinearMap) -> LinearMap:
        cols = list(zip(*other.rows))
        return LinearMap(
            tuple(
                tuple(sum((a * b for a, b in zip(r, c)), self.field.zero) for c in cols)
                for r in self.rows
            ),
            self.field,
        )

    def is_identity(self) -> bool:
        return all(x == (i == j) for i, r in enumerate(self.rows) for j, x in enumerate(r))

    def _eliminate(self, augment: bool):
        n = self.size
        fld = self.field
        m = [list(r) + ([fld(int(i == j)) for j in range(n)] if augment else []) for i, r in enumerate(self.rows)]
        det = fld.one
        for col in range(n):
            piv = next((r for r in range(col, n) if m[r][col]), None)
            if piv is None:
                return fld.zero, None
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                det = -det
            p = m[col][col]
            det = det * p
            inv = fld.one / p
            m[col] = [x * inv for x in m[col]]
            for r in range(n):
                if r != col and m[r][col]:
                    f = m[r][col]
                    m[r] = [a - f * b for a, b in zip(m[r], m[col])]
        return det, m

    def determinant(self) -> Scalar:
        if self.size == 0:
            return self.field.one
        return self._eliminate(False)[0]

    def inverse(self) -> LinearMap:
        if self.size == 0:
            return self
        det, m = self._eliminate(True)
        if m is None:
            raise ZeroDivisionError("singular linear map")
        n = self.size
        return LinearMap(tuple(tuple(r[n:]) for r in m), self.field)

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)


class EchelonSpan:
    """Row-reduced basis of a subspace of the algebra, grown one vector at a time."""

    def __init__(self):
        self._rows: dict[int, Multivector] = {}  # pivot mask -> row with coefficient 1 there

    def __len__(self):
        return len(self._rows)

    def reduce(self, x: Multivector) -> Multivector:
        for _ in range(len(self._rows) + 1):
            hit = next((m for m in x._terms if m in self._rows), None)
            if hit is None:
                return x
            x = x - self._rows[hit].scale(x._terms[hit])
        return x

    def add(self, x: Multivector) -> bool:
        """Insert ``x``; return True when the span grew."""
        x = self.reduce(x)
        if not x:
            return False
        pivot = min(x._terms, key=_sort_key)
        x = x.scale(x.field.one / x._terms[pivot])
        for m, row in list(self._rows.items()):
            if pivot in row._terms:
                self._rows[m] = row - x.scale(row._terms[pivot])
        self._rows[pivot] = x
        return True

    def extend(self, xs: Iterable[Multivector]) -> bool:
        grew = False
        for x in xs:
            grew |= self.add(x)
        return grew

    def contains(self, x: Multivector) -> bool:
        return not self.reduce(x)

    def basis(self) -> list[Multivector]:
        return [self._rows[m] for m in sorted(self._rows, key=_sort_key)]
