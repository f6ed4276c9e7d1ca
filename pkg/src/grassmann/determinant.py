"""Determinants computed three independent ways.

* :func:`det_leibniz` sums over all permutations;
* :func:`det_cofactor` expands along a chosen row, recursing on minors;
* :func:`det_wedge` wedges the columns and reads off the top coefficient.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from .exterior import AlgebraSignature, wedge
from .scalars import QQ, FieldSpec, Scalar

__all__ = [
    "SquareMatrix",
    "det_leibniz",
    "det_cofactor",
    "det_wedge",
    "det_uniqueness_check",
    "permutation_sign",
    "LEIBNIZ_MAX_N",
]

LEIBNIZ_MAX_N = 8


@dataclass(frozen=True)
class SquareMatrix:
    """``rows[i][j]`` is the entry in row ``i + 1``, column ``j + 1``."""

    rows: tuple[tuple[Scalar, ...], ...]
    field: FieldSpec = QQ

    def __post_init__(self):
        rows = tuple(tuple(self.field(x) for x in row) for row in self.rows)
        n = len(rows)
        if n == 0:
            raise ValueError("empty matrix")
        if any(len(r) != n for r in rows):
            raise ValueError("matrix is not square")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: FieldSpec = QQ) -> SquareMatrix:
        return cls(tuple(tuple(r) for r in rows), field)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], field: FieldSpec = QQ) -> SquareMatrix:
        return cls(tuple(zip(*columns)), field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec = QQ) -> SquareMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), field)

    @classmethod
    def random(cls, n: int, rng: random.Random, field: FieldSpec = QQ, bound: int = 5) -> SquareMatrix:
        return cls(
            tuple(tuple(field.random(rng, bound) for _ in range(n)) for _ in range(n)), field
        )

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Scalar:
        """1-based access to ``a_ij``."""
        return self.rows[i - 1][j - 1]

    def column(self, j: int) -> tuple[Scalar, ...]:
        return tuple(row[j - 1] for row in self.rows)

    def transpose(self) -> SquareMatrix:
        return SquareMatrix(tuple(zip(*self.rows)), self.field)

    def minor(self, i: int, j: int) -> SquareMatrix:
        """Delete row ``i`` and column ``j`` (1-based)."""
        return SquareMatrix(
            tuple(
                tuple(x for c, x in enumerate(row, 1) if c != j)
                for r, row in enumerate(self.rows, 1)
                if r != i
            ),
            self.field,
        )

    def __matmul__(self, other: SquareMatrix) -> SquareMatrix:
        cols = list(zip(*other.rows))
        return SquareMatrix(
            tuple(
                tuple(sum((a * b for a, b in zip(row, col)), self.field.zero) for col in cols)
                for row in self.rows
            ),
            self.field,
        )


def permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
    return -1 if inversions % 2 else 1


def det_leibniz(A: SquareMatrix) -> Scalar:
    if A.n > LEIBNIZ_MAX_N:
        raise ValueError(f"Leibniz formula limited to n <= {LEIBNIZ_MAX_N}, got {A.n}")
    total = A.field.zero
    for perm in itertools.permutations(range(A.n)):
        prod = A.field.one
        for i, j in enumerate(perm):
            prod = prod * A.rows[i][j]
            if not prod:
                break
        if prod:
            total = total + prod if permutation_sign(perm) > 0 else total - prod
    return total


def det_cofactor(A: SquareMatrix, row: int = 1) -> Scalar:
    """Laplace expansion along ``row`` (1-based).

    Minors below the first level expand along their top remaining row and are
    memoized by the set of surviving columns.
    """
    n = A.n
    if not 1 <= row <= n:
        raise ValueError(f"row {row} out of range [1, {n}]")
    fld = A.field
    rest = [r for r in range(n) if r != row - 1]
    memo: dict[tuple[int, ...], Scalar] = {}

    def sub(depth: int, cols: tuple[int, ...]) -> Scalar:
        # det of rows rest[depth:] restricted to cols
        if not cols:
            return fld.one
        hit = memo.get(cols)
        if hit is not None:
            return hit
        r = A.rows[rest[depth]]
        total = fld.zero
        for pos, c in enumerate(cols):
            a = r[c]
            if not a:
                continue
            term = a * sub(depth + 1, cols[:pos] + cols[pos + 1 :])
            total = total + term if pos % 2 == 0 else total - term
        memo[cols] = total
        return total

    total = fld.zero
    all_cols = tuple(range(n))
    for j in range(n):
        a = A.rows[row - 1][j]
        if not a:
            continue
        cofactor = sub(0, all_cols[:j] + all_cols[j + 1 :])
        term = a * cofactor
        total = total + term if (row - 1 + j) % 2 == 0 else total - term
    return total


def det_wedge(A: SquareMatrix) -> Scalar:
    """Coefficient of ``e_1 ^ ... ^ e_n`` in ``v_1 ^ ... ^ v_n``, ``v_j`` the columns."""
    sig = AlgebraSignature(A.n, A.field)
    acc = sig.one()
    for j in range(1, A.n + 1):
        acc = wedge(acc, sig.vector(A.column(j)))
        if not acc:
            return A.field.zero
    return acc.coeff(tuple(range(1, A.n + 1)))


def det_uniqueness_check(c, A: SquareMatrix) -> Scalar:
    """Evaluate the alternating multilinear functional with ``F(e_1..e_n) = c`` on the columns of ``A``.

    The functional is realized through the one-dimensional top power: the
    wedge of the columns is a multiple of ``e_1 ^ ... ^ e_n`` and ``F`` scales
    that multiple by ``c``.
    """
    return A.field(c) * det_wedge(A)
