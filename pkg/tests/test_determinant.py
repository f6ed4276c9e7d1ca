import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grassmann import GF, AlgebraSignature, SquareMatrix, det_cofactor, det_leibniz, det_uniqueness_check, det_wedge
from oracles import gauss_det, leibniz_plain

METHODS = [det_leibniz, det_cofactor, det_wedge]


def small_matrices(max_n=5):
    entry = st.fractions(-6, 6, max_denominator=3)
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(entry, min_size=n, max_size=n), min_size=n, max_size=n)
    ).map(SquareMatrix.from_rows)


@pytest.mark.parametrize("det", METHODS, ids=lambda f: f.__name__)
def test_examples(det):
    assert det(SquareMatrix.identity(3)) == 1
    assert det(SquareMatrix.from_rows([[1, 2], [3, 4]])) == -2
    assert det(SquareMatrix.from_rows([[1, 2, 3], [4, 5, 6], [1, 2, 3]])) == 0
    assert det(SquareMatrix.from_columns([[1, 2, 3], [0, 1, 5], [1, 2, 3]])) == 0


def test_cofactor_every_row_of_identity():
    for n in range(1, 7):
        I = SquareMatrix.identity(n)
        assert {det_cofactor(I, r) for r in range(1, n + 1)} == {1}
    with pytest.raises(ValueError):
        det_cofactor(SquareMatrix.identity(2), 3)


def test_wedge_matches_trivector_formula():
    rng = random.Random(1)
    for _ in range(20):
        x, y, z = ([Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(3)] for _ in range(3))
        A = SquareMatrix.from_columns([x, y, z])
        x1, x2, x3 = x
        y1, y2, y3 = y
        z1, z2, z3 = z
        want = x1 * y2 * z3 - x1 * y3 * z2 - x2 * y1 * z3 + x2 * y3 * z1 + x3 * y1 * z2 - x3 * y2 * z1
        assert det_wedge(A) == want


def test_uniqueness_examples():
    A = SquareMatrix.from_rows([[1, 2], [3, 4]])
    assert det_uniqueness_check(1, A) == -2
    assert det_uniqueness_check(0, A) == 0
    assert det_uniqueness_check(5, SquareMatrix.identity(4)) == 5


@given(small_matrices())
def test_three_methods_agree_with_oracles(A):
    want = gauss_det(A.rows)
    assert want == leibniz_plain(A.rows)
    assert det_leibniz(A) == det_wedge(A) == want
    for r in range(1, A.n + 1):
        assert det_cofactor(A, r) == want


@given(small_matrices(), small_matrices())
def test_product_and_transpose(A, B):
    if A.n != B.n:
        B = SquareMatrix.identity(A.n)
    assert det_wedge(A @ B) == det_wedge(A) * det_wedge(B)
    assert det_wedge(A.transpose()) == det_wedge(A)


@given(small_matrices(4), st.data())
def test_row_swap_and_multilinearity(A, data):
    n = A.n
    rows = [list(r) for r in A.rows]
    if n > 1:
        i, j = data.draw(st.sampled_from([(i, j) for i in range(n) for j in range(n) if i < j]))
        swapped = [list(r) for r in rows]
        swapped[i], swapped[j] = swapped[j], swapped[i]
        assert det_cofactor(SquareMatrix.from_rows(swapped)) == -det_cofactor(A)
    k = data.draw(st.integers(0, n - 1))
    c = data.draw(st.fractions(-5, 5, max_denominator=4))
    extra = data.draw(st.lists(st.fractions(-5, 5, max_denominator=4), min_size=n, max_size=n))
    r1 = [list(r) for r in rows]
    r1[k] = extra
    mixed = [list(r) for r in rows]
    mixed[k] = [a + c * b for a, b in zip(rows[k], extra)]
    lhs = det_leibniz(SquareMatrix.from_rows(mixed))
    assert lhs == det_leibniz(A) + c * det_leibniz(SquareMatrix.from_rows(r1))


@given(small_matrices(), st.fractions(-7, 7, max_denominator=5))
def test_uniqueness_check_scales_determinant(A, c):
    assert det_uniqueness_check(c, A) == c * gauss_det(A.rows)


def test_prime_field_determinants():
    F = GF(7)
    rng = random.Random(2)
    for _ in range(30):
        A = SquareMatrix.random(4, rng, F)
        vals = {det_leibniz(A), det_wedge(A)} | {det_cofactor(A, r) for r in range(1, 5)}
        assert len(vals) == 1


def test_leibniz_size_limit_and_wedge_beyond_it():
    A = SquareMatrix.identity(9)
    with pytest.raises(ValueError):
        det_leibniz(A)
    assert det_wedge(A) == det_cofactor(A) == 1


def test_wedge_reads_top_coefficient():
    A = SquareMatrix.from_columns([[2, 0], [1, 3]])
    sig = AlgebraSignature(2)
    top = sig.vector(A.column(1)) ^ sig.vector(A.column(2))
    assert top == sig.blade((1, 2), det_wedge(A))
