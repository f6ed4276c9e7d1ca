import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from grassmann import AlgebraSignature, Multivector

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "repo",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
        terminalreporter.write_line(line)


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
nonzero_rationals = rationals.filter(bool)


@st.composite
def blades(draw, n):
    return tuple(sorted(draw(st.sets(st.integers(1, n), max_size=n))))


@st.composite
def multivectors(draw, sig, grades=None, max_terms=6):
    n = sig.n
    if grades is None:
        blade_st = blades(n)
    else:
        blade_st = st.sampled_from(grades).flatmap(
            lambda k: st.sets(st.integers(1, n), min_size=k, max_size=k).map(lambda s: tuple(sorted(s)))
        )
    if sig.field.p is None:
        coeff = nonzero_rationals
    else:
        coeff = st.integers(1, sig.field.p - 1)
    terms = draw(st.dictionaries(blade_st, coeff, max_size=max_terms))
    return Multivector(sig, terms)


@pytest.fixture
def sig3():
    return AlgebraSignature(3)


@pytest.fixture
def sig4():
    return AlgebraSignature(4)


def plain(x):
    """Multivector -> {blade: Fraction} for the oracles."""
    return {b: Fraction(c) for b, c in x.terms.items()}
