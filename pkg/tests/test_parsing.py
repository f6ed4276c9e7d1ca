import json
import random
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import multivectors
from grassmann import GF, AlgebraSignature, FreeWord, Multivector, format_canonical, parse_expr
from grassmann.errors import MorphismValidationError, ParseError
from grassmann.morphisms import exp_inner_derivation
from grassmann.parsing import (
    load_morphism,
    morphism_from_dict,
    morphism_to_dict,
    multivector_to_json,
    parse_matrix,
    parse_word,
)

SIG3 = AlgebraSignature(3)
SIG6 = AlgebraSignature(6)
SIG6_F5 = AlgebraSignature(6, GF(5))


def test_parse_examples():
    assert parse_expr("3*e1^e2 + 2*e3", SIG3) == SIG3.blade((1, 2), 3) + SIG3.gen(3).scale(2)
    assert parse_expr("e2^e1", SIG3) == -SIG3.blade((1, 2))
    assert parse_expr("e1^e1", SIG3) == 0
    assert parse_expr("  -1/2 * ( e1 + e2 ) ^ e3 - 4", SIG3) == Multivector(
        SIG3, {(): -4, (1, 3): Fraction(-1, 2), (2, 3): Fraction(-1, 2)}
    )
    assert parse_expr("2*3*e1", SIG3) == SIG3.gen(1).scale(6)


@pytest.mark.parametrize("text", ["e0", "e4", "e1 +", "(e1", "e1 e2", "1/0", "x", "3*", "e1 ^^ e2", ""])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_expr(text, SIG3)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_expr("e1 + e0", SIG3)
    assert info.value.position == 5


def test_prime_field_literals():
    sig = AlgebraSignature(2, GF(5))
    assert parse_expr("1/2*e1", sig) == sig.gen(1).scale(3)
    assert parse_expr("7", sig) == sig.scalar(2)
    with pytest.raises(ParseError):
        parse_expr("1/5*e1", sig)


def test_format_examples():
    assert format_canonical(SIG3.zero()) == "0"
    assert format_canonical(-SIG3.blade((1, 2))) == "-1*e1^e2"
    assert format_canonical(SIG3.one() + SIG3.blade((1, 2))) == "1 + 1*e1^e2"
    assert format_canonical(Multivector(SIG3, {(3,): Fraction(-2, 3), (): -1})) == "-1 - 2/3*e3"
    assert str(SIG3.blade((1, 3))) == "1*e1^e3"


@given(multivectors(SIG6, max_terms=10))
def test_round_trip_rationals(x):
    text = format_canonical(x)
    y = parse_expr(text, SIG6)
    assert y == x
    assert format_canonical(y) == text


@given(multivectors(SIG6_F5, max_terms=10))
def test_round_trip_f5(x):
    text = format_canonical(x)
    assert parse_expr(text, SIG6_F5) == x
    assert format_canonical(parse_expr(text, SIG6_F5)) == text


def test_round_trip_thousand_seeded():
    rng = random.Random(13)
    for sig in (SIG6, SIG6_F5):
        for _ in range(500):
            x = sig.random(rng, max_terms=8)
            assert parse_expr(format_canonical(x), sig) == x


def test_parse_word():
    assert parse_word("3*e2 e1 e2", SIG3) == FreeWord(Fraction(3), (2, 1, 2))
    assert parse_word("e3e1", SIG3) == FreeWord(Fraction(1), (3, 1))
    assert parse_word("-1/2*", SIG3) == FreeWord(Fraction(-1, 2), ())
    with pytest.raises(ParseError):
        parse_word("e4", SIG3)
    with pytest.raises(ParseError):
        parse_word("e1 + e2", SIG3)


def test_parse_matrix():
    A = parse_matrix("1 2\n3 4  # comment\n", GF(7))
    assert A.rows == ((1, 2), (3, 4))
    B = parse_matrix("1/2, 0; 0 1", AlgebraSignature(1).field, ";")
    assert B.rows == ((Fraction(1, 2), 0), (0, 1))
    with pytest.raises(ParseError):
        parse_matrix("1 2; 3", GF(7), ";")
    with pytest.raises(ParseError):
        parse_matrix("", GF(7))
    with pytest.raises(ParseError):
        parse_matrix("1 x", GF(7))


def test_json_schema():
    x = parse_expr("1/2 - e2^e1", SIG3)
    assert multivector_to_json(x) == {
        "signature": {"n": 3, "field": "q"},
        "result": "1/2 + 1*e1^e2",
        "terms": [{"blade": [], "coeff": "1/2"}, {"blade": [1, 2], "coeff": "1"}],
    }


def test_morphism_files(tmp_path):
    f = exp_inner_derivation(SIG3.gen(1) + SIG3.blade((1, 2, 3)))
    data = morphism_to_dict(f)
    assert morphism_from_dict(json.loads(json.dumps(data))) == f
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"signature": {"n": 3, "field": "q"}, "e1": "e2", "e2": "e1"}))
    g = load_morphism(path)
    assert g.images == (SIG3.gen(2), SIG3.gen(1), SIG3.gen(3))


@pytest.mark.parametrize(
    "data",
    [
        {"e1": "e1"},
        {"signature": {"n": 0}},
        {"signature": {"n": 2, "field": "fp:4"}},
        {"signature": {"n": 2}, "x1": "e1"},
        {"signature": {"n": 2}, "e3": "e1"},
        {"signature": {"n": 2}, "e1": "e1 +"},
    ],
)
def test_bad_morphism_files(data):
    with pytest.raises(ParseError):
        morphism_from_dict(data)


def test_morphism_file_errors(tmp_path):
    with pytest.raises(MorphismValidationError):
        morphism_from_dict({"signature": {"n": 3}, "e1": "e1 + e2^e3"})
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(ParseError):
        load_morphism(path)
