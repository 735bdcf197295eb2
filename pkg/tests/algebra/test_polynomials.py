from __future__ import annotations

import random
from fractions import Fraction

import pytest

from src.algebra import (
    VariableSet,
    coerce,
    discriminant,
    evaluate,
    format_polynomial,
    init,
    is_homogeneous,
    leading_monomial,
    lex_compare,
    occurring_variables,
    parse_polynomial,
    rename,
    total_degree,
)
from src.utils.exceptions import BadRenaming, ParseError, RingMismatch, ZeroPolynomial


@pytest.fixture()
def xyz() -> VariableSet:
    return VariableSet(["x1", "x2", "x3"])


def test_earlier_variables_are_larger(xyz: VariableSet) -> None:
    assert lex_compare((1, 0, 0), (0, 5, 7), xyz) == 1
    assert lex_compare((0, 1, 0), (0, 1, 0), xyz) == 0
    assert lex_compare((0, 0, 9), (0, 1, 0), xyz) == -1
    with pytest.raises(RingMismatch):
        lex_compare((1, 0), (0, 1), xyz)


def test_init_picks_lex_largest_term(xyz: VariableSet) -> None:
    polynomial = parse_polynomial("x2^5 + 3*x1*x3 - 7", xyz)
    assert init(polynomial) == parse_polynomial("3*x1*x3", xyz)
    assert leading_monomial(polynomial) == (1, 0, 1)
    with pytest.raises(ZeroPolynomial):
        init(xyz.zero)


def test_discriminant_leading_term_pattern(rng) -> None:
    variables = VariableSet(f"x{index}" for index in range(1, 13))
    for _ in range(20):
        chosen = sorted(rng.sample(range(1, 13), 6))
        delta = discriminant([f"x{index}" for index in chosen], variables)
        exponents = dict(zip(variables.names, leading_monomial(delta)))
        assert [exponents[f"x{index}"] for index in chosen] == [5, 4, 3, 2, 1, 0]
        assert init(delta).LC == 1


def test_discriminant_rejects_bad_arguments(xyz: VariableSet) -> None:
    with pytest.raises(BadRenaming):
        discriminant(["x1", "x1"], xyz)
    with pytest.raises(RingMismatch):
        discriminant(["x1", "x9"], xyz)


def test_parse_and_format(xyz: VariableSet) -> None:
    text = "3/2*x1^2*x3 - x2"
    polynomial = parse_polynomial(text, xyz)
    assert format_polynomial(polynomial) == text
    assert format_polynomial(parse_polynomial("(x1 - x2)*(x1 + x2)", xyz)) == "x1^2 - x2^2"
    assert format_polynomial(parse_polynomial("x1 - x1", xyz)) == "0"
    assert format_polynomial(parse_polynomial("-2", xyz)) == "-2"


def test_disc_shorthand(xyz: VariableSet) -> None:
    assert parse_polynomial("disc(1,2)", xyz) == parse_polynomial("x1 - x2", xyz)
    assert parse_polynomial("disc(x1,x2,x3)", xyz) == discriminant(["x1", "x2", "x3"], xyz)
    assert parse_polynomial("disc(2,1)", xyz) == parse_polynomial("x2 - x1", xyz)


@pytest.mark.parametrize(
    "text,position",
    [
        ("", 0),
        ("2x1", 1),
        ("x1 + y", 5),
        ("x1 $ x2", 3),
    ],
)
def test_parse_errors_report_position(xyz: VariableSet, text: str, position: int) -> None:
    with pytest.raises(ParseError) as excinfo:
        parse_polynomial(text, xyz)
    assert excinfo.value.position == position


def test_parse_rejects_bad_disc(xyz: VariableSet) -> None:
    with pytest.raises(ParseError):
        parse_polynomial("disc(1,1)", xyz)
    with pytest.raises(ParseError):
        parse_polynomial("disc(1,4)", xyz)


def test_rename_and_coerce(xyz: VariableSet) -> None:
    pair = VariableSet(["x1", "x2"])
    control = parse_polynomial("x1 + x2^2", pair)
    swap = {"x1": "x2", "x2": "x1"}
    assert rename(control, swap) == parse_polynomial("x2 + x1^2", pair)
    # 순서를 뒤집는 치환은 초기항과 교환하지 않는다.
    assert init(rename(control, swap)) != rename(init(control), swap)

    lifted = coerce(control, xyz)
    assert lifted.ring == xyz.ring
    assert occurring_variables(lifted) == {"x1", "x2"}
    assert rename(control, {"x1": "x2", "x2": "x3"}, xyz) == parse_polynomial("x2 + x3^2", xyz)


def test_rename_rejects_bad_mappings(xyz: VariableSet) -> None:
    polynomial = parse_polynomial("x1*x2", xyz)
    with pytest.raises(BadRenaming):
        rename(polynomial, {"x1": "x3", "x2": "x3"})
    with pytest.raises(BadRenaming):
        rename(polynomial, {"x1": "x2"})
    with pytest.raises(BadRenaming):
        rename(polynomial, {"x1": "x2", "x2": "x7"})


def test_evaluate_is_exact(xyz: VariableSet) -> None:
    delta = discriminant(["x1", "x2", "x3"], xyz)
    assert evaluate(delta, {"x1": 1, "x2": 2, "x3": 3}) == Fraction(-2)
    assert evaluate(delta, {"x1": 1, "x2": 1, "x3": 3}) == 0
    half = parse_polynomial("1/3*x1 + x2", xyz)
    assert evaluate(half, {"x1": Fraction(1, 2), "x2": 0}) == Fraction(1, 6)
    with pytest.raises(RingMismatch):
        evaluate(delta, {"x1": 1})


def test_degree_helpers(xyz: VariableSet) -> None:
    assert total_degree(parse_polynomial("x1^2*x3 + x2", xyz)) == 3
    assert is_homogeneous(parse_polynomial("x1*x2 - x3^2", xyz))
    assert not is_homogeneous(parse_polynomial("x1^2 - x2", xyz))
    assert is_homogeneous(xyz.zero)


def test_variable_set_rejects_duplicates() -> None:
    with pytest.raises(BadRenaming):
        VariableSet(["x1", "x1"])


def _random_polynomial(rng: random.Random, variables: VariableSet, terms: int = 4, degree: int = 4):
    polynomial = variables.zero
    for _ in range(rng.randint(1, terms)):
        exponents = {name: 0 for name in variables.names}
        for _ in range(rng.randint(0, degree)):
            exponents[rng.choice(variables.names)] += 1
        polynomial += variables.term(exponents, Fraction(rng.randint(-3, 3) or 1, rng.randint(1, 3)))
    return polynomial


def _interval(size: int) -> VariableSet:
    return VariableSet(f"x{index}" for index in range(1, size + 1))


def test_init_commutes_with_monotone_renaming(rng: random.Random) -> None:
    checked = 0
    for _ in range(500):
        target_size = rng.randint(1, 5)
        source_size = rng.randint(1, target_size)
        source, target = _interval(source_size), _interval(target_size)
        images = sorted(rng.sample(range(1, target_size + 1), source_size))
        mapping = {f"x{index}": f"x{image}" for index, image in enumerate(images, start=1)}
        polynomial = _random_polynomial(rng, source)
        if not polynomial:
            continue
        assert init(rename(polynomial, mapping, target)) == rename(init(polynomial), mapping, target)
        checked += 1
    assert checked > 400


def test_rename_and_coerce_are_ring_homomorphisms(rng: random.Random) -> None:
    source, target = _interval(3), _interval(5)
    for _ in range(200):
        images = rng.sample(range(1, 6), 3)
        mapping = {f"x{index}": f"x{image}" for index, image in enumerate(images, start=1)}
        f = _random_polynomial(rng, source, degree=3)
        g = _random_polynomial(rng, source, degree=3)
        for transport in (lambda p: rename(p, mapping, target), lambda p: coerce(p, target)):
            assert transport(f + g) == transport(f) + transport(g)
            assert transport(f * g) == transport(f) * transport(g)
            assert transport(-f) == -transport(f)
            assert transport(source.one) == target.one
            assert transport(source.zero) == target.zero
