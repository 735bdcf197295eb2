from __future__ import annotations

import random

import pytest
from sympy import groebner as sympy_groebner

from src.algebra import (
    VariableSet,
    buchberger,
    format_polynomial,
    graded_span_member,
    is_monomial_generated,
    is_monomial_ideal_equal,
    member,
    minimal_monomials,
    monomial_ideal_contains,
    normal_form,
    parse_polynomial,
)
from src.algebra.groebner import _chain_redundant
from src.algebra.ring import to_rational
from src.utils.exceptions import BoundExceeded, NotHomogeneous, RingMismatch


@pytest.fixture()
def xyz() -> VariableSet:
    return VariableSet(["x1", "x2", "x3"])


def _parse_all(texts: list[str], variables: VariableSet) -> list:
    return [parse_polynomial(text, variables) for text in texts]


def _reference_groebner(polynomials: list, variables: VariableSet) -> list[str]:
    """sympy 의 groebner 결과를 같은 문자열 형식으로."""
    reference = sympy_groebner([p.as_expr() for p in polynomials], *variables.ring.symbols, order="lex", domain="QQ")
    return sorted(format_polynomial(variables.ring.from_expr(expr)) for expr in reference.exprs)


def _random_polynomial(rng: random.Random, variables: VariableSet):
    polynomial = variables.zero
    for _ in range(rng.randint(1, 3)):
        exponents = {name: 0 for name in variables.names}
        for _ in range(rng.randint(0, 2)):
            exponents[rng.choice(variables.names)] += 1
        polynomial += variables.term(exponents, rng.randint(-3, 3) or 1)
    return polynomial


@pytest.mark.parametrize(
    "texts",
    [
        ["x1^2 - x2", "x1*x2 - 1"],
        ["x1 - x2", "x2 - x3"],
        ["x1*x2 - x3", "x2*x3 - x1", "x1*x3 - x2"],
        ["x1^2 + x2^2 + x3^2 - 1", "x1 - x2"],
    ],
)
def test_buchberger_matches_reference(xyz: VariableSet, texts: list[str]) -> None:
    polynomials = _parse_all(texts, xyz)
    basis = buchberger(polynomials)
    assert sorted(format_polynomial(p) for p in basis.basis) == _reference_groebner(polynomials, xyz)


def test_buchberger_matches_reference_on_random_input(xyz: VariableSet, rng: random.Random) -> None:
    for _ in range(15):
        polynomials = [p for p in (_random_polynomial(rng, xyz) for _ in range(rng.randint(1, 3))) if p]
        if not polynomials:
            continue
        basis = buchberger(polynomials, xyz)
        assert sorted(format_polynomial(p) for p in basis.basis) == _reference_groebner(polynomials, xyz)


def test_basis_is_reduced_monic_and_sorted(xyz: VariableSet) -> None:
    basis = buchberger(_parse_all(["2*x1^2 - 2*x2", "3*x1*x2 - 3"], xyz))
    assert all(p.LC == 1 for p in basis.basis)
    leading = basis.leading_monomials()
    assert leading == sorted(leading, reverse=True)
    for index, polynomial in enumerate(basis.basis):
        others = basis.basis[:index] + basis.basis[index + 1 :]
        assert polynomial.rem(list(others)) == polynomial


def test_equal_ideals_have_equal_bases(xyz: VariableSet) -> None:
    first = buchberger(_parse_all(["x1 - x2", "x2 - x3"], xyz))
    second = buchberger(_parse_all(["x1 - x3", "x1 + x2 - 2*x3"], xyz))
    assert first == second
    assert first.initial_generators() == _parse_all(["x1", "x2"], xyz)


def test_zero_and_unit_ideals(xyz: VariableSet) -> None:
    assert buchberger([], xyz).is_zero_ideal
    assert buchberger([xyz.zero], xyz).is_zero_ideal
    assert buchberger(_parse_all(["x1", "x1 - 1"], xyz)).is_unit_ideal
    with pytest.raises(RingMismatch):
        buchberger([])


def test_degree_cap_raises(xyz: VariableSet) -> None:
    polynomials = _parse_all(["x1 - x2^2", "x1*x3 - 1"], xyz)
    with pytest.raises(BoundExceeded):
        buchberger(polynomials, degree_cap=2)
    assert len(buchberger(polynomials, degree_cap=3)) >= 2


def test_normal_form_trace_reconstructs_input(xyz: VariableSet) -> None:
    basis = buchberger(_parse_all(["x1^2 - x2", "x1*x2 - 1"], xyz))
    for text in ["x1^3*x3 + x2", "x1^5 - x3", "x1*x2*x3 - x3"]:
        polynomial = parse_polynomial(text, xyz)
        trace = normal_form(polynomial, basis)
        rebuilt = trace.remainder + sum(
            (quotient * element for quotient, element in zip(trace.quotients, basis.basis)), xyz.zero
        )
        assert rebuilt == polynomial
    assert member(parse_polynomial("x1*x2*x3 - x3", xyz), basis)
    assert not member(parse_polynomial("x3", xyz), basis)


def test_normal_form_rejects_foreign_ring(xyz: VariableSet) -> None:
    basis = buchberger(_parse_all(["x1"], xyz))
    with pytest.raises(RingMismatch):
        normal_form(parse_polynomial("x1", VariableSet(["x1", "x2"])), basis)


def test_graded_span_member_certificate(xyz: VariableSet) -> None:
    generators = _parse_all(["x1 - x2", "x2 - x3"], xyz)
    target = parse_polynomial("2*x1 - 3*x2 + x3", xyz)
    certificate = graded_span_member(target, generators)
    assert certificate.member
    assert certificate.degree == 1
    combination = sum(
        (generators[index] * to_rational(value) for index, value in certificate.coefficients.items()),
        xyz.zero,
    )
    assert combination == target
    assert certificate.describe().startswith("coefficients")


def test_graded_span_non_member_ranks(xyz: VariableSet) -> None:
    generators = _parse_all(["x1 - x2", "x2 - x3", "x1 - x3"], xyz)
    certificate = graded_span_member(parse_polynomial("x1 + x3", xyz), generators)
    assert not certificate.member
    assert (certificate.rank, certificate.rank_with_target) == (2, 3)
    assert certificate.describe() == "rank(gens) = 2, rank(gens + f) = 3"


def test_graded_span_requires_single_degree(xyz: VariableSet) -> None:
    with pytest.raises(NotHomogeneous):
        graded_span_member(parse_polynomial("x1", xyz), _parse_all(["x1^2 - x2"], xyz))
    with pytest.raises(NotHomogeneous):
        graded_span_member(parse_polynomial("x1", xyz), _parse_all(["x1*x2"], xyz))


def test_monomial_helpers() -> None:
    assert minimal_monomials([(2, 0), (1, 0), (0, 3), (1, 1), (0, 3)]) == [(1, 0), (0, 3)]
    assert monomial_ideal_contains([(1, 0), (0, 3)], (0, 4))
    assert not monomial_ideal_contains([(1, 0), (0, 3)], (0, 2))
    assert is_monomial_ideal_equal([(1, 0), (2, 0), (0, 3)], [(0, 3), (1, 0)])


def test_is_monomial_generated(xyz: VariableSet) -> None:
    assert is_monomial_generated(_parse_all(["3*x1^2", "x2*x3"], xyz))
    assert not is_monomial_generated(_parse_all(["x1 - x2"], xyz))


def test_chain_criterion_needs_both_side_pairs_done(xyz: VariableSet) -> None:
    basis = _parse_all(["x1*x2 - x3", "x2*x3 - x1", "x2"], xyz)
    assert _chain_redundant(basis, (0, 1), set())
    assert not _chain_redundant(basis, (0, 1), {(0, 2)})
    assert not _chain_redundant(basis, (0, 1), {(1, 2)})
    assert not _chain_redundant(basis[:2], (0, 1), set())


@pytest.mark.parametrize(
    "texts",
    [
        ["x1*x2 - x3", "x2*x3 - x1", "x2", "x1^2 - x3^2"],
        ["x1^3 - x2", "x1^2*x2 - x3", "x1*x2^2 - x1", "x2^3 - x3^2"],
    ],
)
def test_pruned_pairs_still_give_the_reference_basis(xyz: VariableSet, texts: list[str]) -> None:
    polynomials = _parse_all(texts, xyz)
    assert sorted(format_polynomial(p) for p in buchberger(polynomials).basis) == _reference_groebner(polynomials, xyz)


def test_graded_span_skips_scalar_multiples(xyz: VariableSet) -> None:
    g, h = _parse_all(["x1 - x2", "x2 - x3"], xyz)
    certificate = graded_span_member(parse_polynomial("x1 - x3", xyz), [g, -g, 2 * g, h])
    assert certificate.member
    assert certificate.rank == 2
    assert set(certificate.coefficients) <= {0, 3}
