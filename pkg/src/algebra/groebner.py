"""Buchberger 알고리즘, 정규형, 아이디얼 소속 판정, 단항 아이디얼 보조 함수."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from sympy.polys.monomials import monomial_div, monomial_divides, monomial_lcm
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement

from src.utils.exceptions import BoundExceeded, RingMismatch
from src.utils.logger import get_logger

from .ring import Monomial, VariableSet, total_degree

_logger = get_logger(__name__)


def _leading_key(polynomial: PolyElement) -> tuple:
    return lex(polynomial.LM)


@dataclass(frozen=True)
class GroebnerBasis:
    """사전식 순서에 대한 기약(reduced), 단위 계수(monic) Gröbner 기저.

    basis 는 선도 단항식 내림차순으로 정렬되어 있어 같은 아이디얼이면 튜플도 같다.
    """

    variables: VariableSet
    basis: tuple[PolyElement, ...]

    @property
    def is_zero_ideal(self) -> bool:
        return not self.basis

    @property
    def is_unit_ideal(self) -> bool:
        return len(self.basis) == 1 and self.basis[0] == self.variables.one

    def leading_monomials(self) -> list[Monomial]:
        return [polynomial.LM for polynomial in self.basis]

    def initial_generators(self) -> list[PolyElement]:
        """init(I) 의 단항 생성원."""
        ring = self.variables.ring
        return [ring.term_new(polynomial.LM, ring.domain.one) for polynomial in self.basis]

    def __len__(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class NormalFormTrace:
    """f = Σ quotients[i]·basis[i] + remainder."""

    remainder: PolyElement
    quotients: tuple[PolyElement, ...]

    @property
    def reduces_to_zero(self) -> bool:
        return not self.remainder


def _common_ring(polynomials: Sequence[PolyElement], variables: VariableSet | None) -> VariableSet:
    if variables is None:
        if not polynomials:
            raise RingMismatch("생성원이 없으면 변수 목록을 지정해야 합니다.")
        variables = VariableSet.of(polynomials[0])
    for polynomial in polynomials:
        variables.require(polynomial)
    return variables


def _s_polynomial(first: PolyElement, second: PolyElement) -> PolyElement:
    lcm = monomial_lcm(first.LM, second.LM)
    return first.mul_monom(monomial_div(lcm, first.LM)) - second.mul_monom(monomial_div(lcm, second.LM))


def _pair_key(basis: list[PolyElement], pair: tuple[int, int]) -> tuple:
    lcm = monomial_lcm(basis[pair[0]].LM, basis[pair[1]].LM)
    return (sum(lcm), lex(lcm), pair)


def _coprime(first: Monomial, second: Monomial) -> bool:
    return all(not (a and b) for a, b in zip(first, second))


def _chain_redundant(basis: list[PolyElement], pair: tuple[int, int], pending: set[tuple[int, int]]) -> bool:
    """LM_k 가 lcm(LM_i, LM_j) 를 나누고 (i,k), (j,k) 가 이미 처리되었으면 (i,j) 는 건너뛴다."""
    i, j = pair
    lcm = monomial_lcm(basis[i].LM, basis[j].LM)
    for k, polynomial in enumerate(basis):
        if k in pair or not monomial_divides(polynomial.LM, lcm):
            continue
        if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
            return True
    return False


def _interreduce(basis: list[PolyElement]) -> list[PolyElement]:
    minimal = [
        polynomial
        for index, polynomial in enumerate(basis)
        if not any(
            other_index != index
            and monomial_divides(other.LM, polynomial.LM)
            and (other.LM != polynomial.LM or other_index < index)
            for other_index, other in enumerate(basis)
        )
    ]
    reduced: list[PolyElement] = []
    for index, polynomial in enumerate(minimal):
        others = minimal[:index] + minimal[index + 1 :]
        remainder = polynomial.rem(others) if others else polynomial
        reduced.append(remainder.monic())
    return sorted(reduced, key=_leading_key, reverse=True)


def buchberger(
    generators: Iterable[PolyElement],
    variables: VariableSet | None = None,
    *,
    degree_cap: int | None = None,
) -> GroebnerBasis:
    """정규 선택 전략(lcm 차수가 가장 낮은 쌍 우선, 동률이면 사전식)의 Buchberger 알고리즘.

    서로소 선도 단항식 기준과 연쇄 기준으로 쌍을 건너뛴다.

    degree_cap 을 넘는 차수의 원소가 생기면 BoundExceeded 를 던진다.
    """
    gens = list(generators)
    variables = _common_ring(gens, variables)
    basis = [polynomial.monic() for polynomial in gens if polynomial]
    if not basis:
        return GroebnerBasis(variables, ())
    if any(polynomial.is_ground for polynomial in basis):
        return GroebnerBasis(variables, (variables.one,))

    pairs = {(i, j) for j in range(len(basis)) for i in range(j)}
    processed = 0
    while pairs:
        pair = min(pairs, key=lambda candidate: _pair_key(basis, candidate))
        pairs.discard(pair)
        first, second = basis[pair[0]], basis[pair[1]]
        if _coprime(first.LM, second.LM) or _chain_redundant(basis, pair, pairs):
            continue
        processed += 1
        remainder = _s_polynomial(first, second).rem(basis)
        if not remainder:
            continue
        remainder = remainder.monic()
        if remainder.is_ground:
            return GroebnerBasis(variables, (variables.one,))
        if degree_cap is not None and total_degree(remainder) > degree_cap:
            raise BoundExceeded(f"Gröbner 기저 원소의 차수가 상한 {degree_cap} 을 넘었습니다.")
        basis.append(remainder)
        newest = len(basis) - 1
        pairs.update((index, newest) for index in range(newest))

    reduced = _interreduce(basis)
    _logger.debug(
        "Gröbner 기저 계산",
        extra={"variables": len(variables), "pairs": processed, "size": len(reduced)},
    )
    return GroebnerBasis(variables, tuple(reduced))


def normal_form(polynomial: PolyElement, basis: GroebnerBasis) -> NormalFormTrace:
    """나눗셈 알고리즘의 몫과 나머지."""
    basis.variables.require(polynomial)
    if not basis.basis:
        return NormalFormTrace(polynomial, ())
    quotients, remainder = polynomial.div(list(basis.basis))
    if not polynomial:
        quotients = [basis.variables.zero] * len(basis.basis)
    return NormalFormTrace(remainder, tuple(quotients))


def member(polynomial: PolyElement, basis: GroebnerBasis) -> bool:
    return normal_form(polynomial, basis).reduces_to_zero


# --- 단항 아이디얼 ---------------------------------------------------------


def is_monomial_generated(polynomials: Iterable[PolyElement]) -> bool:
    """모든 생성원이 (계수 무관) 단항식인가."""
    return all(len(polynomial) <= 1 for polynomial in polynomials)


def minimal_monomials(monomials: Iterable[Monomial]) -> list[Monomial]:
    """나눗셈 순서에 대한 극소 원소 (사전식 내림차순)."""
    unique = sorted(set(monomials), key=lambda monom: (sum(monom), lex(monom)))
    kept: list[Monomial] = []
    for monom in unique:
        if not any(monomial_divides(smaller, monom) for smaller in kept):
            kept.append(monom)
    return sorted(kept, key=lex, reverse=True)


def monomial_ideal_contains(generators: Iterable[Monomial], monom: Monomial) -> bool:
    return any(monomial_divides(generator, monom) for generator in generators)


def is_monomial_ideal_equal(first: Iterable[Monomial], second: Iterable[Monomial]) -> bool:
    return minimal_monomials(first) == minimal_monomials(second)


__all__ = [
    "GroebnerBasis",
    "NormalFormTrace",
    "buchberger",
    "is_monomial_generated",
    "is_monomial_ideal_equal",
    "member",
    "minimal_monomials",
    "monomial_ideal_contains",
    "normal_form",
]
