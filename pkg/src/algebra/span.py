"""동차 다항식의 유리 선형 생성 판정.

한 차수 d 에서 생성된 아이디얼의 d 차 성분은 생성원의 선형 생성과 같으므로, 이 경로는
Gröbner 기저 없이 d 차 소속을 결정한다. 생성원을 선도 단항식 기준으로 희소 소거하여
선도 단항식이 모두 다른 행들의 사다리꼴을 만든다.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from sympy.polys.rings import PolyElement

from src.utils.exceptions import NotHomogeneous, RingMismatch
from src.utils.logger import get_logger

from .ring import Monomial, is_homogeneous, total_degree

_logger = get_logger(__name__)


@dataclass(frozen=True)
class SpanCertificate:
    """소속이면 생성원 계수 벡터, 아니면 두 랭크를 담는다."""

    member: bool
    degree: int | None
    rank: int
    rank_with_target: int
    coefficients: dict[int, Fraction] = field(default_factory=dict)

    def describe(self) -> str:
        if self.member:
            terms = ", ".join(f"g{index}: {value}" for index, value in sorted(self.coefficients.items()))
            return f"coefficients {{{terms}}}"
        return f"rank(gens) = {self.rank}, rank(gens + f) = {self.rank_with_target}"


@dataclass
class _Row:
    polynomial: PolyElement
    combination: dict[int, object]


def _to_fraction(value: object) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))  # type: ignore[attr-defined]


def _scaled(combination: dict[int, object], factor: object) -> dict[int, object]:
    return {index: coeff * factor for index, coeff in combination.items()}


def _subtract(target: dict[int, object], other: dict[int, object], factor: object) -> dict[int, object]:
    result = dict(target)
    for index, coeff in other.items():
        value = result.get(index, 0) - coeff * factor
        if value:
            result[index] = value
        else:
            result.pop(index, None)
    return result


class _Echelon:
    def __init__(self) -> None:
        self.pivots: dict[Monomial, _Row] = {}

    def reduce(self, row: _Row) -> _Row:
        polynomial, combination = row.polynomial, row.combination
        while polynomial:
            lead = polynomial.LM
            pivot = self.pivots.get(lead)
            if pivot is None:
                break
            factor = polynomial.LC
            polynomial = polynomial - pivot.polynomial.mul_ground(factor)
            combination = _subtract(combination, pivot.combination, factor)
        return _Row(polynomial, combination)

    def insert(self, row: _Row) -> bool:
        reduced = self.reduce(row)
        if not reduced.polynomial:
            return False
        lead_coeff = reduced.polynomial.LC
        inverse = reduced.polynomial.ring.domain.revert(lead_coeff)
        normalized = _Row(reduced.polynomial.monic(), _scaled(reduced.combination, inverse))
        self.pivots[normalized.polynomial.LM] = normalized
        return True


def _common_degree(target: PolyElement, generators: Sequence[PolyElement]) -> int | None:
    degrees: set[int] = set()
    for polynomial in [target, *generators]:
        if not polynomial:
            continue
        if not is_homogeneous(polynomial):
            raise NotHomogeneous("동차 다항식만 선형 생성 판정에 사용할 수 있습니다.")
        degrees.add(total_degree(polynomial))
    if len(degrees) > 1:
        raise NotHomogeneous(f"차수가 섞여 있습니다: {sorted(degrees)}")
    return next(iter(degrees), None)


def graded_span_member(target: PolyElement, generators: Sequence[PolyElement]) -> SpanCertificate:
    """target 이 generators 의 ℚ-선형 생성에 속하는지 판정하고 증명서를 돌려준다."""
    degree = _common_degree(target, generators)
    ring = target.ring
    one = ring.domain.one
    echelon = _Echelon()
    seen: set[PolyElement] = set()
    for index, generator in enumerate(generators):
        if generator.ring != ring:
            raise RingMismatch("생성원과 대상 다항식의 환이 다릅니다.")
        if not generator:
            continue
        # 앞선 생성원의 상수배는 건너뜀
        monic = generator.monic()
        if monic in seen:
            continue
        seen.add(monic)
        echelon.insert(_Row(generator, {index: one}))
    rank = len(echelon.pivots)

    residue = echelon.reduce(_Row(target, {}))
    if not residue.polynomial:
        coefficients = {index: _to_fraction(-coeff) for index, coeff in residue.combination.items()}
        certificate = SpanCertificate(True, degree, rank, rank, coefficients)
    else:
        certificate = SpanCertificate(False, degree, rank, rank + 1)
    _logger.debug(
        "선형 생성 판정",
        extra={"generators": len(generators), "rank": rank, "member": certificate.member},
    )
    return certificate


__all__ = ["SpanCertificate", "graded_span_member"]
