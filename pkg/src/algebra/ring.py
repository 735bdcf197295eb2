"""유리수 계수 다항식 환과 사전식(lex) 순서.

변수 목록의 순서가 곧 범주 순서이며, 앞에 있는 변수가 사전식으로 더 크다. 따라서
i1 < … < i6 에 대해 Δ(x_{i1},…,x_{i6}) 의 선도 단항식은 지수 패턴 (5,4,3,2,1,0) 을 가진다.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence, Union

from sympy.polys.domains import QQ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, PolyRing

from src.utils.exceptions import AlgebraError, BadRenaming, RingMismatch, ZeroPolynomial

Monomial = tuple[int, ...]
Number = Union[int, Fraction]


class VariableSet:
    """이름 붙은 변수의 전순서 목록과 그 위의 다항식 환 ℚ[x]."""

    def __init__(self, names: Iterable[str]) -> None:
        ordered = tuple(names)
        if len(set(ordered)) != len(ordered):
            raise BadRenaming(f"변수 이름이 중복되었습니다: {ordered}")
        self._names = ordered
        self._index = {name: position for position, name in enumerate(ordered)}
        self._ring = PolyRing(ordered, QQ, lex)

    @classmethod
    def of(cls, polynomial: PolyElement) -> "VariableSet":
        """다항식이 속한 환의 변수 목록."""
        return cls(str(symbol) for symbol in polynomial.ring.symbols)

    @property
    def names(self) -> tuple[str, ...]:
        return self._names

    @property
    def ring(self) -> PolyRing:
        return self._ring

    @property
    def zero(self) -> PolyElement:
        return self._ring.zero

    @property
    def one(self) -> PolyElement:
        return self._ring.one

    def __len__(self) -> int:
        return len(self._names)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VariableSet):
            return NotImplemented
        return self._names == other._names

    def __hash__(self) -> int:
        return hash(self._names)

    def __repr__(self) -> str:
        return f"VariableSet({', '.join(self._names)})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError as exc:
            raise RingMismatch(f"환에 없는 변수입니다: {name}") from exc

    def gen(self, name: str) -> PolyElement:
        return self._ring.gens[self.index(name)]

    def monomial(self, exponents: Mapping[str, int]) -> Monomial:
        vector = [0] * len(self._names)
        for name, power in exponents.items():
            vector[self.index(name)] = power
        return tuple(vector)

    def term(self, exponents: Mapping[str, int], coefficient: Number = 1) -> PolyElement:
        return self._ring.term_new(self.monomial(exponents), to_rational(coefficient))

    def require(self, polynomial: PolyElement) -> PolyElement:
        if polynomial.ring != self._ring:
            raise RingMismatch(f"다른 환의 다항식입니다: {polynomial.ring} ≠ {self._ring}")
        return polynomial


def to_rational(value: object):
    """정수, Fraction, sympy 유리수를 QQ 원소로 바꾼다."""
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    return QQ.convert(value)


def lex_compare(first: Monomial, second: Monomial, variables: VariableSet) -> int:
    """사전식 비교. 작으면 -1, 같으면 0, 크면 1."""
    if len(first) != len(variables) or len(second) != len(variables):
        raise RingMismatch("지수 벡터의 길이가 변수 개수와 다릅니다.")
    left, right = lex(first), lex(second)
    return (left > right) - (left < right)


def init(polynomial: PolyElement) -> PolyElement:
    """사전식 최대 항 (계수 포함)."""
    if not polynomial:
        raise ZeroPolynomial("영 다항식의 초기항은 정의되지 않습니다.")
    monom, coeff = polynomial.LT
    return polynomial.ring.term_new(monom, coeff)


def leading_monomial(polynomial: PolyElement) -> Monomial:
    if not polynomial:
        raise ZeroPolynomial("영 다항식의 선도 단항식은 정의되지 않습니다.")
    return polynomial.LM


def occurring_variables(polynomial: PolyElement) -> set[str]:
    names = [str(symbol) for symbol in polynomial.ring.symbols]
    return {
        names[position]
        for monom in polynomial.itermonoms()
        for position, power in enumerate(monom)
        if power
    }


def rename(
    polynomial: PolyElement,
    mapping: Mapping[str, str],
    target: VariableSet | None = None,
) -> PolyElement:
    """변수 치환 φ_*(x_i) = x_{φ(i)} 로 정의되는 환 준동형.

    mapping 은 단사여야 하고 polynomial 에 나타나는 모든 변수에서 정의되어야 한다.
    target 이 없으면 원래 환 안에서 치환한다.
    """
    source = VariableSet.of(polynomial)
    destination = target or source
    images = list(mapping.values())
    if len(set(images)) != len(images):
        raise BadRenaming("변수 치환이 단사가 아닙니다.")
    missing = occurring_variables(polynomial) - set(mapping)
    if missing:
        raise BadRenaming(f"치환이 정의되지 않은 변수: {sorted(missing)}")
    for image in images:
        if image not in destination:
            raise BadRenaming(f"대상 환에 없는 변수입니다: {image}")

    width = len(destination)
    slots = [
        destination.index(mapping[name]) if name in mapping else None
        for name in source.names
    ]
    result: dict[Monomial, object] = {}
    for monom, coeff in polynomial.iterterms():
        vector = [0] * width
        for position, power in enumerate(monom):
            if power:
                vector[slots[position]] += power  # type: ignore[index]
        result[tuple(vector)] = coeff
    return destination.ring.from_dict(result)


def coerce(polynomial: PolyElement, target: VariableSet) -> PolyElement:
    """같은 이름의 변수끼리 대응시켜 다른 환으로 옮긴다."""
    names = occurring_variables(polynomial)
    return rename(polynomial, {name: name for name in names}, target)


def discriminant(names: Sequence[str], variables: VariableSet) -> PolyElement:
    """주어진 순서로 ∏_{i<j} (x_i − x_j)."""
    if len(set(names)) != len(names):
        raise BadRenaming(f"판별식 변수가 중복되었습니다: {list(names)}")
    if len(names) < 2:
        raise AlgebraError("판별식에는 최소 두 변수가 필요합니다.")
    gens = [variables.gen(name) for name in names]
    result = variables.one
    for left, right in combinations(gens, 2):
        result *= left - right
    return result


def total_degree(polynomial: PolyElement) -> int:
    if not polynomial:
        raise ZeroPolynomial("영 다항식의 차수는 정의되지 않습니다.")
    return max(sum(monom) for monom in polynomial.itermonoms())


def is_homogeneous(polynomial: PolyElement) -> bool:
    return len({sum(monom) for monom in polynomial.itermonoms()}) <= 1


def evaluate(polynomial: PolyElement, point: Mapping[str, Number]) -> Fraction:
    """유리점에서의 정확한 값."""
    names = [str(symbol) for symbol in polynomial.ring.symbols]
    missing = occurring_variables(polynomial) - set(point)
    if missing:
        raise RingMismatch(f"평가점에 값이 없는 변수: {sorted(missing)}")
    values = [to_rational(point.get(name, 0)) for name in names]
    total = QQ.zero
    for monom, coeff in polynomial.iterterms():
        term = coeff
        for value, power in zip(values, monom):
            if power:
                term *= value**power
        total += term
    return Fraction(int(total.numerator), int(total.denominator))


__all__ = [
    "Monomial",
    "VariableSet",
    "coerce",
    "discriminant",
    "evaluate",
    "init",
    "is_homogeneous",
    "leading_monomial",
    "lex_compare",
    "occurring_variables",
    "rename",
    "to_rational",
    "total_degree",
]
