"""범주 인스턴스의 대상(object)과 사상(morphism) 값 타입."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Union

Element = Union[int, str, tuple[int, int]]


def element_key(element: Element) -> tuple:
    """정수 < 문자열 < 쌍 순서의 결정적 정렬 키."""
    if isinstance(element, tuple):
        return (2, tuple(element_key(part) for part in element))
    if isinstance(element, int):
        return (0, element)
    return (1, element)


def variable_name(element: Element) -> str:
    """원소 e 에 대응하는 변수 이름: `x3`, 쌍이면 `x1_2`."""
    if isinstance(element, tuple):
        return "x" + "_".join(str(part) for part in element)
    return f"x{element}"


@dataclass(frozen=True, order=True)
class Interval:
    """집합 [n] = {1, …, n}."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("구간 크기는 0 이상이어야 합니다.")

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    def __repr__(self) -> str:
        return f"[{self.n}]"


@dataclass(frozen=True, order=True)
class ColoredChain:
    """색이 칠해진 유한 사슬 1 < … < n. colors[i-1] 이 원소 i 의 색이다."""

    colors: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    def color(self, element: int) -> int:
        return self.colors[element - 1]

    def __repr__(self) -> str:
        return "colors=" + ",".join(str(color) for color in self.colors)


@dataclass(frozen=True)
class PairSet:
    """ℕ×ℕ 의 유한 부분집합 (대각 작용 범주의 대상)."""

    pairs: frozenset[tuple[int, int]]

    @classmethod
    def of(cls, *pairs: tuple[int, int]) -> "PairSet":
        return cls(frozenset(pairs))

    @cached_property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted({point for pair in self.pairs for point in pair}))

    @cached_property
    def elements(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.pairs))

    def __repr__(self) -> str:
        return "{" + ",".join(f"({a},{b})" for a, b in self.elements) + "}"


def cycle(length: int) -> PairSet:
    """방향 순환 {(1,2),(2,3),…,(n,1)}."""
    return PairSet(frozenset((i, i % length + 1) for i in range(1, length + 1)))


@dataclass(frozen=True)
class Morphism:
    """대상 사이의 사상. pairs 는 원소 대응을 정의역 원소 순으로 담는다."""

    source: object
    target: object
    pairs: tuple[tuple[Element, Element], ...]

    @classmethod
    def from_mapping(cls, source: object, target: object, mapping: Mapping[Element, Element]) -> "Morphism":
        ordered = tuple(sorted(mapping.items(), key=lambda item: element_key(item[0])))
        return cls(source, target, ordered)

    @cached_property
    def mapping(self) -> dict[Element, Element]:
        return dict(self.pairs)

    def __call__(self, element: Element) -> Element:
        return self.mapping[element]

    def variable_map(self) -> dict[str, str]:
        """φ_*(x_i) = x_{φ(i)} 에 해당하는 변수 이름 대응."""
        return {variable_name(a): variable_name(b) for a, b in self.pairs}

    def __repr__(self) -> str:
        body = ", ".join(f"{a}->{b}" for a, b in self.pairs)
        return f"Morphism({self.source!r} -> {self.target!r}: {body})"


__all__ = [
    "ColoredChain",
    "Element",
    "Interval",
    "Morphism",
    "PairSet",
    "cycle",
    "element_key",
    "variable_name",
]
