"""유한 집합·사슬 위의 인스턴스: FI, OI, FI_m, OI_m, BOI, 색칠된 선형 순서."""

from __future__ import annotations

import re
from itertools import combinations, permutations, product
from typing import Iterable, Iterator, Mapping

from src.utils.exceptions import ParseError

from .base import CategoryInstance, Ordering
from .descriptor import InstanceDescriptor, InstanceKind
from .objects import ColoredChain, Element, Interval

_INTERVAL = re.compile(r"^\s*\[?\s*(\d+)\s*\]?\s*$")
_COLORS = re.compile(r"^\s*colors\s*=\s*([\d,\s]*)$")


def parse_interval(text: str) -> Interval:
    match = _INTERVAL.match(text)
    if match is None:
        raise ParseError(f"구간 대상은 [n] 형식이어야 합니다: '{text}' (위치 0)", text=text, position=0)
    return Interval(int(match.group(1)))


class FI(CategoryInstance):
    """유한 집합 [n] 과 단사."""

    def __init__(self, descriptor: InstanceDescriptor | None = None) -> None:
        super().__init__(descriptor or InstanceDescriptor(kind=InstanceKind.FI))

    def contains(self, obj: object) -> bool:
        return isinstance(obj, Interval)

    def size(self, obj: object) -> int:
        return self.require(obj).n  # type: ignore[attr-defined]

    def underlying(self, obj: object) -> tuple[Element, ...]:
        return self.require(obj).elements  # type: ignore[attr-defined]

    def _objects_of_size(self, size: int) -> Iterable[object]:
        return [Interval(size)]

    def _injections(self, source: Interval, target: Interval) -> Iterator[tuple[int, ...]]:
        return permutations(target.elements, source.n)

    def _hom(self, source: object, target: object) -> Iterator[Mapping[Element, Element]]:
        for images in self._injections(source, target):  # type: ignore[arg-type]
            yield dict(zip(source.elements, images))  # type: ignore[attr-defined]

    def parse_object(self, text: str) -> object:
        return parse_interval(text)

    def format_object(self, obj: object) -> str:
        return f"[{self.size(obj)}]"


class OI(FI):
    """전순서 집합 [n] 과 단조 단사."""

    ordered = True

    def __init__(self, descriptor: InstanceDescriptor | None = None) -> None:
        super().__init__(descriptor or InstanceDescriptor(kind=InstanceKind.OI))

    def _injections(self, source: Interval, target: Interval) -> Iterator[tuple[int, ...]]:
        return combinations(target.elements, source.n)

    def ordering(self, obj: object) -> Ordering:
        return self.underlying(obj)


class BOI(OI):
    """블록 OI: Hom([n],[m]) = {φ_0,…,φ_{m-n}}, φ_i(j) = j+i."""

    def __init__(self, descriptor: InstanceDescriptor | None = None) -> None:
        super().__init__(descriptor or InstanceDescriptor(kind=InstanceKind.BOI))

    def _injections(self, source: Interval, target: Interval) -> Iterator[tuple[int, ...]]:
        if source.n == 0:
            yield ()
            return
        for shift in range(target.n - source.n + 1):
            yield tuple(j + shift for j in source.elements)


class FIm(FI):
    """|A|_m = |A| × [m] 을 밑집합으로 쓰는 FI."""

    def __init__(self, descriptor: InstanceDescriptor) -> None:
        super().__init__(descriptor)
        self.colors = descriptor.m or 1

    def underlying(self, obj: object) -> tuple[Element, ...]:
        interval = self.require(obj)
        return tuple(
            (element, color)
            for element in interval.elements  # type: ignore[attr-defined]
            for color in range(1, self.colors + 1)
        )

    def _hom(self, source: object, target: object) -> Iterator[Mapping[Element, Element]]:
        for images in self._injections(source, target):  # type: ignore[arg-type]
            assignment = dict(zip(source.elements, images))  # type: ignore[attr-defined]
            yield {
                (element, color): (assignment[element], color)
                for element in source.elements  # type: ignore[attr-defined]
                for color in range(1, self.colors + 1)
            }


class OIm(FIm):
    """|A|_m 을 사전식으로 순서 지은 OI."""

    ordered = True

    def _injections(self, source: Interval, target: Interval) -> Iterator[tuple[int, ...]]:
        return combinations(target.elements, source.n)

    def ordering(self, obj: object) -> Ordering:
        return self.underlying(obj)


class ColoredLinear(CategoryInstance):
    """c 색으로 칠한 유한 사슬과 색·순서 보존 단사."""

    ordered = True

    def __init__(self, descriptor: InstanceDescriptor) -> None:
        super().__init__(descriptor)
        self.colors = descriptor.c or 1

    def contains(self, obj: object) -> bool:
        return isinstance(obj, ColoredChain) and all(1 <= color <= self.colors for color in obj.colors)

    def size(self, obj: object) -> int:
        return self.require(obj).n  # type: ignore[attr-defined]

    def underlying(self, obj: object) -> tuple[Element, ...]:
        return self.require(obj).elements  # type: ignore[attr-defined]

    def ordering(self, obj: object) -> Ordering:
        return self.underlying(obj)

    def _objects_of_size(self, size: int) -> Iterable[object]:
        return [ColoredChain(colors) for colors in product(range(1, self.colors + 1), repeat=size)]

    def _hom(self, source: object, target: object) -> Iterator[Mapping[Element, Element]]:
        for images in combinations(target.elements, source.n):  # type: ignore[attr-defined]
            if all(
                source.color(element) == target.color(image)  # type: ignore[attr-defined]
                for element, image in zip(source.elements, images)  # type: ignore[attr-defined]
            ):
                yield dict(zip(source.elements, images))  # type: ignore[attr-defined]

    def iso_key(self, obj: object) -> object:
        return self.require(obj).colors  # type: ignore[attr-defined]

    def parse_object(self, text: str) -> object:
        match = _COLORS.match(text)
        if match is None:
            raise ParseError(f"색 사슬은 colors=a,b,… 형식이어야 합니다: '{text}' (위치 0)", text=text, position=0)
        body = match.group(1).replace(" ", "")
        colors = tuple(int(token) for token in body.split(",") if token)
        chain = ColoredChain(colors)
        if not self.contains(chain):
            raise ParseError(f"색은 1..{self.colors} 범위여야 합니다: {text}", text=text)
        return chain

    def format_object(self, obj: object) -> str:
        return repr(self.require(obj))


__all__ = ["BOI", "FI", "FIm", "OI", "OIm", "ColoredLinear", "parse_interval"]
