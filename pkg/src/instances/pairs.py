"""순서쌍 집합 범주: 유한 단사 g 의 대각 작용 g×g 로 옮기는 사상.

대상은 ℕ×ℕ 의 유한 부분집합이고, A → B 사상은 지지집합 위의 단사 σ 가 σ×σ(A) ⊆ B 를
만족할 때 그 제한이다. 사상 열거는 지지집합 사이의 모든 단사를 조사한다.
"""

from __future__ import annotations

import re
from itertools import combinations, permutations
from typing import Iterable, Iterator, Mapping

from src.utils.exceptions import ParseError

from .base import CategoryInstance
from .descriptor import InstanceDescriptor, InstanceKind
from .objects import Element, PairSet

_PAIR = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")
_BODY = re.compile(r"^\s*\{(.*)\}\s*$")


def parse_pair_set(text: str) -> PairSet:
    """`{(1,2),(2,3)}` 형식."""
    body = _BODY.match(text)
    if body is None:
        raise ParseError(f"쌍 집합은 {{(a,b),…}} 형식이어야 합니다 (위치 0)", text=text, position=0)
    inner = body.group(1)
    offset = body.start(1)
    pairs: list[tuple[int, int]] = []
    position = 0
    while position < len(inner):
        if inner[position] in " ,":
            position += 1
            continue
        match = _PAIR.match(inner, position)
        if match is None:
            where = offset + position
            raise ParseError(f"'(a,b)' 가 필요합니다 (위치 {where})", text=text, position=where)
        pairs.append((int(match.group(1)), int(match.group(2))))
        position = match.end()
    return PairSet(frozenset(pairs))


class PairFI(CategoryInstance):
    """ℕ×ℕ 의 유한 부분집합과 대각 작용 사상."""

    def __init__(self, descriptor: InstanceDescriptor | None = None) -> None:
        super().__init__(descriptor or InstanceDescriptor(kind=InstanceKind.PAIR_FI))

    def contains(self, obj: object) -> bool:
        return isinstance(obj, PairSet)

    def size(self, obj: object) -> int:
        """지지집합의 크기."""
        return len(self.require(obj).support)  # type: ignore[attr-defined]

    def underlying(self, obj: object) -> tuple[Element, ...]:
        return self.require(obj).elements  # type: ignore[attr-defined]

    def _objects_of_size(self, size: int) -> Iterable[object]:
        """지지집합이 정확히 {1..size} 인 자기 순환 없는 쌍 집합."""
        points = range(1, size + 1)
        candidates = [(a, b) for a in points for b in points if a != b]
        result: list[PairSet] = []
        for count in range(len(candidates) + 1):
            for chosen in combinations(candidates, count):
                pair_set = PairSet(frozenset(chosen))
                if len(pair_set.support) == size:
                    result.append(pair_set)
        return result

    def _support_maps(self, source: PairSet, target: PairSet) -> Iterator[dict[int, int]]:
        for images in permutations(target.support, len(source.support)):
            sigma = dict(zip(source.support, images))
            if all((sigma[a], sigma[b]) in target.pairs for a, b in source.pairs):
                yield sigma

    def _hom(self, source: object, target: object) -> Iterator[Mapping[Element, Element]]:
        for sigma in self._support_maps(source, target):  # type: ignore[arg-type]
            yield {(a, b): (sigma[a], sigma[b]) for a, b in source.elements}  # type: ignore[attr-defined]

    def iso_key(self, obj: object) -> object:
        pair_set: PairSet = self.require(obj)  # type: ignore[assignment]
        support = pair_set.support
        best: tuple | None = None
        for images in permutations(range(1, len(support) + 1)):
            sigma = dict(zip(support, images))
            relabeled = tuple(sorted((sigma[a], sigma[b]) for a, b in pair_set.pairs))
            if best is None or relabeled < best:
                best = relabeled
        return best

    def parse_object(self, text: str) -> object:
        return parse_pair_set(text)

    def format_object(self, obj: object) -> str:
        return repr(self.require(obj))


__all__ = ["PairFI", "parse_pair_set"]
