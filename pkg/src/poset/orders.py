"""기본 부분 순서: Dickson, Higman, 순열 패턴, 반사슬 판정."""

from __future__ import annotations

import operator
from itertools import combinations
from typing import Callable, Optional, Sequence, TypeVar

from src.utils.exceptions import ArityMismatch

T = TypeVar("T")
Leq = Callable[[T, T], bool]


def dickson_leq(first: Sequence[int], second: Sequence[int]) -> bool:
    """ℕ^m 의 성분별 순서."""
    if len(first) != len(second):
        raise ArityMismatch(f"벡터 길이가 다릅니다: {len(first)} ≠ {len(second)}")
    return all(a <= b for a, b in zip(first, second))


def higman_leq(first: Sequence[T], second: Sequence[T], leq: Leq = operator.le) -> bool:
    """단조 위치 대응 i ↦ φ(i) 가 있어 first[i] ≤ second[φ(i)] 인가.

    왼쪽부터 가능한 가장 이른 위치에 대응시키는 탐욕법으로 충분하다.
    """
    position = 0
    for letter in first:
        while position < len(second) and not leq(letter, second[position]):
            position += 1
        if position == len(second):
            return False
        position += 1
    return True


def higman_leq_exhaustive(first: Sequence[T], second: Sequence[T], leq: Leq = operator.le) -> bool:
    """모든 단조 위치 대응을 시도하는 느린 판정."""
    return any(
        all(leq(letter, second[index]) for letter, index in zip(first, chosen))
        for chosen in combinations(range(len(second)), len(first))
    )


def pattern_leq(pattern: Sequence[int], permutation: Sequence[int]) -> bool:
    """순열 패턴 포함: 같은 상대 순서를 갖는 부분수열이 있는가."""
    shape = _relative_order(pattern)
    return any(
        _relative_order([permutation[index] for index in chosen]) == shape
        for chosen in combinations(range(len(permutation)), len(pattern))
    )


def _relative_order(values: Sequence[int]) -> tuple[int, ...]:
    ranking = sorted(range(len(values)), key=lambda index: values[index])
    result = [0] * len(values)
    for rank, index in enumerate(ranking):
        result[index] = rank
    return tuple(result)


def comparable(first: T, second: T, leq: Leq) -> bool:
    return leq(first, second) or leq(second, first)


def first_comparable_pair(elements: Sequence[T], leq: Leq) -> Optional[tuple[T, T]]:
    """처음 발견되는 비교 가능한 쌍 (반사슬이면 None)."""
    for first, second in combinations(elements, 2):
        if comparable(first, second, leq):
            return first, second
    return None


def antichain_check(elements: Sequence[T], leq: Leq) -> bool:
    return first_comparable_pair(elements, leq) is None


def minimal_elements(elements: Sequence[T], leq: Leq) -> list[T]:
    """극소 원소. 서로 동치인 원소는 먼저 나온 것만 남긴다."""
    result: list[T] = []
    for index, candidate in enumerate(elements):
        dominated = False
        for other_index, other in enumerate(elements):
            if other_index == index or not leq(other, candidate):
                continue
            if not leq(candidate, other) or other_index < index:
                dominated = True
                break
        if not dominated:
            result.append(candidate)
    return result


__all__ = [
    "Leq",
    "antichain_check",
    "comparable",
    "dickson_leq",
    "first_comparable_pair",
    "higman_leq",
    "higman_leq_exhaustive",
    "minimal_elements",
    "pattern_leq",
]
