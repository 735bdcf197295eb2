"""보론 트리 매장(embedding) 열거.

매장은 사중 관계를 보존하고 반영하는 잎 단사이다. 원본 잎을 라벨 순으로 하나씩 배정하는
백트래킹이며, 네 번째 잎부터는 새 잎이 포함된 모든 4-조합의 분할이 대상 트리의 분할과
일치하는지 확인해 가지를 친다. 후보를 라벨 순으로 시도하므로 결과는 상 튜플의 사전순이다.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Callable, Iterator, Optional

from src.utils.logger import get_logger, log_duration

from .boron import BoronTree, Label, Pairing, canonical_form, iter_quartets

Embedding = dict[Label, Label]
Admissible = Callable[[Embedding, Label, Label], bool]

_logger = get_logger(__name__)


def _image_pairing(split: Pairing, assignment: Embedding) -> Pairing:
    return frozenset(frozenset(assignment[leaf] for leaf in pair) for pair in split)


def search_embeddings(
    source: BoronTree,
    target: BoronTree,
    *,
    admissible: Optional[Admissible] = None,
) -> Iterator[Embedding]:
    """사중 관계 일관성으로 가지치기하는 매장 생성기.

    admissible(부분 배정, 새 원본 잎, 후보 상) 이 거짓이면 해당 후보를 건너뛴다.
    """
    order = source.sorted_leaves
    candidates = target.sorted_leaves
    if len(order) > len(candidates):
        return
    source_table = source.quartet_table
    target_table = target.quartet_table
    assignment: Embedding = {}
    used: set[Label] = set()

    def consistent(index: int) -> bool:
        if index < 3:
            return True
        newest = order[index]
        for trio in combinations(order[:index], 3):
            four = (*trio, newest)
            expected = _image_pairing(source_table.split_of(four), assignment)
            if target_table.split_of(assignment[leaf] for leaf in four) != expected:
                return False
        return True

    def extend(index: int) -> Iterator[Embedding]:
        if index == len(order):
            yield dict(assignment)
            return
        leaf = order[index]
        for image in candidates:
            if image in used:
                continue
            if admissible is not None and not admissible(assignment, leaf, image):
                continue
            assignment[leaf] = image
            used.add(image)
            if consistent(index):
                yield from extend(index + 1)
            used.discard(image)
            del assignment[leaf]

    yield from extend(0)


def enumerate_embeddings(source: BoronTree, target: BoronTree) -> list[Embedding]:
    """source → target 매장 전체 (결정적 순서)."""
    with log_duration(_logger, "매장 열거", source_leaves=source.size, target_leaves=target.size):
        result = list(search_embeddings(source, target))
    _logger.debug("매장 수", extra={"count": len(result)})
    return result


def brute_force_embeddings(source: BoronTree, target: BoronTree) -> list[Embedding]:
    """모든 단사를 사중표 비교로 거르는 검증용 열거."""
    order = source.sorted_leaves
    quartets = list(iter_quartets(source))
    source_table = source.quartet_table
    target_table = target.quartet_table
    result: list[Embedding] = []
    for images in permutations(target.sorted_leaves, len(order)):
        assignment = dict(zip(order, images))
        if all(
            target_table.split_of(assignment[leaf] for leaf in four)
            == _image_pairing(source_table.split_of(four), assignment)
            for four in quartets
        ):
            result.append(assignment)
    return result


def find_isomorphism(first: BoronTree, second: BoronTree) -> Optional[Embedding]:
    """두 트리 사이의 잎 전단사 하나, 없으면 None."""
    if first.size != second.size or canonical_form(first) != canonical_form(second):
        return None
    return next(search_embeddings(first, second), None)


def automorphisms(tree: BoronTree) -> list[Embedding]:
    return enumerate_embeddings(tree, tree)


__all__ = [
    "Embedding",
    "automorphisms",
    "brute_force_embeddings",
    "enumerate_embeddings",
    "find_isomorphism",
    "search_embeddings",
]
