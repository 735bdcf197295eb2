"""라벨 붙은 보론 트리의 전수 생성과 사중표로부터의 복원."""

from __future__ import annotations

from math import prod
from typing import Iterable

from src.utils.exceptions import InvalidTree, TooFewLeaves

from .boron import BoronTree, InternalNode, Label, QuartetTable, sort_labels

EdgeList = list[tuple[object, object]]


def count_labeled(n: int) -> int:
    """잎 {1..n} 위의 보론 트리 개수 (2n-5)!!."""
    if n < 2:
        raise TooFewLeaves("잎은 최소 두 개여야 합니다.")
    if n <= 3:
        return 1
    return prod(range(1, 2 * n - 4, 2))


def _insert_leaf(edges: EdgeList, edge_index: int, leaf: Label, internal: InternalNode) -> EdgeList:
    """edge_index 번째 간선을 세분하고 새 잎을 매단다."""
    u, v = edges[edge_index]
    rest = edges[:edge_index] + edges[edge_index + 1 :]
    return rest + [(u, internal), (internal, v), (internal, leaf)]


def _grow(leaves: tuple[Label, ...]) -> list[EdgeList]:
    """간선 삽입으로 주어진 잎 순서의 모든 트리 간선 목록을 만든다."""
    levels: list[EdgeList] = [[(leaves[0], leaves[1])]]
    for position, leaf in enumerate(leaves[2:]):
        internal = InternalNode(position)
        levels = [
            _insert_leaf(edges, index, leaf, internal)
            for edges in levels
            for index in range(len(edges))
        ]
    return levels


def enumerate_labeled(n: int) -> list[BoronTree]:
    """잎 집합이 {1..n} 인 모든 보론 트리 (중복 없음)."""
    if n < 2:
        raise TooFewLeaves("잎은 최소 두 개여야 합니다.")
    leaves = tuple(range(1, n + 1))
    return [BoronTree(leaves, edges) for edges in _grow(leaves)]


def from_quartets(leaves: Iterable[Label], table: QuartetTable) -> BoronTree:
    """사중표와 일치하는 유일한 보론 트리를 복원한다.

    잎을 하나씩 추가하며, 새 잎이 포함된 모든 4-조합에서 표와 일치하는 간선을 찾는다.
    """
    order = sort_labels(leaves)
    if len(order) < 2:
        if len(order) == 1:
            return BoronTree(order)
        raise TooFewLeaves("잎은 최소 한 개여야 합니다.")

    edges: EdgeList = [(order[0], order[1])]
    for position, leaf in enumerate(order[2:]):
        internal = InternalNode(position)
        chosen: EdgeList | None = None
        for index in range(len(edges)):
            candidate = _insert_leaf(edges, index, leaf, internal)
            placed = order[: position + 3]
            tree = BoronTree(placed, candidate)
            local = tree.quartet_table
            if all(
                local.splits[four] == table.split_of(four)
                for four in local.splits
                if leaf in four
            ):
                chosen = candidate
                break
        if chosen is None:
            raise InvalidTree(f"잎 {leaf!r}를 사중표와 일치하게 삽입할 수 없습니다.")
        edges = chosen
    return BoronTree(order, edges)


__all__ = ["count_labeled", "enumerate_labeled", "from_quartets"]
