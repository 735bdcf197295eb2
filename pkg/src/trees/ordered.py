"""순서(평면) 보론 트리.

원판 안에 평면으로 그린 보론 트리에 루트 잎 ∞ 를 지정한 것이다. 잎의 배치는 루트에서
시작하는 반시계 방향 튜플로 저장하며, x 가 ∞ 와 y 사이에 있으면 x < y, 그리고 모든
x ≠ ∞ 에 대해 x < ∞ 이다.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Iterator, Sequence

from src.utils.exceptions import InvalidLeaf, NotPlanar, TooFewLeaves, TooSmall

from .boron import BoronTree, InternalNode, Label, _node_key, induced
from .embeddings import Embedding, search_embeddings
from .newick import Nested, tree_from_nested


def _transitions(arrangement: Sequence[Label], side: frozenset[Label]) -> int:
    count = 0
    for index, leaf in enumerate(arrangement):
        following = arrangement[(index + 1) % len(arrangement)]
        if (leaf in side) != (following in side):
            count += 1
    return count


class OrderedBoronTree:
    """보론 트리 + 루트 잎 + 반시계 방향 잎 배치."""

    def __init__(self, tree: BoronTree, root: Label, arrangement: Iterable[Label]) -> None:
        tree.require_leaf(root)
        order = tuple(arrangement)
        if len(order) != tree.size or set(order) != set(tree.leaves):
            raise NotPlanar("배치는 잎 집합의 순열이어야 합니다.")
        start = order.index(root)
        order = order[start:] + order[:start]
        for split in tree.splits:
            side = next(iter(split))
            if _transitions(order, side) > 2:
                raise NotPlanar(f"분할 {sorted(side, key=str)} 이 원형 배치에서 연속이 아닙니다.")
        self._tree = tree
        self._root = root
        self._arrangement = order

    @property
    def tree(self) -> BoronTree:
        return self._tree

    @property
    def root(self) -> Label:
        return self._root

    @property
    def arrangement(self) -> tuple[Label, ...]:
        """루트부터 시작하는 반시계 방향 잎 배치."""
        return self._arrangement

    @property
    def leaves(self) -> frozenset[Label]:
        return self._tree.leaves

    @property
    def size(self) -> int:
        return self._tree.size

    @cached_property
    def leaf_order(self) -> tuple[Label, ...]:
        """오름차순 잎 목록. 마지막 원소가 루트(최댓값)이다."""
        return self._arrangement[1:] + (self._root,)

    @cached_property
    def _rank(self) -> dict[Label, int]:
        return {leaf: index for index, leaf in enumerate(self.leaf_order)}

    def rank(self, leaf: Label) -> int:
        self._tree.require_leaf(leaf)
        return self._rank[leaf]

    def precedes(self, x: Label, y: Label) -> bool:
        """엄격한 순서 x < y."""
        return self.rank(x) < self.rank(y)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrderedBoronTree):
            return NotImplemented
        return (
            self._tree == other._tree
            and self._root == other._root
            and self._arrangement == other._arrangement
        )

    def __hash__(self) -> int:
        return hash((self._tree, self._root, self._arrangement))

    def __repr__(self) -> str:
        from .newick import format_ordered

        return f"OrderedBoronTree({format_ordered(self)})"


def _restrict(ordered: OrderedBoronTree, part: Iterable[Label]) -> OrderedBoronTree:
    keep = set(part) | {ordered.root}
    tree = induced(ordered.tree, keep)
    arrangement = [leaf for leaf in ordered.arrangement if leaf in keep]
    return OrderedBoronTree(tree, ordered.root, arrangement)


def root_decomposition(ordered: OrderedBoronTree) -> tuple[OrderedBoronTree, OrderedBoronTree]:
    """루트 이웃의 두 자식 부분트리로 나눈 (왼쪽, 오른쪽) 순서 트리.

    각 부분은 원래 루트와 해당 자식의 자손 잎으로 이루어지며, 왼쪽 부분의 모든 잎은
    오른쪽 부분의 모든 잎보다 작다.
    """
    if ordered.size < 3:
        raise TooSmall("루트 분해에는 최소 세 개의 잎이 필요합니다.")
    tree = ordered.tree
    center = tree.neighbors(ordered.root)[0]
    parts: list[list[Label]] = []
    for child in tree.neighbors(center):
        if child == ordered.root:
            continue
        below = [
            leaf
            for leaf in ordered.leaf_order
            if leaf != ordered.root and center not in tree.path(child, leaf)
        ]
        parts.append(below)
    parts.sort(key=lambda below: ordered.rank(below[0]))
    left, right = parts
    return _restrict(ordered, left), _restrict(ordered, right)


def _hanging_edges(ordered: OrderedBoronTree, offset: int) -> tuple[object, list[tuple[object, object]]]:
    """루트를 떼어낸 부분트리의 간선과 그 꼭대기 정점. 보론 원자는 offset 부터 다시 번호를 매긴다."""
    tree = ordered.tree
    renumber = {node: InternalNode(offset + index) for index, node in enumerate(tree.internal_nodes())}

    def shift(node: object) -> object:
        return renumber.get(node, node)

    top = tree.neighbors(ordered.root)[0]
    edges = [
        (shift(u), shift(v))
        for u, v in tree.edges()
        if ordered.root not in (u, v)
    ]
    return shift(top), edges


def compose_root(left: OrderedBoronTree, right: OrderedBoronTree) -> OrderedBoronTree:
    """root_decomposition 의 역연산: 두 부분을 새 보론 원자에서 루트와 이어 붙인다."""
    if left.root != right.root:
        raise InvalidLeaf("두 부분의 루트가 같아야 합니다.")
    if left.size < 2 or right.size < 2:
        raise TooSmall("각 부분은 루트 외에 최소 한 개의 잎을 가져야 합니다.")
    shared = (left.leaves & right.leaves) - {left.root}
    if shared:
        raise InvalidLeaf(f"두 부분의 잎이 겹칩니다: {sorted(shared, key=str)}")

    left_top, left_edges = _hanging_edges(left, 1)
    right_top, right_edges = _hanging_edges(right, 1 + len(left.tree.internal_nodes()))
    center = InternalNode(0)
    edges = [(left.root, center), (center, left_top), (center, right_top)] + left_edges + right_edges
    leaves = [left.root, *left.arrangement[1:], *right.arrangement[1:]]
    return OrderedBoronTree(BoronTree(leaves, edges), left.root, leaves)


def planar_embedding(tree: BoronTree, root: Label) -> OrderedBoronTree:
    """DFS 순서로 잎을 배치한 평면 구조. 모든 보론 트리는 이런 구조를 가진다."""
    tree.require_leaf(root)
    arrangement: list[Label] = []
    stack: list[tuple[object, object]] = [(root, None)]
    while stack:
        node, parent = stack.pop()
        if not isinstance(node, InternalNode):
            arrangement.append(node)  # type: ignore[arg-type]
        children = sorted(
            (child for child in tree.graph.neighbors(node) if child != parent),
            key=_node_key,
            reverse=True,
        )
        stack.extend((child, node) for child in children)
    return OrderedBoronTree(tree, root, arrangement)


def _bracketings(labels: tuple[Label, ...]) -> Iterator[Nested]:
    if len(labels) == 1:
        yield labels[0]
        return
    for cut in range(1, len(labels)):
        for first in _bracketings(labels[:cut]):
            for second in _bracketings(labels[cut:]):
                yield (first, second)


def enumerate_ordered(n: int) -> list[OrderedBoronTree]:
    """잎 1..n, 루트 n, 순서 1 < … < n 인 모든 순서 보론 트리 (Catalan(n-2) 개)."""
    if n < 2:
        raise TooFewLeaves("순서 트리 열거에는 최소 두 개의 잎이 필요합니다.")
    body = tuple(range(1, n))
    arrangement = (n, *body)
    return [
        OrderedBoronTree(tree_from_nested((n, shape)), n, arrangement)
        for shape in _bracketings(body)
    ]


def enumerate_ordered_embeddings(source: OrderedBoronTree, target: OrderedBoronTree) -> list[Embedding]:
    """루트와 잎 순서를 보존하는 매장."""

    def admissible(assignment: Embedding, leaf: Label, image: Label) -> bool:
        if (leaf == source.root) != (image == target.root):
            return False
        for placed, placed_image in assignment.items():
            if source.precedes(placed, leaf) != target.precedes(placed_image, image):
                return False
        return True

    return list(search_embeddings(source.tree, target.tree, admissible=admissible))


__all__ = [
    "OrderedBoronTree",
    "compose_root",
    "enumerate_ordered",
    "enumerate_ordered_embeddings",
    "planar_embedding",
    "root_decomposition",
]
