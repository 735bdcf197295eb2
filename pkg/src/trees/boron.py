"""보론 트리 자료구조와 사중 관계(quartet relation).

보론 트리는 내부 정점(보론 원자)의 차수가 모두 3인 유한 트리이며, 잎(수소 원자)에는
서로 다른 라벨이 붙는다. 잎 집합 위의 사중 관계 ρ(w,x;y,z)는 w–x 측지선과 y–z
측지선이 정점을 공유할 때 참이다.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence, Union

import networkx as nx

from src.utils.exceptions import DegenerateQuartet, InvalidLeaf, InvalidTree, TooFewLeaves

Label = Union[int, str]
Pairing = frozenset  # frozenset({frozenset({w, x}), frozenset({y, z})})
Split = frozenset  # frozenset({frozenset(A), frozenset(B)})


def label_key(label: Label) -> tuple[int, Label]:
    """정수 라벨을 문자열 라벨보다 앞에 두는 정렬 키."""
    if isinstance(label, int):
        return (0, label)
    return (1, label)


def sort_labels(labels: Iterable[Label]) -> tuple[Label, ...]:
    return tuple(sorted(labels, key=label_key))


def pairing(w: Label, x: Label, y: Label, z: Label) -> Pairing:
    """{wx | yz} 쌍 분할."""
    return frozenset({frozenset({w, x}), frozenset({y, z})})


def pairings_of(four: Sequence[Label]) -> tuple[Pairing, Pairing, Pairing]:
    """네 잎의 세 가지 쌍 분할."""
    w, x, y, z = four
    return pairing(w, x, y, z), pairing(w, y, x, z), pairing(w, z, x, y)


@dataclass(frozen=True, order=True)
class InternalNode:
    """보론 원자. 잎 라벨과 충돌하지 않도록 별도 타입을 쓴다."""

    index: int

    def __repr__(self) -> str:
        return f"b{self.index}"


def _is_label(node: object) -> bool:
    return isinstance(node, (int, str)) and not isinstance(node, bool)


class BoronTree:
    """잎 라벨이 붙은 유한 보론 트리 (불변 값)."""

    def __init__(self, leaves: Iterable[Label], edges: Iterable[tuple[object, object]] = ()) -> None:
        leaf_list = list(leaves)
        if not leaf_list:
            raise InvalidTree("보론 트리는 최소 한 개의 잎을 가져야 합니다.")
        for leaf in leaf_list:
            if not _is_label(leaf):
                raise InvalidTree(f"잎 라벨은 정수 또는 문자열이어야 합니다: {leaf!r}")
        leaf_set = frozenset(leaf_list)
        if len(leaf_set) != len(leaf_list):
            raise InvalidTree("잎 라벨이 중복되었습니다.")

        graph = nx.Graph()
        graph.add_nodes_from(leaf_set)
        for u, v in edges:
            for node in (u, v):
                if not isinstance(node, InternalNode) and node not in leaf_set:
                    raise InvalidTree(f"간선이 선언되지 않은 잎을 참조합니다: {node!r}")
            graph.add_edge(u, v)

        if not nx.is_tree(graph):
            raise InvalidTree("그래프가 트리가 아닙니다 (연결성 또는 비순환성 위반).")
        many = graph.number_of_nodes() > 1
        for node, degree in graph.degree():
            if isinstance(node, InternalNode):
                if degree != 3:
                    raise InvalidTree(f"보론 원자 {node!r}의 차수가 3이 아닙니다: {degree}")
            elif many and degree != 1:
                raise InvalidTree(f"잎 {node!r}의 차수가 1이 아닙니다: {degree}")

        self._leaves = leaf_set
        self._graph = nx.freeze(graph)

    # --- 기본 속성 ---------------------------------------------------------

    @property
    def leaves(self) -> frozenset[Label]:
        return self._leaves

    @cached_property
    def sorted_leaves(self) -> tuple[Label, ...]:
        return sort_labels(self._leaves)

    @property
    def graph(self) -> nx.Graph:
        """동결된 networkx 그래프."""
        return self._graph

    @property
    def size(self) -> int:
        return len(self._leaves)

    def internal_nodes(self) -> list[InternalNode]:
        return sorted(node for node in self._graph.nodes if isinstance(node, InternalNode))

    def edges(self) -> list[tuple[object, object]]:
        return list(self._graph.edges)

    def neighbors(self, node: object) -> list[object]:
        return list(self._graph.neighbors(node))

    def require_leaf(self, label: Label) -> None:
        if label not in self._leaves:
            raise InvalidLeaf(f"트리에 존재하지 않는 잎입니다: {label!r}")

    # --- 측지선 ----------------------------------------------------------

    def path(self, u: object, v: object) -> list[object]:
        """u 와 v 를 잇는 유일한 경로."""
        return nx.shortest_path(self._graph, u, v)

    def distance(self, u: object, v: object) -> int:
        return nx.shortest_path_length(self._graph, u, v)

    @cached_property
    def _leaf_paths(self) -> dict[Label, dict[object, list[object]]]:
        return {leaf: nx.single_source_shortest_path(self._graph, leaf) for leaf in self._leaves}

    def geodesic(self, u: Label, v: Label) -> frozenset[object]:
        return frozenset(self._leaf_paths[u][v])

    # --- 분할과 동치 -------------------------------------------------------

    @cached_property
    def splits(self) -> frozenset[Split]:
        """간선마다 정해지는 잎의 이분할 집합."""
        if self._graph.number_of_nodes() == 1:
            return frozenset()
        anchor = self.sorted_leaves[0]
        below: dict[object, frozenset[Label]] = {}
        parents = nx.dfs_predecessors(self._graph, anchor)
        for node in nx.dfs_postorder_nodes(self._graph, anchor):
            members = {node} if node in self._leaves and node != anchor else set()
            for child in self._graph.neighbors(node):
                if parents.get(child) == node:
                    members |= below[child]
            below[node] = frozenset(members)
        result = set()
        for node, parent in parents.items():
            side = below[node]
            result.add(frozenset({side, self._leaves - side}))
        return frozenset(result)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BoronTree):
            return NotImplemented
        return self._leaves == other._leaves and self.splits == other.splits

    def __hash__(self) -> int:
        return hash((self._leaves, self.splits))

    def __repr__(self) -> str:
        from .newick import format_newick

        return f"BoronTree({format_newick(self)!r})"

    # --- 파생 구조 -------------------------------------------------------

    @cached_property
    def quartet_table(self) -> "QuartetTable":
        return QuartetTable.from_tree(self)

    def relabel(self, mapping: Mapping[Label, Label]) -> "BoronTree":
        """잎 라벨을 전단사로 바꾼 트리."""
        if set(mapping) != set(self._leaves) or len(set(mapping.values())) != len(mapping):
            raise InvalidLeaf("라벨 치환은 잎 집합 위의 전단사여야 합니다.")

        def rename(node: object) -> object:
            return node if isinstance(node, InternalNode) else mapping[node]  # type: ignore[index]

        return BoronTree(mapping.values(), ((rename(u), rename(v)) for u, v in self._graph.edges))


@dataclass(frozen=True)
class QuartetTable:
    """네 잎마다 ρ 가 거짓인 유일한 쌍 분할을 기록한 표."""

    leaves: frozenset[Label]
    splits: Mapping[frozenset[Label], Pairing]

    @classmethod
    def from_tree(cls, tree: BoronTree) -> "QuartetTable":
        """측지선 교차 정의로 직접 계산한다."""
        table: dict[frozenset[Label], Pairing] = {}
        for four in combinations(tree.sorted_leaves, 4):
            false_pairings = [
                candidate
                for candidate in pairings_of(four)
                if not _geodesics_meet(tree, candidate)
            ]
            if len(false_pairings) != 1:
                raise InvalidTree(f"잎 {four}의 사중 관계가 일관되지 않습니다.")
            table[frozenset(four)] = false_pairings[0]
        return cls(leaves=tree.leaves, splits=table)

    def split_of(self, four: Iterable[Label]) -> Pairing:
        key = frozenset(four)
        if len(key) != 4:
            raise DegenerateQuartet("사중 관계에는 서로 다른 네 잎이 필요합니다.")
        for label in key:
            if label not in self.leaves:
                raise InvalidLeaf(f"표에 존재하지 않는 잎입니다: {label!r}")
        return self.splits[key]

    def holds(self, w: Label, x: Label, y: Label, z: Label) -> bool:
        for label in (w, x, y, z):
            if label not in self.leaves:
                raise InvalidLeaf(f"표에 존재하지 않는 잎입니다: {label!r}")
        if len({w, x, y, z}) != 4:
            raise DegenerateQuartet("사중 관계 인자는 서로 달라야 합니다.")
        return self.splits[frozenset((w, x, y, z))] != pairing(w, x, y, z)

    def restrict(self, subset: Iterable[Label]) -> "QuartetTable":
        keep = frozenset(subset)
        return QuartetTable(
            leaves=keep,
            splits={four: split for four, split in self.splits.items() if four <= keep},
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuartetTable):
            return NotImplemented
        return self.leaves == other.leaves and dict(self.splits) == dict(other.splits)

    def __hash__(self) -> int:
        return hash((self.leaves, frozenset(self.splits.items())))


def _geodesics_meet(tree: BoronTree, candidate: Pairing) -> bool:
    first, second = tuple(candidate)
    return bool(tree.geodesic(*first) & tree.geodesic(*second))


def quartet(tree: BoronTree, w: Label, x: Label, y: Label, z: Label) -> bool:
    """w–x 경로와 y–z 경로가 정점을 공유하면 참."""
    for label in (w, x, y, z):
        tree.require_leaf(label)
    if len({w, x, y, z}) != 4:
        raise DegenerateQuartet("사중 관계 인자는 서로 다른 네 잎이어야 합니다.")
    return tree.quartet_table.holds(w, x, y, z)


def four_point_split(tree: BoronTree, four: Sequence[Label]) -> Pairing:
    """거리 합 d(w,x)+d(y,z) 가 최소인 쌍 분할 (사중표와 독립적인 검증용 계산)."""
    if len(set(four)) != 4:
        raise DegenerateQuartet("서로 다른 네 잎이 필요합니다.")
    for label in four:
        tree.require_leaf(label)

    def weight(candidate: Pairing) -> int:
        first, second = tuple(candidate)
        return tree.distance(*first) + tree.distance(*second)

    return min(pairings_of(tuple(four)), key=weight)


def _renumber_internal(graph: nx.Graph, start: Label) -> nx.Graph:
    """내부 정점 번호를 시작 잎 기준 BFS 순서로 다시 매긴다."""
    mapping: dict[object, object] = {}
    counter = 0
    seen = {start}
    queue: deque[object] = deque([start])
    while queue:
        node = queue.popleft()
        if isinstance(node, InternalNode):
            mapping[node] = InternalNode(counter)
            counter += 1
        for neighbor in sorted(graph.neighbors(node), key=_node_key):
            if neighbor not in seen:
                seen.add(neighbor)
                queue.append(neighbor)
    return nx.relabel_nodes(graph, mapping, copy=True)


def _node_key(node: object) -> tuple:
    if isinstance(node, InternalNode):
        return (2, node.index)
    return label_key(node)  # type: ignore[arg-type]


def induced(tree: BoronTree, subset: Iterable[Label]) -> BoronTree:
    """잎 부분집합의 Steiner 트리에서 차수 2 정점을 억제한 유도 보론 트리."""
    chosen = sort_labels(set(subset))
    if len(chosen) < 2:
        raise TooFewLeaves("유도 트리에는 최소 두 개의 잎이 필요합니다.")
    for label in chosen:
        tree.require_leaf(label)

    anchor = chosen[0]
    paths = nx.single_source_shortest_path(tree.graph, anchor)
    nodes: set[object] = set()
    for label in chosen[1:]:
        nodes.update(paths[label])
    steiner = nx.Graph(tree.graph.subgraph(nodes))

    for node in [n for n in steiner.nodes if isinstance(n, InternalNode)]:
        if steiner.degree(node) == 2:
            left, right = list(steiner.neighbors(node))
            steiner.remove_node(node)
            steiner.add_edge(left, right)

    steiner = _renumber_internal(steiner, anchor)
    return BoronTree(chosen, steiner.edges)


def canonical_form(tree: BoronTree) -> str:
    """라벨과 무관한 정규 부호.

    각 간선을 뿌리로 삼아 AHU 방식의 뿌리 부분트리 부호를 만들고 사전순 최소를 택한다.
    """
    graph = tree.graph
    if graph.number_of_nodes() == 1:
        return "L"

    memo: dict[tuple[object, object], str] = {}

    def rooted(node: object, parent: object) -> str:
        key = (node, parent)
        cached = memo.get(key)
        if cached is not None:
            return cached
        if not isinstance(node, InternalNode):
            code = "L"
        else:
            children = sorted(rooted(child, node) for child in graph.neighbors(node) if child != parent)
            code = "(" + ",".join(children) + ")"
        memo[key] = code
        return code

    best: str | None = None
    for u, v in graph.edges:
        halves = sorted((rooted(u, v), rooted(v, u)))
        code = "[" + "|".join(halves) + "]"
        if best is None or code < best:
            best = code
    assert best is not None
    return best


def is_isomorphic(first: BoronTree, second: BoronTree) -> bool:
    return first.size == second.size and canonical_form(first) == canonical_form(second)


def iter_quartets(tree: BoronTree) -> Iterator[tuple[Label, Label, Label, Label]]:
    """정렬된 잎의 모든 4-조합."""
    yield from combinations(tree.sorted_leaves, 4)


__all__ = [
    "BoronTree",
    "InternalNode",
    "Label",
    "QuartetTable",
    "canonical_form",
    "four_point_split",
    "induced",
    "is_isomorphic",
    "iter_quartets",
    "label_key",
    "pairing",
    "pairings_of",
    "quartet",
    "sort_labels",
]
