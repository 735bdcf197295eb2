"""Newick 형식 보론 트리 파서와 직렬화기.

문법 (공백 무시)::

    tree     := subtree ';'
    subtree  := label | '(' subtree (',' subtree)* ')'
    label    := [A-Za-z0-9_.-]+        # 숫자로만 이루어지면 정수 라벨
    ordered  := 'root=' label ':' tree

최상위 괄호는 자식이 2개(차수 2 정점은 억제) 또는 3개, 내부 괄호는 정확히 2개여야 한다.
`((1,2),(3,4));` 는 사중 트리 12|34 이다. 순서 트리는 괄호 안 잎의 등장 순서를
반시계 방향 배치로 읽고, 직렬화할 때는 루트 잎을 먼저 쓰고 자식을 평면 순서로 쓴다.
"""

from __future__ import annotations

import re
from typing import TYPE_CHECKING, Union

from src.utils.exceptions import InvalidTree, ParseError

from .boron import BoronTree, InternalNode, Label, label_key

if TYPE_CHECKING:  # pragma: no cover
    from .ordered import OrderedBoronTree

Nested = Union[Label, tuple["Nested", ...]]

_LABEL = re.compile(r"[A-Za-z0-9_.\-]+")
_ORDERED_PREFIX = re.compile(r"\s*root\s*=\s*")


def coerce_label(token: str) -> Label:
    """ASCII 숫자로만 이루어진 토큰은 정수 라벨, 나머지(`-1` 포함)는 문자열 라벨."""
    return int(token) if token.isascii() and token.isdigit() else token


class _Reader:
    def __init__(self, text: str, pos: int = 0) -> None:
        self.text = text
        self.pos = pos

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, message: str) -> ParseError:
        return ParseError(f"{message} (위치 {self.pos})", text=self.text, position=self.pos)

    def expect(self, char: str) -> None:
        if self.peek() != char:
            raise self.fail(f"'{char}' 가 필요합니다")
        self.pos += 1

    def label(self) -> Label:
        self.skip()
        match = _LABEL.match(self.text, self.pos)
        if match is None:
            raise self.fail("잎 라벨이 필요합니다")
        self.pos = match.end()
        return coerce_label(match.group(0))

    def subtree(self) -> Nested:
        if self.peek() != "(":
            return self.label()
        self.pos += 1
        children = [self.subtree()]
        while True:
            char = self.peek()
            if char == ",":
                self.pos += 1
                children.append(self.subtree())
            elif char == ")":
                self.pos += 1
                return tuple(children)
            else:
                raise self.fail("',' 또는 ')' 가 필요합니다")

    def finish(self) -> None:
        self.expect(";")
        self.skip()
        if self.pos != len(self.text):
            raise self.fail("';' 뒤에 남은 입력이 있습니다")


def _leaf_sequence(nested: Nested) -> list[Label]:
    if isinstance(nested, tuple):
        return [leaf for child in nested for leaf in _leaf_sequence(child)]
    return [nested]


def tree_from_nested(nested: Nested) -> BoronTree:
    """중첩 튜플 표현을 보론 트리로 만든다."""
    edges: list[tuple[object, object]] = []
    counter = 0

    def fresh() -> InternalNode:
        nonlocal counter
        node = InternalNode(counter)
        counter += 1
        return node

    def attach(item: Nested) -> object:
        if not isinstance(item, tuple):
            return item
        if len(item) != 2:
            raise InvalidTree(f"내부 괄호는 정확히 두 자식을 가져야 합니다: 자식 {len(item)}개")
        node = fresh()
        for child in item:
            edges.append((node, attach(child)))
        return node

    leaves = _leaf_sequence(nested)
    if not isinstance(nested, tuple):
        return BoronTree(leaves)
    if len(nested) == 2:
        edges.append((attach(nested[0]), attach(nested[1])))
    elif len(nested) == 3:
        center = fresh()
        for child in nested:
            edges.append((center, attach(child)))
    else:
        raise InvalidTree(f"최상위 괄호는 두 개 또는 세 개의 자식을 가져야 합니다: 자식 {len(nested)}개")
    return BoronTree(leaves, edges)


def parse_newick_with_order(text: str) -> tuple[BoronTree, list[Label]]:
    """트리와 텍스트상의 잎 등장 순서를 함께 돌려준다."""
    reader = _Reader(text)
    nested = reader.subtree()
    reader.finish()
    return tree_from_nested(nested), _leaf_sequence(nested)


def parse_newick(text: str) -> BoronTree:
    return parse_newick_with_order(text)[0]


def parse_ordered(text: str) -> "OrderedBoronTree":
    """`root=R:(...);` 형식의 순서 보론 트리."""
    from .ordered import OrderedBoronTree

    prefix = _ORDERED_PREFIX.match(text)
    if prefix is None:
        raise ParseError("순서 트리는 'root=' 로 시작해야 합니다 (위치 0)", text=text, position=0)
    reader = _Reader(text, prefix.end())
    root = reader.label()
    reader.expect(":")
    nested = reader.subtree()
    reader.finish()
    tree = tree_from_nested(nested)
    sequence = _leaf_sequence(nested)
    tree.require_leaf(root)
    start = sequence.index(root)
    arrangement = tuple(sequence[start:] + sequence[:start])
    return OrderedBoronTree(tree, root, arrangement)


def format_newick(tree: BoronTree) -> str:
    """라벨 순서로 정규화한 Newick 문자열."""
    leaves = tree.sorted_leaves
    if tree.size == 1:
        return f"{leaves[0]};"
    if tree.size == 2:
        return f"({leaves[0]},{leaves[1]});"

    def render(node: object, parent: object) -> tuple[str, tuple]:
        if not isinstance(node, InternalNode):
            return str(node), label_key(node)  # type: ignore[arg-type]
        parts = sorted(
            (render(child, node) for child in tree.graph.neighbors(node) if child != parent),
            key=lambda item: item[1],
        )
        return "(" + ",".join(text for text, _ in parts) + ")", parts[0][1]

    anchor = leaves[0]
    center = tree.neighbors(anchor)[0]
    branches = sorted(
        (render(child, center) for child in tree.graph.neighbors(center) if child != anchor),
        key=lambda item: item[1],
    )
    return "(" + ",".join([str(anchor)] + [text for text, _ in branches]) + ");"


def format_ordered(ordered: "OrderedBoronTree") -> str:
    """루트 잎을 먼저, 자식을 평면 순서로 쓴다."""
    tree = ordered.tree
    root = ordered.root
    position = {leaf: index for index, leaf in enumerate(ordered.arrangement)}
    if tree.size == 1:
        return f"root={root}:{root};"
    if tree.size == 2:
        return f"root={root}:({root},{ordered.arrangement[1]});"

    def render(node: object, parent: object) -> tuple[str, int]:
        if not isinstance(node, InternalNode):
            return str(node), position[node]
        parts = sorted(
            (render(child, node) for child in tree.graph.neighbors(node) if child != parent),
            key=lambda item: item[1],
        )
        return "(" + ",".join(text for text, _ in parts) + ")", parts[0][1]

    center = tree.neighbors(root)[0]
    branches = sorted(
        (render(child, center) for child in tree.graph.neighbors(center) if child != root),
        key=lambda item: item[1],
    )
    return f"root={root}:(" + ",".join([str(root)] + [text for text, _ in branches]) + ");"


__all__ = [
    "Nested",
    "coerce_label",
    "format_newick",
    "format_ordered",
    "parse_newick",
    "parse_newick_with_order",
    "parse_ordered",
    "tree_from_nested",
]
