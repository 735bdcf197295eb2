"""보론 트리 범주와 순서 보론 트리 범주."""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from src.trees import (
    BoronTree,
    OrderedBoronTree,
    canonical_form,
    enumerate_embeddings,
    enumerate_labeled,
    enumerate_ordered,
    enumerate_ordered_embeddings,
    format_newick,
    format_ordered,
    parse_newick,
    parse_ordered,
)

from .base import CategoryInstance, Ordering
from .descriptor import InstanceDescriptor, InstanceKind
from .objects import Element


class Boron(CategoryInstance):
    """보론 트리와 사중 관계를 보존·반영하는 매장. 순서는 제공하지 않는다."""

    min_size = 2

    def __init__(self, descriptor: InstanceDescriptor | None = None) -> None:
        super().__init__(descriptor or InstanceDescriptor(kind=InstanceKind.BORON))

    def contains(self, obj: object) -> bool:
        return isinstance(obj, BoronTree)

    def size(self, obj: object) -> int:
        return self.require(obj).size  # type: ignore[attr-defined]

    def underlying(self, obj: object) -> tuple[Element, ...]:
        return self.require(obj).sorted_leaves  # type: ignore[attr-defined]

    def _objects_of_size(self, size: int) -> Iterable[object]:
        return enumerate_labeled(size)

    def _hom(self, source: object, target: object) -> Iterator[Mapping[Element, Element]]:
        return iter(enumerate_embeddings(source, target))  # type: ignore[arg-type]

    def iso_key(self, obj: object) -> object:
        return canonical_form(self.require(obj))  # type: ignore[arg-type]

    def parse_object(self, text: str) -> object:
        return parse_newick(text)

    def format_object(self, obj: object) -> str:
        return format_newick(self.require(obj))  # type: ignore[arg-type]


class OrderedBoron(CategoryInstance):
    """순서 보론 트리와 루트·잎 순서를 보존하는 매장.

    순서 트리는 자명한 자기동형만 가지므로 대상은 잎 1..n, 루트 n, 순서 1<…<n 인
    대표원으로 열거한다.
    """

    ordered = True
    min_size = 2

    def __init__(self, descriptor: InstanceDescriptor | None = None) -> None:
        super().__init__(descriptor or InstanceDescriptor(kind=InstanceKind.ORDERED_BORON))

    def contains(self, obj: object) -> bool:
        return isinstance(obj, OrderedBoronTree)

    def size(self, obj: object) -> int:
        return self.require(obj).size  # type: ignore[attr-defined]

    def underlying(self, obj: object) -> tuple[Element, ...]:
        return self.require(obj).leaf_order  # type: ignore[attr-defined]

    def ordering(self, obj: object) -> Ordering:
        return self.underlying(obj)

    def _objects_of_size(self, size: int) -> Iterable[object]:
        return enumerate_ordered(size)

    def _hom(self, source: object, target: object) -> Iterator[Mapping[Element, Element]]:
        return iter(enumerate_ordered_embeddings(source, target))  # type: ignore[arg-type]

    def iso_key(self, obj: object) -> object:
        ordered: OrderedBoronTree = self.require(obj)  # type: ignore[assignment]
        rank = {leaf: index + 1 for index, leaf in enumerate(ordered.leaf_order)}
        relabeled = OrderedBoronTree(
            ordered.tree.relabel(rank),
            rank[ordered.root],
            [rank[leaf] for leaf in ordered.arrangement],
        )
        return format_ordered(relabeled)

    def parse_object(self, text: str) -> object:
        return parse_ordered(text)

    def format_object(self, obj: object) -> str:
        return format_ordered(self.require(obj))  # type: ignore[arg-type]


__all__ = ["Boron", "OrderedBoron"]
