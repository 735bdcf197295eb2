"""FI-구체 범주 인스턴스의 공통 인터페이스.

인스턴스는 크기 한계까지의 대상 열거, 밑집합 함자 |·|, hom 집합 열거, 그리고 선택적으로
|A| 위의 자연스러운 전순서(ordering)를 제공한다. 순서가 없으면 ordering 은 None 이다.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Hashable, Iterable, Iterator, Mapping, Optional

from sympy.polys.rings import PolyElement

from src.algebra import VariableSet, rename
from src.utils.exceptions import InstanceMismatch

from .descriptor import InstanceDescriptor
from .objects import Element, Morphism, element_key, variable_name

Ordering = Optional[tuple[Element, ...]]


class CategoryInstance(ABC):
    """대상과 사상을 구체적으로 열거할 수 있는 범주."""

    ordered = False

    def __init__(self, descriptor: InstanceDescriptor) -> None:
        self.descriptor = descriptor
        self._variables: dict[object, VariableSet] = {}

    @property
    def name(self) -> str:
        return self.descriptor.label()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name})"

    # --- 인스턴스별 구현 -----------------------------------------------------

    @abstractmethod
    def contains(self, obj: object) -> bool:
        """obj 가 이 인스턴스의 대상 타입인가."""

    @abstractmethod
    def size(self, obj: object) -> int:
        """크기 한계 비교에 쓰는 대상의 크기."""

    @abstractmethod
    def underlying(self, obj: object) -> tuple[Element, ...]:
        """|A| 의 원소 (결정적 순서)."""

    @abstractmethod
    def _objects_of_size(self, size: int) -> Iterable[object]:
        ...

    @abstractmethod
    def _hom(self, source: object, target: object) -> Iterator[Mapping[Element, Element]]:
        ...

    @abstractmethod
    def parse_object(self, text: str) -> object:
        ...

    @abstractmethod
    def format_object(self, obj: object) -> str:
        ...

    def ordering(self, obj: object) -> Ordering:
        """|A| 의 오름차순 전순서. 순서를 제공하지 않으면 None."""
        self.require(obj)
        return None

    def iso_key(self, obj: object) -> Hashable:
        """동형인 대상끼리 같은 값."""
        return self.size(obj)

    @property
    def min_size(self) -> int:
        return 0

    # --- 공통 연산 -----------------------------------------------------------

    def require(self, obj: object) -> object:
        if not self.contains(obj):
            raise InstanceMismatch(f"{self.name} 인스턴스의 대상이 아닙니다: {obj!r}")
        return obj

    def enumerate_objects(self, bound: int) -> list[object]:
        """크기가 bound 이하인 모든 (라벨 붙은) 대상."""
        objects: list[object] = []
        for size in range(self.min_size, bound + 1):
            objects.extend(self._objects_of_size(size))
        return objects

    def morphisms(self, source: object, target: object) -> list[Morphism]:
        """hom(source, target) 전체 (결정적 순서)."""
        self.require(source)
        self.require(target)
        return [Morphism.from_mapping(source, target, mapping) for mapping in self._hom(source, target)]

    def identity(self, obj: object) -> Morphism:
        self.require(obj)
        return Morphism.from_mapping(obj, obj, {element: element for element in self.underlying(obj)})

    def compose(self, first: Morphism, second: Morphism) -> Morphism:
        """second ∘ first."""
        if first.target != second.source:
            raise InstanceMismatch("합성할 수 없는 사상입니다 (공역과 정의역 불일치).")
        return Morphism.from_mapping(
            first.source,
            second.target,
            {element: second(image) for element, image in first.pairs},
        )

    def variables(self, obj: object) -> VariableSet:
        """R_A 의 변수. 순서가 있으면 그 순서, 없으면 원소 정렬 순서를 쓴다."""
        cached = self._variables.get(obj)
        if cached is None:
            ordering = self.ordering(obj)
            elements = ordering if ordering is not None else tuple(sorted(self.underlying(obj), key=element_key))
            cached = self._variables[obj] = VariableSet(variable_name(element) for element in elements)
        return cached

    def push(self, polynomial: PolyElement, morphism: Morphism) -> PolyElement:
        """φ_* f ∈ R_B."""
        return rename(polynomial, morphism.variable_map(), self.variables(morphism.target))

    def is_monotone(self, morphism: Morphism) -> bool:
        source_order = self.ordering(morphism.source)
        target_order = self.ordering(morphism.target)
        if source_order is None or target_order is None:
            return False
        rank = {element: index for index, element in enumerate(target_order)}
        images = [rank[morphism(element)] for element in source_order]
        return all(left < right for left, right in zip(images, images[1:]))


def ordering_provider(instance: CategoryInstance, obj: object) -> Ordering:
    return instance.ordering(obj)


__all__ = ["CategoryInstance", "Ordering", "ordering_provider"]
