"""가중 대상 (A, α) 의 순서와 상향 닫힌 순서 아이디얼."""

from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from typing import Iterable, Mapping

from sympy.polys.rings import PolyElement

from src.instances import CategoryInstance, Element, variable_name
from src.utils.exceptions import DataValidationError, InstanceMismatch, NotMonomial
from src.utils.logger import get_logger

from .orders import antichain_check, minimal_elements

_logger = get_logger(__name__)


@dataclass(frozen=True)
class WeightedObject:
    """대상 A 와 가중치 α: |A| → ℕ. 단항식 m_α = ∏ x_i^{α(i)} 에 대응한다."""

    obj: object
    weights: tuple[tuple[Element, int], ...]

    @classmethod
    def of(
        cls,
        instance: CategoryInstance,
        obj: object,
        weights: Mapping[Element, int] | None = None,
    ) -> "WeightedObject":
        """weights 에 없는 원소의 가중치는 0."""
        elements = instance.underlying(obj)
        given = dict(weights or {})
        unknown = set(given) - set(elements)
        if unknown:
            raise DataValidationError(f"대상에 없는 원소의 가중치: {sorted(map(str, unknown))}")
        values = tuple((element, int(given.get(element, 0))) for element in elements)
        if any(value < 0 for _, value in values):
            raise DataValidationError("가중치는 0 이상이어야 합니다.")
        return cls(obj, values)

    @classmethod
    def from_monomial(cls, instance: CategoryInstance, obj: object, polynomial: PolyElement) -> "WeightedObject":
        if len(polynomial) != 1:
            raise NotMonomial(f"단항식이 아닙니다: {polynomial}")
        variables = instance.variables(obj)
        (monom,) = polynomial.itermonoms()
        by_name = dict(zip(variables.names, monom))
        return cls.of(
            instance,
            obj,
            {element: by_name[variable_name(element)] for element in instance.underlying(obj)},
        )

    @property
    def weighting(self) -> dict[Element, int]:
        return dict(self.weights)

    def monomial(self, instance: CategoryInstance) -> PolyElement:
        variables = instance.variables(self.obj)
        return variables.term({variable_name(element): value for element, value in self.weights if value})

    def is_subset_class(self) -> bool:
        """0/1 가중치인가."""
        return all(value in (0, 1) for _, value in self.weights)


def weighted_leq(instance: CategoryInstance, first: WeightedObject, second: WeightedObject) -> bool:
    """[A,α] ≤ [B,β]: α(x) ≤ β(φ(x)) 인 사상 φ: A → B 가 존재한다."""
    for item in (first, second):
        if not instance.contains(item.obj):
            raise InstanceMismatch(f"{instance.name} 인스턴스의 가중 대상이 아닙니다: {item.obj!r}")
    alpha = first.weighting
    beta = second.weighting
    return any(
        all(value <= beta[morphism(element)] for element, value in alpha.items())
        for morphism in instance.morphisms(first.obj, second.obj)
    )


def weighted_equivalent(instance: CategoryInstance, first: WeightedObject, second: WeightedObject) -> bool:
    """같은 동치류 [A,α] = [B,β] 인가."""
    return weighted_leq(instance, first, second) and weighted_leq(instance, second, first)


def subset_class_leq(instance: CategoryInstance, first: object, second: object) -> bool:
    """[A] ≤ [B]: A 를 B 안으로 보내는 사상이 있는가."""
    for obj in (first, second):
        if not instance.contains(obj):
            raise InstanceMismatch(f"{instance.name} 인스턴스의 대상이 아닙니다: {obj!r}")
    return bool(instance.morphisms(first, second))


class OrderIdeal:
    """M(C) 의 상향 닫힌 집합. 극소 생성원 반사슬로 저장한다.

    insert 는 단일 작성자 전제이다.
    """

    def __init__(self, instance: CategoryInstance, generators: Iterable[WeightedObject] = ()) -> None:
        self.instance = instance
        self._generators: list[WeightedObject] = []
        for generator in generators:
            self.insert(generator)

    @property
    def generators(self) -> tuple[WeightedObject, ...]:
        return tuple(self._generators)

    def __len__(self) -> int:
        return len(self._generators)

    def _leq(self, first: WeightedObject, second: WeightedObject) -> bool:
        return weighted_leq(self.instance, first, second)

    def contains(self, element: WeightedObject) -> bool:
        return any(self._leq(generator, element) for generator in self._generators)

    def insert(self, element: WeightedObject) -> bool:
        """원소를 추가하고 생성원을 다시 극소화한다. 이미 포함되어 있으면 False."""
        if self.contains(element):
            return False
        kept = [generator for generator in self._generators if not self._leq(element, generator)]
        kept.append(element)
        self._generators = minimal_elements(kept, self._leq)
        assert antichain_check(self._generators, self._leq)
        _logger.debug("순서 아이디얼 갱신", extra={"generators": len(self._generators)})
        return True

    def same_as(self, other: "OrderIdeal") -> bool:
        """두 아이디얼이 같은 집합인가 (서로의 생성원을 포함)."""
        return all(other.contains(generator) for generator in self._generators) and all(
            self.contains(generator) for generator in other._generators
        )


def leq_in(instance: CategoryInstance):
    """instance 위의 weighted_leq 를 이항 비교 함수로."""
    return partial(weighted_leq, instance)


__all__ = [
    "OrderIdeal",
    "WeightedObject",
    "leq_in",
    "subset_class_leq",
    "weighted_equivalent",
    "weighted_leq",
]
