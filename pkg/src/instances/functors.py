"""구체 함자: 대상 사상과, 밑집합을 그대로 두는 사상 대응."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable

from src.utils.exceptions import NoSuchFunctor, NotConcrete
from src.utils.logger import get_logger

from .base import CategoryInstance
from .descriptor import InstanceKind
from .objects import Morphism

_logger = get_logger(__name__)


@dataclass(frozen=True)
class ConcreteFunctor:
    """F: D → C 와 자연 동일시 |A| = |F(A)| (원소는 그대로 대응한다)."""

    source: CategoryInstance
    target: CategoryInstance
    object_map: Callable[[object], object]
    name: str

    def on_object(self, obj: object) -> object:
        self.source.require(obj)
        return self.target.require(self.object_map(obj))

    def on_morphism(self, morphism: Morphism) -> Morphism:
        return Morphism(self.on_object(morphism.source), self.on_object(morphism.target), morphism.pairs)

    def check_concrete(self, bound: int) -> None:
        """밑집합 동일시와 사상 대응을 확인한다. 위반하면 NotConcrete."""
        objects = self.source.enumerate_objects(bound)
        for obj in objects:
            if set(self.source.underlying(obj)) != set(self.target.underlying(self.on_object(obj))):
                raise NotConcrete(f"{self.name}: 대상 {obj!r} 의 밑집합이 보존되지 않습니다.")
        for first, second in product(objects, repeat=2):
            allowed = set(self.target.morphisms(self.on_object(first), self.on_object(second)))
            for morphism in self.source.morphisms(first, second):
                if self.on_morphism(morphism) not in allowed:
                    raise NotConcrete(f"{self.name}: 사상 {morphism!r} 의 상이 대상 범주의 사상이 아닙니다.")

    def preserves_composition(self, bound: int) -> bool:
        objects = self.source.enumerate_objects(bound)
        for a, b, c in product(objects, repeat=3):
            for first in self.source.morphisms(a, b):
                for second in self.source.morphisms(b, c):
                    left = self.on_morphism(self.source.compose(first, second))
                    right = self.target.compose(self.on_morphism(first), self.on_morphism(second))
                    if left != right:
                        return False
        return True

    def essentially_surjective(self, bound: int) -> bool:
        """bound 이하의 모든 대상 범주 대상이 어떤 F(A) 와 동형인가."""
        images = {self.target.iso_key(self.on_object(obj)) for obj in self.source.enumerate_objects(bound)}
        missing = [
            obj for obj in self.target.enumerate_objects(bound) if self.target.iso_key(obj) not in images
        ]
        if missing:
            _logger.info("본질적 전사 실패", extra={"functor": self.name, "missing": len(missing)})
        return not missing


def _same(obj: object) -> object:
    return obj


def _tree_of(obj: object) -> object:
    return obj.tree  # type: ignore[attr-defined]


_FORGETFUL: dict[tuple[InstanceKind, InstanceKind], Callable[[object], object]] = {
    (InstanceKind.ORDERED_BORON, InstanceKind.BORON): _tree_of,
    (InstanceKind.OI, InstanceKind.FI): _same,
    (InstanceKind.OI_M, InstanceKind.FI_M): _same,
    (InstanceKind.BOI, InstanceKind.OI): _same,
}


def forgetful_functor(source: CategoryInstance, target: CategoryInstance) -> ConcreteFunctor:
    """순서를 잊는 함자. 지원하지 않는 조합이면 NoSuchFunctor."""
    key = (source.descriptor.kind, target.descriptor.kind)
    object_map = _FORGETFUL.get(key)
    if object_map is None or source.descriptor.m != target.descriptor.m:
        raise NoSuchFunctor(f"{source.name} → {target.name} 망각 함자는 없습니다.")
    return ConcreteFunctor(source, target, object_map, f"forget({source.name} → {target.name})")


def identity_functor(instance: CategoryInstance) -> ConcreteFunctor:
    return ConcreteFunctor(instance, instance, _same, f"id({instance.name})")


__all__ = ["ConcreteFunctor", "forgetful_functor", "identity_functor"]
