"""구체 범주 인스턴스 (FI, OI, 보론 트리 등)와 그 사이의 함자."""

from __future__ import annotations

from .base import CategoryInstance, Ordering, ordering_provider
from .boron import Boron, OrderedBoron
from .descriptor import InstanceDescriptor, InstanceKind, parse_descriptor
from .functors import ConcreteFunctor, forgetful_functor, identity_functor
from .linear import BOI, FI, OI, ColoredLinear, FIm, OIm, parse_interval
from .objects import ColoredChain, Element, Interval, Morphism, PairSet, cycle, element_key, variable_name
from .pairs import PairFI, parse_pair_set

_REGISTRY = {
    InstanceKind.FI: FI,
    InstanceKind.OI: OI,
    InstanceKind.FI_M: FIm,
    InstanceKind.OI_M: OIm,
    InstanceKind.COLORED_LINEAR: ColoredLinear,
    InstanceKind.BORON: Boron,
    InstanceKind.ORDERED_BORON: OrderedBoron,
    InstanceKind.PAIR_FI: PairFI,
    InstanceKind.BOI: BOI,
}


def build_instance(descriptor: InstanceDescriptor | str) -> CategoryInstance:
    """서술자(또는 그 텍스트)로 인스턴스를 만든다."""
    if isinstance(descriptor, str):
        descriptor = parse_descriptor(descriptor)
    return _REGISTRY[descriptor.kind](descriptor)


def enumerate_objects(descriptor: InstanceDescriptor | str, bound: int) -> list[object]:
    return build_instance(descriptor).enumerate_objects(bound)


def enumerate_morphisms(instance: CategoryInstance, source: object, target: object) -> list[Morphism]:
    return instance.morphisms(source, target)


def parse_object(instance: CategoryInstance, text: str) -> object:
    return instance.parse_object(text)


def format_object(instance: CategoryInstance, obj: object) -> str:
    return instance.format_object(obj)


__all__ = [
    "BOI",
    "Boron",
    "CategoryInstance",
    "ColoredChain",
    "ColoredLinear",
    "ConcreteFunctor",
    "Element",
    "FI",
    "FIm",
    "InstanceDescriptor",
    "InstanceKind",
    "Interval",
    "Morphism",
    "OI",
    "OIm",
    "OrderedBoron",
    "Ordering",
    "PairFI",
    "PairSet",
    "build_instance",
    "cycle",
    "element_key",
    "enumerate_morphisms",
    "enumerate_objects",
    "forgetful_functor",
    "format_object",
    "identity_functor",
    "ordering_provider",
    "parse_descriptor",
    "parse_interval",
    "parse_object",
    "parse_pair_set",
    "variable_name",
]
