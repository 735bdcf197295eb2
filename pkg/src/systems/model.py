"""아이디얼 시스템의 내포적 표현.

시스템은 대상별 아이디얼을 저장하지 않고 생성 규칙으로 표현한다. 대상별 생성원과 Gröbner
기저는 필요할 때 계산해 LRU 캐시에 보관한다.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional

from sympy.polys.rings import PolyElement

from src.algebra import (
    GroebnerBasis,
    NormalFormTrace,
    SpanCertificate,
    VariableSet,
    buchberger,
    coerce,
    graded_span_member,
    is_homogeneous,
    normal_form,
    total_degree,
)
from src.config import get_settings
from src.instances import CategoryInstance, ConcreteFunctor, Element, Morphism, element_key
from src.utils.exceptions import NoOrdering, OutOfRange, RingMismatch
from src.utils.logger import get_logger

from .cache import IdealCache

_logger = get_logger(__name__)


@dataclass(frozen=True)
class GeneratorData:
    """유한 생성 자료 {(T_i, f_i)}. f_i 는 R_{T_i} 의 원소이다."""

    pairs: tuple[tuple[object, PolyElement], ...] = ()

    @classmethod
    def of(cls, pairs: Iterable[tuple[object, PolyElement]]) -> "GeneratorData":
        return cls(tuple(pairs))

    def validate(self, instance: CategoryInstance) -> "GeneratorData":
        for obj, polynomial in self.pairs:
            instance.variables(instance.require(obj)).require(polynomial)
        return self

    def extended(self, other: "GeneratorData") -> "GeneratorData":
        return GeneratorData(self.pairs + tuple(pair for pair in other.pairs if pair not in self.pairs))

    def includes(self, other: "GeneratorData") -> bool:
        return all(pair in self.pairs for pair in other.pairs)

    def __iter__(self) -> Iterator[tuple[object, PolyElement]]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class IdealAtObject:
    """대상 A 와 R_A 안의 생성원."""

    obj: object
    variables: VariableSet
    generators: tuple[PolyElement, ...]

    def __post_init__(self) -> None:
        for polynomial in self.generators:
            self.variables.require(polynomial)

    @property
    def is_zero(self) -> bool:
        return not any(self.generators)


@dataclass(frozen=True)
class MembershipResult:
    """소속 판정과 증명서. method 는 zero, generator, graded span, groebner 중 하나."""

    member: bool
    method: str
    generators: int
    span: Optional[SpanCertificate] = None
    trace: Optional[NormalFormTrace] = None

    def __bool__(self) -> bool:
        return self.member

    @property
    def verdict(self) -> str:
        prefix = "MEMBER" if self.member else "NOT MEMBER"
        if self.method == "graded span":
            detail = "graded span coefficients" if self.member else "graded span rank certificate"
        elif self.method == "groebner":
            detail = "groebner normal form"
        else:
            detail = self.method
        return f"{prefix} ({detail})"


class IdealSystem(ABC):
    """범주 인스턴스 위의 아이디얼 시스템 A ↦ I_A."""

    def __init__(
        self,
        instance: CategoryInstance,
        *,
        bound: int | None = None,
        degree_cap: int | None = None,
        cache_size: int | None = None,
    ) -> None:
        compute = get_settings().compute
        self.instance = instance
        self.bound = compute.bound if bound is None else bound
        self.degree_cap = compute.degree_cap if degree_cap is None else degree_cap
        self._cache: IdealCache[GroebnerBasis] = IdealCache(cache_size or compute.cache_size)
        self._generator_cache: IdealCache[tuple[PolyElement, ...]] = IdealCache(cache_size or compute.cache_size)

    @abstractmethod
    def _generators(self, obj: object) -> Iterable[PolyElement]:
        ...

    def check_range(self, obj: object) -> object:
        self.instance.require(obj)
        size = self.instance.size(obj)
        if size > self.bound:
            raise OutOfRange(f"대상 크기 {size} 가 한계 {self.bound} 를 넘습니다.")
        return obj

    def objects(self) -> list[object]:
        return self.instance.enumerate_objects(self.bound)

    def generators_at(self, obj: object) -> tuple[PolyElement, ...]:
        self.check_range(obj)
        return self._generator_cache.get_or_compute(obj, lambda: tuple(self._generators(obj)))

    def ideal_at(self, obj: object) -> IdealAtObject:
        return IdealAtObject(obj, self.instance.variables(obj), self.generators_at(obj))

    def groebner_at(self, obj: object) -> GroebnerBasis:
        def compute() -> GroebnerBasis:
            ideal = self.ideal_at(obj)
            return buchberger(ideal.generators, ideal.variables, degree_cap=self.degree_cap)

        return self._cache.get_or_compute(obj, compute)

    def contains(self, obj: object, polynomial: PolyElement) -> bool:
        return normal_form(polynomial, self.groebner_at(obj)).reduces_to_zero

    def membership(self, obj: object, polynomial: PolyElement, *, method: str | None = None) -> MembershipResult:
        """f ∈ I_A 판정. 모두 같은 차수의 동차식이면 선형 생성 경로, 아니면 Gröbner 경로."""
        ideal = self.ideal_at(obj)
        if polynomial.ring != ideal.variables.ring:
            raise RingMismatch("다항식이 대상의 환에 속하지 않습니다.")
        generators = [g for g in ideal.generators if g]
        count = len(generators)
        if method is None:
            if not polynomial:
                return MembershipResult(True, "zero", count)
            if polynomial in generators:
                return MembershipResult(True, "generator", count)
            method = "graded span" if _single_degree(polynomial, generators) else "groebner"
        if method == "graded span":
            certificate = graded_span_member(polynomial, generators)
            return MembershipResult(certificate.member, method, count, span=certificate)
        trace = normal_form(polynomial, self.groebner_at(obj))
        return MembershipResult(trace.reduces_to_zero, "groebner", count, trace=trace)


def _single_degree(polynomial: PolyElement, generators: list[PolyElement]) -> bool:
    if not generators or not is_homogeneous(polynomial):
        return False
    degree = total_degree(polynomial)
    return all(is_homogeneous(g) and total_degree(g) == degree for g in generators)


def _automorphisms(instance: CategoryInstance, source: object) -> list[Morphism]:
    size = len(instance.underlying(source))
    return [
        morphism
        for morphism in instance.morphisms(source, source)
        if len(set(morphism.mapping.values())) == size
    ]


def _orbit_images(
    instance: CategoryInstance, source: object, polynomial: PolyElement, target: object
) -> Iterator[PolyElement]:
    """hom(source, target) 순서대로 φ_* f.

    정의역의 자기동형 τ 에 대해 c = φ∘τ⁻¹ 이면 φ_* f = c_*(τ_* f) 이다. c 의 상 순서가 가장 작은
    τ 를 골라 (c, τ_* f) 마다 한 번만 옮긴다.
    """
    elements = instance.underlying(source)
    rank = {element: index for index, element in enumerate(sorted(instance.underlying(target), key=element_key))}
    variants: dict[PolyElement, int] = {}
    twists: list[tuple[tuple[Element, ...], int]] = []
    for automorphism in _automorphisms(instance, source):
        inverse = {image: element for element, image in automorphism.pairs}
        index = variants.setdefault(instance.push(polynomial, automorphism), len(variants))
        twists.append((tuple(inverse[element] for element in elements), index))
    by_index = {index: variant for variant, index in variants.items()}
    pushed: dict[tuple[tuple[int, ...], int], PolyElement] = {}
    for morphism in instance.morphisms(source, target):
        mapping = morphism.mapping
        keyed = [(tuple(rank[mapping[element]] for element in preimages), index, preimages) for preimages, index in twists]
        images, index, preimages = min(keyed, key=lambda entry: entry[:2])
        image = pushed.get((images, index))
        if image is None:
            representative = Morphism.from_mapping(
                source, target, {element: mapping[preimage] for element, preimage in zip(elements, preimages)}
            )
            image = pushed[(images, index)] = instance.push(by_index[index], representative)
        yield image


def orbit(instance: CategoryInstance, data: GeneratorData, obj: object) -> list[PolyElement]:
    """{φ_* f_i : φ ∈ hom(T_i, A)} 에서 정확히 같은 다항식만 제거한 목록."""
    seen: set[PolyElement] = set()
    result: list[PolyElement] = []
    for source, polynomial in data:
        for image in _orbit_images(instance, source, polynomial, obj):
            if image and image not in seen:
                seen.add(image)
                result.append(image)
    return result


class OrbitSystem(IdealSystem):
    """생성 자료의 궤도로 생성되는 시스템."""

    def __init__(self, instance: CategoryInstance, data: GeneratorData, **options) -> None:
        super().__init__(instance, **options)
        self.data = data.validate(instance)

    def _generators(self, obj: object) -> Iterable[PolyElement]:
        generators = orbit(self.instance, self.data, obj)
        _logger.debug("궤도 생성원 계산", extra={"object": repr(obj), "count": len(generators)})
        return generators


class RuleSystem(IdealSystem):
    """대상마다 생성원을 직접 주는 규칙. 동변성이 보장되지 않는다."""

    def __init__(
        self,
        instance: CategoryInstance,
        rule: Callable[[object, VariableSet], Iterable[PolyElement]],
        **options,
    ) -> None:
        super().__init__(instance, **options)
        self.rule = rule

    def _generators(self, obj: object) -> Iterable[PolyElement]:
        return self.rule(obj, self.instance.variables(obj))


class InitialSystem(IdealSystem):
    """init(I): 대상마다 Gröbner 기저의 선도 단항식."""

    def __init__(self, base: IdealSystem, **options) -> None:
        if not base.instance.ordered:
            raise NoOrdering(f"{base.instance.name} 인스턴스는 순서를 제공하지 않습니다.")
        options.setdefault("bound", base.bound)
        options.setdefault("degree_cap", base.degree_cap)
        super().__init__(base.instance, **options)
        self.base = base

    def _generators(self, obj: object) -> Iterable[PolyElement]:
        return self.base.groebner_at(obj).initial_generators()


class PulledBackSystem(IdealSystem):
    """구체 함자 F: D → C 를 따라 당긴 시스템: I_A = I'_{F(A)} (변수 동일시)."""

    def __init__(self, functor: ConcreteFunctor, base: IdealSystem, **options) -> None:
        options.setdefault("bound", base.bound)
        options.setdefault("degree_cap", base.degree_cap)
        super().__init__(functor.source, **options)
        self.functor = functor
        self.base = base

    def _generators(self, obj: object) -> Iterable[PolyElement]:
        variables = self.instance.variables(obj)
        image = self.functor.on_object(obj)
        return [coerce(polynomial, variables) for polynomial in self.base.generators_at(image)]


__all__ = [
    "GeneratorData",
    "IdealAtObject",
    "IdealSystem",
    "InitialSystem",
    "MembershipResult",
    "OrbitSystem",
    "PulledBackSystem",
    "RuleSystem",
    "orbit",
]
