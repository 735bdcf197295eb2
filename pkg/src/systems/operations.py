"""아이디얼 시스템 연산: 궤도 생성, 소속, 동변성, 초기 아이디얼, Φ/Ψ, 전이, 안정화."""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Sequence

from sympy.polys.rings import PolyElement

from src.algebra import GroebnerBasis, format_polynomial, member, minimal_monomials
from src.config import get_settings
from src.instances import CategoryInstance, ConcreteFunctor, Morphism
from src.poset import OrderIdeal, WeightedObject
from src.utils.exceptions import DataValidationError, NotAChain, NotMonomial
from src.utils.logger import get_logger, log_duration

from .model import (
    GeneratorData,
    IdealAtObject,
    IdealSystem,
    InitialSystem,
    MembershipResult,
    OrbitSystem,
    PulledBackSystem,
)

_logger = get_logger(__name__)

# 전이 시 구체 함자 조건을 확인하는 대상 크기
TRANSFER_CHECK_BOUND = 3


def orbit_generators(
    instance: CategoryInstance,
    data: GeneratorData,
    obj: object,
    *,
    bound: int | None = None,
) -> IdealAtObject:
    return OrbitSystem(instance, data, bound=bound).ideal_at(obj)


def system_member(
    instance: CategoryInstance,
    data: GeneratorData,
    obj: object,
    polynomial: PolyElement,
    *,
    bound: int | None = None,
    method: str | None = None,
) -> MembershipResult:
    """f ∈ I_A 인가. method 로 graded span / groebner 경로를 강제할 수 있다."""
    return OrbitSystem(instance, data, bound=bound).membership(obj, polynomial, method=method)


# --- 동변성 ----------------------------------------------------------------


@dataclass(frozen=True)
class EquivarianceWitness:
    morphism: Morphism
    generator: PolyElement
    image: PolyElement


@dataclass(frozen=True)
class EquivarianceReport:
    holds: bool
    checked: int
    witness: Optional[EquivarianceWitness] = None

    def __bool__(self) -> bool:
        return self.holds


def equivariance_check(system: IdealSystem, bound: int | None = None) -> EquivarianceReport:
    """한계 이하의 모든 사상 φ: A → B 와 I_A 의 생성원 g 에 대해 φ_* g ∈ I_B 인지 확인한다."""
    instance = system.instance
    bound = system.bound if bound is None else min(bound, system.bound)
    objects = instance.enumerate_objects(bound)
    checked = 0
    for source, target in product(objects, repeat=2):
        generators = [g for g in system.generators_at(source) if g]
        if not generators:
            continue
        for morphism in instance.morphisms(source, target):
            for generator in generators:
                image = instance.push(generator, morphism)
                checked += 1
                if not system.contains(target, image):
                    _logger.info("동변성 위반", extra={"morphism": repr(morphism), "checked": checked})
                    return EquivarianceReport(False, checked, EquivarianceWitness(morphism, generator, image))
    _logger.info("동변성 확인 완료", extra={"instance": instance.name, "checked": checked})
    return EquivarianceReport(True, checked)


# --- 초기 아이디얼 -----------------------------------------------------------


def init_system(system: IdealSystem, obj: object) -> IdealAtObject:
    """init(I_A). 순서가 없는 인스턴스면 NoOrdering."""
    return InitialSystem(system).ideal_at(obj)


# --- Φ / Ψ ------------------------------------------------------------------


def phi_map(system: IdealSystem, bound: int | None = None) -> OrderIdeal:
    """단항 시스템 → M(C) 의 순서 아이디얼 ({[A,α] : m_α ∈ I_A} 의 극소 생성원)."""
    instance = system.instance
    bound = system.bound if bound is None else min(bound, system.bound)
    ideal = OrderIdeal(instance)
    for obj in instance.enumerate_objects(bound):
        generators = [g for g in system.generators_at(obj) if g]
        for generator in generators:
            if len(generator) != 1:
                raise NotMonomial(f"단항식이 아닌 생성원: {format_polynomial(generator)}")
        ring = instance.variables(obj).ring
        for monom in minimal_monomials(g.LM for g in generators):
            ideal.insert(WeightedObject.from_monomial(instance, obj, ring.term_new(monom, ring.domain.one)))
    return ideal


def psi_map(ideal: OrderIdeal, obj: object) -> IdealAtObject:
    """순서 아이디얼 → A 에서의 단항 아이디얼 (극소 단항식 생성원)."""
    instance = ideal.instance
    variables = instance.variables(instance.require(obj))
    monomials = []
    for generator in ideal.generators:
        monomial = generator.monomial(instance)
        for morphism in instance.morphisms(generator.obj, obj):
            monomials.append(instance.push(monomial, morphism).LM)
    ring = variables.ring
    generators = tuple(ring.term_new(monom, ring.domain.one) for monom in minimal_monomials(monomials))
    return IdealAtObject(obj, variables, generators)


def phi_psi_round_trip(system: IdealSystem, bound: int | None = None) -> bool:
    """모든 대상에서 psi(phi(I), A) = I_A 인가 (극소 단항식 비교)."""
    ideal = phi_map(system, bound)
    bound = system.bound if bound is None else min(bound, system.bound)
    for obj in system.instance.enumerate_objects(bound):
        expected = minimal_monomials(g.LM for g in system.generators_at(obj) if g)
        actual = [g.LM for g in psi_map(ideal, obj).generators]
        if expected != actual:
            _logger.info("Φ/Ψ 왕복 불일치", extra={"object": repr(obj)})
            return False
    return True


# --- 전이 -------------------------------------------------------------------


def transfer_system(
    functor: ConcreteFunctor,
    system: IdealSystem,
    *,
    check_bound: int = TRANSFER_CHECK_BOUND,
) -> PulledBackSystem:
    """구체 함자 F: D → C 를 따라 C 위의 시스템을 D 로 당긴다. 구체가 아니면 NotConcrete."""
    functor.check_concrete(min(check_bound, system.bound))
    return PulledBackSystem(functor, system)


# --- 비교와 안정화 -----------------------------------------------------------


@dataclass(frozen=True)
class CriterionEntry:
    obj: object
    contained: bool
    same_initial: bool
    equal: bool


@dataclass(frozen=True)
class CriterionReport:
    entries: tuple[CriterionEntry, ...]

    @property
    def holds(self) -> bool:
        """I_A ⊆ J_A 이고 init 이 같으면 I_A = J_A."""
        return all(entry.equal for entry in self.entries if entry.contained and entry.same_initial)

    @property
    def equal_everywhere(self) -> bool:
        return all(entry.equal for entry in self.entries)


def _contained(smaller: GroebnerBasis, larger: GroebnerBasis) -> bool:
    return all(member(polynomial, larger) for polynomial in smaller.basis)


def grobner_criterion(first: IdealSystem, second: IdealSystem, bound: int | None = None) -> CriterionReport:
    """대상마다 I ⊆ J, init(I) = init(J), I = J 를 비교한다."""
    if bound is None:
        bound = min(first.bound, second.bound)
    entries = []
    for obj in first.instance.enumerate_objects(bound):
        left, right = first.groebner_at(obj), second.groebner_at(obj)
        entries.append(
            CriterionEntry(
                obj,
                contained=_contained(left, right),
                same_initial=minimal_monomials(left.leading_monomials())
                == minimal_monomials(right.leading_monomials()),
                equal=left == right,
            )
        )
    return CriterionReport(tuple(entries))


@dataclass(frozen=True)
class LevelCertificate:
    """한 단계의 대상별 Gröbner 기저 크기 (대상 텍스트 → 원소 수)."""

    level: int
    sizes: tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class StabilizationReport:
    index: Optional[int]
    bound: int
    levels: tuple[LevelCertificate, ...] = field(default_factory=tuple)

    @property
    def stabilized(self) -> bool:
        return self.index is not None

    def describe(self) -> str:
        if self.index is None:
            return f"not stabilized at bound {self.bound}"
        return f"stabilized at level {self.index} (bound {self.bound})"


def _bases(system: IdealSystem, objects: Sequence[object], workers: int) -> list[GroebnerBasis]:
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(system.groebner_at, objects))


def stabilization_probe(
    instance: CategoryInstance,
    chain: Sequence[GeneratorData],
    bound: int | None = None,
    *,
    max_workers: int | None = None,
    degree_cap: int | None = None,
) -> StabilizationReport:
    """G_1 ⊆ G_2 ⊆ … 가 한계 이하의 모든 대상에서 처음으로 같아지는 단계 (1부터).

    마지막 두 단계가 다르면 한계 안에서 안정화되지 않은 것으로 본다.
    """
    if not chain:
        raise DataValidationError("사슬에 단계가 하나 이상 있어야 합니다.")
    compute = get_settings().compute
    bound = compute.bound if bound is None else bound
    workers = max_workers or compute.max_workers
    objects = instance.enumerate_objects(bound)
    labels = [instance.format_object(obj) for obj in objects]

    bases: list[list[GroebnerBasis]] = []
    for data in chain:
        system = OrbitSystem(instance, data, bound=bound, degree_cap=degree_cap)
        with log_duration(_logger, "단계 기저 계산", level=len(bases) + 1, objects=len(objects)):
            bases.append(_bases(system, objects, workers))

    for level in range(len(bases) - 1):
        for label, lower, upper in zip(labels, bases[level], bases[level + 1]):
            for polynomial in lower.basis:
                if not member(polynomial, upper):
                    witness = {"level": level + 1, "object": label, "generator": format_polynomial(polynomial)}
                    raise NotAChain(f"{level + 1} 단계에서 {label} 의 아이디얼이 증가하지 않습니다.", witness=witness)

    certificates = tuple(
        LevelCertificate(index + 1, tuple((label, len(basis)) for label, basis in zip(labels, level_bases)))
        for index, level_bases in enumerate(bases)
    )
    last = bases[-1]
    if len(bases) >= 2 and bases[-2] != last:
        index = None
    else:
        index = next(position + 1 for position, level_bases in enumerate(bases) if level_bases == last)
    report = StabilizationReport(index, bound, certificates)
    _logger.info("안정화 탐색 완료", extra={"levels": len(chain), "objects": len(objects), "index": index})
    return report


__all__ = [
    "CriterionEntry",
    "CriterionReport",
    "EquivarianceReport",
    "EquivarianceWitness",
    "LevelCertificate",
    "StabilizationReport",
    "equivariance_check",
    "grobner_criterion",
    "init_system",
    "orbit_generators",
    "phi_map",
    "phi_psi_round_trip",
    "psi_map",
    "stabilization_probe",
    "system_member",
    "transfer_system",
]
