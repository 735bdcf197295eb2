"""자주 쓰는 생성 자료: 대칭 판별식 사슬, 보론 판별식 시스템, 저계수 점 검사."""

from __future__ import annotations

from itertools import product
from typing import Mapping, Sequence

from src.algebra import discriminant, evaluate
from src.instances import FI, Boron, CategoryInstance, Interval, variable_name
from src.trees import BoronTree, sort_labels
from src.utils.exceptions import DataValidationError

from .model import GeneratorData, IdealAtObject

Point = Mapping[str, int]


def symmetric_generator(instance: CategoryInstance, size: int) -> tuple[Interval, object]:
    """([size], Δ(x1, …, x_size))."""
    obj = Interval(size)
    variables = instance.variables(obj)
    return obj, discriminant(variables.names, variables)


def symmetric_chain(r: int, levels: int, instance: CategoryInstance | None = None) -> list[GeneratorData]:
    """r+1 개 값이 모두 다르지 않은 점들의 아이디얼을 누적해서 제시한다.

    k 단계는 r+1 ≤ j ≤ k 인 모든 j 에 대해 ([j], Δ_j) 를 담는다. k ≤ r 이면 비어 있다.
    """
    if r < 1 or levels < 1:
        raise DataValidationError("r 과 단계 수는 1 이상이어야 합니다.")
    instance = instance or FI()
    chain: list[GeneratorData] = []
    pairs: list[tuple[object, object]] = []
    for level in range(1, levels + 1):
        if level >= r + 1:
            pairs.append(symmetric_generator(instance, level))
        chain.append(GeneratorData.of(pairs))
    return chain


def boric_system(tree: BoronTree, instance: Boron | None = None) -> GeneratorData:
    """{(T0, Δ)}: 잎을 정렬한 순서의 판별식."""
    instance = instance or Boron()
    variables = instance.variables(tree)
    names = [variable_name(leaf) for leaf in sort_labels(tree.leaves)]
    return GeneratorData.of([(tree, discriminant(names, variables))])


def in_low_rank_locus(point: Point | Sequence[int], r: int) -> bool:
    """좌표값이 r 가지 이하인가."""
    values = point.values() if isinstance(point, Mapping) else point
    return len(set(values)) <= r


def annihilates(ideal: IdealAtObject, point: Point) -> bool:
    """모든 생성원이 point 에서 0 인가."""
    return all(evaluate(generator, point) == 0 for generator in ideal.generators)


def low_rank_points(size: int, r: int) -> list[dict[str, int]]:
    """값이 {1, …, r} 에 있는 [size] 위의 모든 점."""
    names = [variable_name(element) for element in range(1, size + 1)]
    return [dict(zip(names, values)) for values in product(range(1, r + 1), repeat=size)]


def high_rank_witness(size: int, r: int) -> dict[str, int]:
    """처음 r+1 좌표가 서로 다른 점. size ≤ r 이면 DataValidationError."""
    if size <= r:
        raise DataValidationError(f"[{size}] 에는 서로 다른 값 {r + 1} 개를 둘 수 없습니다.")
    return {variable_name(element): min(element, r + 1) for element in range(1, size + 1)}


__all__ = [
    "annihilates",
    "boric_system",
    "high_rank_witness",
    "in_low_rank_locus",
    "low_rank_points",
    "symmetric_chain",
    "symmetric_generator",
]
