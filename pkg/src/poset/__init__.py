"""부분 순서 기본 연산과 가중 대상의 순서 아이디얼."""

from .orders import (
    Leq,
    antichain_check,
    comparable,
    dickson_leq,
    first_comparable_pair,
    higman_leq,
    higman_leq_exhaustive,
    minimal_elements,
    pattern_leq,
)
from .weighted import (
    OrderIdeal,
    WeightedObject,
    leq_in,
    subset_class_leq,
    weighted_equivalent,
    weighted_leq,
)

__all__ = [
    "Leq",
    "OrderIdeal",
    "WeightedObject",
    "antichain_check",
    "comparable",
    "dickson_leq",
    "first_comparable_pair",
    "higman_leq",
    "higman_leq_exhaustive",
    "leq_in",
    "minimal_elements",
    "pattern_leq",
    "subset_class_leq",
    "weighted_equivalent",
    "weighted_leq",
]
