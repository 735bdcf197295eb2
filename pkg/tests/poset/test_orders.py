from __future__ import annotations

import random
from itertools import product

import pytest

from src.instances import FI, OI, Interval, PairFI, PairSet, cycle
from src.poset import (
    OrderIdeal,
    WeightedObject,
    antichain_check,
    dickson_leq,
    first_comparable_pair,
    higman_leq,
    higman_leq_exhaustive,
    leq_in,
    minimal_elements,
    pattern_leq,
    subset_class_leq,
    weighted_equivalent,
    weighted_leq,
)
from src.utils.exceptions import ArityMismatch, DataValidationError, InstanceMismatch, NotMonomial


def test_dickson_is_componentwise() -> None:
    assert dickson_leq((1, 2), (1, 3))
    assert not dickson_leq((2, 0), (1, 5))
    assert dickson_leq((), ())
    with pytest.raises(ArityMismatch):
        dickson_leq((1,), (1, 2))


@pytest.mark.parametrize(
    "first,second,expected",
    [
        ((1, 2), (0, 1, 3), True),
        ((2,), (1, 1, 1), False),
        ((), (), True),
        ((), (4,), True),
        ((3, 1), (1, 3), False),
        ((1, 1), (2, 0, 2), True),
    ],
)
def test_higman_examples(first, second, expected) -> None:
    assert higman_leq(first, second) is expected
    assert higman_leq_exhaustive(first, second) is expected


def test_higman_greedy_matches_exhaustive(rng: random.Random) -> None:
    for _ in range(300):
        first = tuple(rng.randint(0, 3) for _ in range(rng.randint(0, 4)))
        second = tuple(rng.randint(0, 3) for _ in range(rng.randint(0, 6)))
        assert higman_leq(first, second) == higman_leq_exhaustive(first, second)


def test_higman_with_custom_order() -> None:
    def divides(a: int, b: int) -> bool:
        return b % a == 0

    assert higman_leq((2, 3), (4, 5, 9), divides)
    assert not higman_leq((3, 2), (4, 5, 9), divides)


def test_pattern_containment() -> None:
    assert pattern_leq((1, 2), (3, 1, 2))
    assert not pattern_leq((2, 1), (1, 2, 3))
    assert pattern_leq((1, 3, 2), (2, 4, 1, 3))
    assert not pattern_leq((1, 2, 3), (3, 2, 1))


def test_antichain_helpers() -> None:
    words = [(1, 0), (0, 1), (1, 1)]
    assert first_comparable_pair(words, dickson_leq) == ((1, 0), (1, 1))
    assert not antichain_check(words, dickson_leq)
    assert antichain_check(words[:2], dickson_leq)
    assert minimal_elements(words, dickson_leq) == [(1, 0), (0, 1)]


def test_weighted_order_on_fi_and_oi() -> None:
    fi, oi = FI(), OI()
    low = WeightedObject.of(fi, Interval(1), {1: 2})
    high = WeightedObject.of(fi, Interval(2), {1: 0, 2: 3})
    assert weighted_leq(fi, low, high)
    assert not weighted_leq(fi, high, low)

    decreasing = WeightedObject.of(oi, Interval(2), {1: 2})
    increasing = WeightedObject.of(oi, Interval(2), {2: 2})
    assert not weighted_leq(oi, decreasing, increasing)
    assert weighted_leq(fi, decreasing, increasing)
    assert weighted_equivalent(fi, decreasing, increasing)
    assert leq_in(fi)(low, high)


def test_weighted_object_validation() -> None:
    fi = FI()
    with pytest.raises(DataValidationError):
        WeightedObject.of(fi, Interval(2), {3: 1})
    with pytest.raises(DataValidationError):
        WeightedObject.of(fi, Interval(2), {1: -1})
    with pytest.raises(InstanceMismatch):
        weighted_leq(fi, WeightedObject(cycle(3), ()), WeightedObject.of(fi, Interval(1)))


def test_weighted_object_from_monomial() -> None:
    fi = FI()
    variables = fi.variables(Interval(2))
    monomial = variables.term({"x1": 2, "x2": 1}, 5)
    weighted = WeightedObject.from_monomial(fi, Interval(2), monomial)
    assert weighted.weights == ((1, 2), (2, 1))
    assert weighted.monomial(fi) == variables.term({"x1": 2, "x2": 1})
    assert not weighted.is_subset_class()
    with pytest.raises(NotMonomial):
        WeightedObject.from_monomial(fi, Interval(2), variables.gen("x1") - variables.gen("x2"))


def test_order_ideal_keeps_minimal_antichain() -> None:
    fi = FI()
    ideal = OrderIdeal(fi)
    assert ideal.insert(WeightedObject.of(fi, Interval(1), {1: 2}))
    assert not ideal.insert(WeightedObject.of(fi, Interval(2), {1: 3, 2: 1}))
    assert ideal.contains(WeightedObject.of(fi, Interval(3), {3: 2}))
    assert ideal.insert(WeightedObject.of(fi, Interval(1), {1: 1}))
    assert ideal.generators == (WeightedObject.of(fi, Interval(1), {1: 1}),)

    other = OrderIdeal(fi, [WeightedObject.of(fi, Interval(2), {2: 1}), WeightedObject.of(fi, Interval(1), {1: 1})])
    assert len(other) == 1
    assert ideal.same_as(other)
    assert not ideal.same_as(OrderIdeal(fi, [WeightedObject.of(fi, Interval(1), {1: 2})]))


def test_cycles_form_an_antichain() -> None:
    instance = PairFI()
    cycles = [cycle(length) for length in range(3, 7)]
    assert first_comparable_pair(cycles, lambda a, b: subset_class_leq(instance, a, b)) is None
    tournament = PairSet.of((1, 2), (2, 3), (3, 1), (2, 1))
    assert subset_class_leq(instance, cycle(3), tournament)
    assert not subset_class_leq(instance, tournament, cycle(3))
    with pytest.raises(InstanceMismatch):
        subset_class_leq(instance, Interval(3), cycle(3))


def test_dickson_agrees_with_weighted_order_on_single_object() -> None:
    oi = OI()
    obj = Interval(2)
    for alpha, beta in product(product(range(3), repeat=2), repeat=2):
        first = WeightedObject.of(oi, obj, dict(zip(obj.elements, alpha)))
        second = WeightedObject.of(oi, obj, dict(zip(obj.elements, beta)))
        assert weighted_leq(oi, first, second) == dickson_leq(alpha, beta)


def _word(rng: random.Random, longest: int) -> tuple[int, ...]:
    return tuple(rng.randint(0, 2) for _ in range(rng.randint(0, longest)))


def _weighted(rng: random.Random, instance) -> WeightedObject:
    obj = Interval(rng.randint(0, 3))
    return WeightedObject.of(instance, obj, {element: rng.randint(0, 2) for element in obj.elements})


def _assert_preorder(leq, triples) -> None:
    for a, b, c in triples:
        assert leq(a, a)
        if leq(a, b) and leq(b, c):
            assert leq(a, c), (a, b, c)


def test_dickson_is_reflexive_and_transitive(rng: random.Random) -> None:
    triples = [tuple(tuple(rng.randint(0, 2) for _ in range(3)) for _ in range(3)) for _ in range(1000)]
    _assert_preorder(dickson_leq, triples)


def test_higman_is_reflexive_and_transitive(rng: random.Random) -> None:
    triples = [(_word(rng, 3), _word(rng, 4), _word(rng, 5)) for _ in range(1000)]
    _assert_preorder(higman_leq, triples)


@pytest.mark.parametrize("kind", ["fi", "oi"])
def test_weighted_order_is_reflexive_and_transitive(kind: str, rng: random.Random) -> None:
    instance = FI() if kind == "fi" else OI()
    triples = [tuple(_weighted(rng, instance) for _ in range(3)) for _ in range(1000)]
    _assert_preorder(leq_in(instance), triples)


def test_higman_agrees_with_weighted_order_on_oi() -> None:
    oi = OI()

    def words(longest: int) -> list[tuple[int, ...]]:
        return [word for length in range(longest + 1) for word in product(range(3), repeat=length)]

    def weighted(word: tuple[int, ...]) -> WeightedObject:
        obj = Interval(len(word))
        return WeightedObject.of(oi, obj, dict(zip(obj.elements, word)))

    longer = [(word, weighted(word)) for word in words(4)]
    for first in words(3):
        low = weighted(first)
        for second, high in longer:
            assert higman_leq(first, second) == weighted_leq(oi, low, high), (first, second)


def test_subset_class_order_is_the_zero_one_weighted_order() -> None:
    instance = PairFI()
    objects = instance.enumerate_objects(3) + [cycle(4)]
    ones = {obj: WeightedObject.of(instance, obj, {e: 1 for e in instance.underlying(obj)}) for obj in objects}
    for first, second in product(objects, repeat=2):
        expected = weighted_leq(instance, ones[first], ones[second])
        assert subset_class_leq(instance, first, second) == expected
