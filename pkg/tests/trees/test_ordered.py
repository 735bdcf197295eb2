from __future__ import annotations

import random
from itertools import combinations, permutations

import pytest

from src.trees import (
    OrderedBoronTree,
    compose_root,
    enumerate_embeddings,
    enumerate_labeled,
    enumerate_ordered,
    enumerate_ordered_embeddings,
    parse_newick,
    parse_ordered,
    planar_embedding,
    root_decomposition,
)
from src.utils.exceptions import InvalidLeaf, NotPlanar, TooFewLeaves, TooSmall


def _key(embedding: dict) -> tuple:
    return tuple(sorted(embedding.items()))


@pytest.mark.parametrize("n,expected", [(2, 1), (3, 1), (4, 2), (5, 5), (6, 14)])
def test_enumerate_ordered_counts(n: int, expected: int) -> None:
    trees = enumerate_ordered(n)
    assert len(trees) == expected
    assert len(set(trees)) == expected
    assert all(tree.root == n and tree.leaf_order == tuple(range(1, n + 1)) for tree in trees)


def test_enumerate_ordered_requires_two_leaves() -> None:
    with pytest.raises(TooFewLeaves):
        enumerate_ordered(1)


def test_non_planar_arrangement_is_rejected() -> None:
    tree = parse_newick("((1,2),(3,4));")
    with pytest.raises(NotPlanar):
        OrderedBoronTree(tree, 1, (1, 3, 2, 4))
    with pytest.raises(NotPlanar):
        OrderedBoronTree(tree, 1, (1, 2, 3))


def test_arrangement_is_rotated_to_root() -> None:
    tree = parse_newick("((1,2),(3,4));")
    ordered = OrderedBoronTree(tree, 3, (1, 2, 3, 4))
    assert ordered.arrangement == (3, 4, 1, 2)
    assert ordered.leaf_order == (4, 1, 2, 3)
    assert ordered.precedes(4, 1)
    assert ordered.precedes(2, 3)
    assert not ordered.precedes(3, 1)


def test_unknown_root_is_rejected() -> None:
    with pytest.raises(InvalidLeaf):
        OrderedBoronTree(parse_newick("(1,2);"), 9, (1, 2))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_root_decomposition_round_trip(n: int) -> None:
    for ordered in enumerate_ordered(n):
        left, right = root_decomposition(ordered)
        assert left.root == right.root == ordered.root
        assert left.size + right.size == n + 1
        assert max(left.leaf_order[:-1]) < min(right.leaf_order[:-1])
        assert compose_root(left, right) == ordered


def test_root_decomposition_part_sizes() -> None:
    ordered = parse_ordered("root=5:(5,((1,2),(3,4)));")
    left, right = root_decomposition(ordered)
    assert left.leaves == frozenset({1, 2, 5})
    assert right.leaves == frozenset({3, 4, 5})


def test_root_decomposition_needs_three_leaves() -> None:
    with pytest.raises(TooSmall):
        root_decomposition(enumerate_ordered(2)[0])


def test_compose_root_rejects_mismatched_parts() -> None:
    left = parse_ordered("root=3:(3,(1,2));")
    other_root = parse_ordered("root=4:(4,(5,6));")
    overlapping = parse_ordered("root=3:(3,(2,4));")
    with pytest.raises(InvalidLeaf):
        compose_root(left, other_root)
    with pytest.raises(InvalidLeaf):
        compose_root(left, overlapping)


def test_planar_embedding_keeps_tree(twelve_leaf_tree) -> None:
    for root in (1, 6, 12):
        ordered = planar_embedding(twelve_leaf_tree, root)
        assert ordered.tree == twelve_leaf_tree
        assert ordered.root == root


@pytest.mark.parametrize("small,large", [(3, 5), (4, 5), (4, 6)])
def test_ordered_embeddings_filter_plain_embeddings(small: int, large: int) -> None:
    for source in enumerate_ordered(small):
        for target in enumerate_ordered(large):
            expected = [
                embedding
                for embedding in enumerate_embeddings(source.tree, target.tree)
                if embedding[source.root] == target.root
                and all(
                    source.precedes(x, y) == target.precedes(embedding[x], embedding[y])
                    for x in source.leaves
                    for y in source.leaves
                    if x != y
                )
            ]
            found = enumerate_ordered_embeddings(source, target)
            assert sorted(map(_key, found)) == sorted(map(_key, expected))


def test_leaf_order_is_a_strict_total_order(rng: random.Random) -> None:
    pools = {n: enumerate_labeled(n) for n in range(3, 8)}
    for _ in range(100):
        tree = rng.choice(pools[rng.randint(3, 7)])
        ordered = planar_embedding(tree, rng.choice(sorted(tree.leaves)))
        order = ordered.leaf_order
        assert sorted(order) == sorted(tree.leaves)
        assert order[-1] == ordered.root
        for x in order:
            assert not ordered.precedes(x, x)
        for x, y in combinations(order, 2):
            assert ordered.precedes(x, y) != ordered.precedes(y, x)
        for x, y, z in permutations(order, 3):
            if ordered.precedes(x, y) and ordered.precedes(y, z):
                assert ordered.precedes(x, z)
