from __future__ import annotations

import pytest

from src.trees import (
    BoronTree,
    automorphisms,
    brute_force_embeddings,
    canonical_form,
    enumerate_embeddings,
    enumerate_labeled,
    find_isomorphism,
    induced,
    parse_newick,
)


def _key(embedding: dict) -> tuple:
    return tuple(sorted(embedding.items()))


def _representatives(size: int) -> list[BoronTree]:
    seen: dict[str, BoronTree] = {}
    for tree in enumerate_labeled(size):
        seen.setdefault(canonical_form(tree), tree)
    return list(seen.values())


def test_quartet_into_snowflake_count(snowflake_tree: BoronTree) -> None:
    quartet_tree = parse_newick("((1,2),(3,4));")
    assert len(enumerate_embeddings(quartet_tree, snowflake_tree)) == 120


def test_two_leaf_tree_embeds_by_any_injection(snowflake_tree: BoronTree) -> None:
    assert len(enumerate_embeddings(parse_newick("(1,2);"), snowflake_tree)) == 30


def test_no_embedding_into_smaller_tree(snowflake_tree: BoronTree) -> None:
    assert enumerate_embeddings(snowflake_tree, parse_newick("((1,2),(3,4));")) == []


def test_automorphism_group_orders(snowflake_tree: BoronTree) -> None:
    assert len(automorphisms(snowflake_tree)) == 48
    assert len(automorphisms(parse_newick("((1,2),(3,4));"))) == 8


def test_known_embedding_is_found(twelve_leaf_tree: BoronTree, snowflake_tree: BoronTree) -> None:
    embeddings = enumerate_embeddings(snowflake_tree, twelve_leaf_tree)
    assert {1: 1, 2: 3, 3: 7, 4: 8, 5: 9, 6: 12} in embeddings
    images = {frozenset(embedding.values()) for embedding in embeddings}
    assert frozenset({1, 2, 3, 5, 7, 8}) not in images
    assert len(embeddings) == 48 * len(images)


def test_embeddings_are_deterministic(twelve_leaf_tree: BoronTree, snowflake_tree: BoronTree) -> None:
    first = enumerate_embeddings(snowflake_tree, twelve_leaf_tree)
    second = enumerate_embeddings(snowflake_tree, twelve_leaf_tree)
    assert first == second
    assert [_key(item) for item in first] == sorted(_key(item) for item in first)


@pytest.mark.parametrize("small,large", [(small, large) for small in range(2, 6) for large in range(small, 8)])
def test_search_matches_brute_force(small: int, large: int) -> None:
    for source in enumerate_labeled(small):
        for target in _representatives(large):
            fast = sorted(map(_key, enumerate_embeddings(source, target)))
            slow = sorted(map(_key, brute_force_embeddings(source, target)))
            assert fast == slow


def test_embedding_images_induce_source_shape(twelve_leaf_tree: BoronTree, snowflake_tree: BoronTree) -> None:
    for embedding in enumerate_embeddings(snowflake_tree, twelve_leaf_tree)[:20]:
        image = induced(twelve_leaf_tree, embedding.values())
        assert canonical_form(image) == canonical_form(snowflake_tree)


def test_find_isomorphism(twelve_leaf_tree: BoronTree, snowflake_tree: BoronTree) -> None:
    subtree = induced(twelve_leaf_tree, [1, 3, 7, 8, 9, 12])
    bijection = find_isomorphism(subtree, snowflake_tree)
    assert bijection is not None
    assert subtree.relabel(bijection) == snowflake_tree
    assert find_isomorphism(induced(twelve_leaf_tree, [1, 2, 3, 5, 7, 8]), snowflake_tree) is None
