from __future__ import annotations

import pytest

from src.trees import (
    BoronTree,
    enumerate_labeled,
    enumerate_ordered,
    format_newick,
    format_ordered,
    parse_newick,
    parse_ordered,
)
from src.utils.exceptions import InvalidTree, ParseError


def test_parse_fixture_trees(twelve_leaf_tree: BoronTree, snowflake_tree: BoronTree) -> None:
    assert twelve_leaf_tree.size == 12
    assert len(twelve_leaf_tree.internal_nodes()) == 10
    assert snowflake_tree.sorted_leaves == (1, 2, 3, 4, 5, 6)
    assert len(snowflake_tree.internal_nodes()) == 4


def test_rooted_and_unrooted_spellings_agree() -> None:
    assert parse_newick("((1,2),(3,4));") == parse_newick("(1,2,(3,4));")
    assert parse_newick("((1,2),(3,4));") != parse_newick("((1,3),(2,4));")


def test_string_labels_and_whitespace() -> None:
    tree = parse_newick(" ( a , b ,( c , d ) ) ; ")
    assert tree.leaves == frozenset({"a", "b", "c", "d"})


def test_format_round_trip() -> None:
    for n in (2, 3, 5, 6):
        for tree in enumerate_labeled(n):
            assert parse_newick(format_newick(tree)) == tree


def test_format_is_label_sorted() -> None:
    assert format_newick(parse_newick("((3,4),(2,1));")) == "(1,2,(3,4));"
    assert format_newick(parse_newick("(2,1);")) == "(1,2);"


def test_parse_error_reports_position() -> None:
    with pytest.raises(ParseError) as excinfo:
        parse_newick("((1,2),(3,4))")
    assert excinfo.value.position == 13
    with pytest.raises(ParseError) as excinfo:
        parse_newick("((1,2),(3,4);")
    assert excinfo.value.position == 12
    assert "^" in excinfo.value.annotated()


def test_structural_errors() -> None:
    with pytest.raises(InvalidTree):
        parse_newick("((1,2),(3,4),(5,6),(7,8));")
    with pytest.raises(InvalidTree):
        parse_newick("((1,2,3),(4,5));")
    with pytest.raises(InvalidTree):
        parse_newick("((1,1),(2,3));")


def test_trailing_input_is_rejected() -> None:
    with pytest.raises(ParseError):
        parse_newick("(1,2); extra")


def test_ordered_round_trip() -> None:
    for n in (2, 3, 4, 5, 6):
        for ordered in enumerate_ordered(n):
            assert parse_ordered(format_ordered(ordered)) == ordered


def test_ordered_parse_rotates_to_root() -> None:
    ordered = parse_ordered("root=3:((1,2),3);")
    assert ordered.root == 3
    assert ordered.arrangement == (3, 1, 2)
    assert ordered.leaf_order == (1, 2, 3)


def test_ordered_requires_prefix() -> None:
    with pytest.raises(ParseError) as excinfo:
        parse_ordered("((1,2),3);")
    assert excinfo.value.position == 0
