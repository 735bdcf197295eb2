"""보론 트리, 사중 관계, 매장 열거, 순서 트리."""

from .boron import (
    BoronTree,
    InternalNode,
    Label,
    QuartetTable,
    canonical_form,
    four_point_split,
    induced,
    is_isomorphic,
    iter_quartets,
    label_key,
    quartet,
    sort_labels,
)
from .embeddings import (
    Embedding,
    automorphisms,
    brute_force_embeddings,
    enumerate_embeddings,
    find_isomorphism,
    search_embeddings,
)
from .enumeration import count_labeled, enumerate_labeled, from_quartets
from .newick import format_newick, format_ordered, parse_newick, parse_ordered, tree_from_nested
from .ordered import (
    OrderedBoronTree,
    compose_root,
    enumerate_ordered,
    enumerate_ordered_embeddings,
    planar_embedding,
    root_decomposition,
)

__all__ = [
    "BoronTree",
    "Embedding",
    "InternalNode",
    "Label",
    "OrderedBoronTree",
    "QuartetTable",
    "automorphisms",
    "brute_force_embeddings",
    "canonical_form",
    "compose_root",
    "count_labeled",
    "enumerate_embeddings",
    "enumerate_labeled",
    "enumerate_ordered",
    "enumerate_ordered_embeddings",
    "find_isomorphism",
    "format_newick",
    "format_ordered",
    "four_point_split",
    "from_quartets",
    "induced",
    "is_isomorphic",
    "iter_quartets",
    "label_key",
    "parse_newick",
    "parse_ordered",
    "planar_embedding",
    "quartet",
    "root_decomposition",
    "search_embeddings",
    "sort_labels",
    "tree_from_nested",
]
