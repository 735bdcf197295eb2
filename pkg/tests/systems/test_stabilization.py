from __future__ import annotations

import pytest

from src.algebra import parse_polynomial
from src.instances import FI, OI, InstanceKind, Interval
from src.systems import (
    GeneratorData,
    load_system_spec,
    parse_system_spec,
    stabilization_probe,
    symmetric_chain,
)
from src.utils.exceptions import AppError, DataValidationError, NotAChain, ParseError


def _level(instance, *entries: tuple[int, str]) -> GeneratorData:
    pairs = []
    for size, text in entries:
        obj = Interval(size)
        pairs.append((obj, parse_polynomial(text, instance.variables(obj))))
    return GeneratorData.of(pairs)


def test_constant_chain_stabilizes_immediately() -> None:
    oi = OI()
    level = _level(oi, (2, "x1 - x2"))
    report = stabilization_probe(oi, [level, level], 3)
    assert report.index == 1
    assert report.describe() == "stabilized at level 1 (bound 3)"
    assert [certificate.level for certificate in report.levels] == [1, 2]


@pytest.mark.parametrize("r", [1, 2])
def test_symmetric_chain_stabilizes_after_r(r: int) -> None:
    fi = FI()
    report = stabilization_probe(fi, symmetric_chain(r, r + 2, fi), 4)
    assert report.stabilized
    assert report.index == r + 1


def test_parallel_and_sequential_stabilization_agree() -> None:
    fi = FI()
    chain = symmetric_chain(1, 3, fi)
    assert stabilization_probe(fi, chain, 4, max_workers=4) == stabilization_probe(fi, chain, 4, max_workers=1)


def test_sym_fixture_stabilizes_at_two(fixture_dir) -> None:
    spec = load_system_spec(fixture_dir / "sym-r1.spec")
    instance = spec.build_instance()
    report = stabilization_probe(instance, spec.chain(instance), 4)
    assert report.index == 2
    sizes = dict(report.levels[0].sizes)
    assert sizes["[2]"] == 0
    assert dict(report.levels[1].sizes)["[3]"] == 2


def test_growing_fixture_does_not_stabilize(fixture_dir) -> None:
    spec = load_system_spec(fixture_dir / "growing.spec")
    instance = spec.build_instance()
    report = stabilization_probe(instance, spec.chain(instance), spec.bound)
    assert report.index is None
    assert report.describe() == "not stabilized at bound 3"


def test_decreasing_sequence_is_not_a_chain() -> None:
    oi = OI()
    chain = [_level(oi, (1, "x1")), _level(oi, (1, "x1^3"))]
    with pytest.raises(NotAChain) as excinfo:
        stabilization_probe(oi, chain, 2)
    assert excinfo.value.witness == {"level": 1, "object": "[1]", "generator": "x1"}


def test_empty_chain_is_rejected() -> None:
    with pytest.raises(DataValidationError):
        stabilization_probe(OI(), [], 2)


def test_spec_fixture_fields(fixture_dir) -> None:
    spec = load_system_spec(fixture_dir / "boric.spec")
    assert spec.instance.kind is InstanceKind.BORON
    assert spec.bound == 12
    assert spec.degree_cap is None
    (pair,) = spec.generators()
    tree, polynomial = pair
    assert tree.size == 6
    assert len(polynomial) == 720

    chain = load_system_spec(fixture_dir / "sym-r1.spec").chain()
    assert [len(level) for level in chain] == [1, 2, 3]


def test_spec_options() -> None:
    spec = parse_system_spec("instance: oi\nbound: 4\ndegree_cap: 6   # 상한\ngenerator: [1] | x1\n")
    assert (spec.bound, spec.degree_cap) == (4, 6)
    assert len(spec.levels) == 1


@pytest.mark.parametrize(
    "text,position,line_text",
    [
        ("instance: fi\nbound: x\n", 7, "bound: x"),
        ("instance: fi\ncolor: 3\n", 0, "color: 3"),
        ("instance: fi\nbound: 3\ngenerator: [2] x1\n", 11, "generator: [2] x1"),
        ("instance: boron x\nbound: 3\n", 16, "instance: boron x"),
        ("instance: fi\n  oops\n", 2, "  oops"),
    ],
)
def test_spec_errors_are_located(text: str, position: int, line_text: str) -> None:
    with pytest.raises(ParseError) as excinfo:
        parse_system_spec(text)
    assert excinfo.value.position == position
    assert excinfo.value.text == line_text


@pytest.mark.parametrize(
    "text,position",
    [
        ("instance: fi\nbound: 3\ngenerator: [2] | x1 + y\n", 22),
        ("instance: fi\nbound: 3\ngenerator: three | x1\n", 11),
    ],
)
def test_generator_errors_are_located(text: str, position: int) -> None:
    spec = parse_system_spec(text)
    with pytest.raises(ParseError) as excinfo:
        spec.chain()
    assert excinfo.value.position == position
    assert excinfo.value.text.startswith("generator:")


def test_spec_requires_instance_and_bound(tmp_path) -> None:
    with pytest.raises(ParseError):
        parse_system_spec("instance: fi\n")
    with pytest.raises(ParseError):
        parse_system_spec("instance: fi\nbound: 0\n")
    with pytest.raises(AppError):
        load_system_spec(tmp_path / "missing.spec")
