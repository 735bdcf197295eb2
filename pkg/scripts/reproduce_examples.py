#!/usr/bin/env python3
"""데스크 규모의 예제를 모두 다시 계산하고 PASS/FAIL 표를 출력한다."""

from __future__ import annotations

import argparse
import random
import sys
import time
from itertools import combinations, product
from math import comb, perm
from pathlib import Path
from typing import Callable

ROOT_DIR = Path(__file__).resolve().parents[1]
if str(ROOT_DIR) not in sys.path:
    sys.path.insert(0, str(ROOT_DIR))

from src.algebra import VariableSet, discriminant, init, rename  # noqa: E402
from src.config import get_settings  # noqa: E402
from src.instances import BOI, FI, OI, Boron, Interval, Morphism, PairFI, cycle  # noqa: E402
from src.poset import first_comparable_pair, subset_class_leq  # noqa: E402
from src.systems import (  # noqa: E402
    GeneratorData,
    OrbitSystem,
    annihilates,
    boric_system,
    high_rank_witness,
    low_rank_points,
    phi_psi_round_trip,
    stabilization_probe,
    symmetric_chain,
)
from src.trees import (  # noqa: E402
    brute_force_embeddings,
    canonical_form,
    count_labeled,
    enumerate_embeddings,
    enumerate_labeled,
    induced,
    is_isomorphic,
    parse_newick,
)
from src.utils.logger import configure_logging  # noqa: E402

TWELVE_LEAF = "(((1,2),(3,4)),((5,6),(7,8)),((9,10),(11,12)));"
SNOWFLAKE = "((1,2),(3,4),(5,6));"


def snowflake_induced() -> bool:
    tree, snowflake = parse_newick(TWELVE_LEAF), parse_newick(SNOWFLAKE)
    return is_isomorphic(induced(tree, [1, 3, 7, 8, 9, 12]), snowflake) and not is_isomorphic(
        induced(tree, [1, 2, 3, 5, 7, 8]), snowflake
    )


def boric_membership() -> bool:
    instance = Boron()
    tree = parse_newick(TWELVE_LEAF)
    system = OrbitSystem(instance, boric_system(parse_newick(SNOWFLAKE), instance), bound=12)
    variables = instance.variables(tree)

    def disc(*leaves: int):
        return discriminant([f"x{leaf}" for leaf in leaves], variables)

    inside = system.membership(tree, disc(1, 3, 7, 8, 9, 12))
    outside = system.membership(tree, disc(1, 2, 3, 5, 7, 8))
    return inside.member and not outside.member and outside.method == "graded span"


def leading_term_law(rng: random.Random) -> bool:
    variables = VariableSet(f"x{index}" for index in range(1, 13))
    for _ in range(50):
        chosen = sorted(rng.sample(range(1, 13), 6))
        delta = discriminant([f"x{index}" for index in chosen], variables)
        exponents = dict(zip(variables.names, init(delta).LM))
        if [exponents[f"x{index}"] for index in chosen] != [5, 4, 3, 2, 1, 0]:
            return False
    return True


def symmetric_chains() -> bool:
    instance = FI()
    for r in (1, 2):
        chain = symmetric_chain(r, r + 2, instance)
        system = OrbitSystem(instance, chain[-1], bound=5)
        for size in range(r + 1, 6):
            ideal = system.ideal_at(Interval(size))
            if not all(annihilates(ideal, point) for point in low_rank_points(size, r)):
                return False
            if annihilates(ideal, high_rank_witness(size, r)):
                return False
        if stabilization_probe(instance, chain, 5).index != r + 1:
            return False
    return True


def enumeration_counts() -> bool:
    counts = [len(enumerate_labeled(n)) for n in (4, 5, 6)]
    classes = len({canonical_form(tree) for tree in enumerate_labeled(6)})
    return counts == [3, 15, 105] == [count_labeled(n) for n in (4, 5, 6)] and classes == 2


def _representatives(size: int) -> list:
    seen: dict[str, object] = {}
    for tree in enumerate_labeled(size):
        seen.setdefault(canonical_form(tree), tree)
    return list(seen.values())


def embedding_oracle() -> bool:
    def key(embedding: dict) -> tuple:
        return tuple(sorted(embedding.items()))

    for small in range(2, 6):
        for large in range(small, 8):
            for source in _representatives(small):
                for target in _representatives(large):
                    fast = sorted(map(key, enumerate_embeddings(source, target)))
                    slow = sorted(map(key, brute_force_embeddings(source, target)))
                    if fast != slow:
                        return False
    return True


def cycle_antichain() -> bool:
    instance = PairFI()
    cycles = [cycle(length) for length in range(3, 7)]
    return first_comparable_pair(cycles, lambda a, b: subset_class_leq(instance, a, b)) is None


def phi_psi() -> bool:
    for instance in (FI(), OI()):
        for size in range(1, 4):
            variables = instance.variables(Interval(size))
            for exponents in product(range(3), repeat=size):
                if not any(exponents):
                    continue
                monomial = variables.term(dict(zip(variables.names, exponents)))
                system = OrbitSystem(instance, GeneratorData.of([(Interval(size), monomial)]), bound=3)
                if not phi_psi_round_trip(system, 3):
                    return False
    return True


def _random_polynomial(rng: random.Random, variables: VariableSet):
    polynomial = variables.zero
    for _ in range(rng.randint(1, 4)):
        degree = rng.randint(0, 4)
        exponents = {name: 0 for name in variables.names}
        for _ in range(degree):
            exponents[rng.choice(variables.names)] += 1
        polynomial += variables.term(exponents, rng.randint(-3, 3) or 1)
    return polynomial


def init_commutes(rng: random.Random) -> bool:
    instance = OI()
    for _ in range(500):
        target_size = rng.randint(1, 5)
        source_size = rng.randint(1, target_size)
        source, target = Interval(source_size), Interval(target_size)
        images = sorted(rng.sample(range(1, target_size + 1), source_size))
        morphism = Morphism.from_mapping(source, target, dict(zip(source.elements, images)))
        polynomial = _random_polynomial(rng, instance.variables(source))
        if not polynomial:
            continue
        if init(instance.push(polynomial, morphism)) != instance.push(init(polynomial), morphism):
            return False
    variables = VariableSet(["x1", "x2"])
    control = variables.gen("x1") + variables.gen("x2") ** 2
    swap = {"x1": "x2", "x2": "x1"}
    return init(rename(control, swap)) != rename(init(control), swap)


def hom_counts() -> bool:
    fi, oi, boi = FI(), OI(), BOI()
    for m, n in product(range(1, 7), repeat=2):
        source, target = Interval(m), Interval(n)
        expected_boi = n - m + 1 if m <= n else 0
        if len(fi.morphisms(source, target)) != perm(n, m):
            return False
        if len(oi.morphisms(source, target)) != comb(n, m):
            return False
        if len(boi.morphisms(source, target)) != expected_boi:
            return False
    return True


def run_checks(seed: int) -> list[tuple[str, bool, float]]:
    rng = random.Random(seed)
    checks: list[tuple[str, Callable[[], bool]]] = [
        ("1 induced snowflake", snowflake_induced),
        ("2 boric membership", boric_membership),
        ("3 leading-term law", lambda: leading_term_law(rng)),
        ("4 symmetric chains", symmetric_chains),
        ("5 enumeration counts", enumeration_counts),
        ("6 embedding oracle", embedding_oracle),
        ("7 cycle antichain", cycle_antichain),
        ("8 phi/psi round trip", phi_psi),
        ("9 init/rename commutation", lambda: init_commutes(rng)),
        ("10 hom-set counts", hom_counts),
    ]
    results = []
    for name, check in checks:
        started = time.perf_counter()
        passed = check()
        results.append((name, passed, time.perf_counter() - started))
    return results


def parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser(description="예제 재현 점검")
    parser.add_argument("--seed", type=int, default=None, help="무작위 점검 시드(기본값: 설정값)")
    return parser.parse_args()


def main() -> int:
    args = parse_args()
    configure_logging(force=True, console_level="WARNING")
    seed = get_settings().compute.seed if args.seed is None else args.seed
    results = run_checks(seed)
    width = max(len(name) for name, _, _ in results)
    for name, passed, elapsed in results:
        print(f"{name.ljust(width)}  {'PASS' if passed else 'FAIL'}  {elapsed:8.2f}s")
    return 0 if all(passed for _, passed, _ in results) else 1


if __name__ == "__main__":
    sys.exit(main())
