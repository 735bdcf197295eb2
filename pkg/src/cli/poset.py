"""`poset` 하위 명령: leq, antichain."""

from __future__ import annotations

import argparse

from src.instances import InstanceKind, build_instance, cycle
from src.poset import (
    dickson_leq,
    first_comparable_pair,
    higman_leq,
    higman_leq_exhaustive,
    pattern_leq,
    subset_class_leq,
)
from src.utils.exceptions import OracleDisagreement, ParseError

from .inputs import parse_range, parse_word
from .report import ExitCode, Report

ORDERS = {"dickson": dickson_leq, "higman": higman_leq, "pattern": pattern_leq}
FAMILIES = ("cycles",)


def cmd_leq(args: argparse.Namespace) -> Report:
    first, second = parse_word(args.first), parse_word(args.second)
    leq = ORDERS[args.order]
    forward, backward = leq(first, second), leq(second, first)
    if args.oracle and args.order == "higman":
        if (forward, backward) != (higman_leq_exhaustive(first, second), higman_leq_exhaustive(second, first)):
            raise OracleDisagreement("Higman 탐욕 판정과 전수 판정이 다릅니다.")
    lines = [f"{args.first} <= {args.second}: {str(forward).lower()}", f"{args.second} <= {args.first}: {str(backward).lower()}"]
    return Report(
        "poset leq",
        f"{args.order} {args.first} {args.second}",
        "LEQ" if forward else "INCOMPARABLE-OR-GT",
        ExitCode.TRUE if forward else ExitCode.FALSE,
        lines,
        {"leq": forward, "geq": backward},
    )


def cmd_antichain(args: argparse.Namespace) -> Report:
    instance = build_instance(args.instance)
    if instance.descriptor.kind is not InstanceKind.PAIR_FI or args.family not in FAMILIES:
        raise ParseError(f"지원하지 않는 원소 모임: {args.instance} {args.family}", text=args.family, position=0)
    lengths = parse_range(args.range)
    elements = [cycle(length) for length in lengths]

    def leq(first, second) -> bool:
        return subset_class_leq(instance, first, second)

    pair = first_comparable_pair(elements, leq)
    if pair is None:
        return Report(
            "poset antichain",
            f"{args.instance} {args.family} {args.range}",
            "ANTICHAIN",
            lines=[f"elements: {len(elements)}"],
            data={"antichain": True, "elements": len(elements)},
        )
    witness = [instance.format_object(element) for element in pair]
    return Report(
        "poset antichain",
        f"{args.instance} {args.family} {args.range}",
        "NOT ANTICHAIN",
        ExitCode.FALSE,
        [f"comparable: {witness[0]} ~ {witness[1]}"],
        {"antichain": False, "witness": witness},
    )


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("poset", help="부분 순서 판정")
    commands = parser.add_subparsers(dest="subcommand", required=True)

    leq = commands.add_parser("leq", parents=[common], help="두 원소 비교")
    leq.add_argument("order", choices=sorted(ORDERS))
    leq.add_argument("first")
    leq.add_argument("second")
    leq.set_defaults(handler=cmd_leq)

    antichain = commands.add_parser("antichain", parents=[common], help="반사슬 판정")
    antichain.add_argument("instance")
    antichain.add_argument("family", choices=FAMILIES)
    antichain.add_argument("range", help="a..b")
    antichain.set_defaults(handler=cmd_antichain)


__all__ = ["register"]
