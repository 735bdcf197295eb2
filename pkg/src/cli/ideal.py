"""`ideal` 하위 명령: gens, member, init, stabilize, equivariance."""

from __future__ import annotations

import argparse

from src.algebra import format_polynomial, graded_span_member, parse_polynomial
from src.instances import CategoryInstance
from src.systems import (
    MembershipResult,
    OrbitSystem,
    StabilizationReport,
    SystemSpec,
    equivariance_check,
    init_system,
    load_system_spec,
    stabilization_probe,
)
from src.utils.exceptions import OracleDisagreement

from .inputs import read_text, resolve_path
from .report import ExitCode, Report


def _load(args: argparse.Namespace) -> tuple[SystemSpec, CategoryInstance, int]:
    spec = load_system_spec(resolve_path(args.spec) or args.spec)
    instance = spec.build_instance()
    bound = args.bound if args.bound is not None else spec.bound
    return spec, instance, bound


def _system(args: argparse.Namespace) -> tuple[OrbitSystem, object]:
    spec, instance, bound = _load(args)
    system = OrbitSystem(instance, spec.generators(instance), bound=bound, degree_cap=spec.degree_cap)
    text = read_text(args.object).strip()
    obj = instance.parse_object(text.splitlines()[0] if text else text)
    return system, obj


def cmd_gens(args: argparse.Namespace) -> Report:
    system, obj = _system(args)
    generators = system.generators_at(obj)
    lines = [format_polynomial(generator) for generator in generators]
    return Report(
        "ideal gens",
        f"{args.spec} {args.object}",
        f"{len(generators)} generators",
        lines=lines,
        data={"count": len(generators), "generators": lines},
    )


def _certificate(result: MembershipResult) -> list[str]:
    lines = [f"generators: {result.generators}"]
    if result.span is not None:
        lines.append(f"degree: {result.span.degree}")
        lines.append(result.span.describe())
    if result.trace is not None:
        lines.append(f"remainder: {format_polynomial(result.trace.remainder)}")
        lines.extend(
            f"q{index}: {format_polynomial(quotient)}"
            for index, quotient in enumerate(result.trace.quotients)
            if quotient
        )
    return lines


def _check_membership(system: OrbitSystem, obj: object, polynomial, result: MembershipResult) -> None:
    """다른 경로로 같은 판정을 다시 얻는다. 전체 Gröbner 계산으로 되돌아가지 않는다."""
    generators = [g for g in system.generators_at(obj) if g]
    if result.method == "zero":
        agrees = not polynomial
    elif result.method == "generator":
        agrees = polynomial in generators
    elif result.span is not None and result.member:
        ring = polynomial.ring
        combination = ring.zero
        for index, coefficient in result.span.coefficients.items():
            combination += generators[index] * ring.domain(coefficient.numerator, coefficient.denominator)
        agrees = combination == polynomial
    elif result.span is not None:
        # 역순으로 소거하면 다른 피벗 열로 같은 랭크를 얻어야 한다
        reverse = graded_span_member(polynomial, generators[::-1])
        agrees = not reverse.member and (reverse.rank, reverse.rank_with_target) == (
            result.span.rank,
            result.span.rank_with_target,
        )
    elif result.trace is not None:
        basis = system.groebner_at(obj).basis
        rebuilt = result.trace.remainder + sum(
            (quotient * element for quotient, element in zip(result.trace.quotients, basis)), polynomial.ring.zero
        )
        agrees = rebuilt == polynomial
    else:
        agrees = False
    if not agrees:
        raise OracleDisagreement(f"소속 판정 검증 실패 ({result.method})")


def cmd_member(args: argparse.Namespace) -> Report:
    system, obj = _system(args)
    polynomial = parse_polynomial(read_text(args.polynomial).strip(), system.instance.variables(obj))
    result = system.membership(obj, polynomial)
    if args.oracle:
        _check_membership(system, obj, polynomial, result)
    lines = _certificate(result)
    return Report(
        "ideal member",
        f"{args.spec} {args.object} {args.polynomial}",
        result.verdict,
        ExitCode.TRUE if result.member else ExitCode.FALSE,
        lines,
        {"member": result.member, "method": result.method, "certificate": lines},
    )


def cmd_init(args: argparse.Namespace) -> Report:
    system, obj = _system(args)
    ideal = init_system(system, obj)
    lines = [format_polynomial(generator) for generator in ideal.generators]
    return Report(
        "ideal init",
        f"{args.spec} {args.object}",
        f"{len(lines)} initial generators",
        lines=lines,
        data={"generators": lines},
    )


def _level_lines(report: StabilizationReport) -> list[str]:
    return [
        f"level {level.level}: " + " ".join(f"{label}={size}" for label, size in level.sizes)
        for level in report.levels
    ]


def cmd_stabilize(args: argparse.Namespace) -> Report:
    spec, instance, bound = _load(args)
    chain = spec.chain(instance)
    report = stabilization_probe(instance, chain, bound, degree_cap=spec.degree_cap)
    if args.oracle:
        sequential = stabilization_probe(instance, chain, bound, max_workers=1, degree_cap=spec.degree_cap)
        if sequential != report:
            raise OracleDisagreement("병렬 계산과 순차 계산의 안정화 결과가 다릅니다.")
    lines = _level_lines(report)
    return Report(
        "ideal stabilize",
        f"{args.spec} bound={bound}",
        report.describe(),
        ExitCode.TRUE if report.stabilized else ExitCode.FALSE,
        lines,
        {"index": report.index, "bound": bound, "levels": lines},
    )


def cmd_equivariance(args: argparse.Namespace) -> Report:
    spec, instance, bound = _load(args)
    system = OrbitSystem(instance, spec.generators(instance), bound=bound, degree_cap=spec.degree_cap)
    report = equivariance_check(system, bound)
    lines = [f"checked: {report.checked}"]
    if report.witness is not None:
        lines.append(f"morphism: {report.witness.morphism!r}")
        lines.append(f"generator: {format_polynomial(report.witness.generator)}")
        lines.append(f"image: {format_polynomial(report.witness.image)}")
    return Report(
        "ideal equivariance",
        f"{args.spec} bound={bound}",
        "EQUIVARIANT" if report.holds else "NOT EQUIVARIANT",
        ExitCode.TRUE if report.holds else ExitCode.FALSE,
        lines,
        {"holds": report.holds, "checked": report.checked, "certificate": lines},
    )


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("ideal", help="아이디얼 시스템 계산")
    commands = parser.add_subparsers(dest="subcommand", required=True)

    gens = commands.add_parser("gens", parents=[common], help="대상에서의 궤도 생성원")
    gens.add_argument("spec")
    gens.add_argument("object")
    gens.set_defaults(handler=cmd_gens)

    member = commands.add_parser("member", parents=[common], help="소속 판정")
    member.add_argument("spec")
    member.add_argument("object")
    member.add_argument("polynomial")
    member.set_defaults(handler=cmd_member)

    init = commands.add_parser("init", parents=[common], help="초기 아이디얼 생성원")
    init.add_argument("spec")
    init.add_argument("object")
    init.set_defaults(handler=cmd_init)

    stabilize = commands.add_parser("stabilize", parents=[common], help="사슬 안정화 탐색")
    stabilize.add_argument("spec")
    stabilize.set_defaults(handler=cmd_stabilize)

    equivariance = commands.add_parser("equivariance", parents=[common], help="동변성 확인")
    equivariance.add_argument("spec")
    equivariance.set_defaults(handler=cmd_equivariance)


__all__ = ["register"]
