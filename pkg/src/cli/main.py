"""명령행 진입점.

종료 코드: 0 참, 1 거짓, 2 입력·명세 오류, 3 계산 한계 초과, 4 검증 경로 불일치.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from src.utils.exceptions import (
    AppError,
    BoundExceeded,
    NotAChain,
    OracleDisagreement,
    OutOfRange,
    ParseError,
)
from src.utils.logger import configure_logging, get_logger

from . import ideal, poset, tree
from .report import ExitCode

_logger = get_logger(__name__)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="출력 형식(기본값: text)")
    common.add_argument("--oracle", action="store_true", help="느린 경로로 다시 계산해 결과를 대조")
    common.add_argument("--bound", type=_positive, default=None, help="대상 크기 한계")
    common.add_argument("--seed", type=int, default=None, help="무작위 표본 시드")
    common.add_argument("--record", action="store_true", help="판정을 보관소에 기록")

    parser = argparse.ArgumentParser(prog="workbench", description="동변 아이디얼 시스템 계산 도구")
    subparsers = parser.add_subparsers(dest="command", required=True)
    tree.register(subparsers, common)
    ideal.register(subparsers, common)
    poset.register(subparsers, common)
    return parser


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("양의 정수여야 합니다.")
    return value


def _fail(message: str, code: ExitCode) -> int:
    print(message, file=sys.stderr)
    return int(code)


def main(argv: Sequence[str] | None = None) -> int:
    configure_logging(force=True, console_level="WARNING")
    args = build_parser().parse_args(argv)
    try:
        report = args.handler(args)
    except ParseError as exc:
        return _fail(exc.annotated(), ExitCode.INPUT_ERROR)
    except (BoundExceeded, OutOfRange) as exc:
        return _fail(str(exc), ExitCode.BOUND_EXCEEDED)
    except OracleDisagreement as exc:
        return _fail(str(exc), ExitCode.ORACLE_DISAGREEMENT)
    except NotAChain as exc:
        return _fail(f"{exc}\nwitness: {exc.witness}", ExitCode.INPUT_ERROR)
    except AppError as exc:
        return _fail(str(exc), ExitCode.INPUT_ERROR)
    print(report.render(args.format))
    if args.record:
        report.record()
    _logger.debug("명령 완료", extra={"command": report.command, "exit_code": int(report.exit_code)})
    return int(report.exit_code)


__all__ = ["build_parser", "main"]
