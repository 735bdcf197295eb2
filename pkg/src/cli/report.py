"""명령 결과 보고서와 종료 코드."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Any

from src.data import VerdictRepository, session_scope
from src.utils.logger import get_logger

_logger = get_logger(__name__)


class ExitCode(IntEnum):
    TRUE = 0
    FALSE = 1
    INPUT_ERROR = 2
    BOUND_EXCEEDED = 3
    ORACLE_DISAGREEMENT = 4


@dataclass
class Report:
    """verdict 는 첫 줄, lines 는 사람이 검산할 증명서, data 는 구조화 출력."""

    command: str
    subject: str
    verdict: str
    exit_code: ExitCode = ExitCode.TRUE
    lines: list[str] = field(default_factory=list)
    data: dict[str, Any] = field(default_factory=dict)

    def render(self, output_format: str = "text") -> str:
        if output_format == "json":
            payload = {"command": self.command, "verdict": self.verdict, "exit_code": int(self.exit_code), **self.data}
            return json.dumps(payload, ensure_ascii=False, sort_keys=True, indent=2, default=str)
        return "\n".join([self.verdict, *self.lines]) if self.verdict else "\n".join(self.lines)

    def record(self) -> int:
        """판정을 보관소에 남기고 기록 id 를 돌려준다."""
        repository = VerdictRepository()
        with session_scope() as session:
            entry = repository.add(
                session,
                command=self.command,
                subject=self.subject,
                verdict=self.verdict or (self.lines[0] if self.lines else ""),
                exit_code=int(self.exit_code),
                certificate={"lines": self.lines, **self.data},
            )
            record_id = entry.id
        _logger.info("판정 기록 저장", extra={"command": self.command, "record_id": record_id})
        return record_id


__all__ = ["ExitCode", "Report"]
