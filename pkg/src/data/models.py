"""판정 기록 ORM 모델."""

from __future__ import annotations

import json
from datetime import datetime, timezone
from typing import Any, Mapping, Optional

from sqlalchemy import DateTime, Index, String, Text, func
from sqlalchemy.orm import Mapped, mapped_column

from .database import Base


def _utcnow() -> datetime:
    return datetime.now(timezone.utc)


class TimestampMixin:
    created_at: Mapped[datetime] = mapped_column(
        DateTime(timezone=True), default=_utcnow, server_default=func.now()
    )
    updated_at: Mapped[datetime] = mapped_column(
        DateTime(timezone=True), default=_utcnow, server_default=func.now(), onupdate=_utcnow
    )


class VerdictRecord(TimestampMixin, Base):
    """CLI 실행 한 번의 판정. certificate 는 JSON 텍스트."""

    __tablename__ = "verdicts"
    __table_args__ = (Index("ix_verdicts_command_id", "command", "id"),)

    id: Mapped[int] = mapped_column(primary_key=True)
    command: Mapped[str] = mapped_column(String(64), index=True)
    subject: Mapped[str] = mapped_column(Text)
    verdict: Mapped[str] = mapped_column(String(128))
    exit_code: Mapped[int]
    certificate: Mapped[Optional[str]] = mapped_column(Text)

    @staticmethod
    def encode_certificate(certificate: Optional[Mapping[str, Any]]) -> Optional[str]:
        if certificate is None:
            return None
        return json.dumps(certificate, ensure_ascii=False, sort_keys=True, default=str)

    def decoded_certificate(self) -> Optional[dict[str, Any]]:
        return json.loads(self.certificate) if self.certificate else None

    def __repr__(self) -> str:
        return f"VerdictRecord(id={self.id}, command={self.command!r}, verdict={self.verdict!r})"


__all__ = ["TimestampMixin", "VerdictRecord"]
