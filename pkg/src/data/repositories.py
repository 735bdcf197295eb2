"""판정 보관소 접근 계층."""

from __future__ import annotations

from typing import Any, Generic, Mapping, Optional, Sequence, TypeVar

from sqlalchemy import Select, select
from sqlalchemy.orm import Session

from src.utils.logger import get_logger

from .database import Base
from .models import VerdictRecord

ModelT = TypeVar("ModelT", bound=Base)

_logger = get_logger(__name__)


class CRUDRepository(Generic[ModelT]):
    """모델 하나에 대한 생성/조회."""

    def __init__(self, model: type[ModelT]) -> None:
        self.model = model

    def create(self, session: Session, **values: Any) -> ModelT:
        instance = self.model(**values)
        session.add(instance)
        return instance

    def _where(self, filters: Optional[Mapping[str, Any]]) -> Select[tuple[ModelT]]:
        statement = select(self.model)
        for column, value in (filters or {}).items():
            statement = statement.where(getattr(self.model, column) == value)
        return statement

    def list(
        self,
        session: Session,
        *,
        filters: Optional[Mapping[str, Any]] = None,
        limit: Optional[int] = None,
    ) -> Sequence[ModelT]:
        statement = self._where(filters)
        if limit:
            statement = statement.limit(limit)
        return session.scalars(statement).all()


class VerdictRepository(CRUDRepository[VerdictRecord]):
    def __init__(self) -> None:
        super().__init__(VerdictRecord)

    def add(
        self,
        session: Session,
        *,
        command: str,
        subject: str,
        verdict: str,
        exit_code: int,
        certificate: Optional[Mapping[str, Any]] = None,
    ) -> VerdictRecord:
        """기록을 추가하고 id 를 받기 위해 flush 한다."""
        record = self.create(
            session,
            command=command,
            subject=subject,
            verdict=verdict,
            exit_code=exit_code,
            certificate=VerdictRecord.encode_certificate(certificate),
        )
        session.flush()
        _logger.debug("판정 기록", extra={"record_id": record.id, "command": command})
        return record

    def latest(self, session: Session, command: Optional[str] = None) -> Optional[VerdictRecord]:
        filters = None if command is None else {"command": command}
        statement = self._where(filters).order_by(VerdictRecord.id.desc()).limit(1)
        return session.scalars(statement).first()

    def by_command(self, session: Session, command: str, *, limit: Optional[int] = None) -> Sequence[VerdictRecord]:
        """명령별 기록, 오래된 것부터."""
        statement = self._where({"command": command}).order_by(VerdictRecord.id)
        if limit:
            statement = statement.limit(limit)
        return session.scalars(statement).all()

    @staticmethod
    def certificate_of(record: VerdictRecord) -> Optional[dict[str, Any]]:
        return record.decoded_certificate()


__all__ = ["CRUDRepository", "VerdictRepository"]
