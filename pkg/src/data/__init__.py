"""판정 기록 보관소."""

from .database import (
    Base,
    create_db_engine,
    get_session_factory,
    init_schema,
    make_session_factory,
    resolve_database_url,
    session_scope,
)
from .models import TimestampMixin, VerdictRecord
from .repositories import CRUDRepository, VerdictRepository

__all__ = [
    "Base",
    "CRUDRepository",
    "TimestampMixin",
    "VerdictRecord",
    "VerdictRepository",
    "create_db_engine",
    "get_session_factory",
    "init_schema",
    "make_session_factory",
    "resolve_database_url",
    "session_scope",
]
