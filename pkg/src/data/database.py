"""판정 보관소 엔진과 세션."""

from __future__ import annotations

from contextlib import contextmanager
from functools import lru_cache
from pathlib import Path
from typing import Any, Iterator, Optional

from sqlalchemy import create_engine
from sqlalchemy.engine import URL, Engine
from sqlalchemy.engine.url import make_url
from sqlalchemy.orm import DeclarativeBase, Session, sessionmaker
from sqlalchemy.pool import QueuePool, StaticPool

from ..config import DatabaseSettings, get_settings

MEMORY = ":memory:"


class Base(DeclarativeBase):
    """보관소 ORM 모델의 공통 베이스."""


def resolve_database_url(raw_url: Optional[str] = None) -> URL:
    """설정의 URL. 상대 SQLite 경로는 저장소 루트 기준으로 바꾸고 상위 디렉터리를 만든다."""
    settings = get_settings()
    url = make_url(raw_url or settings.database.url)
    if url.get_backend_name() != "sqlite" or url.database in (None, "", MEMORY):
        return url
    path = Path(url.database)
    if not path.is_absolute():
        path = settings.root_dir / path
    path.parent.mkdir(parents=True, exist_ok=True)
    return url.set(database=str(path))


def _engine_options(url: URL, options: DatabaseSettings, echo: Optional[bool], pool_size: Optional[int]) -> dict[str, Any]:
    engine_options: dict[str, Any] = {
        "echo": options.echo if echo is None else echo,
        "future": True,
        "pool_pre_ping": True,
    }
    if url.get_backend_name() == "sqlite":
        engine_options["connect_args"] = {"check_same_thread": False}
        if url.database in (None, "", MEMORY):
            # 연결마다 새 메모리 DB 가 생기지 않도록 연결 하나를 공유
            engine_options["poolclass"] = StaticPool
            return engine_options
    engine_options["poolclass"] = QueuePool
    engine_options["pool_size"] = options.pool_size if pool_size is None else pool_size
    return engine_options


def create_db_engine(
    *,
    url: Optional[str] = None,
    echo: Optional[bool] = None,
    pool_size: Optional[int] = None,
) -> Engine:
    resolved = resolve_database_url(url)
    return create_engine(resolved, **_engine_options(resolved, get_settings().database, echo, pool_size))


def init_schema(engine: Engine) -> None:
    """없는 테이블만 만든다."""
    from . import models  # noqa: F401  (테이블 등록)

    Base.metadata.create_all(engine)


def make_session_factory(engine: Engine) -> sessionmaker[Session]:
    return sessionmaker(bind=engine, autoflush=False, expire_on_commit=False)


@lru_cache(maxsize=1)
def get_session_factory() -> sessionmaker[Session]:
    """설정된 보관소의 세션 팩토리. 처음 호출할 때 스키마를 만든다."""
    engine = create_db_engine()
    init_schema(engine)
    return make_session_factory(engine)


@contextmanager
def session_scope(factory: Optional[sessionmaker[Session]] = None) -> Iterator[Session]:
    """블록이 끝나면 커밋, 예외면 롤백."""
    session = (factory or get_session_factory())()
    try:
        yield session
        session.commit()
    except Exception:
        session.rollback()
        raise
    finally:
        session.close()


__all__ = [
    "Base",
    "MEMORY",
    "create_db_engine",
    "get_session_factory",
    "init_schema",
    "make_session_factory",
    "resolve_database_url",
    "session_scope",
]
