from __future__ import annotations

from pathlib import Path

import pytest
from pydantic import ValidationError

from src.config import ComputeSettings, DatabaseSettings, LoggingSettings, get_settings
from src.data import (
    VerdictRecord,
    VerdictRepository,
    create_db_engine,
    get_session_factory,
    session_scope,
)


@pytest.fixture(autouse=True)
def clear_settings_cache() -> None:
    get_settings.cache_clear()
    get_session_factory.cache_clear()
    yield
    get_settings.cache_clear()
    get_session_factory.cache_clear()


def test_create_engine_resolves_sqlite_path(tmp_path, monkeypatch) -> None:
    db_path = tmp_path / "custom" / "verdicts.db"
    monkeypatch.setenv("DATABASE_URL", f"sqlite:///{db_path}")
    monkeypatch.setenv("DATA_DIR", str(tmp_path / "data"))

    engine = create_db_engine()

    resolved = Path(str(engine.url.database))
    assert resolved == db_path
    assert resolved.parent.exists()


def test_compute_settings_from_env(monkeypatch) -> None:
    monkeypatch.setenv("WORKBENCH_BOUND", "7")
    monkeypatch.setenv("WORKBENCH_MAX_WORKERS", "not-a-number")
    compute = get_settings().compute
    assert compute.bound == 7
    assert compute.max_workers == 4


def test_settings_reject_nonpositive_bound() -> None:
    with pytest.raises(ValidationError):
        ComputeSettings.from_env({"WORKBENCH_BOUND": "0"})
    assert ComputeSettings.from_env({}).bound == 5
    assert DatabaseSettings.from_env({"DATABASE_ECHO": "yes"}).echo is True
    assert LoggingSettings.from_env({"LOG_LEVEL": "debug"}).level == "DEBUG"


def test_verdict_repository_round_trip(session_factory) -> None:
    repo = VerdictRepository()

    with session_scope(session_factory) as session:
        record = repo.add(
            session,
            command="tree embed",
            subject="quartet.nwk t0.nwk",
            verdict="120",
            exit_code=0,
            certificate={"count": 120},
        )
        assert record.id is not None
        repo.add(session, command="poset leq", subject="higman 2 1,1,1", verdict="INCOMPARABLE-OR-GT", exit_code=1)

    with session_scope(session_factory) as session:
        latest = repo.latest(session)
        assert latest is not None
        assert latest.command == "poset leq"
        assert repo.certificate_of(latest) is None

        embed = repo.latest(session, "tree embed")
        assert embed is not None
        assert repo.certificate_of(embed) == {"count": 120}
        assert embed.created_at is not None

        assert [r.verdict for r in repo.by_command(session, "tree embed")] == ["120"]
        assert len(repo.list(session, filters={"exit_code": 1})) == 1
        assert repo.latest(session, "ideal member") is None


def test_session_scope_rolls_back_on_error(session_factory) -> None:
    repo = VerdictRepository()
    with pytest.raises(RuntimeError):
        with session_scope(session_factory) as session:
            repo.add(session, command="tree iso", subject="a b", verdict="isomorphic", exit_code=0)
            raise RuntimeError("중단")

    with session_scope(session_factory) as session:
        assert repo.list(session) == []
        assert session.query(VerdictRecord).count() == 0


def test_default_session_factory_uses_configured_database(tmp_path, monkeypatch) -> None:
    db_path = tmp_path / "verdicts.db"
    monkeypatch.setenv("DATABASE_URL", f"sqlite:///{db_path}")

    with session_scope() as session:
        VerdictRepository().add(session, command="tree canon", subject="t0.nwk", verdict="x", exit_code=0)

    assert db_path.exists()
    with session_scope() as session:
        assert VerdictRepository().latest(session).subject == "t0.nwk"
