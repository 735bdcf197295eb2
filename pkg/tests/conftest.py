from __future__ import annotations

import random
import sys
from pathlib import Path

import pytest
from sqlalchemy.orm import Session, sessionmaker

ROOT_DIR = Path(__file__).resolve().parents[1]
if str(ROOT_DIR) not in sys.path:
    sys.path.insert(0, str(ROOT_DIR))

from src.config import get_settings  # noqa: E402
from src.data import create_db_engine, init_schema, make_session_factory  # noqa: E402
from src.trees import BoronTree, parse_newick  # noqa: E402

FIXTURE_DIR = ROOT_DIR / "tests" / "fixtures"


@pytest.fixture(scope="session")
def fixture_dir() -> Path:
    return FIXTURE_DIR


@pytest.fixture(scope="session")
def twelve_leaf_tree() -> BoronTree:
    return parse_newick((FIXTURE_DIR / "twelve-leaf.nwk").read_text())


@pytest.fixture(scope="session")
def snowflake_tree() -> BoronTree:
    return parse_newick((FIXTURE_DIR / "t0.nwk").read_text())


@pytest.fixture()
def rng() -> random.Random:
    return random.Random(get_settings().compute.seed)


@pytest.fixture()
def session_factory() -> sessionmaker[Session]:
    engine = create_db_engine(url="sqlite:///:memory:")
    init_schema(engine)
    return make_session_factory(engine)


def pytest_configure(config: pytest.Config) -> None:
    config.addinivalue_line("markers", "slow: 큰 예제 (보론 트리 12잎 소속 판정 등)")
