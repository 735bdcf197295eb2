"""작업대 설정. 환경변수와 저장소 루트의 `.env` 에서 읽는다."""

from __future__ import annotations

import os
from functools import lru_cache
from pathlib import Path
from typing import Any, ClassVar, Mapping, TypeVar

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, field_validator

ROOT_DIR = Path(__file__).resolve().parent.parent
load_dotenv(ROOT_DIR / ".env", override=False)

_TRUTHY = frozenset({"1", "true", "yes", "on"})

S = TypeVar("S", bound="EnvSection")


def _to_bool(raw: str, default: bool) -> bool:
    text = raw.strip().lower()
    return default if not text else text in _TRUTHY


def _to_int(raw: str, default: int) -> int:
    """정수가 아니면 기본값."""
    try:
        return int(raw.strip())
    except ValueError:
        return default


class EnvSection(BaseModel):
    """환경변수 한 묶음. `env_keys` 는 필드 이름에서 환경변수 이름으로의 대응이다."""

    model_config = ConfigDict(frozen=True)

    env_keys: ClassVar[Mapping[str, str]] = {}

    @classmethod
    def from_env(cls: type[S], environ: Mapping[str, str] | None = None) -> S:
        environ = os.environ if environ is None else environ
        values: dict[str, Any] = {}
        for name, key in cls.env_keys.items():
            raw = environ.get(key)
            if raw is None:
                continue
            default = cls.model_fields[name].default
            if isinstance(default, bool):
                values[name] = _to_bool(raw, default)
            elif isinstance(default, int):
                values[name] = _to_int(raw, default)
            elif isinstance(default, Path):
                values[name] = Path(raw).expanduser()
            else:
                values[name] = raw
        return cls(**values)


class LoggingSettings(EnvSection):
    env_keys: ClassVar[Mapping[str, str]] = {
        "level": "LOG_LEVEL",
        "directory": "LOG_DIR",
        "file_name": "LOG_FILE_NAME",
        "rotation_when": "LOG_ROTATION_WHEN",
        "rotation_interval": "LOG_ROTATION_INTERVAL",
        "backup_count": "LOG_BACKUP_COUNT",
    }

    level: str = "INFO"
    directory: Path = Path("logs")
    file_name: str = "workbench.log"
    rotation_when: str = "midnight"
    rotation_interval: int = Field(default=1, ge=1)
    backup_count: int = Field(default=7, ge=0)

    @field_validator("level")
    @classmethod
    def _upper(cls, value: str) -> str:
        return value.strip().upper() or "INFO"

    def log_path(self, root_dir: Path) -> Path:
        directory = self.directory if self.directory.is_absolute() else root_dir / self.directory
        return directory.resolve() / self.file_name


class DatabaseSettings(EnvSection):
    """판정 기록 보관소 연결."""

    env_keys: ClassVar[Mapping[str, str]] = {
        "url": "DATABASE_URL",
        "echo": "DATABASE_ECHO",
        "pool_size": "DATABASE_POOL_SIZE",
    }

    url: str = "sqlite:///data/verdicts.db"
    echo: bool = False
    pool_size: int = Field(default=5, ge=1)


class ComputeSettings(EnvSection):
    """계산 한계와 재현용 시드."""

    env_keys: ClassVar[Mapping[str, str]] = {
        "bound": "WORKBENCH_BOUND",
        "degree_cap": "WORKBENCH_DEGREE_CAP",
        "max_workers": "WORKBENCH_MAX_WORKERS",
        "cache_size": "WORKBENCH_CACHE_SIZE",
        "seed": "WORKBENCH_SEED",
    }

    # 대상 크기 한계 |A| ≤ bound
    bound: int = Field(default=5, ge=1)
    # S-다항식 차수 상한
    degree_cap: int = Field(default=20, ge=1)
    max_workers: int = Field(default=4, ge=1)
    cache_size: int = Field(default=256, ge=1)
    seed: int = 20240601


class AppSettings(BaseModel):
    model_config = ConfigDict(frozen=True)

    root_dir: Path = ROOT_DIR
    environment: str = "development"
    data_dir: Path = ROOT_DIR / "data"
    database: DatabaseSettings = Field(default_factory=DatabaseSettings)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)
    compute: ComputeSettings = Field(default_factory=ComputeSettings)

    @classmethod
    def load(cls, environ: Mapping[str, str] | None = None) -> "AppSettings":
        environ = os.environ if environ is None else environ
        data_dir = environ.get("DATA_DIR")
        return cls(
            environment=environ.get("APP_ENV", "development"),
            data_dir=Path(data_dir).expanduser() if data_dir else ROOT_DIR / "data",
            database=DatabaseSettings.from_env(environ),
            logging=LoggingSettings.from_env(environ),
            compute=ComputeSettings.from_env(environ),
        )

    def absolute(self, path: str | Path) -> Path:
        """루트 기준 절대 경로."""
        candidate = Path(path).expanduser()
        return candidate if candidate.is_absolute() else (self.root_dir / candidate).resolve()


@lru_cache(maxsize=1)
def get_settings() -> AppSettings:
    """프로세스 전역 설정. 처음 읽을 때 데이터 디렉터리를 만든다."""
    settings = AppSettings.load()
    settings.absolute(settings.data_dir).mkdir(parents=True, exist_ok=True)
    return settings


__all__ = [
    "AppSettings",
    "ComputeSettings",
    "DatabaseSettings",
    "EnvSection",
    "LoggingSettings",
    "get_settings",
]
