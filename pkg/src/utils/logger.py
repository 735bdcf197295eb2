"""로깅 구성. 모듈은 `get_logger(__name__)` 로만 로거를 얻는다."""

from __future__ import annotations

import logging
import time
from contextlib import contextmanager
from logging.config import dictConfig
from typing import Any, Iterator, Optional

from ..config import get_settings

_FORMAT = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"
_DATEFMT = "%Y-%m-%d %H:%M:%S"
_RECORD_FIELDS = frozenset(vars(logging.makeLogRecord({}))) | {"message", "asctime"}

_configured = False


class ContextFormatter(logging.Formatter):
    """`extra={...}` 로 넘긴 값을 메시지 뒤에 key=value 로 붙인다."""

    def format(self, record: logging.LogRecord) -> str:
        text = super().format(record)
        context = {key: value for key, value in vars(record).items() if key not in _RECORD_FIELDS}
        if not context:
            return text
        return f"{text} | " + " ".join(f"{key}={context[key]}" for key in sorted(context))


def _handlers(console_level: str, file_level: str) -> dict[str, dict[str, Any]]:
    settings = get_settings()
    options = settings.logging
    path = options.log_path(settings.root_dir)
    path.parent.mkdir(parents=True, exist_ok=True)
    return {
        # stdout 은 명령 결과 전용
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "context",
            "level": console_level,
            "stream": "ext://sys.stderr",
        },
        "file": {
            "class": "logging.handlers.TimedRotatingFileHandler",
            "formatter": "context",
            "level": file_level,
            "filename": str(path),
            "when": options.rotation_when,
            "interval": options.rotation_interval,
            "backupCount": options.backup_count,
            "encoding": "utf-8",
        },
    }


def configure_logging(force: bool = False, *, console_level: Optional[str] = None) -> None:
    """한 번만 구성한다. force 면 다시 구성한다."""
    global _configured
    if _configured and not force:
        return
    level = get_settings().logging.level
    dictConfig(
        {
            "version": 1,
            "disable_existing_loggers": False,
            "formatters": {"context": {"()": ContextFormatter, "fmt": _FORMAT, "datefmt": _DATEFMT}},
            "handlers": _handlers((console_level or level).upper(), level),
            "root": {"level": level, "handlers": ["console", "file"]},
        }
    )
    _configured = True


def get_logger(name: str) -> logging.Logger:
    configure_logging()
    return logging.getLogger(name)


@contextmanager
def log_duration(logger: logging.Logger, label: str, **context: Any) -> Iterator[None]:
    """블록 실행 시간을 DEBUG 로 남긴다."""
    started = time.perf_counter()
    try:
        yield
    finally:
        context["elapsed_s"] = round(time.perf_counter() - started, 4)
        logger.debug("%s 완료", label, extra=context)


__all__ = ["ContextFormatter", "configure_logging", "get_logger", "log_duration"]
