"""공통 유틸리티 모듈 모음."""

from .logger import configure_logging, get_logger, log_duration

__all__ = ["configure_logging", "get_logger", "log_duration"]
