"""명령행 도구."""

from .main import build_parser, main
from .report import ExitCode, Report

__all__ = ["ExitCode", "Report", "build_parser", "main"]
