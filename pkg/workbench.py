#!/usr/bin/env python3
"""저장소 루트에서 실행하는 명령행 도구 진입점."""

from __future__ import annotations

import sys

from src.cli import main

if __name__ == "__main__":
    sys.exit(main())
