"""동변 이데알 시스템 작업대의 최상위 패키지."""

__all__: list[str] = []
