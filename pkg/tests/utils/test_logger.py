from __future__ import annotations

import logging

from src.utils.logger import ContextFormatter, log_duration


def _record(**extra: object) -> logging.LogRecord:
    return logging.makeLogRecord({"name": "workbench", "levelname": "INFO", "msg": "안정화 탐색 완료", **extra})


def test_context_formatter_appends_extra_sorted() -> None:
    formatter = ContextFormatter("%(levelname)s | %(message)s")
    assert formatter.format(_record()) == "INFO | 안정화 탐색 완료"
    assert formatter.format(_record(objects=6, index=2)) == "INFO | 안정화 탐색 완료 | index=2 objects=6"


def test_log_duration_reports_elapsed(caplog) -> None:
    logger = logging.getLogger("tests.duration")
    with caplog.at_level(logging.DEBUG, logger="tests.duration"):
        with log_duration(logger, "매장 열거", source_leaves=4):
            pass
    (record,) = [r for r in caplog.records if r.name == "tests.duration"]
    assert record.getMessage() == "매장 열거 완료"
    assert record.source_leaves == 4
    assert record.elapsed_s >= 0
