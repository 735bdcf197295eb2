"""명령행 인자에서 트리, 명세, 원소 목록을 읽는다."""

from __future__ import annotations

import sys
from pathlib import Path

from src.config import get_settings
from src.trees import BoronTree, Label, parse_newick
from src.trees.newick import coerce_label
from src.utils.exceptions import ParseError

FIXTURE_DIR = Path("tests") / "fixtures"
STDIN = "-"


def resolve_path(argument: str) -> Path | None:
    """그대로의 경로, 없으면 저장소의 예제 디렉터리에서 찾는다."""
    candidate = Path(argument).expanduser()
    if candidate.is_file():
        return candidate
    fallback = get_settings().root_dir / FIXTURE_DIR / argument
    if fallback.is_file():
        return fallback
    return None


def read_text(argument: str) -> str:
    """`-` 는 표준 입력, 파일이면 내용, 아니면 인자 자체."""
    if argument == STDIN:
        return sys.stdin.read()
    path = resolve_path(argument)
    if path is not None:
        return path.read_text(encoding="utf-8")
    return argument


def read_tree(argument: str) -> BoronTree:
    text = read_text(argument).strip()
    # 이전 명령의 출력이면 첫 줄이 Newick 이다.
    return parse_newick(text.splitlines()[0] if text else text)


def parse_labels(text: str) -> list[Label]:
    """`1,3,7` 형식. 라벨 해석은 Newick 읽기와 같다."""
    labels: list[Label] = []
    position = 0
    for token in text.split(","):
        stripped = token.strip()
        if not stripped:
            raise ParseError(f"빈 잎 이름 (위치 {position})", text=text, position=position)
        labels.append(coerce_label(stripped))
        position += len(token) + 1
    return labels


def parse_word(text: str) -> tuple[int, ...]:
    """`1,2,0` 형식의 정수 단어. 빈 문자열은 빈 단어."""
    if not text.strip():
        return ()
    values: list[int] = []
    position = 0
    for token in text.split(","):
        stripped = token.strip()
        try:
            values.append(int(stripped))
        except ValueError as exc:
            raise ParseError(f"정수가 아닙니다: '{stripped}' (위치 {position})", text=text, position=position) from exc
        position += len(token) + 1
    return tuple(values)


def parse_range(text: str) -> range:
    """`3..6` 은 3 이상 6 이하."""
    low, sep, high = text.partition("..")
    if not sep or not low.strip().isdigit() or not high.strip().isdigit():
        raise ParseError(f"범위는 a..b 형식이어야 합니다: '{text}'", text=text, position=0)
    return range(int(low), int(high) + 1)


__all__ = ["STDIN", "parse_labels", "parse_range", "parse_word", "read_text", "read_tree", "resolve_path"]
