"""시스템 명세 파일 (.spec) 읽기.

형식 (한 줄에 하나, `#` 뒤는 주석)::

    instance: boron
    bound: 12
    degree_cap: 20            # 선택
    generator: ((1,2),(3,4),(5,6)); | disc(1,2,3,4,5,6)
    ---                       # 다음 사슬 단계
    generator: ...

`---` 로 나뉜 각 블록이 사슬의 한 단계이며, 블록마다 그 단계의 생성원 전체를 적는다.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from src.algebra import parse_polynomial
from src.instances import CategoryInstance, InstanceDescriptor, build_instance, parse_descriptor
from src.utils.exceptions import AppError, ParseError

from .model import GeneratorData

LEVEL_SEPARATOR = "---"


class GeneratorLine(BaseModel):
    """`generator:` 한 줄. offset 은 파일 안에서 대상 텍스트의 시작 위치."""

    model_config = ConfigDict(frozen=True)

    obj: str
    polynomial: str
    line: int
    offset: int
    polynomial_offset: int


class SystemSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    instance: InstanceDescriptor
    bound: int = Field(ge=1)
    degree_cap: Optional[int] = Field(default=None, ge=1)
    levels: tuple[tuple[GeneratorLine, ...], ...] = ((),)
    source: str = ""

    def build_instance(self) -> CategoryInstance:
        return build_instance(self.instance)

    def chain(self, instance: CategoryInstance | None = None) -> list[GeneratorData]:
        """단계별 생성 자료. 대상·다항식 오류는 파일 위치를 담은 ParseError."""
        instance = instance or self.build_instance()
        return [GeneratorData.of(self._pair(instance, entry) for entry in level) for level in self.levels]

    def generators(self, instance: CategoryInstance | None = None) -> GeneratorData:
        """마지막 단계의 생성 자료."""
        return self.chain(instance)[-1]

    def _pair(self, instance: CategoryInstance, entry: GeneratorLine):
        try:
            obj = instance.parse_object(entry.obj)
        except ParseError as exc:
            raise self._relocate(exc, entry.line, entry.offset) from exc
        try:
            polynomial = parse_polynomial(entry.polynomial, instance.variables(obj))
        except ParseError as exc:
            raise self._relocate(exc, entry.line, entry.polynomial_offset) from exc
        return obj, polynomial

    def _relocate(self, error: ParseError, line: int, offset: int) -> ParseError:
        position = offset + (error.position or 0)
        return ParseError(f"{line}번째 줄: {error}", text=_line_text(self.source, position), position=_column(self.source, position))


def _line_text(source: str, position: int) -> str:
    start = source.rfind("\n", 0, position) + 1
    end = source.find("\n", position)
    return source[start : end if end >= 0 else len(source)]


def _column(source: str, position: int) -> int:
    return position - (source.rfind("\n", 0, position) + 1)


def _error(message: str, source: str, position: int, line: int) -> ParseError:
    return ParseError(f"{line}번째 줄: {message}", text=_line_text(source, position), position=_column(source, position))


def parse_system_spec(text: str) -> SystemSpec:
    fields: dict[str, object] = {}
    levels: list[list[GeneratorLine]] = [[]]
    offset = 0
    for number, raw in enumerate(text.splitlines(keepends=True), start=1):
        start = offset
        offset += len(raw)
        body = raw.split("#", 1)[0].rstrip()
        stripped = body.strip()
        if not stripped:
            continue
        indent = start + len(body) - len(body.lstrip())
        if stripped == LEVEL_SEPARATOR:
            levels.append([])
            continue
        key, sep, value = stripped.partition(":")
        if not sep:
            raise _error("`키: 값` 형식이 아닙니다.", text, indent, number)
        key = key.strip().lower()
        colon = raw.index(":")
        rest = raw[colon + 1 :]
        value_start = start + colon + 1 + len(rest) - len(rest.lstrip())
        value = value.strip()
        if key == "instance":
            try:
                fields["instance"] = parse_descriptor(value)
            except ParseError as exc:
                raise _error(str(exc), text, value_start + (exc.position or 0), number) from exc
        elif key in ("bound", "degree_cap"):
            if not value.isdigit():
                raise _error(f"{key} 값은 양의 정수여야 합니다: '{value}'", text, value_start, number)
            fields[key] = int(value)
        elif key == "generator":
            obj, bar, polynomial = value.partition("|")
            if not bar or not obj.strip() or not polynomial.strip():
                raise _error("생성원은 `대상 | 다항식` 형식이어야 합니다.", text, value_start, number)
            polynomial_start = value_start + len(obj) + 1
            polynomial_start += len(polynomial) - len(polynomial.lstrip())
            levels[-1].append(
                GeneratorLine(
                    obj=obj.strip(),
                    polynomial=polynomial.strip(),
                    line=number,
                    offset=value_start,
                    polynomial_offset=polynomial_start,
                )
            )
        else:
            raise _error(f"알 수 없는 키: '{key}'", text, indent, number)
    for required in ("instance", "bound"):
        if required not in fields:
            raise ParseError(f"명세에 '{required}' 줄이 없습니다.", text=text, position=None)
    try:
        return SystemSpec(**fields, levels=tuple(tuple(level) for level in levels), source=text)  # type: ignore[arg-type]
    except ValidationError as exc:
        raise ParseError(f"잘못된 시스템 명세: {exc.errors()[0]['msg']}", text=text) from exc


def load_system_spec(path: str | Path) -> SystemSpec:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise AppError(f"명세 파일을 읽을 수 없습니다: {path}") from exc
    return parse_system_spec(text)


__all__ = ["GeneratorLine", "LEVEL_SEPARATOR", "SystemSpec", "load_system_spec", "parse_system_spec"]
