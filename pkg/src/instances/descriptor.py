"""인스턴스 서술자: `boron`, `colored_linear c=2`, `fi_m m=3` 형식."""

from __future__ import annotations

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from src.utils.exceptions import ParseError


class InstanceKind(str, Enum):
    FI = "fi"
    OI = "oi"
    FI_M = "fi_m"
    OI_M = "oi_m"
    COLORED_LINEAR = "colored_linear"
    BORON = "boron"
    ORDERED_BORON = "ordered_boron"
    PAIR_FI = "pair_fi"
    BOI = "boi"


_ALIASES = {
    "pairfi": InstanceKind.PAIR_FI,
    "pair-fi": InstanceKind.PAIR_FI,
    "orderedboron": InstanceKind.ORDERED_BORON,
    "ordered-boron": InstanceKind.ORDERED_BORON,
    "coloredlinear": InstanceKind.COLORED_LINEAR,
    "colored-linear": InstanceKind.COLORED_LINEAR,
}

_PARAMETERS = {
    InstanceKind.FI_M: "m",
    InstanceKind.OI_M: "m",
    InstanceKind.COLORED_LINEAR: "c",
}


class InstanceDescriptor(BaseModel):
    """인스턴스 종류와 매개변수."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: InstanceKind
    m: Optional[int] = Field(default=None, ge=1)
    c: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _check_parameters(self) -> "InstanceDescriptor":
        required = _PARAMETERS.get(self.kind)
        for name in ("m", "c"):
            value = getattr(self, name)
            if name == required and value is None:
                raise ValueError(f"{self.kind.value} 인스턴스에는 {name} 값이 필요합니다.")
            if name != required and value is not None:
                raise ValueError(f"{self.kind.value} 인스턴스는 {name} 값을 받지 않습니다.")
        return self

    def label(self) -> str:
        name = _PARAMETERS.get(self.kind)
        if name is None:
            return self.kind.value
        return f"{self.kind.value} {name}={getattr(self, name)}"


def parse_descriptor(text: str) -> InstanceDescriptor:
    """`kind [name=value ...]` 형식을 읽는다."""
    tokens = text.split()
    if not tokens:
        raise ParseError("인스턴스 이름이 비어 있습니다 (위치 0)", text=text, position=0)
    head = tokens[0].lower()
    kind = _ALIASES.get(head, head)
    parameters: dict[str, object] = {"kind": kind}
    for token in tokens[1:]:
        name, sep, value = token.partition("=")
        if not sep or not value.isdigit():
            position = text.find(token)
            raise ParseError(
                f"매개변수는 name=정수 형식이어야 합니다: '{token}' (위치 {position})",
                text=text,
                position=position,
            )
        parameters[name] = int(value)
    try:
        return InstanceDescriptor(**parameters)  # type: ignore[arg-type]
    except ValidationError as exc:
        raise ParseError(f"잘못된 인스턴스 서술자: {text.strip()} ({exc.errors()[0]['msg']})", text=text) from exc


__all__ = ["InstanceDescriptor", "InstanceKind", "parse_descriptor"]
