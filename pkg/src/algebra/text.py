"""다항식 텍스트 형식.

`3/2*x1^2*x3 - x2` 처럼 `*` 와 `^` 를 명시하는 ASCII 형식이다. `disc(1,3,7)` 은
Δ(x1,x3,x7) 의 약식이며 인자로 원소 라벨 또는 변수 이름을 받는다.
"""

from __future__ import annotations

import re
from tokenize import TokenError

from sympy import Integer, Mul, Symbol
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.rings import PolyElement

from src.utils.exceptions import ParseError

from .ring import VariableSet

_ALLOWED = re.compile(r"[A-Za-z0-9_+\-*/^(),\s]")
_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TRANSFORMATIONS = standard_transformations + (convert_xor,)
DISC = "disc"


def _check_characters(text: str) -> None:
    for position, char in enumerate(text):
        if not _ALLOWED.match(char):
            raise ParseError(
                f"다항식에 허용되지 않는 문자 '{char}' (위치 {position})",
                text=text,
                position=position,
            )


def _check_identifiers(text: str, variables: VariableSet) -> None:
    for match in _IDENTIFIER.finditer(text):
        start = match.start()
        if start > 0 and text[start - 1].isdigit():
            raise ParseError(
                f"숫자와 변수 사이에 '*' 가 필요합니다 (위치 {start})", text=text, position=start
            )
        name = match.group(0)
        if name != DISC and name not in variables:
            raise ParseError(f"알 수 없는 변수 '{name}' (위치 {start})", text=text, position=start)


def _disc_expression(variables: VariableSet):
    def disc(*arguments):
        names: list[str] = []
        for argument in arguments:
            if isinstance(argument, Integer):
                names.append(f"x{int(argument)}")
            elif isinstance(argument, Symbol):
                names.append(argument.name)
            else:
                raise ValueError(f"disc 인자는 라벨이나 변수여야 합니다: {argument}")
        for name in names:
            if name not in variables:
                raise ValueError(f"disc 인자가 환에 없습니다: {name}")
        if len(set(names)) != len(names) or len(names) < 2:
            raise ValueError("disc 인자는 서로 다른 두 개 이상이어야 합니다.")
        symbols = [Symbol(name) for name in names]
        factors = [
            symbols[i] - symbols[j]
            for i in range(len(symbols))
            for j in range(i + 1, len(symbols))
        ]
        return Mul(*factors, evaluate=False)

    return disc


def parse_polynomial(text: str, variables: VariableSet) -> PolyElement:
    """텍스트를 variables 환의 다항식으로 읽는다."""
    if not text.strip():
        raise ParseError("빈 다항식입니다 (위치 0)", text=text, position=0)
    _check_characters(text)
    _check_identifiers(text, variables)
    local_dict: dict[str, object] = {name: Symbol(name) for name in variables.names}
    local_dict[DISC] = _disc_expression(variables)
    try:
        expression = parse_expr(text, local_dict=local_dict, transformations=_TRANSFORMATIONS)
    except SyntaxError as exc:
        position = max((exc.offset or 1) - 1, 0)
        raise ParseError(f"다항식 구문 오류 (위치 {position})", text=text, position=position) from exc
    except (TokenError, TypeError, ValueError) as exc:
        raise ParseError(f"다항식을 해석할 수 없습니다: {exc}", text=text) from exc
    try:
        return variables.ring.from_expr(expression)
    except ValueError as exc:
        raise ParseError(f"다항식이 아닌 식입니다: {expression}", text=text) from exc


def _coefficient_text(value: object) -> str:
    numerator = int(value.numerator)  # type: ignore[attr-defined]
    denominator = int(value.denominator)  # type: ignore[attr-defined]
    return str(numerator) if denominator == 1 else f"{numerator}/{denominator}"


def _monomial_text(monom: tuple[int, ...], names: list[str]) -> str:
    factors = []
    for name, power in zip(names, monom):
        if power == 1:
            factors.append(name)
        elif power > 1:
            factors.append(f"{name}^{power}")
    return "*".join(factors)


def format_polynomial(polynomial: PolyElement) -> str:
    """사전식 내림차순으로 항을 쓴다. 영 다항식은 `0`."""
    if not polynomial:
        return "0"
    names = [str(symbol) for symbol in polynomial.ring.symbols]
    pieces: list[str] = []
    for index, (monom, coeff) in enumerate(polynomial.terms()):
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        body = _monomial_text(monom, names)
        if not body:
            text = _coefficient_text(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{_coefficient_text(magnitude)}*{body}"
        if index == 0:
            pieces.append(f"-{text}" if negative else text)
        else:
            pieces.append(f" - {text}" if negative else f" + {text}")
    return "".join(pieces)


__all__ = ["parse_polynomial", "format_polynomial"]
