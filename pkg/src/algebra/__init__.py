"""유리수 계수 다항식, 사전식 순서, Gröbner 기저, 선형 생성 판정."""

from .groebner import (
    GroebnerBasis,
    NormalFormTrace,
    buchberger,
    is_monomial_generated,
    is_monomial_ideal_equal,
    member,
    minimal_monomials,
    monomial_ideal_contains,
    normal_form,
)
from .ring import (
    Monomial,
    VariableSet,
    coerce,
    discriminant,
    evaluate,
    init,
    is_homogeneous,
    leading_monomial,
    lex_compare,
    occurring_variables,
    rename,
    total_degree,
)
from .span import SpanCertificate, graded_span_member
from .text import format_polynomial, parse_polynomial

__all__ = [
    "GroebnerBasis",
    "Monomial",
    "NormalFormTrace",
    "SpanCertificate",
    "VariableSet",
    "buchberger",
    "coerce",
    "discriminant",
    "evaluate",
    "format_polynomial",
    "graded_span_member",
    "init",
    "is_homogeneous",
    "is_monomial_generated",
    "is_monomial_ideal_equal",
    "leading_monomial",
    "lex_compare",
    "member",
    "minimal_monomials",
    "monomial_ideal_contains",
    "normal_form",
    "occurring_variables",
    "parse_polynomial",
    "rename",
    "total_degree",
]
