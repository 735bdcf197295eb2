"""워크벤치 공통 예외 계층."""

from __future__ import annotations

from typing import Any


class AppError(Exception):
    """프로젝트 전반에서 사용하는 기본 예외 클래스."""


class ConfigurationError(AppError):
    """환경 설정이나 필수 값이 누락된 경우 발생."""


class DataValidationError(AppError):
    """데이터 검증 실패를 표현."""


class BoundExceeded(AppError):
    """설정된 계산 한계(차수 상한 등)를 넘었다."""


class OracleDisagreement(AppError):
    """빠른 경로와 전수 검사 경로의 결과가 다르다."""


class ParseError(AppError):
    """텍스트 형식(Newick, 다항식, 시스템 명세) 파싱 실패.

    position 은 입력 문자열에서 오류가 발견된 0 기반 위치이다.
    """

    def __init__(self, message: str, *, text: str = "", position: int | None = None) -> None:
        self.text = text
        self.position = position
        super().__init__(message)

    def annotated(self) -> str:
        """오류 위치를 캐럿으로 표시한 여러 줄 메시지."""
        if self.position is None or not self.text:
            return str(self)
        caret = " " * self.position + "^"
        return f"{self}\n  {self.text}\n  {caret}"


# --- 보론 트리 ---------------------------------------------------------------


class TreeError(AppError):
    """보론 트리 연산 오류."""


class InvalidTree(TreeError):
    """트리 구조가 보론 트리 조건을 만족하지 않는다."""


class InvalidLeaf(TreeError):
    """트리에 존재하지 않는 잎 라벨."""


class DegenerateQuartet(TreeError):
    """사중 관계 인자가 서로 다르지 않다."""


class TooFewLeaves(TreeError):
    """연산에 필요한 잎 개수가 부족하다."""


class TooSmall(TreeError):
    """루트 분해에 필요한 크기보다 작은 순서 트리."""


class NotPlanar(TreeError):
    """원형 배치가 트리의 평면 매장과 모순된다."""


# --- 순서 구조 ---------------------------------------------------------------


class PosetError(AppError):
    """부분 순서 연산 오류."""


class ArityMismatch(PosetError):
    """비교하는 벡터의 길이가 다르다."""


class InstanceMismatch(PosetError):
    """서로 다른 범주 인스턴스의 원소를 섞어 사용했다."""


# --- 다항식 ---------------------------------------------------------------


class AlgebraError(AppError):
    """다항식 연산 오류."""


class RingMismatch(AlgebraError):
    """서로 다른 다항식 환의 원소를 섞어 사용했다."""


class ZeroPolynomial(AlgebraError):
    """영 다항식에는 정의되지 않는 연산."""


class BadRenaming(AlgebraError):
    """단사가 아니거나 정의역이 부족한 변수 치환."""


class NotHomogeneous(AlgebraError):
    """동차가 아니거나 차수가 섞인 입력."""


# --- 아이디얼 시스템 ---------------------------------------------------------


class IdealSystemError(AppError):
    """아이디얼 시스템 연산 오류."""


class OutOfRange(IdealSystemError):
    """인스턴스의 크기 한계를 벗어난 대상."""


class NoOrdering(IdealSystemError):
    """순서를 제공하지 않는 인스턴스에서 초기 아이디얼을 요청했다."""


class NotMonomial(IdealSystemError):
    """단항식이 아닌 생성원이 포함되어 있다."""


class NotConcrete(IdealSystemError):
    """함자의 원소 대응이 구체 함자 조건을 만족하지 않는다."""


class NoSuchFunctor(IdealSystemError):
    """지원하지 않는 인스턴스 조합의 함자."""


class NotAChain(IdealSystemError):
    """아이디얼 열이 어떤 대상에서 증가하지 않는다."""

    def __init__(self, message: str, *, witness: Any = None) -> None:
        self.witness = witness
        super().__init__(message)


__all__ = [
    "AlgebraError",
    "AppError",
    "ArityMismatch",
    "BadRenaming",
    "BoundExceeded",
    "ConfigurationError",
    "DataValidationError",
    "DegenerateQuartet",
    "IdealSystemError",
    "InstanceMismatch",
    "InvalidLeaf",
    "InvalidTree",
    "NoOrdering",
    "NoSuchFunctor",
    "NotAChain",
    "NotConcrete",
    "NotHomogeneous",
    "NotMonomial",
    "NotPlanar",
    "OracleDisagreement",
    "OutOfRange",
    "ParseError",
    "PosetError",
    "RingMismatch",
    "TooFewLeaves",
    "TooSmall",
    "TreeError",
    "ZeroPolynomial",
]
