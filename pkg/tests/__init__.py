"""테스트 모듈 패키지 초기화."""
