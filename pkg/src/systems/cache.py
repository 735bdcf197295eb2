"""대상별 아이디얼 계산 결과의 LRU 캐시."""

from __future__ import annotations

from collections import OrderedDict
from threading import Lock
from typing import Callable, Hashable, Generic, TypeVar

V = TypeVar("V")


class IdealCache(Generic[V]):
    """여러 스레드가 읽고 한 번에 한 스레드만 삽입하는 LRU 캐시.

    계산은 잠금 밖에서 하고, 같은 키가 동시에 계산되면 먼저 저장된 값을 쓴다.
    """

    def __init__(self, max_size: int = 256) -> None:
        self._max_size = max_size
        self._store: "OrderedDict[Hashable, V]" = OrderedDict()
        self._lock = Lock()
        self.hits = 0
        self.misses = 0

    def get_or_compute(self, key: Hashable, compute: Callable[[], V]) -> V:
        with self._lock:
            if key in self._store:
                value = self._store.pop(key)
                self._store[key] = value
                self.hits += 1
                return value
            self.misses += 1
        value = compute()
        with self._lock:
            if key in self._store:
                return self._store[key]
            self._store[key] = value
            if len(self._store) > self._max_size:
                self._store.popitem(last=False)
            return value

    def __len__(self) -> int:
        with self._lock:
            return len(self._store)

    def clear(self) -> None:
        with self._lock:
            self._store.clear()


__all__ = ["IdealCache"]
