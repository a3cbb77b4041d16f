from __future__ import annotations


class BBWTError(Exception):
    """Base class for errors raised by this package."""


class NonPrimitiveInput(BBWTError, ValueError):
    def __init__(self, index: int | None = None, message: str | None = None):
        self.index = index
        if message is None:
            where = "" if index is None else f" at index {index}"
            message = f"input string{where} is a nontrivial power, not primitive"
        super().__init__(message)


class EmptyString(BBWTError, ValueError):
    def __init__(self, index: int | None = None):
        self.index = index
        where = "" if index is None else f" at index {index}"
        super().__init__(f"empty string{where} in multiset")


class SentinelPresent(BBWTError, ValueError):
    def __init__(self, position: int):
        self.position = position
        super().__init__(f"sentinel byte 0x00 occurs in text at position {position}")


class NotFoundWithin(BBWTError):
    def __init__(self, max_k: int):
        self.max_k = max_k
        super().__init__(f"no k <= {max_k} with BBWT^k(T) == T")


class DuplicateConjugate(BBWTError, AssertionError):
    """Two distinct positions produced omega-equal conjugates (factorization bug)."""
