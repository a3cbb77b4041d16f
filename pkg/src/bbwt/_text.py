from __future__ import annotations

import numpy as np


def as_array(text) -> np.ndarray:
    """Coerce text to a contiguous numpy array of symbols.

    Bytes-like input and ``str`` (latin-1 encodable) give uint8; integer
    sequences give int64; integer ndarrays keep their dtype.
    """
    if isinstance(text, np.ndarray):
        if text.dtype.kind not in "iu":
            raise TypeError(f"symbols must be integers, got {text.dtype}")
        return np.ascontiguousarray(text)
    if isinstance(text, str):
        text = text.encode("latin-1")
    if isinstance(text, (bytes, bytearray, memoryview)):
        return np.frombuffer(bytes(text), dtype=np.uint8).copy()
    return np.asarray(list(text), dtype=np.int64).reshape(-1)


def as_bytes(text) -> bytes:
    if isinstance(text, str):
        return text.encode("latin-1")
    if isinstance(text, np.ndarray):
        return text.astype(np.uint8).tobytes()
    return bytes(text)


def alphabet_size(arr: np.ndarray) -> int:
    return int(arr.max()) + 1 if arr.size else 0
