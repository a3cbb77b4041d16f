"""Forward and inverse bijective BWT, the extended BWT and the classical baselines."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from ._text import as_array, as_bytes
from .csais import CircularSuffixArray, circular_sa_and_last, suffix_array
from .errors import EmptyString, NonPrimitiveInput, NotFoundWithin, SentinelPresent
from .lyndon import composed_factorization, duval_factorize
from .orders import is_primitive, least_rotation

SENTINEL = 0


@dataclass(frozen=True, eq=False)
class TransformResult:
    output: bytes
    sa: CircularSuffixArray | None = None
    # per output index: 1-based source position in R and the factor multiplicity
    source: np.ndarray | None = None
    multiplicity: np.ndarray | None = None

    def __bytes__(self) -> bytes:
        return self.output

    def __len__(self) -> int:
        return len(self.output)


def bbwt(text, provenance: bool = False) -> TransformResult:
    s = as_array(text)
    if len(s) == 0:
        return TransformResult(b"")
    cf = composed_factorization(s)
    sa, last = circular_sa_and_last(cf)
    if not provenance and len(cf.reduced) == len(s):
        return TransformResult(last.astype(np.uint8).tobytes())
    tau = cf.multiplicities[cf.factor_ids[sa]]
    out = np.repeat(last, tau).astype(np.uint8).tobytes()
    if not provenance:
        return TransformResult(out)
    src = cf.prev[sa]
    return TransformResult(
        out,
        CircularSuffixArray(sa + 1),
        np.repeat(src + 1, tau),
        np.repeat(tau, tau),
    )


@njit(cache=True)
def _cycles(perm):
    n = perm.shape[0]
    seen = np.zeros(n, np.bool_)
    order = np.empty(n, np.int64)
    bounds = np.empty(n + 1, np.int64)
    c = 0
    w = 0
    for start in range(n):
        if seen[start]:
            continue
        bounds[c] = w
        c += 1
        k = start
        while not seen[k]:
            seen[k] = True
            order[w] = k
            w += 1
            k = perm[k]
    bounds[c] = w
    return order, bounds[: c + 1].copy()


def _lyndon_pieces(word: bytes) -> list[bytes]:
    r = least_rotation(word)
    w = word[r:] + word[:r]
    if is_primitive(w):
        return [w]
    f = duval_factorize(w)
    return [w[b:e] for b, e in zip(f.starts[:-1].tolist(), f.starts[1:].tolist())]


def inverse_bbwt(b) -> bytes:
    """Invert through the cycles of the standard permutation.

    Each cycle spells a conjugate of one Lyndon factor; rotating every
    cycle word to its Lyndon conjugate and concatenating them in
    non-increasing order restores the text.
    """
    last = np.frombuffer(as_bytes(b), np.uint8)
    if len(last) == 0:
        return b""
    perm = np.argsort(last, kind="stable")
    first = last[perm].tobytes()
    order, bounds = _cycles(perm)
    spelled = np.frombuffer(first, np.uint8)[order].tobytes()
    words = []
    for lo, hi in zip(bounds[:-1].tolist(), bounds[1:].tolist()):
        words.extend(_lyndon_pieces(spelled[lo:hi]))
    words.sort(reverse=True)
    return b"".join(words)


def bwt_baseline(text) -> bytes:
    """Traditional BWT without terminator: T[SA[i]-1], wrapping to T[n]."""
    s = as_array(text)
    if len(s) == 0:
        return b""
    sa = suffix_array(s)
    return s[sa - 2].astype(np.uint8).tobytes()


def bwt_dollar(text) -> bytes:
    """BWT of T$ where $ is byte 0, strictly smaller than every symbol."""
    s = as_array(text)
    hits = np.flatnonzero(s == SENTINEL)
    if len(hits):
        raise SentinelPresent(int(hits[0]) + 1)
    if len(s) == 0:
        return bytes([SENTINEL])
    sa = suffix_array(s)
    body = s[sa - 2]
    body[sa == 1] = SENTINEL
    return bytes([int(s[-1])]) + body.astype(np.uint8).tobytes()


def ebwt(strings) -> bytes:
    """Extended BWT of a multiset of primitive strings via the BBWT reduction."""
    words = []
    for k, u in enumerate(strings):
        u = as_bytes(u)
        if not u:
            raise EmptyString(k)
        if not is_primitive(u):
            raise NonPrimitiveInput(k)
        r = least_rotation(u)
        words.append(u[r:] + u[:r])
    words.sort(reverse=True)
    return bbwt(b"".join(words)).output


def bbwt_order(text, max_k: int = 10**6) -> int:
    """Smallest k <= max_k with BBWT applied k times giving back the text."""
    if max_k < 1:
        raise ValueError("max_k must be positive")
    start = as_bytes(text)
    cur = start
    for k in range(1, max_k + 1):
        cur = bbwt(cur).output
        if cur == start:
            return k
    raise NotFoundWithin(max_k)
