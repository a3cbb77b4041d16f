"""Quadratic reference implementations used as ground truth in tests.

Nothing here touches ``csais``; only the Lyndon factorization and the
string orders are shared with the fast path.
"""
from __future__ import annotations

from functools import cmp_to_key

import numpy as np

from ._text import as_bytes
from .csais import CircularSuffixArray
from .errors import DuplicateConjugate
from .lyndon import ComposedFactorization, duval_factorize
from .orders import Ordering, lex_compare, omega_compare


def _omega_key():
    return cmp_to_key(lambda a, b: omega_compare(a[0], b[0]))


def naive_csa(cf: ComposedFactorization) -> CircularSuffixArray:
    conjugates = []
    for b, e in zip(cf.starts[:-1].tolist(), cf.starts[1:].tolist()):
        factor = tuple(cf.reduced[b:e].tolist())
        for r in range(e - b):
            conjugates.append((factor[r:] + factor[:r], b + r + 1))
    conjugates.sort(key=_omega_key())
    for (u, i), (v, j) in zip(conjugates, conjugates[1:]):
        if omega_compare(u, v) is Ordering.EQUAL:
            raise DuplicateConjugate(f"positions {i} and {j} start omega-equal conjugates")
    return CircularSuffixArray(np.array([i for _, i in conjugates], np.int64))


def naive_bbwt(text) -> bytes:
    t = as_bytes(text)
    f = duval_factorize(t)
    conjugates = []
    for b, e in zip(f.starts[:-1].tolist(), f.starts[1:].tolist()):
        w = t[b:e]
        conjugates.extend((w[r:] + w[:r],) for r in range(len(w)))
    conjugates.sort(key=_omega_key())
    return bytes(c[0][-1] for c in conjugates)


def naive_sa(text) -> list[int]:
    t = as_bytes(text)
    order = sorted(range(len(t)), key=cmp_to_key(lambda i, j: lex_compare(t[i:], t[j:])))
    return [i + 1 for i in order]


def naive_bwt(text) -> bytes:
    t = as_bytes(text)
    return bytes(t[i - 2] for i in naive_sa(t))
