"""Lyndon factorization (Duval) and its composed form.

Positions are 0-based in the arrays and 1-based wherever a ``FactorSpan``
or a method argument is exposed.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np
from numba import njit

from ._text import as_array


@njit(cache=True)
def _duval(s):
    n = s.shape[0]
    starts = np.empty(n + 1, np.int64)
    t = 0
    ncmp = 0
    k = 0
    while k < n:
        i = k
        j = k + 1
        while j < n:
            ncmp += 1
            if s[i] > s[j]:
                break
            if s[i] < s[j]:
                i = k
            else:
                i += 1
            j += 1
        period = j - i
        while k <= i:
            starts[t] = k
            t += 1
            k += period
    starts[t] = n
    return starts[: t + 1].copy(), ncmp


@njit(cache=True)
def _duval_runs(s):
    # each outer Duval step emits u^k, which is exactly one run of equal factors
    n = s.shape[0]
    cap = 64
    begin = np.empty(cap, np.int64)
    period = np.empty(cap, np.int64)
    count = np.empty(cap, np.int64)
    m = 0
    total = 0
    k = 0
    while k < n:
        i = k
        j = k + 1
        while j < n:
            if s[i] > s[j]:
                break
            if s[i] < s[j]:
                i = k
            else:
                i += 1
            j += 1
        p = j - i
        c = (i - k) // p + 1
        if m == cap:
            cap *= 2
            begin = np.concatenate((begin, np.empty(cap - m, np.int64)))
            period = np.concatenate((period, np.empty(cap - m, np.int64)))
            count = np.concatenate((count, np.empty(cap - m, np.int64)))
        begin[m] = k
        period[m] = p
        count[m] = c
        m += 1
        total += p
        k += c * p
    reduced = np.empty(total, s.dtype)
    rstarts = np.empty(m + 1, np.int64)
    w = 0
    for y in range(m):
        rstarts[y] = w
        for q in range(begin[y], begin[y] + period[y]):
            reduced[w] = s[q]
            w += 1
    rstarts[m] = w
    return reduced, rstarts, count[:m].copy()


@njit(cache=True)
def _compose(s, starts):
    t = starts.shape[0] - 1
    keep = np.empty(t, np.int64)
    tau = np.empty(t, np.int64)
    m = 0
    total = 0
    for x in range(t):
        b = starts[x]
        ln = starts[x + 1] - b
        if m > 0:
            pb = starts[keep[m - 1]]
            if starts[keep[m - 1] + 1] - pb == ln:
                same = True
                for q in range(ln):
                    if s[pb + q] != s[b + q]:
                        same = False
                        break
                if same:
                    tau[m - 1] += 1
                    continue
        keep[m] = x
        tau[m] = 1
        m += 1
        total += ln
    reduced = np.empty(total, s.dtype)
    rstarts = np.empty(m + 1, np.int64)
    w = 0
    for y in range(m):
        rstarts[y] = w
        b = starts[keep[y]]
        for q in range(b, starts[keep[y] + 1]):
            reduced[w] = s[q]
            w += 1
    rstarts[m] = w
    return reduced, rstarts, tau[:m].copy()


@njit(cache=True)
def _factor_tables(n, starts):
    fid = np.empty(n, np.int64)
    prev = np.empty(n, np.int64)
    for x in range(starts.shape[0] - 1):
        b = starts[x]
        e = starts[x + 1]
        for i in range(b, e):
            fid[i] = x
            prev[i] = i - 1
        prev[b] = e - 1
    return fid, prev


@dataclass(frozen=True)
class FactorSpan:
    begin: int  # 1-based
    end: int  # 1-based, inclusive

    @property
    def length(self) -> int:
        return self.end - self.begin + 1


def _spans(starts: np.ndarray) -> list[FactorSpan]:
    return [FactorSpan(int(b) + 1, int(e)) for b, e in zip(starts[:-1], starts[1:])]


@dataclass(frozen=True, eq=False)
class LyndonFactorization:
    text: np.ndarray
    starts: np.ndarray  # factor begins, then len(text)
    comparisons: int = 0

    @property
    def text_length(self) -> int:
        return len(self.text)

    @property
    def spans(self) -> list[FactorSpan]:
        return _spans(self.starts)

    def __len__(self) -> int:
        return len(self.starts) - 1

    def factors(self) -> list[np.ndarray]:
        return [self.text[b:e] for b, e in zip(self.starts[:-1], self.starts[1:])]


@dataclass(frozen=True, eq=False)
class ComposedFactorization:
    """Distinct Lyndon factors concatenated into ``reduced`` (R), with run lengths."""

    reduced: np.ndarray
    starts: np.ndarray  # over R, with len(R) appended
    multiplicities: np.ndarray
    origin_length: int

    @property
    def spans(self) -> list[FactorSpan]:
        return _spans(self.starts)

    def __len__(self) -> int:
        return len(self.starts) - 1

    @property
    def lengths(self) -> np.ndarray:
        return np.diff(self.starts)

    def factors(self) -> list[np.ndarray]:
        return [self.reduced[b:e] for b, e in zip(self.starts[:-1], self.starts[1:])]

    @cached_property
    def _tables(self):
        return _factor_tables(len(self.reduced), self.starts)

    @property
    def factor_ids(self) -> np.ndarray:
        return self._tables[0]

    @property
    def prev(self) -> np.ndarray:
        """0-based cyclic predecessor of every position of R."""
        return self._tables[1]

    def _check(self, i: int) -> int:
        if not 1 <= i <= len(self.reduced):
            raise IndexError(f"position {i} outside 1..{len(self.reduced)}")
        return i - 1

    def factor_of(self, i: int) -> tuple[int, int, int]:
        """(factor index, ibeg, iend) of 1-based position i, all 1-based."""
        x = int(self.factor_ids[self._check(i)])
        return x + 1, int(self.starts[x]) + 1, int(self.starts[x + 1])

    def cyclic_next(self, i: int) -> int:
        _, b, e = self.factor_of(i)
        return b if i == e else i + 1

    def cyclic_prev(self, i: int) -> int:
        return int(self.prev[self._check(i)]) + 1

    def origin_spans(self) -> list[tuple[int, int, int]]:
        """(begin, end, multiplicity) of each factor run over the original text, 1-based."""
        out = []
        pos = 0
        for ln, tau in zip(self.lengths.tolist(), self.multiplicities.tolist()):
            out.append((pos + 1, pos + ln * tau, tau))
            pos += ln * tau
        return out

    def expand(self) -> np.ndarray:
        parts = [np.tile(f, int(tau)) for f, tau in zip(self.factors(), self.multiplicities)]
        return np.concatenate(parts) if parts else self.reduced[:0].copy()


def duval_factorize(text) -> LyndonFactorization:
    s = as_array(text)
    starts, ncmp = _duval(s)
    return LyndonFactorization(s, starts, int(ncmp))


def compose(f: LyndonFactorization, text=None) -> ComposedFactorization:
    s = f.text if text is None else as_array(text)
    reduced, rstarts, tau = _compose(s, f.starts)
    return ComposedFactorization(reduced, rstarts, tau, len(s))


def composed_factorization(text) -> ComposedFactorization:
    """Composed factorization straight from the Duval runs, without per-factor storage."""
    s = as_array(text)
    reduced, rstarts, tau = _duval_runs(s)
    return ComposedFactorization(reduced, rstarts, tau, len(s))


def from_factors(factors) -> ComposedFactorization:
    """Build a composed factorization whose R is the given distinct factors, in order.

    No Lyndon or ordering check is made; callers supply valid factors.
    """
    arrays = [as_array(f) for f in factors]
    lengths = [len(a) for a in arrays]
    starts = np.zeros(len(arrays) + 1, np.int64)
    np.cumsum(lengths, out=starts[1:])
    reduced = np.concatenate(arrays) if arrays else np.empty(0, np.int64)
    return ComposedFactorization(reduced, starts, np.ones(len(arrays), np.int64), int(starts[-1]))
