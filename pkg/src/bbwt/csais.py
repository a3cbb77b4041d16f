"""Circular induced sorting: the omega-order of all conjugates of the Lyndon factors.

Works like SAIS, but on inf-suffixes (reading wraps around inside each
Lyndon factor). Factors of length one are left out of every recursive
call and merged back afterwards. The kernels take 0-based numpy arrays
of a text and its factor starts; the public step functions take a
``ComposedFactorization`` and report 1-based positions.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key

import numpy as np
from numba import njit

from ._prefetch import DISTANCE, prefetch
from ._text import alphabet_size, as_array
from .lyndon import ComposedFactorization, from_factors
from .orders import Ordering, Tag, lms_compare

L = np.uint8(Tag.L)
S = np.uint8(Tag.S)
SSTAR = np.uint8(Tag.SSTAR)
# extra bits of the per-position flag byte used by the induction passes
TYPE_MASK = np.uint8(3)
FSTART = np.uint8(4)
UNIT = np.uint8(8)

_NO_SNAPSHOT = np.empty((0, 0), np.int64)


def _index_dtype(n: int):
    return np.int32 if n < 2**31 - 1 else np.int64


def _narrow(s: np.ndarray, sigma: int) -> np.ndarray:
    if sigma <= 256:
        want = np.uint8
    else:
        want = _index_dtype(sigma)
    return s if s.dtype == want else s.astype(want)


# ---------------------------------------------------------------- kernels


@njit(cache=True)
def _classify(s, starts):
    n = s.shape[0]
    t = np.empty(n, np.uint8)
    for x in range(starts.shape[0] - 1):
        b = starts[x]
        e = starts[x + 1]
        if e - b == 1:
            t[b] = SSTAR
            continue
        # last symbol of a Lyndon word exceeds its first
        t[e - 1] = L
        for i in range(e - 2, b - 1, -1):
            if s[i] < s[i + 1]:
                t[i] = S
            elif s[i] > s[i + 1]:
                t[i] = L
            else:
                t[i] = t[i + 1]
        for i in range(e - 1, b, -1):
            if t[i] == S and t[i - 1] == L:
                t[i] = SSTAR
        t[b] = SSTAR
    return t


@njit(cache=True)
def _flags(t, starts, idx):
    # flag byte = type | FSTART at factor begins | UNIT on length-one factors;
    # wrap[b] = last position of the factor beginning at b (only set there)
    n = t.shape[0]
    f = t.copy()
    wrap = np.empty(n, idx.dtype)
    for x in range(starts.shape[0] - 1):
        b = starts[x]
        e = starts[x + 1]
        f[b] |= FSTART
        if e - b == 1:
            f[b] |= UNIT
        wrap[b] = e - 1
    return f, wrap


@njit(cache=True)
def _prepare(s, starts, idx):
    # types, flags, wrap, unit factor starts and kept S* positions in one go
    t = _classify(s, starts)
    f, wrap = _flags(t, starts, idx)
    nunits = 0
    nkept = 0
    for i in range(t.shape[0]):
        if f[i] & UNIT:
            nunits += 1
        elif t[i] == SSTAR:
            nkept += 1
    units = np.empty(nunits, idx.dtype)
    kept = np.empty(nkept, idx.dtype)
    u = 0
    k = 0
    for i in range(t.shape[0]):
        if f[i] & UNIT:
            units[u] = i
            u += 1
        elif t[i] == SSTAR:
            kept[k] = i
            k += 1
    return t, f, wrap, units, kept


@njit(cache=True)
def _buckets(s, f, sigma, idx):
    n = s.shape[0]
    begin = np.zeros(sigma + 1, idx.dtype)
    lcount = np.zeros(sigma, idx.dtype)
    for i in range(n):
        begin[s[i] + 1] += 1
        if f[i] & TYPE_MASK == L:
            lcount[s[i]] += 1
    for c in range(sigma):
        begin[c + 1] += begin[c]
    sbegin = begin[:sigma] + lcount
    return begin, sbegin


@njit(cache=True)
def _induce(s, f, wrap, sstar, sigma, mark, snap):
    # sstar: S* positions in the order they enter their S-buckets (from the head).
    # With ``mark`` the S-pass stores each S* entry j as -(j + 2); such an
    # entry never induces anything since the cyclic predecessor of an S* is L.
    n = s.shape[0]
    begin, sbegin = _buckets(s, f, sigma, sstar)
    sa = np.full(n, -1, sstar.dtype)
    head = sbegin.copy()
    for p in sstar:
        c = s[p]
        sa[head[c]] = p
        head[c] += 1
    if snap.shape[0]:
        snap[0, :] = sa
    head = begin[:sigma].copy()
    for k in range(n):
        if k + DISTANCE < n:
            q = sa[k + DISTANCE]
            if q > 0:
                prefetch(f, q - 1)
                prefetch(s, q - 1)
        i = sa[k]
        if i < 0:
            continue
        j = wrap[i] if f[i] & FSTART else i - 1
        if f[j] & TYPE_MASK == L:
            c = s[j]
            sa[head[c]] = j
            head[c] += 1
    if snap.shape[0]:
        snap[1, :] = sa
    # S-regions are rebuilt from scratch; a unit factor keeps the first slot
    for c in range(sigma):
        lo = sbegin[c]
        hi = begin[c + 1]
        if lo < hi and sa[lo] >= 0 and f[sa[lo]] & UNIT:
            lo += 1
        for k in range(lo, hi):
            sa[k] = -1
    tail = begin[1:] - 1
    for k in range(n - 1, -1, -1):
        if k >= DISTANCE:
            q = sa[k - DISTANCE]
            if q > 0:
                prefetch(f, q - 1)
                prefetch(s, q - 1)
        i = sa[k]
        if i < 0:
            continue
        j = wrap[i] if f[i] & FSTART else i - 1
        fj = f[j]
        tj = fj & TYPE_MASK
        if tj != L and not fj & UNIT:
            c = s[j]
            sa[tail[c]] = -(j + 2) if mark and tj == SSTAR else j
            tail[c] -= 1
    if snap.shape[0]:
        snap[2, :] = sa
    return sa


@njit(cache=True)
def _collect_marked(sa):
    m = 0
    for v in sa:
        if v <= -2:
            m += 1
    out = np.empty(m, sa.dtype)
    w = 0
    for v in sa:
        if v <= -2:
            out[w] = -v - 2
            w += 1
    return out


@njit(cache=True)
def _emit(s, f, wrap, sa):
    # symbol cyclically preceding each SA∘ entry
    n = sa.shape[0]
    out = np.empty(n, s.dtype)
    for k in range(n):
        if k + DISTANCE < n:
            q = sa[k + DISTANCE]
            prefetch(f, q)
            prefetch(s, q - 1)
        i = sa[k]
        out[k] = s[wrap[i] if f[i] & FSTART else i - 1]
    return out


@njit(cache=True)
def _lms_bounds(t, starts, idx):
    # for each S* of a non-unit factor, slot p >> 1: length of its LMS
    # inf-substring (closing symbol included) and where that symbol sits.
    # Kept S* positions are never adjacent, so the slots do not collide.
    n = t.shape[0]
    length = np.zeros(n // 2 + 1, idx.dtype)
    close = np.zeros(n // 2 + 1, idx.dtype)
    for x in range(starts.shape[0] - 1):
        b = starts[x]
        e = starts[x + 1]
        if e - b < 2:
            continue
        last = b
        for i in range(b + 1, e):
            if t[i] == SSTAR:
                length[last >> 1] = i - last + 1
                close[last >> 1] = i
                last = i
        length[last >> 1] = e - last + 1
        close[last >> 1] = b
    return length, close


@njit(cache=True)
def _lms_equal(s, t, length, close, p, q):
    ln = length[p >> 1]
    if length[q >> 1] != ln:
        return False
    for k in range(ln - 1):
        a = p + k
        b = q + k
        if s[a] != s[b] or (t[a] == L) != (t[b] == L):
            return False
    a = close[p >> 1]
    b = close[q >> 1]
    return s[a] == s[b] and (t[a] == L) == (t[b] == L)


@njit(cache=True)
def _name(s, t, starts, order):
    n = s.shape[0]
    length, close = _lms_bounds(t, starts, order)
    name = np.full(n // 2 + 1, -1, order.dtype)
    cur = -1
    last = -1
    m = order.shape[0]
    for k in range(m):
        if k + DISTANCE < m:
            q = order[k + DISTANCE]
            prefetch(length, q >> 1)
            prefetch(close, q >> 1)
            prefetch(name, q >> 1)
            prefetch(s, q)
            prefetch(t, q)
        p = order[k]
        if last < 0 or not _lms_equal(s, t, length, close, last, p):
            cur += 1
        name[p >> 1] = cur
        last = p
    return name, cur + 1


@njit(cache=True)
def _reduce(t, starts, name):
    nfac = starts.shape[0] - 1
    m = 0
    kept = 0
    for x in range(nfac):
        if starts[x + 1] - starts[x] >= 2:
            kept += 1
            for i in range(starts[x], starts[x + 1]):
                if t[i] == SSTAR:
                    m += 1
    text = np.empty(m, name.dtype)
    back = np.empty(m, name.dtype)
    rstarts = np.empty(kept + 1, np.int64)
    w = 0
    y = 0
    for x in range(nfac):
        if starts[x + 1] - starts[x] < 2:
            continue
        rstarts[y] = w
        y += 1
        for i in range(starts[x], starts[x + 1]):
            if t[i] == SSTAR:
                text[w] = name[i >> 1]
                back[w] = i
                w += 1
    rstarts[kept] = w
    return text, rstarts, back


@njit(cache=True)
def _merge_units(s, kept, units, sigma):
    unit_at = np.full(sigma, -1, np.int64)
    for u in units:
        unit_at[s[u]] = u
    out = np.empty(kept.shape[0] + units.shape[0], kept.dtype)
    w = 0
    c = 0
    for p in kept:
        ch = s[p]
        while c <= ch:
            if unit_at[c] >= 0:
                out[w] = unit_at[c]
                w += 1
            c += 1
        out[w] = p
        w += 1
    while c < sigma:
        if unit_at[c] >= 0:
            out[w] = unit_at[c]
            w += 1
        c += 1
    return out


# ---------------------------------------------------------------- driver


@dataclass
class LevelStats:
    depth: int
    length: int
    reduced_length: int
    names: int
    all_distinct: bool
    reduced: np.ndarray | None = None
    reduced_starts: np.ndarray | None = None


@dataclass
class _Level:
    s: np.ndarray
    starts: np.ndarray
    sigma: int
    types: np.ndarray
    flags: np.ndarray
    wrap: np.ndarray
    units: np.ndarray
    kept_sstar: np.ndarray  # text order

    @classmethod
    def prepare(cls, s, starts, sigma) -> "_Level":
        idx = np.empty(0, _index_dtype(len(s)))
        s = _narrow(s, sigma)
        starts = np.asarray(starts, np.int64)
        return cls(s, starts, sigma, *_prepare(s, starts, idx))

    def induce(self, sstar, snap=_NO_SNAPSHOT) -> np.ndarray:
        return _induce(self.s, self.flags, self.wrap, sstar, self.sigma, False, snap)

    def sort_lms_substrings(self) -> np.ndarray:
        """Kept S* positions ordered by their LMS inf-substrings (ties arbitrary)."""
        sstar = np.concatenate((self.units, self.kept_sstar))
        sa = _induce(self.s, self.flags, self.wrap, sstar, self.sigma, True, _NO_SNAPSHOT)
        return _collect_marked(sa)

    def emit(self, sa) -> np.ndarray:
        return _emit(self.s, self.flags, self.wrap, sa)

    def name(self, order):
        return _name(self.s, self.types, self.starts, order)


def _sstar_order(level: _Level, stats, depth) -> np.ndarray:
    order = level.sort_lms_substrings()
    name, nnames = level.name(order)
    reduced, rstarts, back = _reduce(level.types, level.starts, name)
    all_distinct = nnames == len(order)
    if stats is not None:
        stats.append(
            LevelStats(depth, len(level.s), len(reduced), nnames, all_distinct, reduced, rstarts)
        )
    if all_distinct:
        kept = order
    else:
        kept = back[_circular_sa(reduced, rstarts, nnames, stats, depth + 1)]
    return _merge_units(level.s, kept, level.units, level.sigma)


def _circular_sa(s, starts, sigma, stats=None, depth=0) -> np.ndarray:
    """0-based circular suffix array of text ``s`` cut into distinct Lyndon factors."""
    if len(s) == 0:
        return np.empty(0, np.int64)
    level = _Level.prepare(s, starts, sigma)
    return level.induce(_sstar_order(level, stats, depth))


# ---------------------------------------------------------------- public steps


@dataclass(frozen=True, eq=False)
class TypeArray:
    tags: np.ndarray  # uint8 per position of R, values of Tag

    def __len__(self) -> int:
        return len(self.tags)

    def __getitem__(self, i) -> Tag:
        return Tag(int(self.tags[i]))

    def labels(self) -> list[str]:
        return [Tag(int(v)).label for v in self.tags]


@dataclass(frozen=True)
class LmsInfSubstring:
    factor: int  # 1-based
    start: int  # 1-based position in R
    end: int  # 1-based, last position read from R before the closing symbol
    wraps: bool  # closed by the factor's first symbol rather than the next S*
    content: tuple
    types: tuple
    unit: bool  # the factor has length one


@dataclass(frozen=True, eq=False)
class ReducedProblem:
    text: np.ndarray  # one rank per LMS inf-substring of a kept factor
    starts: np.ndarray  # factor boundaries over ``text``
    omitted: list  # (symbol, 1-based factor index) of each unit factor
    back: np.ndarray  # 1-based position in R of each reduced position

    @property
    def factorization(self) -> ComposedFactorization:
        return ComposedFactorization(
            self.text, self.starts, np.ones(len(self.starts) - 1, np.int64), len(self.text)
        )


@dataclass(frozen=True, eq=False)
class CircularSuffixArray:
    entries: np.ndarray  # 1-based positions into R

    def __len__(self) -> int:
        return len(self.entries)

    def tolist(self) -> list[int]:
        return self.entries.tolist()

    def zero_based(self) -> np.ndarray:
        return self.entries - 1


def _sigma(cf: ComposedFactorization) -> int:
    return alphabet_size(cf.reduced)


def classify_inf_types(cf: ComposedFactorization) -> TypeArray:
    return TypeArray(_classify(cf.reduced, cf.starts))


def lms_inf_substrings(cf: ComposedFactorization, types: TypeArray) -> list[LmsInfSubstring]:
    r, t = cf.reduced, types.tags
    out = []
    for x, (b, e) in enumerate(zip(cf.starts[:-1].tolist(), cf.starts[1:].tolist())):
        marks = [i for i in range(b, e) if t[i] == SSTAR]
        for k, p in enumerate(marks):
            if k + 1 < len(marks):
                idx = list(range(p, marks[k + 1] + 1))
                wraps = False
            else:
                idx = list(range(p, e)) + [b]
                wraps = True
            out.append(
                LmsInfSubstring(
                    factor=x + 1,
                    start=p + 1,
                    end=idx[-2] + 1 if wraps else idx[-1] + 1,
                    wraps=wraps,
                    content=tuple(int(r[i]) for i in idx),
                    types=tuple(Tag(int(t[i])) for i in idx),
                    unit=e - b == 1,
                )
            )
    return out


def _lms_key():
    return cmp_to_key(lambda a, b: lms_compare(a.content, a.types, b.content, b.types))


def rank_lms(substrings: list[LmsInfSubstring]) -> tuple[list[int | None], bool]:
    """Dense 0-based ≺LMS ranks by comparison sort; unit-factor entries get ``None``."""
    kept = sorted((s for s in substrings if not s.unit), key=_lms_key())
    rank_of = {}
    r = -1
    for k, sub in enumerate(kept):
        if k == 0 or lms_compare(
            kept[k - 1].content, kept[k - 1].types, sub.content, sub.types
        ) is not Ordering.EQUAL:
            r += 1
        rank_of[sub.start] = r
    ranks = [None if s.unit else rank_of[s.start] for s in substrings]
    return ranks, r + 1 == len(kept)


def build_reduced(cf: ComposedFactorization, types: TypeArray, ranks) -> ReducedProblem:
    """Rank string of the kept factors; ``ranks`` is indexed like ``lms_inf_substrings``."""
    subs = lms_inf_substrings(cf, types)
    name = np.full(len(cf.reduced) // 2 + 1, -1, np.int64)
    for sub, rank in zip(subs, ranks):
        if rank is not None:
            name[(sub.start - 1) >> 1] = rank
    text, rstarts, back = _reduce(types.tags, cf.starts, name)
    omitted = [
        (int(cf.reduced[b]), x + 1)
        for x, (b, e) in enumerate(zip(cf.starts[:-1].tolist(), cf.starts[1:].tolist()))
        if e - b == 1
    ]
    return ReducedProblem(text, rstarts, omitted, back + 1)


def solve_sstar_order(cf: ComposedFactorization, types: TypeArray | None = None, stats=None) -> list[int]:
    """All S* positions of R (1-based), ascending in omega-order of their conjugates."""
    if len(cf.reduced) == 0:
        return []
    level = _Level.prepare(cf.reduced, cf.starts, _sigma(cf))
    if types is not None and not np.array_equal(types.tags, level.types):
        raise ValueError("types do not belong to this factorization")
    return (_sstar_order(level, stats, 0) + 1).tolist()


@dataclass(frozen=True, eq=False)
class InductionTrace:
    """Bucket layout and the SA∘ rows before and after each induction pass (0-based, -1 empty)."""

    bucket_begin: np.ndarray
    sbucket_begin: np.ndarray
    sstar_placed: np.ndarray
    after_l_pass: np.ndarray
    result: np.ndarray


def induce(cf: ComposedFactorization, types: TypeArray, sstar_order, trace: bool = False):
    """Induce SA∘ from the complete S* order; returns an ``InductionTrace`` when asked."""
    n = len(cf.reduced)
    if n == 0:
        return CircularSuffixArray(np.empty(0, np.int64))
    level = _Level.prepare(cf.reduced, cf.starts, _sigma(cf))
    sstar = np.asarray(sstar_order, np.int64) - 1
    snap = np.empty((3, n), np.int64) if trace else _NO_SNAPSHOT
    sa = level.induce(sstar, snap)
    if trace:
        begin, sbegin = _buckets(level.s, level.flags, level.sigma, sa)
        return InductionTrace(begin, sbegin, snap[0].copy(), snap[1].copy(), sa)
    return CircularSuffixArray(sa + 1)


def circular_suffix_array(cf: ComposedFactorization, stats: list | None = None) -> CircularSuffixArray:
    """SA∘ of R: classify, carve, name, reduce, recurse, merge, induce."""
    sa = _circular_sa(cf.reduced, cf.starts, _sigma(cf), stats)
    return CircularSuffixArray(sa + 1)


def circular_sa_and_last(cf: ComposedFactorization) -> tuple[np.ndarray, np.ndarray]:
    """0-based SA∘ of R and, per entry, the symbol cyclically preceding it."""
    if len(cf.reduced) == 0:
        return np.empty(0, np.int64), cf.reduced[:0].copy()
    level = _Level.prepare(cf.reduced, cf.starts, _sigma(cf))
    sa = level.induce(_sstar_order(level, None, 0))
    return sa, level.emit(sa)


def suffix_array(text) -> np.ndarray:
    """Classical 1-based suffix array of ``text`` (a proper prefix sorts first).

    Prepending a unique smallest sentinel makes ``$T`` a single Lyndon
    factor whose conjugate order is the suffix order of ``T$``.
    """
    s = as_array(text)
    if len(s) == 0:
        return np.empty(0, np.int64)
    lifted = np.concatenate(([0], s.astype(np.int64) + 1))
    cf = from_factors([lifted])
    sa = _circular_sa(cf.reduced, cf.starts, alphabet_size(lifted))
    # sa[0] is the sentinel rotation; rotation p >= 1 starts suffix p - 1 of T
    return sa[1:]
