"""Exit criteria, one test (or group of tests) per numbered criterion.

Every test carries ``@pytest.mark.acceptance(number, title)``; the terminal
summary prints one PASS/FAIL line per criterion.
"""
import time
from itertools import product
from string import ascii_uppercase

import numpy as np
import pytest

import brute
from bbwt import bench
from bbwt.csais import (
    circular_suffix_array,
    classify_inf_types,
    lms_inf_substrings,
    rank_lms,
    solve_sstar_order,
    suffix_array,
)
from bbwt.errors import NonPrimitiveInput
from bbwt.lyndon import composed_factorization, duval_factorize
from bbwt.oracle import naive_bbwt, naive_csa
from bbwt.transform import bbwt, bbwt_order, bwt_baseline, bwt_dollar, ebwt, inverse_bbwt

acceptance = pytest.mark.acceptance


def exhaustive():
    for alphabet, longest in ((b"ab", 14), (b"abc", 9)):
        for n in range(1, longest + 1):
            for t in product(alphabet, repeat=n):
                yield bytes(t)


def elapsed(start):
    return time.perf_counter() - start


# ---------------------------------------------------------------- 1

FACTORS = ["c", "bbc", "acbbcad", "acbad", "acb", "a"]
TYPES = "S* S* S L S* L S* S L S* L S* L L S* L S* L L S*".split()
LMS_STARTS = [1, 2, 5, 7, 10, 12, 15, 17, 20]
LMS_CONTENTS = ["cc", "bbcb", "acb", "bbca", "ada", "acba", "ada", "acba", "aa"]
LMS_RANKS = [None, "E", "B", "D", "C", "A", "C", "A", None]
SSTAR = [20, 17, 12, 5, 15, 10, 7, 2, 1]
SA_CIRC = [20, 17, 12, 5, 15, 10, 19, 14, 7, 2, 8, 3, 9, 18, 13, 6, 4, 1, 16, 11]
BBWT = b"abddbcccccbbbaaabcaa"
SA = [20, 17, 12, 5, 15, 10, 19, 14, 2, 7, 3, 8, 4, 9, 18, 13, 1, 6, 16, 11]
BWT = b"bddcbcccccbbbbaaaaaa"
BWT_DOLLAR = b"abddcbcccccbbbbaa$aaa"


@acceptance(1, "running-example exactness")
def test_running_example(running):
    start = time.perf_counter()
    f = duval_factorize(running)
    assert [bytes(x.astype(np.uint8)).decode() for x in f.factors()] == FACTORS
    cf = composed_factorization(running)
    types = classify_inf_types(cf)
    assert types.labels() == TYPES
    subs = lms_inf_substrings(cf, types)
    assert [s.start for s in subs] == LMS_STARTS
    assert [bytes(s.content).decode() for s in subs] == LMS_CONTENTS
    ranks, _ = rank_lms(subs)
    assert [None if r is None else ascii_uppercase[r] for r in ranks] == LMS_RANKS
    assert solve_sstar_order(cf, types) == SSTAR
    assert circular_suffix_array(cf).entries.tolist() == SA_CIRC
    assert bbwt(running).output == BBWT
    assert suffix_array(running).tolist() == SA
    assert bwt_baseline(running) == BWT
    assert bwt_dollar(running).replace(b"\x00", b"$") == BWT_DOLLAR
    assert elapsed(start) < 1.0


# ---------------------------------------------------------------- 2


@acceptance(2, "exhaustive oracle equivalence")
def test_exhaustive_oracle():
    start = time.perf_counter()
    count = 0
    for t in exhaustive():
        cf = composed_factorization(t)
        assert np.array_equal(circular_suffix_array(cf).entries, naive_csa(cf).entries), t
        assert bbwt(t).output == naive_bbwt(t), t
        count += 1
    assert count == 32766 + 29523
    assert elapsed(start) < 180


# ---------------------------------------------------------------- 3

RANDOM_ROUNDS = 1000
RANDOM_LENGTH = 10_000


@acceptance(3, "round-trip bijectivity")
def test_round_trip_exhaustive():
    start = time.perf_counter()
    for t in exhaustive():
        assert inverse_bbwt(bbwt(t).output) == t, t
    assert elapsed(start) < 90


@acceptance(3, "round-trip bijectivity")
@pytest.mark.parametrize("sigma", [2, 4, 16, 256])
def test_round_trip_random(sigma):
    start = time.perf_counter()
    rng = np.random.default_rng(1000 + sigma)
    for _ in range(RANDOM_ROUNDS):
        t = rng.integers(0, sigma, RANDOM_LENGTH, dtype=np.uint8).tobytes()
        assert inverse_bbwt(bbwt(t).output) == t
    assert elapsed(start) < 45


# ---------------------------------------------------------------- 4


@acceptance(4, "injectivity at fixed length")
def test_injective_length_8():
    start = time.perf_counter()
    images = {bbwt(bytes(t)).output for t in product(b"ab", repeat=8)}
    assert len(images) == 256
    assert elapsed(start) < 60


# ---------------------------------------------------------------- 5


@acceptance(5, "recursion-size bound")
def test_recursion_bound():
    levels = deepest = 0
    for t in exhaustive():
        stats = []
        circular_suffix_array(composed_factorization(t), stats=stats)
        for s in stats:
            assert s.reduced_length <= s.length // 2, (t, s)
        levels += len(stats)
        deepest = max([deepest] + [s.depth for s in stats])
    # the bound has to be exercised below the top level too
    assert levels > 0 and deepest >= 1


# ---------------------------------------------------------------- 6

SIZES = [1 << 20, 1 << 21, 1 << 22]
FAMILIES = {
    "random-256": ("random", 256),
    "unary": ("unary", 2),
    "alternating": ("alternating", 2),
    "decreasing": ("decreasing", 256),
}
ROUNDS = 7
MIN_SAMPLE = 0.2


def _sample(text) -> float:
    # fast families repeat the call so one sample spans at least MIN_SAMPLE seconds
    calls = 0
    start = time.perf_counter()
    while True:
        bbwt(text)
        calls += 1
        took = time.perf_counter() - start
        if took >= MIN_SAMPLE:
            return took / calls


@acceptance(6, "empirical linearity")
@pytest.mark.parametrize("family", list(FAMILIES))
def test_linearity(family):
    pattern, sigma = FAMILIES[family]
    texts = [bench.generate(n, pattern, sigma, seed=0x5EED) for n in SIZES]
    bbwt(texts[0][:4096])
    times: list[list[float]] = [[] for _ in SIZES]
    # sizes interleaved inside each round so drift hits all of them alike
    for _ in range(ROUNDS):
        for k, t in enumerate(texts):
            times[k].append(_sample(t))
    med = [float(np.median(x)) for x in times]
    ratios = [b / a for a, b in zip(med, med[1:])]
    print(f"\n{family}: medians {[f'{m * 1e3:.2f} ms' for m in med]} ratios {[f'{r:.2f}' for r in ratios]}")
    assert all(r <= 2.5 for r in ratios), ratios


# ---------------------------------------------------------------- 7


def _primitive(rng) -> str:
    while True:
        u = "".join(rng.choice(list("abc"), int(rng.integers(1, 13))))
        if brute.is_primitive(u):
            return u


@acceptance(7, "EBWT equivalence")
def test_ebwt_multisets():
    start = time.perf_counter()
    rng = np.random.default_rng(7)
    for _ in range(1000):
        strings = [_primitive(rng) for _ in range(int(rng.integers(1, 9)))]
        assert ebwt(strings) == brute.ebwt(strings).encode(), strings
    assert elapsed(start) < 60


@acceptance(7, "EBWT equivalence")
def test_ebwt_rejects_non_primitive():
    for strings, index in ((["abab"], 0), (["ab", "aaa"], 1), (["b", "a", "cc", "abcabc"], 2)):
        with pytest.raises(NonPrimitiveInput) as exc:
            ebwt(strings)
        assert exc.value.index == index


# ---------------------------------------------------------------- 8


@acceptance(8, "BBWT-order sanity")
def test_order():
    start = time.perf_counter()
    for n in range(1, 9):
        for t in product(b"ab", repeat=n):
            t = bytes(t)
            k = bbwt_order(t)
            cur = t
            for _ in range(k):
                cur = bbwt(cur).output
            assert cur == t, (t, k)
            assert k == 1 or all(c != t for c in _iterates(t, k - 1)), (t, k)
    assert elapsed(start) < 60


def _iterates(t, count):
    cur = t
    for _ in range(count):
        cur = bbwt(cur).output
        yield cur
