"""Deterministic throughput harness behind ``bbwt bench``."""
from __future__ import annotations

import csv
import time
from dataclasses import dataclass, field

import numpy as np

from .transform import bbwt

PATTERNS = ("random", "unary", "alternating", "decreasing")
ALPHABETS = (2, 4, 16, 256)
COLUMNS = ("size", "pattern", "alphabet", "rep", "nanoseconds", "bytes_per_second")

_GAMMA = np.uint64(0x9E3779B97F4A7C15)


def splitmix64(seed: int, count: int) -> np.ndarray:
    """The first ``count`` outputs of SplitMix64 started at ``seed``."""
    k = np.arange(1, count + 1, dtype=np.uint64)
    z = np.uint64(seed % 2**64) + k * _GAMMA
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


def generate(size: int, pattern: str, alphabet: int = 256, seed: int = 0) -> bytes:
    # small alphabets start at 'a' so the inputs stay printable
    base = 0 if alphabet == 256 else ord("a")
    if pattern == "random":
        v = splitmix64(seed, size) % np.uint64(alphabet)
    elif pattern == "unary":
        v = np.zeros(size, np.uint64)
    elif pattern == "alternating":
        v = np.arange(size, dtype=np.uint64) % np.uint64(2)
    elif pattern == "decreasing":
        # strictly decreasing blocks: every symbol but the block minimum is a unit factor
        v = np.uint64(alphabet - 1) - np.arange(size, dtype=np.uint64) % np.uint64(alphabet)
    else:
        raise ValueError(f"unknown pattern {pattern!r}")
    return (v + np.uint64(base)).astype(np.uint8).tobytes()


@dataclass
class BenchConfig:
    sizes: list[int] = field(default_factory=lambda: [1 << 16, 1 << 18, 1 << 20])
    seed: int = 0x5EED
    alphabet: int = 256
    pattern: str = "random"
    repetitions: int = 5

    def __post_init__(self):
        if not self.sizes or any(n <= 0 for n in self.sizes):
            raise ValueError("sizes must be a nonempty list of positive lengths")
        if self.repetitions < 1:
            raise ValueError("repetitions must be at least 1")
        if self.alphabet not in ALPHABETS:
            raise ValueError(f"alphabet must be one of {ALPHABETS}")
        if self.pattern not in PATTERNS:
            raise ValueError(f"pattern must be one of {PATTERNS}")


def _row(size, cfg, rep, ns):
    ns = max(int(ns), 1)
    return {
        "size": size,
        "pattern": cfg.pattern,
        "alphabet": cfg.alphabet,
        "rep": rep,
        "nanoseconds": ns,
        "bytes_per_second": round(size * 1e9 / ns),
    }


def run(cfg: BenchConfig):
    """Yield one row per repetition and a closing ``median`` row per size."""
    bbwt(b"cbbcacbbcadacbadacba")  # compile outside the timed region
    for size in cfg.sizes:
        data = generate(size, cfg.pattern, cfg.alphabet, cfg.seed)
        times = []
        for rep in range(cfg.repetitions):
            t0 = time.perf_counter_ns()
            bbwt(data)
            times.append(time.perf_counter_ns() - t0)
            yield _row(size, cfg, rep, times[-1])
        yield _row(size, cfg, "median", np.median(times))


def write_csv(rows, stream) -> None:
    w = csv.DictWriter(stream, fieldnames=COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r)
        stream.flush()
