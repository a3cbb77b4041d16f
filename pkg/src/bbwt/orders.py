"""String orders: lexicographic, omega (infinite power) and LMS substring order.

Also holds the conjugate helpers used by the extended-BWT reduction.
"""
from __future__ import annotations

from enum import IntEnum
from typing import Sequence

from .errors import NonPrimitiveInput


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, a, b) -> "Ordering":
        return cls((a > b) - (a < b))


class Tag(IntEnum):
    """Inf-suffix type of a position. ``SSTAR`` is a refinement of ``S``."""

    L = 0
    S = 1
    SSTAR = 2

    @property
    def label(self) -> str:
        return "S*" if self is Tag.SSTAR else self.name

    @classmethod
    def parse(cls, value) -> "Tag":
        if isinstance(value, str):
            return {"L": cls.L, "S": cls.S, "S*": cls.SSTAR}[value]
        return cls(int(value))


def _symbols(u) -> Sequence:
    # str and bytes index differently; normalise both to int code points
    if isinstance(u, str):
        return [ord(c) for c in u]
    return u


def lex_compare(u, v) -> Ordering:
    """Lexicographic order; a proper prefix sorts first."""
    u, v = _symbols(u), _symbols(v)
    for a, b in zip(u, v):
        if a != b:
            return Ordering.of(a, b)
    return Ordering.of(len(u), len(v))


def omega_compare(u, v) -> Ordering:
    """Compare the infinite powers u^ω and v^ω.

    If the powers agree on their first |u|+|v| symbols they are equal
    (Fine and Wilf), so at most |u|+|v| symbols are inspected.
    """
    u, v = _symbols(u), _symbols(v)
    m, n = len(u), len(v)
    if not m or not n:
        raise ValueError("omega_compare needs nonempty strings")
    for k in range(m + n):
        a, b = u[k % m], v[k % n]
        if a != b:
            return Ordering.of(a, b)
    return Ordering.EQUAL


def lms_compare(u, u_types, v, v_types) -> Ordering:
    """Order two typed LMS (inf-)substrings.

    At the first index where either the symbols or the type classes differ,
    a smaller symbol wins, and on equal symbols an ``L`` sorts before an
    ``S``/``S*``. Identical content and types compare equal.
    """
    u, v = _symbols(u), _symbols(v)
    if len(u) != len(u_types) or len(v) != len(v_types):
        raise ValueError("every symbol needs a type tag")
    for a, ta, b, tb in zip(u, u_types, v, v_types):
        if a != b:
            return Ordering.of(a, b)
        la = Tag.parse(ta) == Tag.L
        lb = Tag.parse(tb) == Tag.L
        if la != lb:
            return Ordering.LESS if la else Ordering.GREATER
    # cannot happen for genuinely typed LMS substrings; keeps the order total
    return Ordering.of(len(u), len(v))


def _prefix_function(u) -> list[int]:
    pi = [0] * len(u)
    k = 0
    for i in range(1, len(u)):
        while k and u[i] != u[k]:
            k = pi[k - 1]
        if u[i] == u[k]:
            k += 1
        pi[i] = k
    return pi


def smallest_period(u) -> int:
    u = _symbols(u)
    if not len(u):
        raise ValueError("empty string has no period")
    return len(u) - _prefix_function(u)[-1]


def is_primitive(u) -> bool:
    n = len(u)
    p = smallest_period(u)
    return p == n or n % p != 0


def least_rotation(u) -> int:
    """Index of a lexicographically least rotation (two-pointer, linear time).

    Works on any nonempty string; for a power w^k it returns the least
    rotation inside the first copy of w.
    """
    u = _symbols(u)
    n = len(u)
    if not n:
        raise ValueError("empty string has no rotation")
    i, j, k = 0, 1, 0
    while i < n and j < n and k < n:
        a, b = u[(i + k) % n], u[(j + k) % n]
        if a == b:
            k += 1
            continue
        if a > b:
            i += k + 1
        else:
            j += k + 1
        if i == j:
            j += 1
        k = 0
    return min(i, j)


def min_conjugate(u) -> int:
    """Rotation index r such that conj^r(u) is the Lyndon conjugate of u."""
    if not len(u):
        raise ValueError("empty string has no conjugate")
    if not is_primitive(u):
        raise NonPrimitiveInput()
    return least_rotation(u)


def rotate(u, r: int):
    return u[r:] + u[:r]


def is_lyndon(u) -> bool:
    """Brute-force Lyndon test: u is strictly smaller than each proper suffix."""
    if not len(u):
        return False
    return all(lex_compare(u, u[i:]) is Ordering.LESS for i in range(1, len(u)))
