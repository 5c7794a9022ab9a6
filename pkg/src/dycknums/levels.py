"""Level enumeration by two independent methods.

A level collects every sequence term with one binary code length n; its
values lie in the half-open interval (M_{n-1}, M_n] between consecutive
Mersenne numbers.  ``level_scan`` filters raw odd candidates through the
membership predicate (the brute-force oracle), while ``level_structural``
rebuilds each level from smaller ones: an odd level is two shifted copies
of the level below it, an even level is the union of the four 2-bit
fragment images of the level two below (with the 00 fragment rejecting
terms of low dynamics).  The two must agree element for element.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dyck_core import is_dyck_number
from .errors import BoundError, DomainError, NotMember

DEFAULT_SCAN_BOUND = 24
DEFAULT_STRUCTURAL_BOUND = 30
MAX_MATERIALIZED_TERMS = 1 << 28

_BASE_LEVELS = {1: (1,), 2: (3,), 3: (5, 7), 4: (11, 13, 15)}

_array_cache: dict[int, np.ndarray] = {}


@dataclass(frozen=True)
class Level:
    """One level: its index n and the ascending tuple of terms."""

    n: int
    terms: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)


@dataclass(frozen=True)
class CentralTerms:
    """The three power-of-two anchors inside a level: the level centre
    H_n, the centre of the upper half, and the senior term of the core
    (the centre of the lower half)."""

    n: int
    h: int
    upper_center: int
    core_top: int


def mersenne(n: int) -> int:
    """2**n - 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return (1 << n) - 1


def level_index(t: int) -> int:
    """Binary code length of a term; 0 for the term 0."""
    if not is_dyck_number(t):
        raise NotMember(f"{t} is not a term of the sequence")
    return t.bit_length()


def level_size(n: int) -> int:
    """Number of terms in level n: C(n-1, floor((n-1)/2))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return math.comb(n - 1, (n - 1) // 2)


def _balance_ok(values: np.ndarray, nbits: int) -> np.ndarray:
    """Vectorized membership test: True where every suffix of the low
    `nbits` bits keeps a nonnegative ones-minus-zeros balance."""
    bal = np.zeros(values.shape, dtype=np.int64)
    ok = np.ones(values.shape, dtype=bool)
    for k in range(nbits):
        bal += ((values >> k) & 1) * 2 - 1
        ok &= bal >= 0
    return ok


def _dynamics_array(values: np.ndarray, nbits: int) -> np.ndarray:
    """Ones minus zeros for values known to have code length `nbits`."""
    return 2 * np.bitwise_count(values).astype(np.int64) - nbits


def _scan_array(n: int) -> np.ndarray:
    lo, hi = mersenne(n - 1), mersenne(n)
    start = lo + 1 if lo % 2 == 0 else lo + 2
    candidates = np.arange(start, hi + 1, 2, dtype=np.int64)
    return candidates[_balance_ok(candidates, n)]


def level_scan(n: int, scan_bound: int = DEFAULT_SCAN_BOUND) -> Level:
    """Enumerate level n by filtering every odd candidate in
    (M_{n-1}, M_n] through the membership predicate."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > scan_bound:
        raise BoundError(f"level {n} exceeds the scan bound {scan_bound}")
    return Level(n, tuple(int(v) for v in _scan_array(n)))


def _level_array(n: int, structural_bound: int = DEFAULT_STRUCTURAL_BOUND) -> np.ndarray:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > structural_bound:
        raise BoundError(f"level {n} exceeds the structural bound {structural_bound}")
    if level_size(n) > MAX_MATERIALIZED_TERMS:
        raise BoundError(f"level {n} would materialize more than 2**28 terms")
    cached = _array_cache.get(n)
    if cached is not None:
        return cached
    if n <= 4:
        arr = np.array(_BASE_LEVELS[n], dtype=np.int64)
    elif n % 2:
        prev = _level_array(n - 1, structural_bound)
        arr = np.concatenate([prev + (1 << (n - 2)), prev + (1 << (n - 1))])
    else:
        prev = _level_array(n - 2, structural_bound)
        survivors = _dynamics_array(prev, n - 2) >= 4
        f00 = prev[survivors] + (3 << (n - 3))
        # Dual route: the dynamics shortcut must agree with an explicit
        # suffix-balance check of the constructed codes.
        if not np.array_equal(_balance_ok(prev + (3 << (n - 3)), n), survivors):
            raise AssertionError(f"fragment-00 rejection mismatch at level {n}")
        arr = np.concatenate([
            f00,
            prev + (1 << (n - 1)),   # fragment 01
            prev + (5 << (n - 3)),   # fragment 10
            prev + (3 << (n - 2)),   # fragment 11
        ])
    if not bool(np.all(arr[1:] > arr[:-1])):
        raise AssertionError(f"level {n} construction is not strictly ascending")
    _array_cache[n] = arr
    return arr


def level_structural(n: int, structural_bound: int = DEFAULT_STRUCTURAL_BOUND) -> Level:
    """Rebuild level n from the base levels 1..4 by the shifted-copy
    (odd n) and fragment-image (even n) recursions."""
    return Level(n, tuple(int(v) for v in _level_array(n, structural_bound)))


def central_terms(n: int) -> CentralTerms:
    """Level centre H_n = M_n - 2**(n-2) plus the upper-half centre
    M_n - 2**(n-3) and the core senior term M_{n-1} + 2**(n-3)."""
    if n < 5:
        raise DomainError("central terms are defined for n >= 5")
    return CentralTerms(
        n=n,
        h=mersenne(n) - (1 << (n - 2)),
        upper_center=mersenne(n) - (1 << (n - 3)),
        core_top=mersenne(n - 1) + (1 << (n - 3)),
    )


def _stream_array(count: int, structural_bound: int = DEFAULT_STRUCTURAL_BOUND) -> np.ndarray:
    if count < 1:
        raise ValueError("count must be >= 1")
    parts = [np.zeros(1, dtype=np.int64)]
    total, n = 1, 1
    while total < count:
        arr = _level_array(n, structural_bound)
        parts.append(arr)
        total += len(arr)
        n += 1
    return np.concatenate(parts)[:count]


def stream_terms(count: int) -> tuple[int, ...]:
    """First `count` terms of the sequence, starting at 0, produced
    level by level from the structural generator."""
    return tuple(int(v) for v in _stream_array(count))
