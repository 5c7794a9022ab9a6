"""Bit-level membership test and successor/predecessor functions for
OEIS A036991, the Dyck numbers.

A nonnegative integer belongs to the sequence when every suffix of its
binary code contains at least as many 1s as 0s (0 belongs by convention,
encoding the empty path).  All functions here work on plain ints with
exact arithmetic, so values beyond 2**64 are handled correctly.
"""

from __future__ import annotations

import enum

from .errors import DomainError, NotMember


def is_dyck_number(v: int) -> bool:
    """Return True iff v is a term of A036991.

    Single right-to-left scan tracking the running suffix balance
    (ones minus zeros); rejects on the first negative value.
    """
    if v < 0:
        raise ValueError("expected a nonnegative integer")
    if v == 0:
        return True
    if not v & 1:
        return False  # the length-1 suffix "0" already has balance -1
    bal = 0
    while v:
        bal += 1 if v & 1 else -1
        if bal < 0:
            return False
        v >>= 1
    return True


def dynamics(v: int) -> int:
    """Ones minus zeros in the binary code of v (no leading zeros).

    dynamics(0) == 0 by convention.
    """
    if v < 0:
        raise ValueError("expected a nonnegative integer")
    return 2 * v.bit_count() - v.bit_length()


def dyck_succ(t: int) -> int:
    """Smallest sequence term strictly greater than the term t."""
    _require_member(t)
    if t == 0:
        return 1
    v = t + 2  # terms above 0 are odd, so stride 2 suffices
    while not is_dyck_number(v):
        v += 2
    return v


def dyck_pred(t: int) -> int:
    """Largest sequence term strictly less than the term t."""
    _require_member(t)
    if t == 0:
        raise DomainError("the predecessor of the initial term 0 is undefined")
    if t == 1:
        return 0
    v = t - 2
    while not is_dyck_number(v):
        v -= 2
    return v


def succ_of_mersenne(n: int) -> int:
    """Successor of 2**n - 1 by closed form: M_n + 2**ceil(n/2)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return (1 << n) - 1 + (1 << ((n + 1) // 2))


class TermClass(enum.Enum):
    """Structural role of a term: origin values 0 and 1, an isolated
    ternary-tree root, or one of the three positions in a triplet of
    adjacent terms spaced 2 apart."""

    ORIGIN = "Origin"
    ROOT = "Root"
    TRIPLET_LOW = "TripletLow"
    TRIPLET_MIDDLE = "TripletMiddle"
    TRIPLET_TOP = "TripletTop"


def classify(t: int) -> TermClass:
    """Classify a term as Origin, Root, or triplet position.

    A root r > 1 has neither r-2 nor r+2 in the sequence; triplet terms
    have at least one neighbour at distance 2.
    """
    _require_member(t)
    if t <= 1:
        return TermClass.ORIGIN
    below = is_dyck_number(t - 2)
    above = is_dyck_number(t + 2)
    if not below and not above:
        return TermClass.ROOT
    if below and above:
        return TermClass.TRIPLET_MIDDLE
    if below:
        assert is_dyck_number(t - 4), f"term {t} ends a run of length 2"
        return TermClass.TRIPLET_TOP
    assert is_dyck_number(t + 4), f"term {t} starts a run of length 2"
    return TermClass.TRIPLET_LOW


def _require_member(t: int) -> None:
    if not is_dyck_number(t):
        raise NotMember(f"{t} is not a term of the sequence")
