"""Pattern algebra over contiguous runs of sequence terms.

A pattern is an ascending tuple of adjacent terms sharing one binary
length.  Patterns are copied by a constant shift, joined end to end when
sequence-adjacent, and raised to powers (a chain of copies each shifted
down by the pattern length).  The two structural identities verified
here: an odd level is the square of the previous level's pattern placed
at the level top, and the tail of an even level above the core is the
cube of the pattern two levels below.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .dyck_core import dyck_pred, is_dyck_number
from .errors import (
    DomainError,
    InvalidCopy,
    MixedLevels,
    NotACopy,
    NotAdjacent,
    NotContiguous,
    NotMember,
    PatternError,
)
from .levels import _balance_ok, level_structural, mersenne
from .report import Counterexample, VerificationOutcome, first_mismatch

# Above this value the int64 vector path could overflow; fall back to
# the exact scalar predicate.
_VECTOR_LIMIT = 1 << 62


@dataclass(frozen=True)
class Pattern:
    """Ascending contiguous run of terms of one binary length.

    Build through `make_pattern`, which validates membership,
    contiguity and the single-level requirement; direct construction is
    reserved for tuples already known to be valid runs.
    """

    terms: tuple[int, ...]

    @property
    def top(self) -> int:
        """The senior term."""
        return self.terms[-1]

    @property
    def shape(self) -> tuple[int, ...]:
        """Offsets of each term below the senior term."""
        top = self.top
        return tuple(top - t for t in self.terms)

    @property
    def level(self) -> int:
        return self.top.bit_length()

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)


@dataclass(frozen=True)
class CopyRelation:
    """A verified copy: target is the term-wise shift of source by
    offset, with the span preserved.  Build through `copy_relation`."""

    source: Pattern
    target: Pattern
    offset: int


def copy_relation(source: Pattern, target: Pattern) -> CopyRelation:
    """Validate the copy relation between two patterns and package it."""
    return CopyRelation(source, target, offset_of(source, target))


def _members_between(lo: int, hi: int) -> list[int]:
    """All sequence terms in [lo, hi], lo >= 0.

    The vector scan must run one bit-length block at a time: padding a
    shorter code with leading zeros would push its balance negative.
    """
    members: list[int] = []
    if hi < _VECTOR_LIMIT:
        for nbits in range(max(lo, 1).bit_length(), hi.bit_length() + 1):
            start = max(lo, (1 << (nbits - 1)) + 1) | 1
            stop = min(hi, (1 << nbits) - 1)
            if start > stop:
                continue
            candidates = np.arange(start, stop + 1, 2, dtype=np.int64)
            members.extend(int(v) for v in candidates[_balance_ok(candidates, nbits)])
    else:
        members.extend(v for v in range(lo | 1, hi + 1, 2) if is_dyck_number(v))
    if lo == 0:
        members.insert(0, 0)
    return members


def _validate_run(terms: tuple[int, ...]) -> None:
    """Raise unless terms is an ascending contiguous run of members."""
    if not terms:
        raise ValueError("a pattern needs at least one term")
    if any(b <= a for a, b in zip(terms, terms[1:])):
        raise ValueError("terms must be strictly ascending")
    if terms[0] < 0:
        raise ValueError("terms must be nonnegative")
    actual = _members_between(terms[0], terms[-1])
    if list(terms) != actual:
        missing = [t for t in terms if not is_dyck_number(t)]
        if missing:
            raise NotMember(f"{missing[0]} is not a term of the sequence")
        raise NotContiguous(
            f"run {terms[0]}..{terms[-1]} skips intermediate terms"
        )
    if terms[0].bit_length() != terms[-1].bit_length():
        raise MixedLevels(
            f"terms span binary lengths {terms[0].bit_length()}"
            f"..{terms[-1].bit_length()}"
        )


def make_pattern(terms: tuple[int, ...] | list[int]) -> Pattern:
    """Validate a tuple of terms as a pattern."""
    run = tuple(int(t) for t in terms)
    _validate_run(run)
    return Pattern(run)


def pattern_len(p: Pattern) -> int:
    """Numeric span of a pattern: top minus the predecessor of its
    first term.  For a whole level this is 2**(n-1)."""
    if p.terms[0] == 0:
        raise DomainError("length is undefined for a pattern starting at 0")
    return p.top - dyck_pred(p.terms[0])


def _shifted(p: Pattern, new_top: int) -> Pattern:
    """The tuple of p shifted so its senior term lands on new_top,
    validated as a run.  Allows shifts in either direction; new_top ==
    p.top returns p unchanged."""
    if new_top == p.top:
        return p
    delta = new_top - p.top
    shifted = tuple(t + delta for t in p.terms)
    if shifted[0] < 0:
        raise InvalidCopy(f"no copy of the pattern exists at top {new_top}")
    try:
        _validate_run(shifted)
    except (NotMember, PatternError) as exc:
        raise InvalidCopy(
            f"no copy of the pattern exists at top {new_top}: {exc}"
        ) from exc
    return Pattern(shifted)


def copy_at(p: Pattern, new_top: int) -> Pattern:
    """Copy of p with senior term new_top > p.top.  Every shifted value
    must be a member and the shifted tuple must stay contiguous."""
    if not is_dyck_number(new_top):
        raise InvalidCopy(f"{new_top} is not a term of the sequence")
    if new_top <= p.top:
        raise InvalidCopy("a copy must lie above the source pattern")
    return _shifted(p, new_top)


def offset_of(p: Pattern, q: Pattern) -> int:
    """Verified copy offset: q must be a term-wise constant shift of p,
    lying strictly above it, with the span preserved (the predecessors
    of the first terms shift by the same amount)."""
    if len(p) != len(q):
        raise NotACopy("patterns differ in cardinality")
    if q.terms[0] <= p.top:
        raise NotACopy("a copy must lie strictly above the source pattern")
    delta = q.top - p.top
    if any(y - x != delta for x, y in zip(p.terms, q.terms)):
        raise NotACopy("term-wise offsets are not constant")
    try:
        if dyck_pred(q.terms[0]) - dyck_pred(p.terms[0]) != delta:
            raise NotACopy("the copy does not preserve the pattern span")
    except DomainError as exc:
        raise NotACopy("offset undefined for patterns starting at 0") from exc
    return delta


def join(x: Pattern, y: Pattern) -> Pattern:
    """Concatenate two sequence-adjacent patterns into one."""
    if dyck_pred(y.terms[0]) != x.top:
        raise NotAdjacent(
            f"{x.top} does not immediately precede {y.terms[0]}"
        )
    return make_pattern(x.terms + y.terms)


def power(p: Pattern, k: int) -> Pattern:
    """k adjacent copies of p ending at p.top, each shifted down from
    the next by the pattern span."""
    if k < 2:
        raise ValueError("power requires k >= 2")
    span = pattern_len(p)
    combined: list[int] = []
    for j in range(k - 1, -1, -1):
        delta = j * span
        combined.extend(t - delta for t in p.terms)
    try:
        return make_pattern(combined)
    except (NotMember, PatternError) as exc:
        raise InvalidCopy(
            f"no chain of {k} copies exists below top {p.top}: {exc}"
        ) from exc


def lift_copy(p: Pattern) -> Pattern:
    """The copy of p one level up obtained by prepending a 1 bit to
    every term (always exists)."""
    return _shifted(p, p.top + (1 << p.level))


def level_pattern(n: int) -> Pattern:
    """Whole level n viewed as a pattern."""
    return Pattern(level_structural(n).terms)


def verify_eq1(n: int) -> VerificationOutcome:
    """Check that odd level n equals the square of the previous level's
    pattern placed at M_n."""
    if n < 5 or n % 2 == 0:
        raise ValueError("the doubling identity applies to odd n >= 5")
    t0 = time.perf_counter()
    expected = level_structural(n).terms
    try:
        built = power(copy_at(level_pattern(n - 1), mersenne(n)), 2)
    except PatternError as exc:
        return VerificationOutcome(
            "eq1", n, False, _construction_failure(exc), time.perf_counter() - t0
        )
    return first_mismatch("eq1", n, expected, built.terms, time.perf_counter() - t0)


def verify_eq2(n: int) -> VerificationOutcome:
    """Check that the tail of even level n above the core senior term
    M_{n-1} + 2**(n-3) equals the cube of the pattern two levels below
    placed at M_n."""
    if n < 6 or n % 2:
        raise ValueError("the tail identity applies to even n >= 6")
    t0 = time.perf_counter()
    core_top = mersenne(n - 1) + (1 << (n - 3))
    terms = level_structural(n).terms
    expected = tuple(t for t in terms if t > core_top)
    try:
        built = power(copy_at(level_pattern(n - 2), mersenne(n)), 3)
    except PatternError as exc:
        return VerificationOutcome(
            "eq2", n, False, _construction_failure(exc), time.perf_counter() - t0
        )
    return first_mismatch("eq2", n, expected, built.terms, time.perf_counter() - t0)


def _construction_failure(exc: Exception) -> Counterexample:
    return Counterexample("construction", "a valid pattern", str(exc))
