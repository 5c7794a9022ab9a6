"""Machine verification of the structural claims, with structured
pass/fail outcomes.

Checks covered: the triplet lift (every even-level term t yields the
triplet 4t-1, 4t+1, 4t+3 two levels up in the same quarter segment),
the copying of a core into subsegments 2 and 3 of the next core at
offsets 13*2**(n-3) and 7*2**(n-2), the recursive build of the top
subsegment from the core four levels down plus three copies of the
previous top subsegment, the Catalan count of fragment-00 rejections,
and the size identities tying level and core cardinalities to central
binomial coefficients and Catalan numbers.
"""

from __future__ import annotations

import time

import numpy as np

from .cores import core, core_size, rejected_terms, subsegments
from .errors import PatternError
from .levels import (
    _balance_ok,
    _level_array,
    level_size,
    mersenne,
)
from .oeis_ref import a001405, a002054, catalan
from .patterns import (
    Pattern,
    copy_at,
    join,
    power,
    verify_eq1,
    verify_eq2,
)
from .report import Counterexample, VerificationOutcome, first_mismatch

__all__ = [
    "VerificationOutcome",
    "Counterexample",
    "check_prop12",
    "check_conj16",
    "check_conj18",
    "check_catalan_rejection",
    "size_identity_checks",
    "run_all",
]

# The 12 core sizes quoted for n = 6, 8, ..., 28.
CORE_SIZES = (1, 5, 21, 84, 330, 1287, 5005, 19448, 75582, 293930, 1144066, 4457400)

# Level sizes for n = 1..12.
LEVEL_SIZES = (1, 1, 2, 3, 6, 10, 20, 35, 70, 126, 252, 462)


def check_prop12(n: int) -> VerificationOutcome:
    """Every term t of even level n generates the triplet
    (4t-1, 4t+1, 4t+3) in level n+2, landing in the same quarter
    segment of its level interval."""
    if n < 6 or n % 2:
        raise ValueError("the triplet lift is checked for even n >= 6")
    t0 = time.perf_counter()
    src = _level_array(n)
    dst = _level_array(n + 2)
    for delta in (-1, 1, 3):
        candidates = 4 * src + delta
        pos = np.searchsorted(dst, candidates)
        found = (pos < len(dst)) & (dst[np.minimum(pos, len(dst) - 1)] == candidates)
        if not bool(np.all(found)):
            bad = int(src[~found][0])
            return VerificationOutcome(
                "prop12", n, False,
                Counterexample(bad, f"{4 * bad + delta} in level {n + 2}", "absent"),
                time.perf_counter() - t0,
            )
    quarter_src = (src - (1 << (n - 1))) >> (n - 3)
    quarter_dst = (4 * src + 3 - (1 << (n + 1))) >> (n - 1)
    if not bool(np.all(quarter_src == quarter_dst)):
        mism = np.nonzero(quarter_src != quarter_dst)[0][0]
        bad = int(src[mism])
        return VerificationOutcome(
            "prop12", n, False,
            Counterexample(bad, int(quarter_src[mism]), int(quarter_dst[mism])),
            time.perf_counter() - t0,
        )
    return VerificationOutcome("prop12", n, True, None, time.perf_counter() - t0)


def check_conj16(n: int) -> VerificationOutcome:
    """Subsegments 2 and 3 of the (n+2)-core are copies of the n-core
    at offsets 13*2**(n-3) and 7*2**(n-2)."""
    if n < 8 or n % 2:
        raise ValueError("core copying is checked for even n >= 8")
    t0 = time.perf_counter()
    base = core(n).terms
    segs = subsegments(core(n + 2))
    for seg_index, offset in ((1, 13 << (n - 3)), (2, 7 << (n - 2))):
        actual = segs[seg_index]
        if len(actual) != core_size(n):
            return VerificationOutcome(
                "conj16", n, False,
                Counterexample(
                    f"subsegment {seg_index + 1} cardinality",
                    core_size(n),
                    len(actual),
                ),
                time.perf_counter() - t0,
            )
        expected = tuple(t + offset for t in base)
        if expected != actual:
            out = first_mismatch("conj16", n, expected, actual)
            return VerificationOutcome(
                "conj16", n, False, out.detail, time.perf_counter() - t0
            )
    return VerificationOutcome("conj16", n, True, None, time.perf_counter() - t0)


def _top_subsegment(n: int) -> tuple[int, ...]:
    return subsegments(core(n))[3]


def check_conj18(n: int) -> VerificationOutcome:
    """The top subsegment of the n-core is the (n-4)-core placed three
    subsegment lengths below the core top, joined with the cube of the
    previous core's top subsegment ending at the core top."""
    if n < 12 or n % 2:
        raise ValueError("the top-subsegment recursion is checked for even n >= 12")
    t0 = time.perf_counter()
    top = mersenne(n - 1) + (1 << (n - 3))
    actual = _top_subsegment(n)
    try:
        low = copy_at(Pattern(core(n - 4).terms), top - 3 * (1 << (n - 7)))
        high = power(copy_at(Pattern(_top_subsegment(n - 2)), top), 3)
        built = join(low, high).terms
    except PatternError as exc:
        return VerificationOutcome(
            "conj18", n, False,
            Counterexample("construction", "a valid pattern", str(exc)),
            time.perf_counter() - t0,
        )
    if len(actual) != a001405(n - 5):
        return VerificationOutcome(
            "conj18", n, False,
            Counterexample("cardinality", a001405(n - 5), len(actual)),
            time.perf_counter() - t0,
        )
    out = first_mismatch("conj18", n, actual, built)
    return VerificationOutcome("conj18", n, out.passed, out.detail, time.perf_counter() - t0)


def check_catalan_rejection(n: int) -> VerificationOutcome:
    """The 00 fragment rejects exactly Cat(n/2 - 1) terms of level n-2,
    and zeroing the leading bit of each rejected term leaves a Dyck
    word: total balance 0 with no suffix dipping negative."""
    if n < 6 or n % 2:
        raise ValueError("rejection counts are checked for even n >= 6")
    t0 = time.perf_counter()
    rejected = rejected_terms(n)
    expected_count = catalan(n // 2 - 1)
    if len(rejected) != expected_count:
        return VerificationOutcome(
            "rejection", n, False,
            Counterexample("cardinality", expected_count, len(rejected)),
            time.perf_counter() - t0,
        )
    word_len = n - 2  # zeroing keeps the code length, so the word is even
    words = np.asarray(rejected, dtype=np.int64) - (1 << (n - 3))
    balanced = 2 * np.bitwise_count(words).astype(np.int64) == word_len
    valid = _balance_ok(words, word_len) & balanced
    if not bool(np.all(valid)):
        bad = rejected[int(np.nonzero(~valid)[0][0])]
        return VerificationOutcome(
            "rejection", n, False,
            Counterexample(bad, "a Dyck word after zeroing the leading bit", "not"),
            time.perf_counter() - t0,
        )
    return VerificationOutcome("rejection", n, True, None, time.perf_counter() - t0)


def size_identity_checks(max_n: int = 30) -> list[VerificationOutcome]:
    """Arithmetic identities: the two core-size formulas, the level
    size recurrences, and the quoted size tables."""
    outcomes: list[VerificationOutcome] = []

    t0 = time.perf_counter()
    detail = None
    for k in range(1, 41):
        if a002054(k) != k * catalan(k + 1) // 2 or (k * catalan(k + 1)) % 2:
            detail = Counterexample(k, k * catalan(k + 1) // 2, a002054(k))
            break
    outcomes.append(
        VerificationOutcome("eq4", 40, detail is None, detail, time.perf_counter() - t0)
    )

    t0 = time.perf_counter()
    detail = None
    for k in range(1, 41):
        if a002054(k) != a001405(2 * k + 1) - catalan(k + 1):
            detail = Counterexample(k, a001405(2 * k + 1) - catalan(k + 1), a002054(k))
            break
    outcomes.append(
        VerificationOutcome("eq5", 40, detail is None, detail, time.perf_counter() - t0)
    )

    t0 = time.perf_counter()
    detail = None
    top = max(max_n, 6)
    for n in range(6, top + 1, 2):
        four_copies = 4 * level_size(n - 2) - catalan(n // 2 - 1)
        doubled = 2 * level_size(n - 1) - catalan(n // 2 - 1)
        if level_size(n) != four_copies or level_size(n) != doubled:
            detail = Counterexample(n, four_copies, level_size(n))
            break
    outcomes.append(
        VerificationOutcome("prop10", top, detail is None, detail, time.perf_counter() - t0)
    )

    t0 = time.perf_counter()
    detail = None
    for i, expected in enumerate(CORE_SIZES):
        n = 6 + 2 * i
        if core_size(n) != expected or core_size(n) != a002054(n // 2 - 2):
            detail = Counterexample(n, expected, core_size(n))
            break
    outcomes.append(
        VerificationOutcome("core-sizes", 28, detail is None, detail, time.perf_counter() - t0)
    )

    t0 = time.perf_counter()
    detail = None
    for i, expected in enumerate(LEVEL_SIZES):
        if level_size(i + 1) != expected:
            detail = Counterexample(i + 1, expected, level_size(i + 1))
            break
    outcomes.append(
        VerificationOutcome("level-sizes", 12, detail is None, detail, time.perf_counter() - t0)
    )
    return outcomes


def run_all(max_n: int) -> list[VerificationOutcome]:
    """Every level-parameterized check at every applicable n <= max_n,
    ordered by (check name, n).  Size identities run once."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    outcomes: list[VerificationOutcome] = []
    for n in range(5, max_n + 1, 2):
        outcomes.append(verify_eq1(n))
    for n in range(6, max_n + 1, 2):
        outcomes.append(verify_eq2(n))
    for n in range(6, max_n + 1, 2):
        outcomes.append(check_prop12(n))
    for n in range(8, max_n + 1, 2):
        outcomes.append(check_conj16(n))
    for n in range(12, max_n + 1, 2):
        outcomes.append(check_conj18(n))
    for n in range(6, max_n + 1, 2):
        outcomes.append(check_catalan_rejection(n))
    if max_n >= 6:
        outcomes.extend(size_identity_checks(min(max_n, 30)))
    outcomes.sort(key=lambda o: (o.name, o.n))
    return outcomes
