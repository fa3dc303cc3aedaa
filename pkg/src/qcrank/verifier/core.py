"""Check registry: one executable verification per catalogued identity.

Each check reduces a theorem, lemma, corollary or helper identity to
exact coefficient comparisons over a finite range and reports the first
divergent index on failure.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

from ..series import Series

__all__ = [
    "Check",
    "CheckResult",
    "CheckSkipped",
    "Failure",
    "register",
    "get_check",
    "all_check_ids",
    "run_check",
    "run_checks",
    "series_match",
    "must_vanish",
    "congruent_zero_at",
    "odd_support_matches",
    "MIN_MEANINGFUL_ORDER",
]

MIN_MEANINGFUL_ORDER = 20


class CheckSkipped(Exception):
    """Raised by a check that declines to run at the requested order
    (e.g. an exhaustive enumeration pushed past feasibility)."""


@dataclass(frozen=True)
class Failure:
    """First divergent comparison: where, what was claimed, what came out."""

    index: int
    expected: object
    actual: object

    def as_dict(self) -> dict:
        return {"index": self.index, "expected": self.expected,
                "actual": self.actual}


@dataclass(frozen=True)
class Check:
    """A registered verification, runnable in isolation."""

    id: str
    description: str
    anchor: tuple  # (location, verbatim quote of the statement)
    default_order: int
    run: Callable[[int], Failure | None]
    modulus: int | None = None
    requires_bruteforce: bool = False
    note: str | None = None  # flags corrected misprints and conventions


@dataclass(frozen=True)
class CheckResult:
    id: str
    status: str  # pass | fail | skipped
    order_used: int
    runtime: float
    first_failure: Failure | None = None
    note: str | None = None

    def as_dict(self, check: Check | None = None) -> dict:
        rec = {
            "id": self.id,
            "status": self.status,
            "order": self.order_used,
            "runtime_sec": round(self.runtime, 4),
            "first_failure": (self.first_failure.as_dict()
                              if self.first_failure else None),
            "note": self.note,
        }
        if check is not None:
            rec["description"] = check.description
            rec["anchor"] = {"location": check.anchor[0],
                             "quote": check.anchor[1]}
            rec["modulus"] = check.modulus
        return rec


_REGISTRY: dict = {}


def register(id: str, description: str, anchor: tuple, default_order: int,
             modulus: int | None = None, requires_bruteforce: bool = False,
             note: str | None = None):
    """Decorator adding a check function to the registry."""

    def wrap(fn: Callable[[int], Failure | None]):
        if id in _REGISTRY:
            raise ValueError(f"duplicate check id {id!r}")
        _REGISTRY[id] = Check(id=id, description=description,
                              anchor=anchor, default_order=default_order,
                              run=fn, modulus=modulus,
                              requires_bruteforce=requires_bruteforce,
                              note=note)
        return fn

    return wrap


def get_check(check_id: str) -> Check:
    try:
        return _REGISTRY[check_id]
    except KeyError:
        raise KeyError(f"unknown check id {check_id!r}") from None


def all_check_ids() -> list:
    return list(_REGISTRY)


def run_check(check_id: str, order: int | None = None) -> CheckResult:
    """Execute one check at its default or overridden order."""
    check = get_check(check_id)
    n = check.default_order if order is None else order
    if n < MIN_MEANINGFUL_ORDER:
        raise ValueError(
            f"order {n} too small to be meaningful (minimum "
            f"{MIN_MEANINGFUL_ORDER})")
    start = time.perf_counter()
    try:
        failure = check.run(n)
    except CheckSkipped as skip:
        note = str(skip) if check.note is None else f"{skip} | {check.note}"
        return CheckResult(id=check_id, status="skipped", order_used=n,
                           runtime=time.perf_counter() - start, note=note)
    elapsed = time.perf_counter() - start
    status = "pass" if failure is None else "fail"
    return CheckResult(id=check_id, status=status, order_used=n,
                       runtime=elapsed, first_failure=failure,
                       note=check.note)


def run_checks(check_ids: Iterable[str] | None = None,
               order: int | None = None, jobs: int = 1) -> list:
    """Run several checks, optionally in parallel; results in input order."""
    ids = list(check_ids) if check_ids is not None else all_check_ids()
    for cid in ids:
        get_check(cid)  # fail fast on unknown ids
    if jobs <= 1:
        return [run_check(cid, order) for cid in ids]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(run_check, cid, order) for cid in ids]
        return [f.result() for f in futures]


# ----------------------------------------------------------------------
# comparison helpers

def series_match(actual: Series, expected: Series, upto: int) -> Failure | None:
    """First exponent <= upto where the two series disagree.

    Both series must be defined through `upto`; anything less would
    silently weaken the check.
    """
    if actual.order < upto or expected.order < upto:
        raise ValueError(
            f"series order too small for comparison to {upto}: "
            f"{actual.order}, {expected.order}")
    lo = min(actual.valuation, expected.valuation, 0)
    for e in range(lo, upto + 1):
        got, want = actual.coeff_at(e), expected.coeff_at(e)
        if got != want:
            return Failure(e, want, got)
    return None


def must_vanish(s: Series, upto: int,
                indices: Iterable[int] | None = None) -> Failure | None:
    """All coefficients (or the selected ones) through `upto` are zero."""
    if s.order < upto:
        raise ValueError(f"series order {s.order} below {upto}")
    rng = range(min(s.valuation, 0), upto + 1) if indices is None else indices
    for e in rng:
        c = s.coeff_at(e)
        if c != 0:
            return Failure(e, 0, c)
    return None


def congruent_zero_at(s: Series, modulus: int, indices: Iterable[int]) -> Failure | None:
    """Selected coefficients vanish modulo `modulus`."""
    for e in indices:
        c = s.coeff_at(e) % modulus
        if c:
            return Failure(e, 0, c)
    return None


def odd_support_matches(s: Series, indices: Iterable[int],
                        predicate: Callable[[int], bool]) -> Failure | None:
    """Coefficient at e is odd exactly when predicate(e) holds."""
    for e in indices:
        got = s.coeff_at(e) % 2 == 1
        want = bool(predicate(e))
        if got != want:
            return Failure(e, int(want), int(got))
    return None
