"""Shared value types for the bitonic-subsequence engines.

A *match* is a position pair (i, j) with a[i] == b[j]. A chain of matches with
strictly increasing i and j whose values rise strictly to a peak and then fall
strictly is a common bitonic subsequence; the engines in this package compute a
longest one (LCBS). Everything here is a plain immutable value: engines return
outcomes, validators return reports, nothing raises on bad witnesses.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional

Symbol = int

# Violation texts are part of the CLI contract (verify prints them verbatim).
VIOLATION_I_ORDER = "i not strictly increasing"
VIOLATION_J_ORDER = "j not strictly increasing"
VIOLATION_RISE = "values not strictly increasing up to the peak"
VIOLATION_FALL = "values not strictly decreasing after the peak"


@dataclass(frozen=True)
class SequencePair:
    """The two input sequences, held as immutable tuples of int symbols."""

    a: tuple[Symbol, ...]
    b: tuple[Symbol, ...]

    @classmethod
    def of(cls, a: Iterable[Symbol], b: Iterable[Symbol]) -> "SequencePair":
        return cls(tuple(int(x) for x in a), tuple(int(x) for x in b))

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def m(self) -> int:
        return len(self.b)


@dataclass(frozen=True)
class MatchPoint:
    """One match: positions i in a, j in b, and the shared symbol value."""

    i: int
    j: int
    value: Symbol


@dataclass(frozen=True)
class Witness:
    """A candidate chain: match points plus the index of its peak element.

    Construction enforces only shape (peak_pos present iff the chain is
    nonempty, and in range). Whether the chain is actually a valid bitonic
    common subsequence of a given pair is the job of validate_witness, so
    invalid chains stay constructible and reportable.
    """

    points: tuple[MatchPoint, ...]
    peak_pos: Optional[int]

    def __post_init__(self) -> None:
        if len(self.points) == 0:
            if self.peak_pos is not None:
                raise ValueError("empty witness must not carry a peak index")
        else:
            if self.peak_pos is None:
                raise ValueError("nonempty witness requires a peak index")
            if not 0 <= self.peak_pos < len(self.points):
                raise ValueError("peak index out of range")

    def __len__(self) -> int:
        return len(self.points)

    @property
    def values(self) -> tuple[Symbol, ...]:
        return tuple(p.value for p in self.points)


EMPTY_WITNESS = Witness(points=(), peak_pos=None)


@dataclass
class ValidationReport:
    ok: bool
    violations: list[str] = field(default_factory=list)


@dataclass
class RunStats:
    """Per-run accounting attached to every engine outcome.

    aux_elements is the engine's headline auxiliary allocation count: recorded
    table entries per table for the dense engine (equals the match count), the
    peak rolling-array element count for the rolling engine (4 arrays of length
    min(n, m)), and total allocated array elements for the sparse engine.
    probes counts index node touches and is reported by the sparse engine only.
    """

    match_count: int
    engine: str
    elapsed_ms: float
    aux_elements: int
    probes: Optional[int] = None


@dataclass
class LcbsOutcome:
    length: int
    witness: Optional[Witness]
    peak: Optional[MatchPoint]
    stats: RunStats


def validate_witness(pair: SequencePair, witness: Witness) -> ValidationReport:
    """Check a chain against a pair; every broken rule is reported, none raise.

    Rules: each point must be an in-range match whose stored value equals both
    symbols; i and j must be strictly increasing; values must rise strictly up
    to the peak element and fall strictly after it.
    """
    violations: list[str] = []
    pts = witness.points
    a, b = pair.a, pair.b

    for k, p in enumerate(pts):
        if not (0 <= p.i < len(a)) or not (0 <= p.j < len(b)):
            violations.append(f"point {k} out of range: ({p.i},{p.j})")
        elif a[p.i] != p.value or b[p.j] != p.value:
            violations.append(
                f"point {k} is not a match: a[{p.i}]={a[p.i]} b[{p.j}]={b[p.j]} value={p.value}"
            )

    if any(pts[k].i >= pts[k + 1].i for k in range(len(pts) - 1)):
        violations.append(VIOLATION_I_ORDER)
    if any(pts[k].j >= pts[k + 1].j for k in range(len(pts) - 1)):
        violations.append(VIOLATION_J_ORDER)

    if pts:
        h = witness.peak_pos
        assert h is not None  # guaranteed by construction
        if any(pts[k].value >= pts[k + 1].value for k in range(0, h)):
            violations.append(VIOLATION_RISE)
        if any(pts[k].value <= pts[k + 1].value for k in range(h, len(pts) - 1)):
            violations.append(VIOLATION_FALL)

    return ValidationReport(ok=not violations, violations=violations)


def count_matches(pair: SequencePair) -> int:
    """Exact number of position pairs (i, j) with a[i] == b[j].

    Computed as the sum over shared values of occurrence-count products,
    O(n + m) time, no pair enumeration.
    """
    ca = Counter(pair.a)
    cb = Counter(pair.b)
    if len(cb) < len(ca):
        ca, cb = cb, ca
    return sum(c * cb[v] for v, c in ca.items() if v in cb)
