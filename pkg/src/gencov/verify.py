"""Decide whether a design covers everything it must, with witnesses.

The verifier enumerates admissible patterns, then all set tuples per
pattern, and counts containing blocks with the kernel backends.  The
whole universe is always scanned so the report carries a total deficit
count, not just the first failure.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import _kernels
from .core import Design, Pattern, PartStructure, SetTuple, admissible_patterns

DEFICIT_CAP = 1000


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    checked_patterns: int
    checked_tuples: int
    first_uncovered: SetTuple | None
    deficient_count: int

    def __bool__(self) -> bool:
        return self.valid


def _membership_matrix(d: Design) -> np.ndarray:
    s = d.structure
    offsets = np.cumsum([0] + list(s.v))
    mem = np.zeros((len(d.blocks), s.v_sum), dtype=np.uint8)
    for bi, block in enumerate(d.blocks):
        for pi, part in enumerate(block):
            for x in part:
                mem[bi, offsets[pi] + x - 1] = 1
    return mem


def _tuple_index_matrix(s: PartStructure, p: Pattern) -> np.ndarray:
    """Global point indices of every tuple matching p, in enumeration order."""
    offsets = [0]
    for vi in s.v[:-1]:
        offsets.append(offsets[-1] + vi)
    per_part = []
    for pi, (vi, ti) in enumerate(zip(s.v, p)):
        if ti == 0:
            continue
        combos = np.array(list(combinations(range(vi), ti)), dtype=np.int64)
        per_part.append(combos + offsets[pi])
    if not per_part:
        return np.zeros((1, 0), dtype=np.int64)
    out = per_part[0]
    for nxt in per_part[1:]:
        a = np.repeat(out, len(nxt), axis=0)
        b = np.tile(nxt, (len(out), 1))
        out = np.concatenate([a, b], axis=1)
    return out


def _tuple_from_row(s: PartStructure, p: Pattern, row: np.ndarray) -> SetTuple:
    offsets = [0]
    for vi in s.v[:-1]:
        offsets.append(offsets[-1] + vi)
    parts = []
    pos = 0
    for pi, ti in enumerate(p):
        labels = tuple(int(row[pos + j]) - offsets[pi] + 1 for j in range(ti))
        parts.append(labels)
        pos += ti
    return tuple(parts)


def default_jobs() -> int:
    raw = os.environ.get("GENCOV_JOBS", "").strip()
    if raw.isdigit() and int(raw) >= 1:
        return int(raw)
    return 1


def _scan_pattern(mem: np.ndarray, s: PartStructure, p: Pattern, lam: int):
    idx = _tuple_index_matrix(s, p)
    counts = _kernels.coverage_counts(mem, idx, lam)
    deficient = np.flatnonzero(counts < lam)
    first_row = idx[deficient[0]] if len(deficient) else None
    return len(idx), len(deficient), first_row


def verify(d: Design, jobs: int | None = None) -> VerificationReport:
    """Full-universe check that every admissible tuple lies in >= lambda blocks.

    first_uncovered is the first failing tuple in the global
    (pattern, tuple) enumeration order, independent of worker count.
    Strength 0 carries no obligations and is always valid.
    """
    s = d.structure
    if d.t == 0:
        return VerificationReport(True, 0, 0, None, 0)
    patterns = admissible_patterns(s, d.t)
    mem = _membership_matrix(d)
    jobs = default_jobs() if jobs is None else max(1, jobs)

    if jobs == 1 or len(patterns) == 1:
        results = [_scan_pattern(mem, s, p, d.lam) for p in patterns]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda p: _scan_pattern(mem, s, p, d.lam), patterns))

    checked = sum(r[0] for r in results)
    deficit = sum(r[1] for r in results)
    first: SetTuple | None = None
    for p, (_, bad, row) in zip(patterns, results):
        if bad:
            first = _tuple_from_row(s, p, row)
            break
    return VerificationReport(
        valid=deficit == 0,
        checked_patterns=len(patterns),
        checked_tuples=checked,
        first_uncovered=first,
        deficient_count=min(deficit, DEFICIT_CAP),
    )


def coverage_deficit(d: Design, cap: int = DEFICIT_CAP) -> list[tuple[SetTuple, int]]:
    """Up to cap under-covered tuples with their actual multiplicities,
    in the global enumeration order."""
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    if d.t == 0:
        return []
    s = d.structure
    mem = _membership_matrix(d)
    out: list[tuple[SetTuple, int]] = []
    for p in admissible_patterns(s, d.t):
        if len(out) >= cap:
            break
        idx = _tuple_index_matrix(s, p)
        counts = _kernels.coverage_counts(mem, idx, d.lam)
        for row_i in np.flatnonzero(counts < d.lam):
            out.append((_tuple_from_row(s, p, idx[row_i]), int(counts[row_i])))
            if len(out) >= cap:
                break
    return out
