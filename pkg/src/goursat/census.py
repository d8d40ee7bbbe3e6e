"""Exhaustive census of RVT codes up to a given level.

Every critical code is pushed through both routes to the Puiseux
characteristic (the direct derived-vector formula and the E-operator
recursion on the code) and through every structural check the two routes
imply. Disagreements are collected as data in a :class:`CensusReport`
rather than raised.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .codes import (
    RvtCode,
    derived_to_rvt,
    invert_profile,
    parse_truncation,
    rvt_to_derived,
    truncate_last_stage,
    validate_rvt,
)
from .curves import puiseux_from_exponents, validate_puiseux, witness_exponents
from .errors import GoursatError
from .invariants import derived_to_sgv
from .mz import e_operator, puiseux_from_rvt, split_code
from .theorem import divisibility_points, puiseux_from_derived

_NEXT = {"R": "RV", "V": "RVT", "T": "RVT"}
PARTITION_PREFIX = 6


def fibonacci(k: int) -> int:
    """``F(k)`` with ``F(1) = F(2) = 1``."""
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def _extend(words: list[str]) -> list[str]:
    # lexicographic (R < V < T) order is preserved by extending in order
    return [w + ch for w in words for ch in _NEXT[w[-1]]]


def enumerate_words(max_level: int, prefix: str = "RR", min_level: int | None = None) -> Iterator[str]:
    """Valid code strings extending ``prefix``, shortest first, lexicographic within a length."""
    validate_rvt(prefix)
    lo = len(prefix) if min_level is None else max(min_level, len(prefix))
    words = [prefix]
    level = len(prefix)
    while level <= max_level:
        if level >= lo:
            yield from words
        words = _extend(words)
        level += 1


def enumerate_codes(max_level: int, only_critical: bool = False) -> Iterator[RvtCode]:
    """Every valid code of length ``2..max_level`` in shortlex order (R < V < T)."""
    if max_level < 2:
        raise ValueError(f"max_level must be at least 2, got {max_level}")
    for w in enumerate_words(max_level):
        if only_critical and w[-1] == "R":
            continue
        yield validate_rvt(w)


def transfer_matrix_counts(level: int) -> tuple[int, int]:
    """(valid, critical) code counts at ``level`` from the 3-state last-letter automaton.

    States are the last letter; R may be followed by R or V, V and T by any
    letter. The seed is the mandatory prefix RR at level 2.
    """
    if level < 2:
        raise ValueError("level must be at least 2")
    r, v, t = 1, 0, 0
    for _ in range(level - 2):
        r, v, t = r + v + t, r + v + t, v + t
    return r + v + t, v + t


@dataclass
class Failure:
    code: str
    check: str
    path_a: str
    path_b: str = ""

    def __str__(self) -> str:
        tail = f" | {self.path_b}" if self.path_b else ""
        return f"{self.code}: {self.check}: {self.path_a}{tail}"


@dataclass
class LevelStats:
    valid: int = 0
    critical: int = 0
    max_sgv_length: int = 0
    extremal_code: str = ""

    def absorb(self, other: LevelStats) -> None:
        self.valid += other.valid
        self.critical += other.critical
        if other.max_sgv_length > self.max_sgv_length or (
            other.max_sgv_length == self.max_sgv_length
            and other.extremal_code
            and (not self.extremal_code or _shortlex(other.extremal_code) < _shortlex(self.extremal_code))
        ):
            self.max_sgv_length = other.max_sgv_length
            self.extremal_code = other.extremal_code


def _shortlex(word: str) -> tuple:
    return len(word), word.translate(str.maketrans("RVT", "abc"))


@dataclass
class CensusReport:
    max_level: int
    levels: dict[int, LevelStats] = field(default_factory=dict)
    failures: list[Failure] = field(default_factory=list)
    checks: dict[str, int] = field(default_factory=dict)
    max_g: int = 0
    g_histogram: dict[int, int] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: CensusReport) -> CensusReport:
        """Associative, commutative fold of two partial reports."""
        out = CensusReport(max(self.max_level, other.max_level))
        for src in (self, other):
            for lvl, st in src.levels.items():
                out.levels.setdefault(lvl, LevelStats()).absorb(st)
            for k, n in src.checks.items():
                out.checks[k] = out.checks.get(k, 0) + n
            for g, n in src.g_histogram.items():
                out.g_histogram[g] = out.g_histogram.get(g, 0) + n
        out.failures = sorted(self.failures + other.failures, key=lambda f: (_shortlex(f.code), f.check))
        out.max_g = max(self.max_g, other.max_g)
        out.elapsed = self.elapsed + other.elapsed
        return out

    def fibonacci_table(self) -> list[tuple[int, int, int, str]]:
        """Rows ``(level, max sgv length, F(level + 2), extremal code)``."""
        return [
            (k, st.max_sgv_length, fibonacci(k + 2), st.extremal_code)
            for k, st in sorted(self.levels.items())
        ]

    def summary(self) -> str:
        lines = [f"census up to level {self.max_level}: {sum(s.valid for s in self.levels.values())} codes, "
                 f"{sum(s.critical for s in self.levels.values())} critical, max g = {self.max_g}"]
        if self.g_histogram:
            lines.append("critical codes by g: " + ", ".join(f"g={g}: {n}" for g, n in sorted(self.g_histogram.items())))
        lines.append("level  valid  critical  max(sum der + 1)  F(level+2)  extremal")
        for k, mx, fib, code in self.fibonacci_table():
            st = self.levels[k]
            lines.append(f"{k:>5}  {st.valid:>5}  {st.critical:>8}  {mx:>16}  {fib:>10}  {code}")
        lines.append(f"failures: {len(self.failures)}")
        lines.extend(f"  {f}" for f in self.failures[:20])
        lines.append(f"elapsed: {self.elapsed:.2f}s")
        return "\n".join(lines)


def check_code(word: str, report: CensusReport) -> None:
    """Run every census check on one code, recording counts and failures in ``report``."""
    checks = report.checks
    fails = report.failures

    def tick(name: str) -> None:
        checks[name] = checks.get(name, 0) + 1

    code = validate_rvt(word)
    level = len(word)
    st = report.levels.setdefault(level, LevelStats())
    st.valid += 1

    try:
        der = rvt_to_derived(code)
    except GoursatError as exc:
        fails.append(Failure(word, "code->der", str(exc)))
        return
    tick("code_round_trip")
    back = derived_to_rvt(der)
    tick("der_round_trip")
    if back.letters != word or invert_profile(back.profile) != der:
        fails.append(Failure(word, "der->code->der", der.format_blocks(), back.letters))
    if der.N != level:
        fails.append(Failure(word, "length conservation", f"sum m_i = {der.N}", f"level = {level}"))

    sgv_len = der.total + 1
    if sgv_len > st.max_sgv_length or (sgv_len == st.max_sgv_length and _shortlex(word) < _shortlex(st.extremal_code)):
        st.max_sgv_length, st.extremal_code = sgv_len, word
    tick("fibonacci_bound")
    if sgv_len > fibonacci(level + 2):
        fails.append(Failure(word, "fibonacci bound", f"sum der + 1 = {sgv_len}", f"F({level + 2}) = {fibonacci(level + 2)}"))
    tick("criticality")
    r1_zero = code.v >= 1 and code.profile.r[0] == 0
    if not r1_zero == code.is_critical == der.is_critical:
        fails.append(Failure(
            word, "criticality",
            f"r_1 = 0: {r1_zero}, ends in V/T: {code.is_critical}",
            f"m_1 = M_2: {der.is_critical}",
        ))
        return

    # Case-1 segments always carry at least one trailing R
    vals = der.values
    tick("case1_runs")
    for j in range(2, der.v + 1):
        if vals[j] % vals[j - 1] == 0 and code.profile.r[j - 1] < 1:
            fails.append(Failure(word, "case-1 r_j >= 1", f"r_{j} = {code.profile.r[j - 1]}"))

    if not code.is_critical:
        return
    st.critical += 1

    try:
        pc_b = puiseux_from_rvt(code)
        pc_a = puiseux_from_derived(der, check_realizable=False)
    except GoursatError as exc:
        fails.append(Failure(word, "puiseux", str(exc)))
        return
    tick("theorem_vs_mz")
    if pc_a != pc_b:
        fails.append(Failure(word, "theorem = mz", f"theorem {pc_a}", f"mz {pc_b}"))
        return

    tick("puiseux_valid")
    val = validate_puiseux(pc_a)
    if not val:
        fails.append(Failure(word, "gcd chain", str(pc_a), "; ".join(val.problems)))
    else:
        tick("witness_round_trip")
        if puiseux_from_exponents(witness_exponents(pc_a)) != pc_a:
            fails.append(Failure(word, "witness round trip", str(pc_a)))

    dec = split_code(code)
    tick("e_pairs")
    for w in dec.omegas:
        a, b = e_operator(w)
        if not (a < b and math.gcd(a, b) == 1):
            fails.append(Failure(word, "E-pair", f"E({w}) = ({a}, {b})"))
    prof = divisibility_points(der)
    tick("q_equals_g")
    if not dec.q == pc_a.g == prof.g:
        fails.append(Failure(word, "q = g = |S|", f"q = {dec.q}, g = {pc_a.g}", f"|S| = {prof.g}"))
    tick("lambda0_is_last_block")
    if pc_a.lambda0 != vals[-1]:
        fails.append(Failure(word, "lambda_0 = M_{v+1}", str(pc_a.lambda0), str(vals[-1])))
    report.max_g = max(report.max_g, prof.g)
    report.g_histogram[prof.g] = report.g_histogram.get(prof.g, 0) + 1

    if prof.g >= 2:
        tick("truncation")
        try:
            tr = truncate_last_stage(der, check=False)
            parsed = parse_truncation(code, tr.s, tr.omega)
        except GoursatError as exc:
            fails.append(Failure(word, "truncation", str(exc)))
            return
        if parsed != tr.beta:
            fails.append(Failure(word, "truncation", tr.beta.format_blocks(), parsed.format_blocks()))
        if dec.c[-1] != tr.s or dec.omegas[-1] != tr.omega:
            fails.append(Failure(word, "truncation tail", f"R^{tr.s} {tr.omega}", f"R^{dec.c[-1]} {dec.omegas[-1]}"))


def _run_partition(args: tuple[str, int, int | None, int | None]) -> CensusReport:
    prefix, max_level, min_level, cap = args
    report = CensusReport(max_level)
    t0 = time.perf_counter()
    top = max_level if cap is None else cap
    for w in enumerate_words(top, prefix, min_level):
        check_code(w, report)
    report.elapsed = time.perf_counter() - t0
    return report


def _partitions(max_level: int) -> list[tuple[str, int, int | None, int | None]]:
    p = min(PARTITION_PREFIX, max_level)
    parts: list[tuple[str, int, int | None, int | None]] = []
    if p > 2:
        parts.append(("RR", max_level, None, p - 1))
    parts.extend((w, max_level, None, None) for w in enumerate_words(p, "RR", p))
    return parts


def cross_validate(max_level: int = 14, jobs: int = 1) -> CensusReport:
    """Check every valid code of length ``2..max_level``; see :func:`check_code`."""
    if max_level < 3:
        raise ValueError(f"max_level must be at least 3 (no critical codes below), got {max_level}")
    t0 = time.perf_counter()
    if jobs <= 1:
        report = _run_partition(("RR", max_level, None, None))
    else:
        report = CensusReport(max_level)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_run_partition, _partitions(max_level)):
                report = report.merge(part)
    report.max_level = max_level
    report.elapsed = time.perf_counter() - t0
    return report


@dataclass(frozen=True)
class FibonacciRecord:
    level: int
    max_sgv_length: int
    fibonacci: int
    code: str

    @property
    def within_bound(self) -> bool:
        return self.max_sgv_length <= self.fibonacci

    @property
    def attains_bound(self) -> bool:
        return self.max_sgv_length == self.fibonacci


def fibonacci_extremes(max_level: int) -> list[FibonacciRecord]:
    """Per level, the largest ``sum(der) + 1`` over all valid codes and the first code attaining it."""
    if max_level < 2:
        raise ValueError(f"max_level must be at least 2, got {max_level}")
    best: dict[int, tuple[int, str]] = {}
    for w in enumerate_words(max_level):
        total = rvt_to_derived(w).total + 1
        cur = best.get(len(w))
        if cur is None or total > cur[0]:
            best[len(w)] = (total, w)
    return [
        FibonacciRecord(k, best[k][0], fibonacci(k + 2), best[k][1])
        for k in sorted(best)
    ]


CATALOG_FIELDS = ("code", "level", "dim", "sgv", "der", "der_blocks", "critical", "puiseux", "g", "sgv_length")


def catalog_record(code: RvtCode | str) -> dict:
    """One catalog row. List-valued fields are lists; ``puiseux`` is ``None`` for non-critical codes."""
    code = validate_rvt(code)
    der = rvt_to_derived(code)
    pc = puiseux_from_derived(der, check_realizable=False) if code.is_critical else None
    return {
        "code": code.letters,
        "level": code.level,
        "dim": code.level + 2,
        "sgv": list(derived_to_sgv(der).dims),
        "der": list(der.flat),
        "der_blocks": [list(b) for b in der.blocks],
        "critical": code.is_critical,
        "puiseux": None if pc is None else list(pc.as_tuple()),
        "g": divisibility_points(der).g,
        "sgv_length": der.total + 1,
    }


def catalog(max_level: int) -> Iterator[dict]:
    for code in enumerate_codes(max_level):
        yield catalog_record(code)
