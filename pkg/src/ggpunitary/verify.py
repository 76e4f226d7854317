"""Batch verification suites.

Every suite sweeps a finite range exhaustively and compares two independent
computations (or a computation against a structural bound).  Suites never
raise; failures and oracle errors are collected in a :class:`VerifyReport`.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .classes import brute_force_orbit_census, orbit_count
from .multiplicity import (
    duality_diagram_check,
    extended_multiplicity,
    ggp_partners,
    unipotent_multiplicity,
)
from .partitions import (
    Partition,
    first_row_removed,
    format_partition,
    is_2_transverse,
    partitions_of,
    prepend_row,
    transpose,
    two_hook_additions,
    two_hook_removals,
)
from .qseries import unipotent_degree, unitary_group_order
from .spectral import restriction_decomposition, verify_dimension_identity, weil_decomposition
from .theta import theta_multiplicity, theta_set

__all__ = ["VerifyReport", "SUITES", "run_suites", "partitions_up_to"]


@dataclass
class VerifyReport:
    suite: str
    cases_run: int = 0
    failures: list[tuple[str, str, str]] = field(default_factory=list)
    elapsed: float = 0.0
    error: str | None = None

    @property
    def ok(self) -> bool:
        return not self.failures and self.error is None

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f" error={self.error}" if self.error else ""
        return (f"{status} {self.suite}: cases={self.cases_run} "
                f"failures={len(self.failures)} elapsed={self.elapsed:.2f}s{extra}")

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "cases_run": self.cases_run,
            "failures": [
                {"input": i, "expected": e, "got": g} for i, e, g in self.failures
            ],
            "elapsed": round(self.elapsed, 3),
            "error": self.error,
        }


class _Recorder:
    def __init__(self, report: VerifyReport, max_failures: int = 50):
        self.report = report
        self.max_failures = max_failures
        self.failed = 0

    def check(self, ok: bool, desc: str, expected="", got=""):
        self.report.cases_run += 1
        if not ok:
            self.failed += 1
            if len(self.report.failures) < self.max_failures:
                self.report.failures.append((desc, str(expected), str(got)))


def partitions_up_to(n: int, start: int = 0) -> Iterable[Partition]:
    for k in range(start, n + 1):
        yield from partitions_of(k)


def _fmt(lam) -> str:
    return "[" + format_partition(lam) + "]"


def _euler_partition_counts(n: int) -> list[int]:
    """p(0..n) by the pentagonal number recurrence."""
    p = [1] + [0] * n
    for k in range(1, n + 1):
        total, j = 0, 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > k:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[k - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= k:
                total += sign * p[k - g2]
            j += 1
        p[k] = total
    return p


def _domino_removals_brute(lam: Partition) -> set[Partition]:
    if lam.size < 2:
        return set()
    cells = {(i, j) for i, row in enumerate(lam) for j in range(row)}
    out = set()
    for mu in partitions_of(lam.size - 2):
        if len(mu) > len(lam) or any(a > b for a, b in zip(mu, lam)):
            continue
        sub = {(i, j) for i, row in enumerate(mu) for j in range(row)}
        (a, b) = sorted(cells - sub)
        if abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1:
            out.add(mu)
    return out


def suite_partition(max_n: int | None = None) -> VerifyReport:
    rep = VerifyReport("partition")
    rec = _Recorder(rep)
    bound = lambda default: default if max_n is None else min(default, max_n)
    for lam in partitions_up_to(bound(14)):
        rec.check(transpose(transpose(lam)) == lam, f"transpose involution {_fmt(lam)}")
    for lam in partitions_up_to(bound(12)):
        removals = two_hook_removals(lam)
        rec.check(set(removals) == _domino_removals_brute(lam),
                  f"domino removals {_fmt(lam)}", _domino_removals_brute(lam), set(removals))
        for mu in removals:
            rec.check(lam in two_hook_additions(mu), f"addition inverts removal {_fmt(mu)}->{_fmt(lam)}")
        for mu in two_hook_additions(lam):
            rec.check(lam in two_hook_removals(mu), f"removal inverts addition {_fmt(lam)}->{_fmt(mu)}")
        swapped = {transpose(mu): t.swapped() for mu, t in removals.items()}
        rec.check(two_hook_removals(transpose(lam)) == swapped, f"domino/transpose {_fmt(lam)}")
        if lam:
            lam_t = transpose(lam)
            star = first_row_removed(lam)
            hits = [mu for mu in partitions_of(lam.size - lam[0]) if is_2_transverse(lam_t, transpose(mu))]
            rec.check(hits == [star], f"unique lambda_* for {_fmt(lam)}", [star], hits)
    top = bound(40)
    counts = _euler_partition_counts(top)
    for n in range(top + 1):
        rec.check(len(partitions_of(n)) == counts[n], f"p({n})", counts[n], len(partitions_of(n)))
    return rep


def suite_theta(max_n: int | None = None) -> VerifyReport:
    rep = VerifyReport("theta")
    rec = _Recorder(rep)
    bound = lambda default: default if max_n is None else min(default, max_n)
    # no lift below rank n - lam_1, first occurrence is lam_*
    for lam in partitions_up_to(bound(12), 1):
        n = lam.size
        for target in range(n - lam[0]):
            got = theta_set(lam, target).members
            rec.check(not got, f"below first occurrence {_fmt(lam)} -> U_{target}", (), got)
        got = theta_set(lam, n - lam[0]).members
        rec.check(got == (first_row_removed(lam),), f"first occurrence {_fmt(lam)}", first_row_removed(lam), got)
    # stable range: first rows never shrink
    for lam in partitions_up_to(bound(10), 1):
        n = lam.size
        for target in range(n + lam[0] - 1, n + lam[0] + 4):
            for mu in theta_set(lam, target):
                rec.check(mu[0] >= lam[0], f"stable first row {_fmt(lam)} -> {_fmt(mu)}")
    # lifts past the first row differ from [m+2, lam] by a domino
    for lam in partitions_up_to(bound(8), 1):
        for m in range(lam[0], lam[0] + 5):
            big = prepend_row(m + 2, lam)
            allowed = two_hook_removals(big)
            for mu in theta_set(lam, lam.size + m):
                if mu[0] <= m + 2:
                    rec.check(mu in allowed, f"domino removal {_fmt(lam)} m={m} -> {_fmt(mu)}")
    # two steps after first occurrence: lam_* plus a domino
    for lam in partitions_up_to(bound(10), 1):
        allowed = two_hook_additions(first_row_removed(lam))
        for mu in theta_set(lam, lam.size - lam[0] + 2):
            rec.check(mu in allowed, f"domino addition {_fmt(lam)} -> {_fmt(mu)}")
    # symmetry of the correspondence
    top = bound(12)
    lifts = {(lam, t): set(theta_set(lam, t).members) for lam in partitions_up_to(top) for t in range(top + 1)}
    for (lam, t), members in lifts.items():
        for mu in partitions_of(t):
            back = lam in lifts[(mu, lam.size)]
            rec.check((mu in members) == back, f"theta symmetry {_fmt(lam)},{_fmt(mu)}")
    return rep


def suite_duality(max_n: int | None = None) -> VerifyReport:
    rep = VerifyReport("duality")
    rec = _Recorder(rep)
    for lam in partitions_up_to(12 if max_n is None else max_n):
        for m in range(lam.size + 1):
            rec.check(duality_diagram_check(lam, m), f"duality {_fmt(lam)} m={m}")
    return rep


def suite_vanishing(max_n: int | None = None) -> VerifyReport:
    rep = VerifyReport("vanishing")
    rec = _Recorder(rep)
    for lam in partitions_up_to(12 if max_n is None else max_n, 1):
        for mu in partitions_up_to(lam.size - 1):
            if abs(lam[0] - (mu[0] if mu else 0)) >= 2:
                got = unipotent_multiplicity(lam, mu)
                rec.check(got == 0, f"vanishing {_fmt(lam)} vs {_fmt(mu)}", 0, got)
    return rep


def suite_census(max_n: int | None = None) -> VerifyReport:
    rep = VerifyReport("census")
    rec = _Recorder(rep)
    for q in (2, 3):
        census = brute_force_orbit_census(3, q)
        for d, brute in census.items():
            rec.check(orbit_count(d, q) == brute, f"orbit count d={d} q={q}", brute, orbit_count(d, q))
    for q in (2, 3, 5, 7, 9):
        for d in range(1, 13):
            lhs = sum(e * orbit_count(e, q) for e in range(1, d + 1) if d % e == 0)
            rhs = q**d - (-1) ** d
            rec.check(lhs == rhs, f"fixed points d={d} q={q}", rhs, lhs)
    return rep


def suite_dimension(max_n: int | None = None, qs: Iterable[int] = (3, 5)) -> VerifyReport:
    rep = VerifyReport("dimension")
    rec = _Recorder(rep)
    default_bound = {3: 5, 5: 4}
    for q in qs:
        top = max_n if max_n is not None else default_bound.get(q, 4)
        for lam in partitions_up_to(top):
            kinds = [weil_decomposition] if not lam else [restriction_decomposition, weil_decomposition]
            for build in kinds:
                dec = build(lam, q)
                report = verify_dimension_identity(dec)
                rec.check(report.ok, f"{dec.kind.value} {_fmt(lam)} q={q}", report.expected, report.total)
                rec.check(dec.is_multiplicity_free(), f"multiplicity-free {dec.kind.value} {_fmt(lam)} q={q}")
    return rep


def suite_degree(max_n: int | None = None) -> VerifyReport:
    rep = VerifyReport("degree")
    rec = _Recorder(rep)
    for q in (3, 5, 7):
        for n in range(1, 9):
            rec.check(unipotent_degree(Partition([n]), q) == 1, f"trivial n={n} q={q}")
            steinberg = unipotent_degree(Partition([1] * n), q)
            rec.check(steinberg == q ** (n * (n - 1) // 2), f"Steinberg n={n} q={q}",
                      q ** (n * (n - 1) // 2), steinberg)
        for lam in partitions_up_to(10 if max_n is None else max_n):
            try:
                deg = unipotent_degree(lam, q)
            except ArithmeticError as exc:
                rec.check(False, f"hook formula {_fmt(lam)} q={q}", "exact", exc)
                continue
            order = unitary_group_order(lam.size, q).total
            rec.check(order % deg == 0, f"degree divides |U_n| {_fmt(lam)} q={q}")
    rec.check(unipotent_degree(Partition([2, 1]), 3) == 6, "cuspidal [2,1] at q=3", 6,
              unipotent_degree(Partition([2, 1]), 3))
    return rep


def suite_multiplicity_one(max_n: int | None = None) -> VerifyReport:
    rep = VerifyReport("multiplicity-one")
    rec = _Recorder(rep)
    top = 8 if max_n is None else max_n
    for lam in partitions_up_to(top):
        for mu in partitions_up_to(lam.size):
            values = [unipotent_multiplicity(lam, mu), theta_multiplicity(lam, mu)]
            for ell in range(0, lam.size + 2 - mu.size):
                values += [extended_multiplicity(lam, mu, ell, True),
                           extended_multiplicity(lam, mu, ell, False)]
            rec.check(all(v in (0, 1) for v in values), f"multiplicities {_fmt(lam)},{_fmt(mu)}", "{0,1}", values)
        for m in range(lam.size + 1):
            partners = ggp_partners(lam, m)
            rec.check(len(partners) == len(set(partners)), f"partners distinct {_fmt(lam)} m={m}")
    return rep


SUITES: dict[str, Callable[..., VerifyReport]] = {
    "partition": suite_partition,
    "theta": suite_theta,
    "duality": suite_duality,
    "vanishing": suite_vanishing,
    "census": suite_census,
    "dimension": suite_dimension,
    "degree": suite_degree,
    "multiplicity-one": suite_multiplicity_one,
}


def _run_one(name: str, max_n: int | None, qs: tuple[int, ...] | None) -> VerifyReport:
    start = time.perf_counter()
    try:
        if name == "dimension" and qs:
            report = SUITES[name](max_n, qs)
        else:
            report = SUITES[name](max_n)
    except Exception as exc:  # a broken suite must not hide the others
        report = VerifyReport(name, error=f"{type(exc).__name__}: {exc}")
    report.elapsed = time.perf_counter() - start
    return report


def run_suites(
    selection: Iterable[str] = ("all",),
    max_n: int | None = None,
    qs: Iterable[int] | None = None,
    jobs: int = 1,
) -> list[VerifyReport]:
    """Run the named suites (``"all"`` for every one) and return their reports.

    ``max_n`` caps the partition size swept by each suite (default: each
    suite's own full range); ``qs`` selects the fields for the dimension suite.
    """
    names = list(SUITES) if "all" in selection else list(dict.fromkeys(selection))
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
    qs = tuple(qs) if qs else None
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_one, names, [max_n] * len(names), [qs] * len(names)))
    else:
        reports = [_run_one(n, max_n, qs) for n in names]
    return sorted(reports, key=lambda r: names.index(r.suite))
