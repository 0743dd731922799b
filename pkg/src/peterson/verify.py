"""Named verification suites shared by the CLI and the acceptance tests."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor

from .combinatorics import Subset, all_subsets
from .errors import DomainError, ResourceCapExceeded
from .gkm import VerifyReport, check_monk_pairs
from .groebner import normal_form
from .presentation import golden_n4, ideal_K, quadratic_conjecture_check, vanishing_check
from .schubert import (
    BasisExpansion, expand_monomial, giambelli_verify, monk_product,
    restrict_class, restrict_generator, restrict_generator_oneline,
    stability_restrict, stirling_expansion,
)


def _fan_out(fn, chunks, jobs):
    if jobs <= 1 or len(chunks) <= 1:
        return [fn(*c) for c in chunks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(fn, *c) for c in chunks]
        return [f.result() for f in futures]


def monk_oracle_suite(n, jobs=1):
    report = VerifyReport("monk-oracle")
    chunks = [(n, [(i, A) for A in all_subsets(n)]) for i in range(1, n)]
    for rows in _fan_out(check_monk_pairs, chunks, jobs):
        for ident, expected, actual, ok in rows:
            report.total += 1
            if not ok:
                report.failures.append((ident, expected, actual))
    negative = [f"p{i}*p{A}" for i in range(1, n) for A in all_subsets(n)
                if not monk_is_positive(monk_product(n, i, A))]
    report.details = {"pairs": report.total, "non_positive": negative}
    report.failures += [(ident, "nonnegative integer coefficients", "negative") for ident in negative]
    return report


def monk_is_positive(e: BasisExpansion) -> bool:
    """Every coefficient is ``c * t^d`` with ``c`` a nonnegative integer."""
    for _, v in e.items():
        if not v.is_monomial():
            return False
        (_, c), = v.coeffs().items()
        if c < 0 or c.denominator != 1:
            return False
    return True


def _giambelli_rows(n, subsets):
    return [(str(A), giambelli_verify(n, A)) for A in subsets]


def giambelli_suite(n, jobs=1):
    report = VerifyReport("giambelli")
    subsets = all_subsets(n)
    chunks = [(n, list(subsets[k::max(jobs, 1)])) for k in range(max(jobs, 1))]
    rows = [row for part in _fan_out(_giambelli_rows, chunks, jobs) for row in part]
    for ident, ok in sorted(rows, key=lambda r: Subset.parse(n, r[0]).sort_key()):
        report.record(f"p{ident}", True, ok)
    return report


def stirling_suite(n, jobs=1):
    report = VerifyReport("stirling")
    for k in range(1, n):
        expected = stirling_expansion(n, k)
        actual = expand_monomial(n, [1] * k)
        report.record(f"p1^{k}", expected, actual)
    report.details = {"powers": list(range(1, n))}
    return report


def vanishing_suite(n, jobs=1):
    return vanishing_check(n)


def stability_suite(n, jobs=1):
    """Classes ``p_A`` at rank ``n+1`` versus rank ``n`` at every rank-``n`` fixed point."""
    report = VerifyReport("stability")
    for A in all_subsets(n):
        upper = BasisExpansion.basis(A.at_rank(n + 1))
        lower = stability_restrict(upper)
        if lower != BasisExpansion.basis(A):
            report.record(f"p{A}", BasisExpansion.basis(A), lower)
            continue
        for B in all_subsets(n):
            report.record(f"p{A}(w{B})", restrict_class(upper, B.at_rank(n + 1)),
                          restrict_class(lower, B))
    return report


def restriction_suite(n, jobs=1):
    """Closed-form restriction against the one-line sum."""
    report = VerifyReport("restriction")
    for B in all_subsets(n):
        for i in range(1, n):
            closed = restrict_generator(n, i, B)
            report.record(f"p{i}(w{B})", restrict_generator_oneline(n, i, B), closed)
            if (i in B) == closed.is_zero():
                report.failures.append((f"p{i}(w{B}) support", str(i in B), str(closed)))
    return report


def golden_n4_suite(n=4, jobs=1):
    if n != 4:
        raise DomainError("the golden-n4 suite only runs at n = 4")
    report = VerifyReport("golden-n4")
    produced = ideal_K(4).polys()
    golden = golden_n4()
    unmatched = list(produced)
    matched = 0
    for idx, g in enumerate(golden, start=1):
        hit = next((p for p in unmatched if p.is_positive_multiple_of(g)), None)
        report.total += 1
        if hit is None:
            report.failures.append((f"generator {idx}", str(g), "missing"))
        else:
            unmatched.remove(hit)
            matched += 1
    report.record("extra generators", 0, len(unmatched))
    for idx in (6, 7):
        report.record(f"generator {idx} mod generators 1,3", 0,
                      normal_form(golden[idx - 1], [golden[0], golden[2]]))
    report.details = {"generators": len(produced), "matched": matched}
    return report


def quadratic_suite(n, jobs=1):
    report = VerifyReport("quadratic")
    try:
        ok = quadratic_conjecture_check(n)
    except ResourceCapExceeded as exc:
        report.status = "undetermined"
        report.details = {"reason": str(exc)}
        return report
    report.record(f"K({n}) generated by quadratics", True, ok)
    return report


SUITES = {
    "monk-oracle": monk_oracle_suite,
    "giambelli": giambelli_suite,
    "stirling": stirling_suite,
    "vanishing": vanishing_suite,
    "stability": stability_suite,
    "golden-n4": golden_n4_suite,
    "quadratic": quadratic_suite,
    "restriction": restriction_suite,
}


def run_suite(name: str, n: int, jobs: int = 1) -> VerifyReport:
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    start = time.perf_counter()
    report = SUITES[name](n, jobs=jobs)
    report.wall_time = time.perf_counter() - start
    return report
