"""Acceptance suite: one test per criterion, each at its stated tolerance and time budget.

A pass/fail line per criterion is printed in the terminal summary (see conftest.py).
"""

import time
from contextlib import contextmanager

from peterson.combinatorics import Subset, all_subsets, fixed_point_permutation, stirling2
from peterson.groebner import normal_form
from peterson.poly import UniPoly
from peterson.presentation import golden_n4, ideal_K, quadratic_conjecture_check, vanishing_check
from peterson.schubert import (
    BasisExpansion, expand_monomial, giambelli_sigma, monk_product, restrict_basis,
    restrict_class, restrict_generator, restrict_generator_oneline, stability_restrict,
    stirling_expansion,
)
from peterson.gkm import oracle_check_monk
from peterson.verify import monk_is_positive

t = UniPoly.t()


def _clear_caches():
    for fn in (restrict_generator, monk_product, restrict_basis):
        fn.cache_clear()


@contextmanager
def budget(seconds):
    _clear_caches()
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, budget {seconds}s"


def _monk_products_seen(n):
    return [monk_product(n, i, A) for i in range(1, n) for A in all_subsets(n)]


def test_criterion_1_fixed_point_census():
    with budget(1):
        four = [str(fixed_point_permutation(A)) for A in all_subsets(4)]
        assert sorted(four) == sorted(
            ["1234", "2134", "1324", "1243", "3214", "1432", "2143", "4321"])
        for n in range(1, 11):
            points = {fixed_point_permutation(A).one_line for A in all_subsets(n)}
            assert len(points) == 2 ** (n - 1)


def test_criterion_2_monk_oracle_equivalence():
    with budget(30):
        for n in range(1, 7):
            report = oracle_check_monk(n)
            assert report.passed, report.failures[:3]
            assert report.total == (n - 1) * 2 ** (n - 1)
            assert all(map(monk_is_positive, _monk_products_seen(n)))


def test_criterion_3_giambelli():
    with budget(60):
        for n in range(1, 8):
            for A in all_subsets(n):
                e = expand_monomial(n, A.members).scale(giambelli_sigma(A))
                assert e == BasisExpansion.basis(A), (n, str(A))
            assert all(map(monk_is_positive, _monk_products_seen(n)))


def test_criterion_4_stirling_identity():
    with budget(30):
        assert stirling2(3, 2) == 3
        assert expand_monomial(4, [1, 1, 1])[Subset.of(4, [1, 2])] == 3 * t
        for n in range(2, 9):
            for k in range(1, n):
                expected = BasisExpansion(n, {
                    Subset.interval(n, 1, j): stirling2(k, j) * t ** (k - j)
                    for j in range(1, k + 1)})
                assert expand_monomial(n, [1] * k) == expected == stirling_expansion(n, k)
            assert all(map(monk_is_positive, _monk_products_seen(n)))


def test_criterion_5_vanishing_relations():
    seen = set()
    with budget(60):
        for n in range(1, 8):
            report = vanishing_check(n)
            assert report.passed, report.failures[:3]
            seen |= {case for case, count in report.details["cases"].items() if count}
    assert seen == {"singleton", "right-extension", "left-extension", "gluing"}


def test_criterion_6_golden_presentation():
    with budget(1):
        produced = list(ideal_K(4).polys())
        golden = golden_n4()
        for g in golden:
            hit = next(f for f in produced if f.is_positive_multiple_of(g))
            produced.remove(hit)
        assert produced == []
        assert normal_form(golden[5], [golden[0], golden[2]]).is_zero()
        assert normal_form(golden[6], [golden[0], golden[2]]).is_zero()


def test_criterion_7_quadratic_conjecture():
    with budget(300):
        for n in (2, 3, 4, 5):
            assert quadratic_conjecture_check(n) is True


def test_criterion_8_restriction_double_implementation():
    with budget(10):
        for n in range(1, 9):
            for B in all_subsets(n):
                for i in range(1, n):
                    assert restrict_generator(n, i, B) == restrict_generator_oneline(n, i, B)
            for i in range(1, n):
                assert restrict_generator(n, 1, Subset.interval(n, 1, i)) == i * t
        assert restrict_generator(4, 1, Subset.of(4, [1, 2])) == 2 * t
        assert restrict_generator(4, 2, Subset.of(4, [1, 2, 3])) == 4 * t


def test_criterion_9_stability():
    with budget(10):
        for n in range(1, 7):
            for A in all_subsets(n):
                upper = BasisExpansion.basis(A.at_rank(n + 1))
                lower = stability_restrict(upper)
                assert lower == BasisExpansion.basis(A)
                for B in all_subsets(n):
                    assert restrict_class(upper, B.at_rank(n + 1)) == restrict_class(lower, B)


def test_criterion_10_positivity():
    for n in range(1, 9):
        for e in _monk_products_seen(n):
            for _, coeff in e.items():
                (_, c), = coeff.coeffs().items()
                assert c > 0 and c.denominator == 1
