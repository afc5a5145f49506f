"""Bound functions, their winners and the derived statistics."""
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cliquebounds.core.bounds import (
    conbd_lower,
    fj_series,
    fj_statistic,
    iterated_lgbd,
    iterated_smbd,
    kalai_eckhoff_bound,
    lgbd,
    lgbd_wins,
    main_bound,
    nonconsec_bound,
    nonconsec_components,
    nonconsec_report,
    oldbd,
    oldbd_iterate,
    ratbound_rhs,
    ratio_proxy,
    ratio_stats,
    smbd,
    strictness_gap,
)
from cliquebounds.core.binomial import binom, r_sum
from cliquebounds.core.representations import cascade_terms
from cliquebounds.errors import DomainError
from cliquebounds.models.bounds import Winner


class TestKnownValues:

    def test_lgbd_wins_at_102(self):
        report = main_bound(102, 3)
        assert (report.oldbd, report.lgbd, report.smbd) == (149, 147, 146)
        assert report.main == 147
        assert report.winner == Winner.LGBD

    def test_smbd_wins_at_70(self):
        report = main_bound(70, 3)
        assert report.oldbd == 86
        assert report.lgbd == 81
        assert report.smbd == 85
        assert report.main == 85
        assert report.winner == Winner.SMBD

    def test_other_values(self):
        assert lgbd(85, 4) == 62
        assert smbd(20, 3) == 10
        assert lgbd(20, 3) == 15
        assert kalai_eckhoff_bound(35, 3, 4) == 17
        assert kalai_eckhoff_bound(70, 3, 7) == 85

    def test_zero_cliques(self):
        report = main_bound(0, 3)
        assert (report.oldbd, report.lgbd, report.smbd, report.main) == (0, 0, 0, 0)

    def test_smbd_undefined_when_leading_term_equals_k(self):
        assert smbd(1, 3) is None
        report = main_bound(1, 3)
        assert report.winner == Winner.LGBD
        assert report.main == report.lgbd == 0
        assert strictness_gap(1, 3) is None

    def test_lgbd_is_oldbd_below_three(self):
        for m in range(1, 60):
            assert lgbd(m, 2) == oldbd(m, 2)
            assert lgbd(m, 1) == oldbd(m, 1)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            oldbd(-1, 3)
        with pytest.raises(DomainError):
            lgbd(5, 0)
        with pytest.raises(DomainError):
            kalai_eckhoff_bound(10, 3, 2)
        with pytest.raises(DomainError):
            nonconsec_bound(10, 3, 0)


class TestBoundRelations:

    @pytest.mark.parametrize("k", [3, 4])
    def test_main_never_exceeds_oldbd(self, k):
        for m in range(1, 2000):
            report = main_bound(m, k)
            assert report.lgbd <= report.oldbd
            assert report.main <= report.oldbd

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_smbd_strictly_below_oldbd(self, k):
        for m in range(1, 500):
            gap = strictness_gap(m, k)
            if gap is not None:
                assert gap > 0, m

    @given(st.integers(min_value=1, max_value=5000), st.integers(min_value=1, max_value=5))
    def test_kalai_eckhoff_with_many_colors_is_oldbd(self, m, k):
        r = cascade_terms(m, k)[0] + 1
        assert kalai_eckhoff_bound(m, k, r) == oldbd(m, k)

    @given(st.integers(min_value=1, max_value=5000), st.integers(min_value=1, max_value=5))
    def test_step_one_matches_main_bound(self, m, k):
        assert nonconsec_bound(m, k, 1) == main_bound(m, k).main

    def test_iterates_start_with_the_single_step(self):
        assert iterated_lgbd(102, 3, 1) == lgbd(102, 3)
        assert iterated_smbd(70, 3, 1) == smbd(70, 3)
        assert oldbd_iterate(102, 3, 1) == 149
        assert oldbd_iterate(102, 3, 2) == oldbd(149, 4)
        assert iterated_smbd(1, 3, 2) is None


class TestNonconsecutive:

    def test_two_steps_up(self):
        assert nonconsec_bound(20, 3, 2) == 6
        assert nonconsec_components(70, 3, 2) == (61, 61)
        assert nonconsec_bound(70, 3, 2) == 61

    def test_report(self):
        report = nonconsec_report(70, 3, 2)
        assert report.step == 2
        assert report.bound == 61
        assert report.colored_component == 61

    def test_undefined_colored_component(self):
        first, second = nonconsec_components(3, 3, 2)
        assert second is None
        assert first == nonconsec_bound(3, 3, 2)


class TestStatistics:

    def test_conbd_lower(self):
        assert conbd_lower(70, 3) == 81
        assert conbd_lower(102, 3) == 147
        with pytest.raises(DomainError):
            conbd_lower(70, 2)

    def test_ratio_is_zero_when_lgbd_meets_the_lower_bound(self):
        assert ratio_proxy(70, 3) == 0
        stats = ratio_stats(70, 3)
        assert stats.conbd_lower == 81
        assert stats.ratbound_rhs is None

    def test_ratbound_rhs_needs_a_large_third_term(self):
        # third cascade term 10 > 9 = k^2
        m = 220 + 55 + 10
        assert cascade_terms(m, 3) == (12, 11, 10)
        assert ratbound_rhs(m, 3) == Fraction(9, 1)
        assert ratbound_rhs(m - 1, 3) is None

    @settings(deadline=None)
    @given(st.integers(min_value=1, max_value=3000))
    def test_ratio_proxy_stays_under_its_bound(self, m):
        proxy = ratio_proxy(m, 3)
        assert 0 <= proxy <= 1
        rhs = ratbound_rhs(m, 3)
        if rhs is not None:
            assert proxy <= rhs

    def test_fj_series_matches_direct_count(self):
        series = fj_series([10, 50, 200], 3)
        for j, value in series.items():
            wins = sum(1 for m in range(1, j + 1) if lgbd_wins(m, 3))
            assert value == Fraction(wins, j)
            assert 0 <= value <= 1
        assert fj_statistic(50, 3) == series[50]

    def test_fj_domain(self):
        with pytest.raises(DomainError):
            fj_statistic(10, 2)
        with pytest.raises(DomainError):
            fj_series([0, 5], 3)


class TestMonotonicity:

    @staticmethod
    def _oldbd_table(k, limit):
        return [oldbd(m, k) for m in range(limit + 1)]

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_oldbd_is_superadditive(self, k):
        values = self._oldbd_table(k, 600)
        for m in range(1, 301):
            for n in range(m, 301):
                assert values[m + n] >= values[m] + values[n], (m, n)

    @pytest.mark.slow
    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_oldbd_is_superadditive_to_three_thousand(self, k):
        values = self._oldbd_table(k, 6000)
        for m in range(1, 3001):
            base = values[m]
            assert all(values[m + n] >= base + values[n] for n in range(m, 3001)), m

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_oldbd_grows_with_m(self, k):
        values = self._oldbd_table(k, 5000)
        assert all(a <= b for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize("k", [2, 3, 4, 5])
    def test_main_bound_grows_with_m(self, k):
        previous = 0
        for m in range(1, 2001):
            current = main_bound(m, k).main
            assert current >= previous, m
            previous = current

    def test_iterating_smbd_differs_from_the_one_shot_form(self):
        assert iterated_smbd(20, 3, 2) == 0
        assert nonconsec_components(20, 3, 2)[1] == 2


CASES = 600
TOP_TERM = 40


def random_cascade(rng, k):
    """A k-cascade with leading term at most TOP_TERM."""
    m = rng.randint(1, binom(TOP_TERM + 1, k) - 1)
    return cascade_terms(m, k)


def collect(draw, cases=CASES):
    found = []
    for _ in range(50 * cases):
        case = draw()
        if case is not None:
            found.append(case)
            if len(found) == cases:
                return found
    raise AssertionError(f"only {len(found)} cases drawn")


class TestCascadeInequalities:
    """Inequalities between cascade sums, on random cascades with k <= 6."""

    def test_dominance_carries_to_every_level(self):
        rng = random.Random(11)

        def draw():
            k = rng.randint(1, 6)
            a, b = sorted((random_cascade(rng, k), random_cascade(rng, k)), key=lambda t: r_sum(k, t))
            return k, b, a

        for k, a, b in collect(draw):
            assert r_sum(k, a) >= r_sum(k, b)
            for j in range(1, k + 3):
                assert r_sum(j, a) >= r_sum(j, b), (k, j, a, b)

    def test_merging_two_families_never_loses_upper_cliques(self):
        rng = random.Random(12)

        def draw():
            k = rng.randint(1, 6)
            return k, random_cascade(rng, k), random_cascade(rng, k)

        for k, a, b in collect(draw):
            c = cascade_terms(r_sum(k, a) + r_sum(k, b), k)
            assert r_sum(k + 1, c) >= r_sum(k + 1, a) + r_sum(k + 1, b), (k, a, b)

    def test_adding_a_lower_cascade_to_a_larger_one(self):
        rng = random.Random(13)

        def draw():
            k = rng.randint(2, 6)
            a, b = random_cascade(rng, k), random_cascade(rng, k)
            if r_sum(k, a) < r_sum(k, b):
                a, b = b, a
            return k, a, b

        for k, a, b in collect(draw):
            c = cascade_terms(r_sum(k, a) + r_sum(k - 1, b), k)
            assert r_sum(k + 1, c) >= r_sum(k + 1, a) + r_sum(k, b), (k, a, b)

    def test_concentrating_on_one_large_term_gains(self):
        rng = random.Random(14)

        def draw():
            k = rng.randint(1, 6)
            total_a = rng.randint(1, binom(TOP_TERM + 1, k) - 1)
            total_c = rng.randint(max(1, total_a // 2), total_a)
            a, c = cascade_terms(total_a, k), cascade_terms(total_c, k)
            m = total_a + total_c
            top = cascade_terms(m, k)[0]
            low = max(a[0], c[0]) + 1
            if top < low:
                return None
            return k, a, c, m, rng.randint(low, top)

        for k, a, c, m, j in collect(draw):
            rest = m - binom(j, k)
            b = cascade_terms(rest, k) if rest else ()
            assert binom(j, k + 1) + r_sum(k + 1, b) > r_sum(k + 1, c) + r_sum(k + 1, a), (k, a, c, j)

    def test_strict_gain_when_the_leading_term_moves_up(self):
        rng = random.Random(15)

        def draw():
            k = rng.randint(2, 6)
            n = rng.randint(k, TOP_TERM)
            a = cascade_terms(rng.randint(binom(n, k), binom(n + 1, k) - 1), k)
            b = cascade_terms(rng.randint(1, binom(n, k - 1) - 1), k - 1)
            c = cascade_terms(r_sum(k, a) + r_sum(k - 1, b), k)
            if c[0] != a[0] + 1:
                return None
            return k, a, b, c

        for k, a, b, c in collect(draw):
            assert a[0] > b[0]
            assert r_sum(k + 1, c) > r_sum(k + 1, a) + r_sum(k, b), (k, a, b)


@pytest.mark.slow
class TestWideRanges:

    @pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
    def test_lgbd_and_smbd_stay_below_oldbd(self, k):
        for m in range(1, 10**5 + 1):
            old = oldbd(m, k)
            assert lgbd(m, k) <= old, m
            sm = smbd(m, k)
            assert sm is None or sm < old, m

    @pytest.mark.parametrize("k", [3, 4])
    def test_ratio_proxy_stays_under_its_bound(self, k):
        for m in range(1, 10**5 + 1):
            stats = ratio_stats(m, k)
            assert 0 <= stats.ratio_proxy <= 1, m
            if stats.ratbound_rhs is not None:
                assert stats.ratio_proxy <= stats.ratbound_rhs, m
