"""Decision engine checks: the worked example, boundary pattern,
formulation equivalence, and the merge structure of the classical
procedures."""

import math

import numpy as np
import pytest

from fivedecision.decisions import (
    Decision,
    Hypothesis,
    decision_regions,
    five_decision,
    five_decision_via_ci,
    five_decision_via_three_tests,
    jones_tukey_decision,
    kaiser_decision,
)
from fivedecision.distributions import quantile, standard_normal, student_t
from fivedecision.stattests import GroupSummary, two_sample_t, wald

T18 = student_t(18)
NORMAL = standard_normal()
CHICK = two_sample_t(GroupSummary(10, 258.9, 65.2), GroupSummary(10, 205.6, 70.3))


class TestDecisionType:
    def test_rejection_pairing(self):
        expected = {
            1: (Hypothesis.H1, Hypothesis.H4),
            2: (Hypothesis.H2, Hypothesis.H5),
            3: (Hypothesis.NONE, Hypothesis.NONE),
            4: (Hypothesis.H4, Hypothesis.H1),
            5: (Hypothesis.H5, Hypothesis.H2),
        }
        for index, (rejected, accepted) in expected.items():
            d = Decision.from_index(index)
            assert d.rejected is rejected
            assert d.accepted_implicitly is accepted

    def test_comparators(self):
        assert Hypothesis.H1.comparator == ">="
        assert Hypothesis.H2.comparator == ">"
        assert Hypothesis.H4.comparator == "<"
        assert Hypothesis.H5.comparator == "<="
        assert Hypothesis.NONE.comparator is None


class TestFiveDecision:
    def test_worked_example_across_levels(self):
        t = CHICK.t_stat
        assert five_decision(t, T18, 0.05).index == 4
        assert five_decision(t, T18, 0.10).index == 5
        assert five_decision(t, T18, 0.01).index == 3

    def test_zero_statistic_never_rejects(self):
        for null in (NORMAL, T18, student_t(1)):
            for alpha in (0.01, 0.05, 0.1, 0.5):
                assert five_decision(0.0, null, alpha).index == 3

    def test_boundary_pattern_exact(self):
        # Region 2 owns its left endpoint, region 3 owns both of its
        # endpoints, region 4 owns its right endpoint.
        for null in (NORMAL, T18):
            q1, q2, q3, q4 = decision_regions(null, 0.05).boundaries
            assert five_decision(math.nextafter(q1, -10), null, 0.05).index == 1
            assert five_decision(q1, null, 0.05).index == 2
            assert five_decision(math.nextafter(q2, -10), null, 0.05).index == 2
            assert five_decision(q2, null, 0.05).index == 3
            assert five_decision(q3, null, 0.05).index == 3
            assert five_decision(math.nextafter(q3, 10), null, 0.05).index == 4
            assert five_decision(q4, null, 0.05).index == 4
            assert five_decision(math.nextafter(q4, 10), null, 0.05).index == 5

    def test_index_monotone_in_t(self):
        grid = np.linspace(-6, 6, 2001)
        indices = [five_decision(float(t), T18, 0.05).index for t in grid]
        assert all(b >= a for a, b in zip(indices, indices[1:]))
        assert set(indices) == {1, 2, 3, 4, 5}

    def test_alpha_half_collapses_region_three(self):
        assert five_decision(0.0, NORMAL, 0.5).index == 3
        assert five_decision(0.1, NORMAL, 0.5).index == 4
        assert five_decision(-0.1, NORMAL, 0.5).index == 2

    def test_alpha_domain(self):
        for alpha in (0.0, -0.05, 0.6, 1.0):
            with pytest.raises(ValueError):
                five_decision(1.0, NORMAL, alpha)

    def test_rejects_non_finite_t(self):
        with pytest.raises(ValueError):
            five_decision(math.inf, NORMAL, 0.05)

    def test_side_never_flips_as_alpha_grows(self):
        rng = np.random.default_rng(21)
        for _ in range(300):
            t = float(rng.normal(0, 2.5))
            a1 = float(rng.uniform(0.005, 0.25))
            a2 = float(rng.uniform(a1, 0.5))
            first = five_decision(t, NORMAL, a1).index
            if first in (1, 5):
                second = five_decision(t, NORMAL, a2).index
                assert second in ({1, 2} if first == 1 else {4, 5})

    def test_p_value_shortcut_at_five_percent(self):
        # decision in {4,5} iff t > 0 and p < 0.10; decision 4 iff
        # additionally p >= 0.05.
        rng = np.random.default_rng(22)
        for null in (NORMAL, T18):
            for _ in range(200):
                r = wald(float(rng.normal(0, 2)), 1.0, 0.0)
                t = r.t_stat
                from fivedecision.distributions import cdf

                p = 2.0 * (1.0 - cdf(null, abs(t)))
                idx = five_decision(t, null, 0.05).index
                assert (idx in (4, 5)) == (t > 0 and p < 0.10)
                if idx == 4:
                    assert t > 0 and 0.05 <= p < 0.10


class TestThreeTestFormulation:
    def test_examples(self):
        assert five_decision_via_three_tests(-2.5, NORMAL, 0.05).index == 1
        assert five_decision_via_three_tests(1.8, NORMAL, 0.05).index == 4

    @pytest.mark.parametrize("alpha", [0.01, 0.05, 0.1, 0.5])
    def test_grid_equivalence(self, alpha):
        for null in (NORMAL, T18):
            for t in np.linspace(-5, 5, 2001):
                t = float(t)
                assert (
                    five_decision_via_three_tests(t, null, alpha).index
                    == five_decision(t, null, alpha).index
                )

    def test_boundary_agreement(self):
        q1, q2, q3, q4 = decision_regions(T18, 0.05).boundaries
        for t in (q1, q2, q3, q4):
            assert (
                five_decision_via_three_tests(t, T18, 0.05).index
                == five_decision(t, T18, 0.05).index
            )


class TestCiFormulation:
    def test_worked_example(self):
        assert five_decision_via_ci(CHICK, 0.0, 0.05).index == 4

    def test_estimate_at_theta0(self):
        r = wald(1.5, 0.8, 1.5)
        assert five_decision_via_ci(r, 1.5, 0.05).index == 3

    def test_randomized_equivalence(self):
        rng = np.random.default_rng(23)
        for _ in range(300):
            est = float(rng.normal(0, 2))
            se = float(rng.uniform(0.2, 3))
            theta0 = float(rng.normal(0, 2))
            alpha = float(rng.uniform(0.01, 0.5))
            r = wald(est, se, theta0)
            assert (
                five_decision_via_ci(r, theta0, alpha).index
                == five_decision(r.t_stat, r.null, alpha).index
            )

    def test_alpha_half_degenerate_narrow_interval(self):
        r = wald(1.0, 1.0, 0.0)
        assert five_decision_via_ci(r, 0.0, 0.5).index == 5
        r0 = wald(0.0, 1.0, 0.0)
        assert five_decision_via_ci(r0, 0.0, 0.5).index == 3


class TestKaiser:
    def test_worked_example(self):
        assert kaiser_decision(CHICK.t_stat, T18, 0.05).index == 3

    def test_clear_rejection(self):
        assert kaiser_decision(2.5, NORMAL, 0.05).index == 5

    def test_is_merge_of_five_decision(self):
        for t in np.linspace(-5, 5, 1001):
            t = float(t)
            five = five_decision(t, T18, 0.05).index
            merged = 3 if five in (2, 3, 4) else five
            assert kaiser_decision(t, T18, 0.05).index == merged

    def test_restricted_index_set(self):
        rng = np.random.default_rng(24)
        indices = {
            kaiser_decision(float(rng.normal(0, 3)), NORMAL, 0.2).index
            for _ in range(500)
        }
        assert indices <= {1, 3, 5}


class TestJonesTukey:
    def test_worked_example(self):
        d = jones_tukey_decision(CHICK.t_stat, T18, 0.05)
        assert d.index == 4
        assert d.rejected is Hypothesis.H4

    def test_zero_statistic(self):
        assert jones_tukey_decision(0.0, NORMAL, 0.05).index == 3

    def test_is_merge_of_five_decision(self):
        for t in np.linspace(-5, 5, 1001):
            t = float(t)
            five = five_decision(t, T18, 0.05).index
            merged = {1: 2, 2: 2, 3: 3, 4: 4, 5: 4}[five]
            assert jones_tukey_decision(t, T18, 0.05).index == merged

    def test_decision_one_implies_left_rejection(self):
        rng = np.random.default_rng(25)
        for _ in range(300):
            t = float(rng.normal(0, 3))
            alpha = float(rng.uniform(0.01, 0.5))
            if five_decision(t, NORMAL, alpha).index == 1:
                assert jones_tukey_decision(t, NORMAL, alpha).index == 2


class TestDecisionRegions:
    def test_normal_boundaries_at_three_decimals(self):
        q = decision_regions(NORMAL, 0.05).boundaries
        assert [round(v, 3) for v in q] == [-1.960, -1.645, 1.645, 1.960]

    def test_t18_boundaries_at_two_decimals(self):
        q = decision_regions(T18, 0.05).boundaries
        assert [round(v, 2) for v in q] == [-2.10, -1.73, 1.73, 2.10]

    def test_strictly_increasing_below_half(self):
        for alpha in (0.01, 0.05, 0.2, 0.49):
            q = decision_regions(T18, alpha).boundaries
            assert q[0] < q[1] < q[2] < q[3]

    def test_middle_boundaries_coincide_at_half(self):
        q = decision_regions(T18, 0.5).boundaries
        assert q[1] == q[2] == 0.0

    def test_symmetric_boundaries(self):
        q1, q2, q3, q4 = decision_regions(T18, 0.05).boundaries
        assert q1 == -q4
        assert q2 == -q3

    def test_intervals_cover_the_line(self):
        regions = decision_regions(T18, 0.05)
        spans = regions.intervals()
        assert [s.index for s in spans] == [1, 2, 3, 4, 5]
        assert spans[0].lower == -math.inf
        assert spans[-1].upper == math.inf
        for left, right in zip(spans, spans[1:]):
            assert left.upper == right.lower
            # Shared endpoints belong to exactly one side.
            assert left.upper_closed != right.lower_closed
        assert spans[2].rejected is Hypothesis.NONE
        assert spans[3].rejected is Hypothesis.H4
