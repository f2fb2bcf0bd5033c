"""Realized test statistics and confidence intervals.

Covers the two-sample pooled t-test, from raw observations or from
per-group summary statistics, and the Wald statistic for an estimate
with a known standard error.  Every result carries its null
distribution so that decision rules and intervals can be derived from
the same object.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from typing import Sequence

from .distributions import NullDistribution, cdf, quantile, standard_normal, student_t

__all__ = [
    "DegenerateDataError",
    "GroupSummary",
    "TestResult",
    "two_sample_t",
    "two_sample_t_raw",
    "wald",
    "confidence_interval",
]


class DegenerateDataError(ValueError):
    """Data admits no test statistic (zero degrees of freedom or zero
    spread).  Kept distinct from plain ValueError so the command line
    can map it to its own exit code."""


@dataclass(frozen=True)
class GroupSummary:
    """Size, mean, and sample standard deviation of one group."""

    n: int
    mean: float
    sd: float

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"group size must be at least 2, got {self.n}")
        if not (math.isfinite(self.mean) and math.isfinite(self.sd)):
            raise ValueError("mean and sd must be finite")
        if self.sd <= 0:
            raise ValueError(f"sd must be positive, got {self.sd}")


@dataclass(frozen=True)
class TestResult:
    __test__ = False  # not a pytest test class despite the name

    t_stat: float
    null: NullDistribution
    p_two_sided: float
    estimate: float
    se: float


def _result(estimate: float, se: float, theta0: float, null: NullDistribution) -> TestResult:
    t_stat = (estimate - theta0) / se
    p = 2.0 * (1.0 - cdf(null, abs(t_stat)))
    return TestResult(t_stat=t_stat, null=null, p_two_sided=p, estimate=estimate, se=se)


def two_sample_t(a: GroupSummary, b: GroupSummary, theta0: float = 0.0) -> TestResult:
    """Pooled two-sample t-test from summary statistics.

    The estimate is mean_a - mean_b.  Pooled variance
    s2 = ((n_a-1)sd_a^2 + (n_b-1)sd_b^2) / (n_a+n_b-2) and
    SE = s*sqrt(1/n_a + 1/n_b); with equal group sizes this reduces to
    the familiar sqrt(n/2)*(mean_a-mean_b)/s form.  The null is
    Student t with n_a + n_b - 2 degrees of freedom.
    """
    if not math.isfinite(theta0):
        raise ValueError("theta0 must be finite")
    df = a.n + b.n - 2
    if df <= 0:
        raise DegenerateDataError("needs n_a + n_b > 2 for positive degrees of freedom")
    pooled_var = ((a.n - 1) * a.sd**2 + (b.n - 1) * b.sd**2) / df
    if pooled_var <= 0:
        raise DegenerateDataError("pooled variance is zero")
    se = math.sqrt(pooled_var) * math.sqrt(1.0 / a.n + 1.0 / b.n)
    return _result(a.mean - b.mean, se, theta0, student_t(df))


def two_sample_t_raw(
    xs_a: Sequence[float], xs_b: Sequence[float], theta0: float = 0.0
) -> TestResult:
    """Pooled two-sample t-test from raw observations.

    Summarizes each group and delegates to two_sample_t.  At least one
    group must have nonzero within-group variance.
    """
    summaries = []
    for label, xs in (("first", xs_a), ("second", xs_b)):
        xs = [float(x) for x in xs]
        if len(xs) < 2:
            raise ValueError(f"{label} group needs at least 2 observations")
        if not all(math.isfinite(x) for x in xs):
            raise ValueError(f"{label} group contains non-finite values")
        summaries.append((len(xs), statistics.fmean(xs), statistics.stdev(xs)))

    (n_a, mean_a, sd_a), (n_b, mean_b, sd_b) = summaries
    df = n_a + n_b - 2
    pooled_var = ((n_a - 1) * sd_a**2 + (n_b - 1) * sd_b**2) / df
    if pooled_var <= 0:
        raise DegenerateDataError("no within-group variance in either group")
    if not math.isfinite(theta0):
        raise ValueError("theta0 must be finite")
    se = math.sqrt(pooled_var) * math.sqrt(1.0 / n_a + 1.0 / n_b)
    return _result(mean_a - mean_b, se, theta0, student_t(df))


def wald(estimate: float, se: float, theta0: float = 0.0) -> TestResult:
    """Wald statistic (estimate - theta0)/se with a standard normal null."""
    if not (math.isfinite(estimate) and math.isfinite(theta0)):
        raise ValueError("estimate and theta0 must be finite")
    if not (math.isfinite(se) and se > 0):
        raise ValueError(f"se must be positive and finite, got {se!r}")
    return _result(estimate, se, theta0, standard_normal())


def confidence_interval(r: TestResult, level: float) -> tuple[float, float]:
    """Symmetric two-sided interval estimate +- q*se at the given level."""
    level = float(level)
    if not 0.0 < level < 1.0:
        raise ValueError(f"level must lie strictly between 0 and 1, got {level!r}")
    q = quantile(r.null, 0.5 * (1.0 + level))
    return (r.estimate - q * r.se, r.estimate + q * r.se)
