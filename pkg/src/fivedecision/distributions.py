"""Null distributions for test statistics: standard normal and Student t.

Provides the cumulative distribution function, quantile function, and
density used everywhere else in the package.  The implementation is
dependency-free: the normal CDF goes through ``math.erfc`` and the
Student t CDF through the regularized incomplete beta function,
evaluated with a modified Lentz continued fraction.  Quantiles come
from a bracketed Newton iteration on the CDF, so they hold for any
positive degrees of freedom, including df=1.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

__all__ = [
    "Kind",
    "NullDistribution",
    "standard_normal",
    "student_t",
    "cdf",
    "quantile",
    "density",
]

_SQRT2 = math.sqrt(2.0)
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)
_LN_SQRT_PI = 0.5 * math.log(math.pi)  # lgamma(0.5)

# Quantile solver: converge to this absolute error in probability.
_P_TOL = 1e-13
_MAX_NEWTON = 200


class Kind(enum.Enum):
    STANDARD_NORMAL = "StandardNormal"
    STUDENT_T = "StudentT"


@dataclass(frozen=True)
class NullDistribution:
    """Distribution of a test statistic when the parameter sits at the
    tested value.  ``df`` is present exactly when ``kind`` is Student t."""

    kind: Kind
    df: float | None = None

    def __post_init__(self) -> None:
        if self.kind is Kind.STUDENT_T:
            if self.df is None or not math.isfinite(self.df) or self.df <= 0:
                raise ValueError(f"StudentT requires df > 0, got {self.df!r}")
        elif self.df is not None:
            raise ValueError("df is only meaningful for StudentT")


def standard_normal() -> NullDistribution:
    return NullDistribution(Kind.STANDARD_NORMAL)


def student_t(df: float) -> NullDistribution:
    return NullDistribution(Kind.STUDENT_T, float(df))


def _lgamma_half_shift(a: float) -> float:
    # lgamma(a + 1/2) - lgamma(a).  The direct difference of two lgamma
    # calls carries ~a*log(a)*eps of absolute error, which breaks the
    # CDF tolerance once df reaches ~1e5, so switch to a Stirling
    # difference there.  Both branches agree to ~1e-15 at a=200.
    if a < 200.0:
        return math.lgamma(a + 0.5) - math.lgamma(a)
    d = 0.5 * math.log(a) + a * math.log1p(0.5 / a) - 0.5
    d -= 1.0 / (24.0 * a * (a + 0.5))
    a3 = a * a * a
    b3 = (a + 0.5) ** 3
    d += (b3 - a3) / (360.0 * a3 * b3)
    return d


def _betacf(a: float, b: float, x: float) -> float:
    # Continued fraction for the incomplete beta function (modified
    # Lentz).  Converges in a few dozen iterations for the (a, b, x)
    # reachable from the t CDF; 500 is a hard safety stop.
    maxit = 500
    eps = 1e-15
    tiny = 1e-300
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, maxit + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < eps:
            return h
    raise ArithmeticError(
        f"incomplete beta continued fraction did not converge (a={a}, b={b}, x={x})"
    )


def _student_upper_tail(t: float, df: float) -> float:
    # P(T > t) for t >= 0, equal to 0.5 * I_x(df/2, 1/2) with
    # x = df/(df + t^2).  The complement t^2/(df + t^2) is formed
    # directly, never as 1 - x, to keep accuracy at large df.
    if t == 0.0:
        return 0.5
    tt = t * t
    x = df / (df + tt)
    xc = tt / (df + tt)
    a = 0.5 * df
    b = 0.5
    ln_front = (
        _lgamma_half_shift(a)
        - _LN_SQRT_PI
        - a * math.log1p(tt / df)
        + b * math.log(xc)
    )
    if x < (a + 1.0) / (a + b + 2.0):
        return 0.5 * math.exp(ln_front) * _betacf(a, b, x) / a
    return 0.5 * (1.0 - math.exp(ln_front) * _betacf(b, a, xc) / b)


def cdf(d: NullDistribution, t: float) -> float:
    """P(T <= t) under the null distribution ``d``."""
    t = float(t)
    if not math.isfinite(t):
        raise ValueError(f"t must be finite, got {t!r}")
    if d.kind is Kind.STANDARD_NORMAL:
        return 0.5 * math.erfc(-t / _SQRT2)
    if t > 0.0:
        return 1.0 - _student_upper_tail(t, d.df)
    if t < 0.0:
        return _student_upper_tail(-t, d.df)
    return 0.5


def density(d: NullDistribution, t: float) -> float:
    """Probability density of ``d`` at ``t``."""
    t = float(t)
    if not math.isfinite(t):
        raise ValueError(f"t must be finite, got {t!r}")
    if d.kind is Kind.STANDARD_NORMAL:
        return _INV_SQRT_2PI * math.exp(-0.5 * t * t)
    df = d.df
    ln_c = _lgamma_half_shift(0.5 * df) - 0.5 * math.log(df * math.pi)
    return math.exp(ln_c - 0.5 * (df + 1.0) * math.log1p(t * t / df))


def quantile(d: NullDistribution, p: float) -> float:
    """Value q with cdf(d, q) = p, for 0 < p < 1.

    Symmetry is built in: quantile(p) for p below one half is computed
    as the negated mirror, so quantile(p) == -quantile(1 - p) exactly.
    """
    p = float(p)
    if not 0.0 < p < 1.0:
        raise ValueError(f"p must lie strictly between 0 and 1, got {p!r}")
    if p == 0.5:
        return 0.0
    if p < 0.5:
        return -quantile(d, 1.0 - p)

    # Bracket [lo, hi] with cdf(lo) <= p <= cdf(hi); lo starts at the
    # median and hi doubles until it passes p.
    lo = 0.0
    hi = 1.0
    while cdf(d, hi) < p:
        lo = hi
        hi *= 2.0
        if hi > 1e300:
            raise ArithmeticError(f"quantile bracket expansion failed at p={p}")

    x = 0.5 * (lo + hi)
    for _ in range(_MAX_NEWTON):
        fx = cdf(d, x) - p
        if abs(fx) <= _P_TOL:
            return x
        if fx > 0.0:
            hi = x
        else:
            lo = x
        pdf = density(d, x)
        step_ok = pdf > 0.0
        if step_ok:
            nxt = x - fx / pdf
            step_ok = lo < nxt < hi
        if not step_ok:
            nxt = 0.5 * (lo + hi)
        if nxt == x:
            return x
        x = nxt
    return x
