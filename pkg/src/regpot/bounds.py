"""The inequality catalog: g_k, G_k^m, G_k^(m,p), Jensen, Boyd, ratio and
convexity bounds, plus grid-based verification suites with JSON-able reports.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .core import DEFAULT_TOL, EvalParams, eval_vm0, eval_vmp
from .errors import BracketError, DomainError

SLACK = 1e-9


# ---------------------------------------------------------------- report type

@dataclass
class Report:
    name: str
    n_points: int = 0
    worst_margin: float = math.inf
    violations: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def record(self, ok: bool, margin: float, **context):
        self.n_points += 1
        if margin < self.worst_margin:
            self.worst_margin = margin
        if not ok:
            self.violations.append({"margin": margin, **context})

    def to_json(self) -> str:
        return json.dumps({
            "name": self.name,
            "passed": self.passed,
            "n_points": self.n_points,
            "worst_margin": self.worst_margin,
            "violations": self.violations,
            "info": self.info,
        }, sort_keys=True)


def default_grid(lo: float = 1e-2, hi: float = 1e2, n: int = 200) -> list[float]:
    return list(np.geomspace(lo, hi, n))


# ---------------------------------------------------------------- bound families

def g_k(k: float, x: float) -> float:
    """g_k(x) = k / ((k-1) x + sqrt(x^2 + k))."""
    if k <= 0:
        raise DomainError(f"k must be positive, got {k}")
    if x < 0:
        raise DomainError(f"x must be nonnegative, got {x}")
    return k / ((k - 1.0) * x + math.sqrt(x * x + k))


def G_k_m(k: float, m: float, y: float) -> float:
    """G_k^m(y) = k y / ((k-1) y - m + sqrt((y+m)^2 + k y)); limit 2m/(2m+1) at y=0."""
    if k < 1 or m < 0 or y < 0:
        raise DomainError(f"need k >= 1, m >= 0, y >= 0; got k={k}, m={m}, y={y}")
    if y == 0:
        return 2.0 * m / (2.0 * m + 1.0)
    return k * y / ((k - 1.0) * y - m + math.sqrt((y + m) ** 2 + k * y))


def G_k_m_deriv(k: float, m: float, y: float) -> float:
    """d/dy G_k^m(y), analytic."""
    S = math.sqrt((y + m) ** 2 + k * y)
    D = (k - 1.0) * y - m + S
    Dp = (k - 1.0) + (y + m + 0.5 * k) / S
    return k * (D - y * Dp) / (D * D)


def G_k_m_p(k: float, m: float, p: float, xp: float) -> float:
    """General-p form; reduces to G_k^m at p = 2."""
    if k < 1 or m < 0 or p < 1 or xp < 0:
        raise DomainError(f"need k >= 1, m >= 0, p >= 1, xp >= 0; got {k}, {m}, {p}, {xp}")
    if xp == 0:
        # y -> 0 limits: for p = 1 the whole function collapses to 1; for
        # m > 0 expand the square root to first order; for m = 0, p > 1 the
        # sqrt(y) term dominates and the limit is 0
        if p == 1:
            return 1.0
        if m == 0:
            return 0.0
        return p * m / (p * m + p - 1.0)
    S = math.sqrt(p * p * (xp + m) ** 2 + 2.0 * k * p * (p - 1.0) * xp)
    return k * p * xp / (p * ((k - 1.0) * xp - m) + S)


def G_k_m_p_deriv(k: float, m: float, p: float, y: float) -> float:
    """d/dy G_k^(m,p)(y), analytic."""
    S = math.sqrt(p * p * (y + m) ** 2 + 2.0 * k * p * (p - 1.0) * y)
    D = p * ((k - 1.0) * y - m) + S
    Dp = p * (k - 1.0) + (p * p * (y + m) + k * p * (p - 1.0)) / S
    return k * p * (D - y * Dp) / (D * D)


def jensen_bounds(m: float, p: float, x: float) -> tuple[float, float | None]:
    """Jensen sandwich for V_m^p(x), x > 0; (lower, upper), upper None when absent.

    p > 1:        (x^p+m+1)^(-(p-1)/p) <= V <= (x^p+m)^(-(p-1)/p)   (m > -1 / m >= 0)
    1/2 <= p < 1: reversed roles of the two expressions
    0 < p <= 1/2: lower bound (x^p+m+1)^((1-p)/p) only (m > -1)
    """
    if x <= 0:
        raise DomainError(f"Jensen bounds stated for x > 0, got {x}")
    if m <= -1:
        raise DomainError(f"m must be > -1, got {m}")
    xp = x ** p
    expo = (1.0 - p) / p
    if p >= 1:
        lower = (xp + m + 1.0) ** expo
        upper = (xp + m) ** expo if m >= 0 else None  # upper stated for m >= 0 only
        return lower, upper
    if p >= 0.5:
        upper = (xp + m + 1.0) ** expo
        if m < 0:
            raise DomainError(f"lower Jensen bound requires m >= 0 for 1/2 <= p < 1, got m={m}")
        lower = (xp + m) ** expo
        return lower, upper
    return (xp + m + 1.0) ** expo, None


def boyd_bounds(m: float) -> tuple[float, float]:
    """Boyd's two-sided estimate of V_m(0) at p = 2, m > 0."""
    if m <= 0:
        raise DomainError(f"Boyd bounds stated for m > 0, got {m}")
    lower = math.sqrt(m + 0.75 + 1.0 / (32.0 * m + 48.0)) / (m + 0.5)
    upper = 1.0 / math.sqrt(m + 0.25 + 1.0 / (32.0 * m + 32.0))
    return lower, upper


def mascioni_upper_v0p(p: float, x: float) -> float:
    """Upper bound for V_0^p(x), p >= 2: 4p/(3p x^(p-1) + sqrt(p^2 x^(2p-2) + 8p(p-1) x^(p-2)))."""
    if p < 2:
        raise DomainError(f"bound stated for p >= 2, got {p}")
    if x <= 0:
        raise DomainError(f"x must be positive, got {x}")
    return 4.0 * p / (3.0 * p * x ** (p - 1.0)
                      + math.sqrt(p * p * x ** (2.0 * p - 2.0)
                                  + 8.0 * p * (p - 1.0) * x ** (p - 2.0)))


def ratio(m: float, p: float, x: float, tol: float = DEFAULT_TOL) -> float:
    """R_m^p(x) = V_m^p(x) / V_(m-1)^p(x)."""
    num = eval_vmp(EvalParams(m, p, x), tol).value
    den = eval_vmp(EvalParams(m - 1.0, p, x), tol).value
    return num / den


# ---------------------------------------------------------------- h-functions

def h1(x: float) -> float:
    """Rational-surd upper comparison function for V_0 from the R_1 analysis."""
    return 2.0 * x * (6.0 * x * x - 1.0) / (
        1.0 + 6.0 * x * x + 12.0 * x ** 4 - 2.0 * x * math.sqrt(8.0 + x * x))


def h2(x: float) -> float:
    x2 = x * x
    s = math.sqrt(8.0 * x2 + (1.0 + x2) ** 2)
    num = 3.0 + 9.0 * x2 + 14.0 * x2 * x2 + (2.0 * x2 - 3.0) * s
    den = -3.0 - 7.0 * x2 + 32.0 * x2 ** 2 + 28.0 * x2 ** 3 + (3.0 - 4.0 * x2 + 4.0 * x2 * x2) * s
    return 2.0 * x * num / den


def h3(x: float) -> float:
    x2 = x * x
    s = math.sqrt(8.0 * x2 + (2.0 + x2) ** 2)
    num = -30.0 - 23.0 * x2 + 32.0 * x2 ** 2 + 28.0 * x2 ** 3 + s * (15.0 - 8.0 * x2 + 4.0 * x2 * x2)
    den = (30.0 + 3.0 * x2 - 42.0 * x2 ** 2 + 92.0 * x2 ** 3 + 56.0 * x2 ** 4
           + s * (-15.0 + 18.0 * x2 - 12.0 * x2 * x2 + 8.0 * x2 ** 3))
    return 2.0 * x * num / den


def _bisect(f, lo: float, hi: float, tol: float = 1e-12) -> float:
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0:
        raise BracketError(f"no sign change on [{lo}, {hi}]")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if flo * fm < 0:
            hi = mid
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)


def crossover_x0() -> float:
    """Root of 9x + 14x^3 + (2x^2 - 1) sqrt(8 + x^2), approximately 0.2511."""
    return _bisect(lambda x: 9.0 * x + 14.0 * x ** 3
                   + (2.0 * x * x - 1.0) * math.sqrt(8.0 + x * x), 0.05, 0.5)


def crossover_x1() -> float:
    """Point where g_4 meets h_1, approximately 1.399."""
    return _bisect(lambda x: g_k(4.0, x) - h1(x), 0.5, 3.0)


# ---------------------------------------------------------------- suites

def verify_v0_bounds(grid: list[float] | None = None, tol: float = DEFAULT_TOL) -> Report:
    """g_pi(x) <= V_0(x) < g_4(x) on the grid plus x = 0 (equality only there)."""
    rep = Report("v0")
    grid = [0.0] + (grid if grid is not None else default_grid())
    for i, x in enumerate(grid):
        v = eval_vmp(EvalParams(0.0, 2.0, x), tol).value
        lo, hi = g_k(math.pi, x), g_k(4.0, x)
        if x == 0.0:
            ok = abs(v - lo) <= 1e-12 * v and v < hi
            margin = hi - v
        else:
            # strictness below the evaluation error is unresolvable; the
            # suite flags only violations beyond the slack
            margin = min(v - lo, hi - v)
            ok = margin > -SLACK
        rep.record(ok, margin, index=i, x=x, v0=v, lower=lo, upper=hi)
    return rep


def find_gk_violation(k: float, side: str, grid: list[float] | None = None,
                      tol: float = DEFAULT_TOL) -> float | None:
    """First grid point where g_k fails as the given bound for V_0 (optimality witness)."""
    grid = [0.0] + (grid if grid is not None else default_grid())
    for x in grid:
        v = eval_vmp(EvalParams(0.0, 2.0, x), tol).value
        gk = g_k(k, x)
        if side == "upper" and v >= gk:
            return x
        if side == "lower" and v < gk - 1e-12:
            return x
    return None


def verify_ratio_bounds(m_max: int, grid: list[float] | None = None,
                        tol: float = DEFAULT_TOL) -> Report:
    """G_8^(m-1)(x^2) < R_m(x) < G_4^m(x^2) for integer m in [1, m_max]."""
    rep = Report("ratio")
    grid = grid if grid is not None else default_grid()
    for m in range(1, m_max + 1):
        for i, x in enumerate(grid):
            r = ratio(float(m), 2.0, x, tol)
            lo = G_k_m(8.0, m - 1.0, x * x)
            hi = G_k_m(4.0, float(m), x * x)
            margin = min(r - lo, hi - r)
            rep.record(margin > -SLACK, margin, index=i, m=m, x=x, r=r, lower=lo, upper=hi)
    return rep


def verify_ratio_monotone(m: int, grid: list[float] | None = None,
                          tol: float = DEFAULT_TOL) -> Report:
    """R_(m+1) nondecreasing along an increasing grid."""
    rep = Report("monotone")
    grid = grid if grid is not None else default_grid()
    prev = None
    for i, x in enumerate(grid):
        r = ratio(m + 1.0, 2.0, x, tol)
        if prev is not None:
            margin = r - prev
            rep.record(margin > -SLACK, margin, index=i, m=m, x=x)
        prev = r
    return rep


def convexity_criterion_poly(m: float, x: float, z: float) -> float:
    """P(z) = z^2 (1 + 2m - 2x^2) + 2z (3x^2 - m) - 4x^2; P(R_m(x)) < 0 iff 1/V_m convex at x."""
    x2 = x * x
    return z * z * (1.0 + 2.0 * m - 2.0 * x2) + 2.0 * z * (3.0 * x2 - m) - 4.0 * x2


def verify_convexity_reciprocal(m: int, p: float, grid: list[float] | None = None,
                                tol: float = 1e-12, fd_slack: float = 1e-7) -> Report:
    """Convexity of 1/V_m: finite-difference second derivative >= -fd_slack,
    plus the algebraic criterion P(R_m(x)) < 0 when p = 2."""
    if m < 0 or p < 2:
        raise DomainError(f"suite stated for integer m >= 0, p >= 2; got m={m}, p={p}")
    rep = Report("convexity")
    grid = grid if grid is not None else default_grid(5e-2, 20.0, 120)
    for i, x in enumerate(grid):
        h = max(1e-4, 1e-4 * x)
        f = lambda t: 1.0 / eval_vmp(EvalParams(float(m), p, t), tol).value
        second = (f(x + h) - 2.0 * f(x) + f(max(x - h, h * 1e-3))) / (h * h) \
            if x - h > 0 else (f(x + 2 * h) - 2.0 * f(x + h) + f(x)) / (h * h)
        rep.record(second >= -fd_slack, second, index=i, m=m, p=p, x=x, kind="fd")
        if p == 2:
            z = ratio(float(m), 2.0, x, tol) if m >= 1 else None
            if z is not None:
                crit = convexity_criterion_poly(float(m), x, z)
                rep.record(crit < 0.0, -crit, index=i, m=m, x=x, kind="criterion")
    return rep


def verify_jensen(m: float, p: float, grid: list[float] | None = None,
                  tol: float = DEFAULT_TOL) -> Report:
    """V sits inside the regime-appropriate Jensen sandwich."""
    rep = Report("jensen")
    grid = grid if grid is not None else default_grid()
    for i, x in enumerate(grid):
        v = eval_vmp(EvalParams(m, p, x), tol).value
        lo, up = jensen_bounds(m, p, x)
        margin = v - lo if up is None else min(v - lo, up - v)
        rep.record(margin > -SLACK * max(1.0, abs(v)), margin, index=i, m=m, p=p, x=x)
    return rep


def verify_boyd(m_grid: list[float] | None = None) -> Report:
    """eval_vm0(m, 2) strictly inside Boyd's bounds."""
    rep = Report("boyd")
    m_grid = m_grid if m_grid is not None else [0.5, 1.0, 2.0, 3.0, 5.0, 10.0, 20.0, 50.0]
    for m in m_grid:
        v = eval_vm0(m, 2.0).value
        lo, hi = boyd_bounds(m)
        margin = min(v - lo, hi - v)
        rep.record(margin > 0.0, margin, m=m, v=v, lower=lo, upper=hi)
    return rep


def verify_r123(tol: float = DEFAULT_TOL) -> Report:
    """Direct checks behind the small-m ratio bounds: the crossovers
    x0 ~ 0.2511 and x1 ~ 1.399, and the h1/h2/h3 comparisons with V_0
    on the regions where those comparisons are meaningful."""
    rep = Report("r123")
    x0 = crossover_x0()
    x1 = crossover_x1()
    rep.info["x0"] = x0
    rep.info["x1"] = x1
    rep.record(abs(x0 - 0.2511) < 1e-3, abs(x0 - 0.2511), check="x0")
    rep.record(abs(x1 - 1.399) < 1e-3, abs(x1 - 1.399), check="x1")

    def v0(x):
        return eval_vmp(EvalParams(0.0, 2.0, x), tol).value

    # V_0 <= h1 on [x0, inf): the R_1 lower bound in disguise
    for x in np.geomspace(x0 * 1.02, 50.0, 120):
        margin = h1(x) - v0(x)
        rep.record(margin > -SLACK, margin, check="h1", x=float(x))
    # V_0 >= h2 wherever h2 is a genuine (positive) lower candidate
    for x in np.geomspace(1e-2, 50.0, 150):
        val = h2(x)
        if val > 0:
            margin = v0(x) - val
            rep.record(margin > -SLACK, margin, check="h2", x=float(x))
    # V_0 <= h3 wherever h3 is a genuine upper candidate
    for x in np.geomspace(1e-2, 50.0, 150):
        val = h3(x)
        if val > 0:
            margin = val - v0(x)
            rep.record(margin > -SLACK, margin, check="h3", x=float(x))
    return rep


def gk_anchor_search(m: float, y_grid: list[float] | None = None) -> dict:
    """Numeric exploration tool: for which k does G_k^m match V-ratio data at 0
    and stay on one side?  Nothing is asserted; returns the measured envelope."""
    y_grid = y_grid if y_grid is not None else default_grid(1e-2, 50.0, 80)
    out = {}
    for k in (4.0, 6.0, 8.0, 12.0):
        margins = []
        for y in y_grid:
            x = math.sqrt(y)
            r = ratio(m, 2.0, x)
            margins.append(r - G_k_m(k, m - 1.0, y))
        out[k] = {"min_margin": min(margins), "max_margin": max(margins)}
    return out
