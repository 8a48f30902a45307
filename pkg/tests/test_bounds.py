"""Inequality catalog: pointwise bounds, suites, witnesses, crossovers."""

import math

import pytest

from regpot import bounds
from regpot.core import EvalParams, eval_vmp
from regpot.errors import DomainError


def rel(a, b):
    return abs(a - b) / abs(b)


# ---------------------------------------------------------------- pointwise

def test_g_k_at_zero():
    assert bounds.g_k(math.pi, 0.0) == pytest.approx(math.sqrt(math.pi), rel=1e-15)
    assert bounds.g_k(4.0, 0.0) == 2.0


def test_G_k_m_limit():
    for m in (0.0, 1.0, 7.0):
        assert bounds.G_k_m(4.0, m, 0.0) == 2.0 * m / (2.0 * m + 1.0)


def test_G_k_m_p_limits_and_reduction():
    assert bounds.G_k_m_p(4.0, 3.0, 1.0, 0.0) == 1.0
    assert bounds.G_k_m_p(4.0, 0.0, 3.0, 0.0) == 0.0
    assert bounds.G_k_m_p(4.0, 2.0, 3.0, 0.0) == pytest.approx(6.0 / 8.0)
    # p = 2 reduces to G_k^m
    for y in (0.1, 1.0, 25.0):
        assert bounds.G_k_m_p(4.0, 2.0, 2.0, y) == pytest.approx(
            bounds.G_k_m(4.0, 2.0, y), rel=1e-13)


def test_G_derivatives_match_finite_difference():
    h = 1e-6
    for (k, m, y) in [(4.0, 1.0, 0.5), (8.0, 3.0, 2.0)]:
        fd = (bounds.G_k_m(k, m, y + h) - bounds.G_k_m(k, m, y - h)) / (2 * h)
        assert bounds.G_k_m_deriv(k, m, y) == pytest.approx(fd, rel=1e-6)
    for (k, m, p, y) in [(4.0, 1.0, 3.0, 0.5), (4.0, 2.0, 5.0, 2.0)]:
        fd = (bounds.G_k_m_p(k, m, p, y + h) - bounds.G_k_m_p(k, m, p, y - h)) / (2 * h)
        assert bounds.G_k_m_p_deriv(k, m, p, y) == pytest.approx(fd, rel=1e-6)


def test_jensen_regimes():
    lo, hi = bounds.jensen_bounds(2.0, 2.0, 1.0)
    v = eval_vmp(EvalParams(2.0, 2.0, 1.0)).value
    assert lo <= v <= hi
    # p > 1, m in (-1, 0): lower bound only
    lo, hi = bounds.jensen_bounds(-0.4, 2.0, 1.0)
    assert hi is None
    assert lo <= eval_vmp(EvalParams(-0.4, 2.0, 1.0)).value
    # 1/2 <= p < 1: reversed sandwich
    lo, hi = bounds.jensen_bounds(1.0, 0.75, 1.0)
    v = eval_vmp(EvalParams(1.0, 0.75, 1.0)).value
    assert lo <= v <= hi
    with pytest.raises(DomainError):
        bounds.jensen_bounds(-0.5, 0.75, 1.0)
    # 0 < p <= 1/2: lower only
    lo, hi = bounds.jensen_bounds(1.0, 0.4, 1.0)
    assert hi is None


def test_boyd_brackets_v0_at_zero():
    for m in (1.0, 2.0, 10.0, 100.0):
        lo, hi = bounds.boyd_bounds(m)
        v = eval_vmp(EvalParams(m, 2.0, 0.0)).value
        assert lo < v < hi


def test_mascioni_upper_bound():
    for p in (2.0, 3.0, 5.0):
        for x in (0.5, 1.0, 5.0):
            v = eval_vmp(EvalParams(0.0, p, x)).value
            assert v <= bounds.mascioni_upper_v0p(p, x) + 1e-12
    with pytest.raises(DomainError):
        bounds.mascioni_upper_v0p(1.5, 1.0)


def test_ratio_basics():
    for m in (1.0, 5.0):
        for x in (0.3, 2.0):
            r = bounds.ratio(m, 2.0, x)
            assert 0.0 < r < 1.0


# ---------------------------------------------------------------- suites

def test_v0_suite_passes():
    rep = bounds.verify_v0_bounds()
    assert rep.passed
    assert rep.n_points == 201  # includes x = 0


def test_gk_optimality_witnesses():
    # k = 3.9 upper bound must fail somewhere, k = 3.3 lower fails at 0
    w = bounds.find_gk_violation(3.9, "upper")
    assert w is not None
    w0 = bounds.find_gk_violation(3.3, "lower")
    assert w0 == 0.0


def test_ratio_suite_passes():
    assert bounds.verify_ratio_bounds(10).passed


def test_monotone_and_convexity_suites():
    for m in (1, 5, 10):
        assert bounds.verify_ratio_monotone(m).passed
        assert bounds.verify_convexity_reciprocal(m, 2.0).passed


def test_jensen_suite_passes():
    for m, p in [(0.0, 2.0), (2.5, 3.0), (1.0, 0.75), (5.0, 0.5)]:
        assert bounds.verify_jensen(m, p).passed


def test_boyd_suite_passes():
    assert bounds.verify_boyd().passed


def test_r123_suite_and_crossovers():
    rep = bounds.verify_r123()
    assert rep.passed
    assert abs(bounds.crossover_x0() - 0.2511) < 1e-3
    assert abs(bounds.crossover_x1() - 1.399) < 1e-3


def test_h_functions_sandwich_v0():
    x0 = bounds.crossover_x0()
    for x in (x0 * 1.1, 0.5, 1.0, 3.0, 10.0):
        v0 = eval_vmp(EvalParams(0.0, 2.0, x), 1e-12).value
        assert v0 <= bounds.h1(x) + 1e-9
        h2v = bounds.h2(x)
        if h2v > 0:
            assert v0 >= h2v - 1e-9
        h3v = bounds.h3(x)
        if h3v > 0:
            assert v0 <= h3v + 1e-9


def test_convexity_criterion_poly_sign():
    # P(z) < 0 at z = R_m certifies convexity of 1/V_m at that point (p = 2)
    for m in (1.0, 4.0):
        for x in (0.5, 2.0):
            r = bounds.ratio(m, 2.0, x)
            assert bounds.convexity_criterion_poly(m, x, r) < 0


def test_report_json_shape():
    rep = bounds.verify_boyd()
    import json
    d = json.loads(rep.to_json())
    assert set(d) == {"name", "passed", "n_points", "worst_margin", "violations", "info"}
