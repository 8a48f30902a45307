"""Extension-ring arithmetic and the positivity certification chains."""

import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regpot import _reference as ref
from regpot.certify import (ALL_CHAINS, ExtensionElement, PositivityCertificate,
                            build_chain_k4_p2, build_chain_k8_p2,
                            build_chain_p3_k4, certificate_json,
                            numeric_lemma_sweep, optimality_factor_generic_k,
                            positivity_for_m_ge, run_chain)
from regpot.errors import ChainMismatchError, DomainError
from regpot.ratpoly import RatPoly

VARS = ("y", "m")
Q = RatPoly(VARS, {(2, 0): 1, (1, 1): 2, (0, 2): 1, (1, 0): 4})  # (y+m)^2+4y


@st.composite
def small_polys(draw):
    coeffs = {}
    for _ in range(draw(st.integers(0, 4))):
        e = (draw(st.integers(0, 2)), draw(st.integers(0, 2)))
        coeffs[e] = coeffs.get(e, 0) + draw(st.integers(-5, 5))
    return RatPoly(VARS, coeffs)


@st.composite
def elements(draw):
    return ExtensionElement(draw(small_polys()), draw(small_polys()), Q)


@given(elements(), elements(), elements())
@settings(max_examples=100, deadline=None)
def test_ring_axioms(e1, e2, e3):
    assert (e1 * e2) * e3 == e1 * (e2 * e3)
    assert e1 * (e2 + e3) == e1 * e2 + e1 * e3
    assert e1 * e2 == e2 * e1


@given(elements())
@settings(max_examples=100, deadline=None)
def test_conjugate_norm(e):
    prod = e * e.conj()
    assert prod.b.is_zero()
    assert prod.a == e.norm()


@given(elements())
@settings(max_examples=30, deadline=None)
def test_derivative_step_is_a_derivative(e):
    # B * d/dy(a + b B) evaluated numerically must match a finite difference
    # of the element's value times sqrt(q)
    y0, m0 = 0.7, 2.0
    stepped = e.diff_times_B()
    qv = float(Q.eval(y=Fraction(7, 10), m=2))
    got = stepped.eval_float(y=Fraction(7, 10), m=2) / math.sqrt(qv)
    h = 1e-6

    def val(yv):
        fy = Fraction(yv).limit_denominator(10 ** 12)
        return e.eval_float(y=fy, m=2)

    fd = (val(y0 + h) - val(y0 - h)) / (2 * h)
    assert got == pytest.approx(fd, rel=1e-5, abs=1e-5)
    doubled = e.diff_times_2B()
    assert doubled.a == 2 * stepped.a and doubled.b == 2 * stepped.b


def test_element_guards():
    other_q = RatPoly(VARS, {(1, 0): 1})
    a = ExtensionElement(RatPoly(VARS), RatPoly(VARS), Q)
    b = ExtensionElement(RatPoly(VARS), RatPoly(VARS), other_q)
    with pytest.raises(ValueError):
        _ = a + b


# ---------------------------------------------------------------- certificates

def test_positivity_shift_examples():
    m_minus_4 = RatPoly(VARS, {(0, 1): 1, (0, 0): -4})
    assert positivity_for_m_ge(m_minus_4, 4).passed
    cert = positivity_for_m_ge(m_minus_4, 0)
    assert cert.status == "sign_indefinite"
    assert cert.witness == (0, 0)


def test_chain_k4_matches_references():
    res = build_chain_k4_p2()
    assert res.certificate.passed
    assert res.polys["L"].coeff((8, 0)) == 4 * 101250
    assert res.polys["L"].coeff((0, 2)) == 4 * 14400
    assert res.polys["f1"] == RatPoly(VARS, ref.K4_F1)
    assert res.polys["l2"] == RatPoly(VARS, ref.K4_L2)
    assert res.steps == ["B", "B", "B", "B"]


def test_chain_k8_boundary():
    res = build_chain_k8_p2()
    assert res.certificate.passed and res.certificate.m_low == 4
    lp = res.polys["Lprime"].subs("y", 0)
    assert lp.eval(y=0, m=4) == 0
    assert lp.eval(y=0, m=5) > 0
    for mm in (1, 2, 3):
        assert lp.eval(y=0, m=mm) < 0
    assert lp == RatPoly(VARS, {(0, e[0]): c for e, c in ref.K8_LPRIME0.items()})


def test_generic_k_factor():
    factor = optimality_factor_generic_k()
    assert factor.eval(y=0, m=2, k=12) == 0
    assert factor.eval(y=0, m=4, k=8) == 0
    # km - 6m - k = -6 for m = 1, so no k rescues m = 1 (R_1 needs direct proof)
    for k in (8, 20, 100):
        assert factor.eval(y=0, m=1, k=k) < 0
    assert factor.eval(y=0, m=2, k=16) > 0


def test_chain_p3_anchors():
    res = build_chain_p3_k4()
    assert res.certificate.passed and res.certificate.m_low == 1
    assert res.polys["l1"].coeff((4, 0)) == 3 * 16875
    assert res.polys["l2"].coeff((5, 0)) == 27 * 5625
    assert res.polys["l1"].coeff((0, 0)) == 3 * 5120


def test_run_chain_dispatch_and_json():
    for name in ALL_CHAINS:
        res = run_chain(name)
        d = json.loads(certificate_json(res))
        assert d["chain"] == name
        assert set(d) >= {"chain", "q", "steps", "polys", "anchors"}
    with pytest.raises(DomainError):
        run_chain("bogus")


def test_chain_mismatch_detection(monkeypatch):
    tampered = dict(ref.K4_F1)
    tampered[(0, 3)] = 3  # flip one printed coefficient
    monkeypatch.setattr(ref, "K4_F1", tampered)
    with pytest.raises(ChainMismatchError) as exc:
        build_chain_k4_p2()
    assert exc.value.name == "f1"


# ---------------------------------------------------------------- numeric sweep

def test_sweep_k4_all_nonnegative():
    grid = [0.05 * i for i in range(1, 401)]
    rep = numeric_lemma_sweep(4.0, 2.0, [1, 2, 3, 5, 10], grid)
    assert rep["orientation"] == "upper"
    assert rep["all_nonnegative"]


def test_sweep_k8_boundary_at_m4():
    grid = [0.05 * i for i in range(1, 401)]
    rep = numeric_lemma_sweep(8.0, 2.0, [1, 2, 3, 4, 5], grid)
    assert rep["orientation"] == "lower"
    for m in (1, 2, 3):
        assert not rep["per_m"][m]["ok"]
    for m in (4, 5):
        assert rep["per_m"][m]["ok"]


def test_sweep_guards():
    with pytest.raises(DomainError):
        numeric_lemma_sweep(4.0, 2.0, [0], [1.0])
    with pytest.raises(DomainError):
        numeric_lemma_sweep(4.0, 2.0, [1], [])
    with pytest.raises(DomainError):
        numeric_lemma_sweep(4.0, 2.0, [1], [1.0], orientation="sideways")
