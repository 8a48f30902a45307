"""Recursion, averaged potentials, and the gamma identity."""

import math

import pytest

from regpot.core import EvalParams, eval_vmp
from regpot.errors import DomainError
from regpot.recursion import (averaged_at_zero, averaged_cusp_fd,
                              averaged_derivative_at_zero, averaged_potential,
                              chain_values, gamma_identity_check, recurse_up,
                              seed_at, unrolled_value)


def rel(a, b):
    return abs(a - b) / abs(b)


def test_seed_and_recurse_up_matches_direct():
    for m0 in (0.0, 0.5, -0.3):
        seed = seed_at(m0, 2.0, 1.5)
        chain = recurse_up(seed, m0 + 6)
        assert len(chain) == 7
        for j, v in enumerate(chain):
            direct = eval_vmp(EvalParams(m0 + j, 2.0, 1.5)).value
            assert rel(v, direct) < 1e-9


def test_seed_inverted_step_consistency():
    # for m0 in (-1, 0) the below-domain seed value must satisfy the
    # recursion one step up
    m0, p, x = -0.3, 2.0, 2.0
    s = seed_at(m0, p, x)
    xp = x ** p
    up = ((m0 + 1 - 1 + 1.0 / p - xp) * s.v_m0 + xp * s.v_m0_minus_1) / (m0 + 1)
    assert rel(up, eval_vmp(EvalParams(m0 + 1, p, x)).value) < 1e-9


def test_chain_values_small_and_large_x():
    for x in (0.5, 1.0, 3.0, 10.0, 50.0):
        ch = chain_values(20, 2.0, x)
        for m in (0, 1, 10, 20):
            assert rel(ch[m], eval_vmp(EvalParams(float(m), 2.0, x)).value) < 1e-8


def test_unrolled_matches_recursion():
    p, x = 2.0, 1.7
    ch = chain_values(9, p, x)
    full = [x ** (1.0 - p)] + ch  # prepend V_(-1)
    for m in (1, 4, 9):
        got = unrolled_value(full[:m + 1], m, p, x)
        assert rel(got, ch[m]) < 1e-10


def test_averaged_potential_closed_form():
    # closed form is cross-checked against the direct sum internally
    for n in (1, 3, 7):
        for x in (0.3, 1.0, 5.0):
            v = averaged_potential(n, 2.0, x)
            direct = sum(eval_vmp(EvalParams(float(m), 2.0, x)).value
                         for m in range(n)) / n
            assert rel(v, direct) < 1e-9


def test_averaged_cusp_slope():
    for n in (1, 2, 5):
        assert averaged_derivative_at_zero(n, 2.0) == -2.0 / n
        fd = averaged_cusp_fd(n, 2.0, h=1e-6)
        assert abs(fd - (-2.0 / n)) < 1e-3


def test_averaged_at_zero():
    got = averaged_at_zero(2, 2.0)
    want = (math.sqrt(math.pi) + math.sqrt(math.pi) / 2) / 2
    assert rel(got, want) < 1e-13


def test_gamma_identity():
    for m in (1, 2, 10, 40):
        for p in (0.5, 2.0, 3.0):
            lhs, rhs = gamma_identity_check(m, p)
            assert rel(lhs, rhs) < 1e-12


def test_domain_guards():
    with pytest.raises(DomainError):
        seed_at(1.0, 2.0, 1.0)
    with pytest.raises(DomainError):
        chain_values(0, 2.0, 1.0)
    with pytest.raises(DomainError):
        averaged_potential(0, 2.0, 1.0)
    with pytest.raises(DomainError):
        averaged_derivative_at_zero(2, 1.0)
    with pytest.raises(DomainError):
        gamma_identity_check(0, 2.0)
