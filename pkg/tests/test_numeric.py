"""Numerical evaluation inside the half-plane of convergence."""
from __future__ import annotations

import math

import pytest

from dgf.catalog import make
from dgf.errors import DivergenceError
from dgf.euler import finite_zeta_form
from dgf.numeric import (
    EvalResult,
    eval_euler_product,
    eval_partial_sum,
    eval_zeta_form,
    riemann_zeta,
    wynn_epsilon,
)

ZETA2 = 1.6449340668482264
ZETA3 = 1.2020569031595943
ZETA4 = 1.0823232337111382


def test_riemann_zeta_reference_values():
    assert riemann_zeta(2.0) == pytest.approx(ZETA2, abs=1e-12)
    assert riemann_zeta(3.0) == pytest.approx(ZETA3, abs=1e-12)
    assert riemann_zeta(4.0) == pytest.approx(ZETA4, abs=1e-12)
    # non-integer points against an independent high-precision source
    mp = pytest.importorskip("mpmath")
    for s in [1.1, 1.5, 2.5, 3.7, 7.25, 20.0]:
        assert riemann_zeta(s) == pytest.approx(float(mp.zeta(s)), rel=1e-11)


def test_riemann_zeta_divergence():
    for s in [1.0, 0.5, 0.0, -2.0]:
        with pytest.raises(DivergenceError):
            riemann_zeta(s)


def test_wynn_epsilon_on_alternating_series():
    # log 2 partial sums: linear convergence, where extrapolation shines
    partials, acc = [], 0.0
    for n in range(1, 26):
        acc += (-1.0) ** (n + 1) / n
        partials.append(acc)
    best, err = wynn_epsilon(partials)
    assert abs(best - math.log(2)) < 1e-12
    assert err < 1e-10


def test_wynn_epsilon_on_monotone_series():
    # zeta(2) partial sums converge logarithmically: expect a modest gain
    partials, acc = [], 0.0
    for n in range(1, 30):
        acc += 1.0 / n ** 2
        partials.append(acc)
    best, _ = wynn_epsilon(partials)
    assert abs(best - ZETA2) < abs(partials[-1] - ZETA2) / 3


def test_eval_zeta_form_sigma():
    zf = finite_zeta_form(make("sigma", 1))
    r = eval_zeta_form(zf, 3.0)
    assert r.method == "zeta_form"
    assert r.value == pytest.approx(ZETA3 * ZETA2, abs=1e-10)
    assert abs(r.value - ZETA3 * ZETA2) <= max(r.error, 1e-12)


def test_eval_zeta_form_with_local_factor():
    f = make("gcdc", 4)
    zf = finite_zeta_form(f)
    r = eval_zeta_form(zf, 3.0)
    p = eval_partial_sum(f, 3.0, N=20000)
    assert abs(r.value - p.value) <= r.error + p.error


def test_eval_euler_product_within_reported_error():
    f = make("sigma", 1)
    truth = ZETA3 * ZETA2
    r = eval_euler_product(f, 3.0, P=2000)
    assert r.method == "euler_product+wynn"
    assert abs(r.value - truth) <= 10 * r.error
    r0 = eval_euler_product(f, 3.0, P=2000, accel="none")
    assert r0.method == "euler_product"
    assert abs(r0.value - truth) <= r0.error
    # acceleration should beat the raw truncation
    assert abs(r.value - truth) < abs(r0.value - truth)


def test_eval_euler_product_divergence():
    f = make("sigma", 1)  # converges only for s > 2
    for s in [2.0, 1.5]:
        with pytest.raises(DivergenceError):
            eval_euler_product(f, s, P=100)
    with pytest.raises(DivergenceError):
        eval_partial_sum(f, 2.0, N=100)


def test_eval_partial_sum_within_error():
    f = make("phi")
    truth = ZETA2 / ZETA3  # at s = 3
    r = eval_partial_sum(f, 3.0, N=5000)
    assert r.method == "partial_sum"
    assert abs(r.value - truth) <= r.error


def test_methods_agree_on_alternating_sign_function():
    f = make("liouville")  # 1/zeta(s) * zeta(2s)
    truth = riemann_zeta(6.0) / riemann_zeta(3.0)
    r1 = eval_euler_product(f, 3.0, P=10000)
    r2 = eval_partial_sum(f, 3.0, N=50000)
    assert r1.value == pytest.approx(truth, abs=1e-6)
    assert abs(r2.value - truth) <= r2.error


def test_eval_result_str():
    r = EvalResult(1.9773043502972958, 2.39e-05, "euler_product+wynn")
    assert str(r) == "1.9773043503 (error <= 2.39e-05, euler_product+wynn)"
