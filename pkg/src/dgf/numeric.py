"""Floating-point evaluation of Dirichlet series over their half-plane
of convergence: zeta products, truncated Euler products with optional
sequence acceleration, and direct partial sums with tail estimates.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bell import MultiplicativeFunction
from .errors import DivergenceError
from .euler import ZetaForm, abscissa, factor_bell
from .sequences import terms

_BERNOULLI: list[Fraction] = []


def _bernoulli(n: int) -> Fraction:
    while len(_BERNOULLI) <= n:
        m = len(_BERNOULLI)
        if m == 0:
            _BERNOULLI.append(Fraction(1))
            continue
        acc = Fraction(0)
        for j in range(m):
            acc += math.comb(m + 1, j) * _BERNOULLI[j]
        _BERNOULLI.append(-acc / (m + 1))
    return _BERNOULLI[n]


_EM_CUTOFF = 40
_EM_TERMS = 15


def riemann_zeta(s: float) -> float:
    """zeta(s) for real s > 1, by Euler-Maclaurin summation."""
    if s <= 1.0:
        raise DivergenceError("zeta has no value at s = %g (needs s > 1)" % s)
    N = _EM_CUTOFF
    acc = math.fsum(n ** -s for n in range(1, N))
    acc += N ** (1.0 - s) / (s - 1.0) + 0.5 * N ** -s
    rising = s
    power = N ** (-s - 1.0)
    prev = math.inf
    for j in range(1, _EM_TERMS + 1):
        term = float(_bernoulli(2 * j)) / math.factorial(2 * j) * rising * power
        if abs(term) >= abs(prev):
            break
        acc += term
        if abs(term) < 1e-16 * abs(acc):
            break
        prev = term
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        power /= N * N
    return acc


def wynn_epsilon(seq: Sequence[float]) -> tuple[float, float]:
    """Accelerated limit of a sequence plus a crude error estimate.

    Even epsilon-table columns are the estimates; the error is the gap
    between the last two of them.  Breakdown (tiny difference) stops
    the table early and falls back to the best estimate so far.
    """
    cur = [float(v) for v in seq]
    if len(cur) < 2:
        return cur[0], math.inf
    prev = [0.0] * (len(cur) + 1)
    best = cur[-1]
    best_prev = None
    for k in range(1, min(len(seq), 40)):
        nxt = []
        broke = False
        for n in range(len(cur) - 1):
            d = cur[n + 1] - cur[n]
            if abs(d) < 1e-30:
                broke = True
                break
            nxt.append(prev[n + 1] + 1.0 / d)
        if broke or not nxt:
            break
        prev, cur = cur, nxt
        if k % 2 == 0:
            best_prev, best = best, cur[-1]
    if best_prev is None:
        return best, abs(seq[-1] - seq[-2])
    return best, abs(best - best_prev)


@dataclass
class EvalResult:
    value: float
    error: float
    method: str

    def __str__(self) -> str:
        return "%.12g (error <= %.3g, %s)" % (self.value, self.error,
                                              self.method)


def _primes_up_to(n: int) -> list[int]:
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i:: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i in range(2, n + 1) if sieve[i]]


def _poly_at(coeffs: Sequence[int], x: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _local_value(f: MultiplicativeFunction, p: int, s: float) -> float:
    """Value of the Euler factor at one prime: sum over a(p^e) p^(-es)."""
    x = p ** -s
    if p in f.master.exceptions:
        lb = f.local_bell(p)
        if lb is not None:
            return lb.evaluate(p, x)
    else:
        b = f.bell
        if b is not None:
            return b.evaluate(p, x)
    acc, e = 1.0, 1
    while e <= 400:
        t = f.value(p, e) * p ** (-e * s)
        acc += t
        if abs(t) < 1e-18 * abs(acc):
            break
        e += 1
    return acc


def _abscissa_of(f: MultiplicativeFunction) -> Fraction:
    return abscissa(factor_bell(f, 6)).abscissa


def eval_zeta_form(zf: ZetaForm, s: float) -> EvalResult:
    """Evaluate a finite zeta form at real s inside its half-plane."""
    absc = abscissa(zf).abscissa
    if s <= float(absc) + 1e-6:
        raise DivergenceError("s = %g is not beyond the abscissa %s"
                              % (s, absc))
    value = 1.0
    for z in zf.zeta_factors:
        value *= riemann_zeta(z.u * s - z.l) ** z.gamma
    for lf in zf.local:
        x = lf.prime ** -s
        value *= _poly_at(lf.num, x) / _poly_at(lf.den, x)
    return EvalResult(value, 1e-13 * abs(value), "zeta_form")


def eval_euler_product(f: MultiplicativeFunction, s: float, P: int = 10**6,
                       accel: str = "wynn") -> EvalResult:
    """Product of Euler factors over primes up to P.

    Partial products are recorded at doubling positions P/2^j and, with
    accel="wynn", extrapolated; otherwise the raw product is returned
    with a prime-tail error estimate.
    """
    if accel not in ("wynn", "none"):
        raise ValueError("accel must be 'wynn' or 'none'")
    absc = _abscissa_of(f)
    if s <= float(absc) + 1e-6:
        raise DivergenceError("s = %g is not beyond the abscissa %s"
                              % (s, absc))
    primes = _primes_up_to(P)
    cps = sorted({P >> j for j in range(21) if (P >> j) >= 2})
    partials = []
    prod = 1.0
    i = 0
    for cp in cps:
        while i < len(primes) and primes[i] <= cp:
            prod *= _local_value(f, primes[i], s)
            i += 1
        partials.append(prod)
    # prime-tail of the log-product, scaled back to an absolute estimate
    tail = abs(prod) * (P ** (float(absc) - s)) \
        / ((s - float(absc)) * math.log(P))
    if accel == "wynn" and len(partials) >= 3:
        value, err = wynn_epsilon(partials)
        if not math.isfinite(value):
            value, err = prod, tail
        return EvalResult(value, max(err, 1e-15 * abs(value)),
                          "euler_product+wynn")
    return EvalResult(prod, tail, "euler_product")


def eval_partial_sum(f: MultiplicativeFunction, s: float,
                     N: int = 10**5) -> EvalResult:
    """Direct sum of a(n) n^(-s) for n <= N with a crude tail bound.

    The tail uses |a(n)| <= C n^(sigma0 - 1) with C fitted on the
    computed window, so the bound is heuristic, not rigorous.
    """
    absc = _abscissa_of(f)
    s0 = float(absc)
    if s <= s0 + 1e-6:
        raise DivergenceError("s = %g is not beyond the abscissa %s"
                              % (s, absc))
    vals = terms(f, N)
    value = math.fsum(v * n ** -s for n, v in enumerate(vals, start=1))
    C = max(abs(v) / n ** (s0 - 1.0) for n, v in enumerate(vals, start=1))
    tail = C * N ** (s0 - s) / (s - s0)
    return EvalResult(value, tail, "partial_sum")
