"""Built-in library of multiplicative functions.

Each entry couples a prime-power rule (the function's defining master
equation) with a short description, the closed Bell series when one is
known, and the expected finite zeta-factor shape when one exists.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .bell import (DEFAULT_DEGREE_CAP, BellRational, MasterEquation,
                   MultiplicativeFunction)
from .errors import CatalogError
from .euler import INFINITE
from .polys import PrimePoly, XPoly

_MAX_K = 30
_MAX_T = 8
_MAX_C = 10**6

_ZERO = PrimePoly.zero
_ONE = PrimePoly.one


def _P(l: int, c: int = 1) -> PrimePoly:
    return PrimePoly.monomial(l, c)


def _C(v: int) -> PrimePoly:
    return PrimePoly.const(v)


def _geom(step: int, terms: int, start: int = 0) -> PrimePoly:
    """p^start + p^(start+step) + ... (terms summands)."""
    if terms <= 0:
        return _ZERO
    if step == 0:
        return _P(start, terms)
    return PrimePoly({start + step * j: 1 for j in range(terms)})


def _xp(*rows) -> XPoly:
    out = []
    for r in rows:
        if isinstance(r, PrimePoly):
            out.append(r)
        elif isinstance(r, dict):
            out.append(PrimePoly(r))
        else:
            out.append(PrimePoly.const(r))
    return XPoly(out)


def _bin(S: int, l: int, u: int) -> XPoly:
    return XPoly.binomial(S, l, u)


def _zf(*tuples):
    """Merge (u, l, gamma) tuples into a canonical sorted list."""
    acc: dict[tuple[int, int], int] = {}
    for u, l, g in tuples:
        acc[(u, l)] = acc.get((u, l), 0) + g
    out = [(u, l, g) for (u, l), g in acc.items() if g]
    out.sort(key=lambda t: (t[0], -t[1]))
    return out


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _factorize(c: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= c:
        if c % d == 0:
            e = 0
            while c % d == 0:
                c //= d
                e += 1
            out.append((d, e))
        d += 1
    if c > 1:
        out.append((c, 1))
    return out


@dataclass(frozen=True)
class Param:
    name: str
    lo: int
    hi: int
    prime: bool = False


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    summary: str
    params: tuple[Param, ...]
    build: Callable
    bell: Callable | None = None
    zeta: Callable | None = None
    validate: Callable | None = None

    def check_args(self, args) -> tuple[int, ...]:
        if len(args) != len(self.params):
            names = ", ".join(p.name for p in self.params) or "none"
            raise CatalogError("%s takes parameters (%s), got %d value(s)"
                               % (self.name, names, len(args)))
        vals = []
        for p, a in zip(self.params, args):
            if not isinstance(a, int) or isinstance(a, bool):
                raise CatalogError("%s: parameter %s must be an integer"
                                   % (self.name, p.name))
            if not p.lo <= a <= p.hi:
                raise CatalogError("%s: parameter %s=%d out of range [%d, %d]"
                                   % (self.name, p.name, a, p.lo, p.hi))
            if p.prime and not _is_prime(a):
                raise CatalogError("%s: parameter %s=%d must be prime"
                                   % (self.name, p.name, a))
            vals.append(a)
        if self.validate is not None:
            msg = self.validate(*vals)
            if msg:
                raise CatalogError("%s: %s" % (self.name, msg))
        return tuple(vals)

    def instance_name(self, args) -> str:
        if not args:
            return self.name
        return "%s(%s)" % (self.name, ",".join(str(a) for a in args))

    def make(self, *args) -> MultiplicativeFunction:
        vals = self.check_args(args)
        master, cap = self.build(*vals)
        return MultiplicativeFunction(self.instance_name(vals), master,
                                      degree_cap=cap or DEFAULT_DEGREE_CAP)

    def closed_bell(self, *args) -> BellRational | None:
        if self.bell is None:
            return None
        return self.bell(*self.check_args(args))

    def expected_zeta(self, *args):
        """Finite form as (u, l, gamma) tuples, "infinite", or None."""
        if self.zeta is None:
            return None
        return self.zeta(*self.check_args(args))


CATALOG: dict[str, CatalogEntry] = {}


def _register(name, summary, params=(), bell=None, zeta=None, validate=None):
    def deco(build):
        CATALOG[name] = CatalogEntry(name, summary, tuple(params), build,
                                     bell, zeta, validate)
        return build
    return deco


def make(name: str, *args) -> MultiplicativeFunction:
    entry = CATALOG.get(name)
    if entry is None:
        raise CatalogError("unknown function %r" % name)
    return entry.make(*args)


def names() -> list[str]:
    return sorted(CATALOG)


_K = Param("k", 0, _MAX_K)
_K1 = Param("k", 1, _MAX_K)
_T = Param("t", 2, _MAX_T)
_T1 = Param("t", 1, _MAX_T)
_CP = Param("c", 1, _MAX_C)
_QP = Param("q", 2, _MAX_C, prime=True)


# -- all-ones, identity and power scales ------------------------------------

@_register("one", "constantly 1; unit of Dirichlet convolution products",
           bell=lambda: BellRational(_xp(1), _bin(1, 0, 1)),
           zeta=lambda: [(1, 0, 1)])
def _build_one():
    return MasterEquation(lambda e: _ONE), None


@_register("id", "identity map n",
           bell=lambda: BellRational(_xp(1), _bin(1, 1, 1)),
           zeta=lambda: [(1, 1, 1)])
def _build_id():
    return MasterEquation(lambda e: _P(e)), None


@_register("power", "k-th power n^k", [_K],
           bell=lambda k: BellRational(_xp(1), _bin(1, k, 1)),
           zeta=lambda k: [(1, k, 1)])
def _build_power(k):
    return MasterEquation(lambda e: _P(k * e)), None


@_register("const", "c raised to the number of prime factors with "
           "multiplicity", [_CP],
           bell=lambda c: BellRational(_xp(1), _xp(1, -c)),
           zeta=lambda c: [(1, 0, 1)] if c == 1 else INFINITE)
def _build_const(c):
    return MasterEquation(lambda e: _C(c**e)), None


# -- sign functions ----------------------------------------------------------

@_register("mu", "Moebius function: parity of squarefree factorisations",
           bell=lambda: BellRational(_xp(1, -1), _xp(1)),
           zeta=lambda: [(1, 0, -1)])
def _build_mu():
    return MasterEquation(lambda e: _C(-1) if e == 1 else _ZERO), None


@_register("liouville", "parity of the total number of prime factors",
           bell=lambda: BellRational(_xp(1), _xp(1, 1)),
           zeta=lambda: [(2, 0, 1), (1, 0, -1)])
def _build_liouville():
    return MasterEquation(lambda e: _C((-1) ** e)), None


@_register("mu_star", "sign from the number of distinct prime factors",
           bell=lambda: BellRational(_xp(1, -2), _xp(1, -1)),
           zeta=lambda: INFINITE)
def _build_mu_star():
    return MasterEquation(lambda e: _C(-1)), None


@_register("mu_apostol", "1 on k-th-power-free n, -1 when some prime "
           "exponent hits k exactly, else 0", [_K1],
           bell=lambda k: BellRational(
               _xp(1, *([0] * (k - 1)), -2, 1) if k > 1 else _xp(1, -1),
               _xp(1, -1) if k > 1 else _xp(1)),
           zeta=lambda k: [(1, 0, -1)] if k == 1 else INFINITE)
def _build_mu_apostol(k):
    def rule(e):
        if e < k:
            return _ONE
        return _C(-1) if e == k else _ZERO
    return MasterEquation(rule), max(DEFAULT_DEGREE_CAP, k + 3)


# -- indicator-style selectors -----------------------------------------------

@_register("eps", "indicator of perfect t-th powers", [_T],
           bell=lambda t: BellRational(_xp(1), _bin(1, 0, t)),
           zeta=lambda t: [(t, 0, 1)])
def _build_eps(t):
    return MasterEquation(lambda e: _ONE if e % t == 0 else _ZERO), None


@_register("xi", "indicator of t-free numbers (no prime power p^t divides)",
           [_T],
           bell=lambda t: BellRational(_bin(1, 0, t), _bin(1, 0, 1)),
           zeta=lambda t: [(1, 0, 1), (t, 0, -1)])
def _build_xi(t):
    return MasterEquation(lambda e: _ONE if e < t else _ZERO), None


@_register("depleted", "drops multiples of q^k, 1 elsewhere",
           [_QP, Param("k", 1, _MAX_K)],
           zeta=lambda q, k: [(1, 0, 1)])
def _build_depleted(q, k):
    return MasterEquation(lambda e: _ONE,
                          {q: lambda e: 1 if e < k else 0}), None


@_register("periodic2", "c on even numbers, 1 on odd", [_CP],
           zeta=lambda c: [(1, 0, 1)])
def _build_periodic2(c):
    return MasterEquation(lambda e: _ONE, {2: lambda e: c}), None


@_register("periodic4", "c1 on multiples of 4, c2 on other evens, 1 on odd",
           [Param("c1", 1, _MAX_C), Param("c2", 1, _MAX_C)],
           zeta=lambda c1, c2: [(1, 0, 1)])
def _build_periodic4(c1, c2):
    return MasterEquation(lambda e: _ONE,
                          {2: lambda e: c2 if e == 1 else c1}), None


# -- fixed-argument gcd and lcm ----------------------------------------------

@_register("gcdc", "gcd(n, c) for fixed c", [_CP],
           zeta=lambda c: [(1, 0, 1)])
def _build_gcdc(c):
    exc = {q: (lambda e, q=q, eq=eq: q ** min(e, eq))
           for q, eq in _factorize(c)}
    return MasterEquation(lambda e: _ONE, exc), None


@_register("lcmc", "lcm(n, c)/c for fixed c", [_CP],
           zeta=lambda c: [(1, 1, 1)])
def _build_lcmc(c):
    exc = {q: (lambda e, q=q, eq=eq: q ** max(e - eq, 0))
           for q, eq in _factorize(c)}
    return MasterEquation(lambda e: _P(e), exc), None


# -- power-part extractors ---------------------------------------------------

@_register("core", "t-free part: n divided by its largest t-th-power divisor",
           [_T],
           bell=lambda t: BellRational(_bin(1, t, t),
                                       _bin(1, 0, t) * _bin(1, 1, 1)),
           zeta=lambda t: [(t, 0, 1), (1, 1, 1), (t, t, -1)])
def _build_core(t):
    return MasterEquation(lambda e: _P(e % t)), None


@_register("rad", "prime exponents clipped at t-1 (t=2 gives the radical)",
           [_T],
           bell=lambda t: BellRational(
               _xp(1, *({j: 1, j - 1: -1} for j in range(1, t))),
               _bin(1, 0, 1)),
           zeta=lambda t: INFINITE)
def _build_rad(t):
    return MasterEquation(lambda e: _P(min(e, t - 1))), None


@_register("max_tpow", "largest t-th power dividing n", [_T],
           bell=lambda t: BellRational(_bin(1, 0, t),
                                       _bin(1, 0, 1) * _bin(1, t, t)),
           zeta=lambda t: [(1, 0, 1), (t, t, 1), (t, 0, -1)])
def _build_max_tpow(t):
    return MasterEquation(lambda e: _P(t * (e // t))), None


@_register("root_tpow", "t-th root of the largest t-th power dividing n",
           [_T],
           bell=lambda t: BellRational(_bin(1, 0, t),
                                       _bin(1, 0, 1) * _bin(1, 1, t)),
           zeta=lambda t: [(1, 0, 1), (t, 1, 1), (t, 0, -1)])
def _build_root_tpow(t):
    return MasterEquation(lambda e: _P(e // t)), None


# -- divisor sums ------------------------------------------------------------

@_register("sigma", "sum of k-th powers of divisors", [_K],
           bell=lambda k: BellRational(_xp(1),
                                       _bin(1, 0, 1) * _bin(1, k, 1)),
           zeta=lambda k: _zf((1, 0, 1), (1, k, 1)))
def _build_sigma(k):
    return MasterEquation(lambda e: _geom(k, e + 1)), None


@_register("sigma_odd", "sum of k-th powers of odd divisors", [_K],
           zeta=lambda k: _zf((1, 0, 1), (1, k, 1)))
def _build_sigma_odd(k):
    return MasterEquation(lambda e: _geom(k, e + 1), {2: lambda e: 1}), None


@_register("tpow_divisor_sum", "sum of divisors that are t-th powers", [_T],
           bell=lambda t: BellRational(_xp(1),
                                       _bin(1, 0, 1) * _bin(1, t, t)),
           zeta=lambda t: [(1, 0, 1), (t, t, 1)])
def _build_tpow_divisor_sum(t):
    return MasterEquation(lambda e: _geom(t, e // t + 1)), None


@_register("sigma_tfree", "sum of k-th powers of t-free divisors",
           [_K, _T],
           bell=lambda k, t: BellRational(_bin(1, t * k, t),
                                          _bin(1, 0, 1) * _bin(1, k, 1)),
           zeta=lambda k, t: _zf((1, 0, 1), (1, k, 1), (t, t * k, -1)))
def _build_sigma_tfree(k, t):
    return MasterEquation(lambda e: _geom(k, min(e, t - 1) + 1)), None


@_register("sigma_pow", "divisor power sum of a perfect power: "
           "sum of k-th powers of divisors of n^t", [_K, _T],
           bell=lambda k, t: BellRational(
               _xp(1, _geom(k, t - 1, start=k)),
               _bin(1, 0, 1) * _bin(1, t * k, 1)),
           zeta=lambda k, t: (_zf((1, 0, 1), (1, k, 1), (1, 2 * k, 1),
                                  (2, 2 * k, -1))
                              if t == 2 else INFINITE))
def _build_sigma_pow(k, t):
    return MasterEquation(lambda e: _geom(k, e * t + 1)), None


@_register("sigma_prime", "sum over coprime unitary splittings d * m = n "
           "of d restricted to squarefree d",
           bell=lambda: BellRational(_xp(1, {1: 1}, {1: -1}), _bin(1, 0, 1)),
           zeta=lambda: INFINITE)
def _build_sigma_prime():
    return MasterEquation(lambda e: _ONE + _P(1) if e == 1 else _ONE), None


# -- divisor counts ----------------------------------------------------------

@_register("tau", "ordered factorisations of n into k parts", [_K1],
           bell=lambda k: BellRational(
               _xp(*(math.comb(k, j) * (-1) ** j for j in range(k + 1))),
               _xp(1)).reciprocal(),
           zeta=lambda k: [(1, 0, k)])
def _build_tau(k):
    return MasterEquation(lambda e: _C(math.comb(e + k - 1, k - 1))), \
        max(DEFAULT_DEGREE_CAP, k + 2)


@_register("tfull_count", "number of t-full divisors (every prime exponent "
           "in the divisor is at least t)", [_T],
           bell=lambda t: BellRational(
               _xp(1, -1, *([0] * (t - 2)), 1),
               _bin(1, 0, 1) * _bin(1, 0, 1)),
           zeta=lambda t: (_zf((1, 0, 1), (2, 0, 1), (3, 0, 1), (6, 0, -1))
                           if t == 2 else None))
def _build_tfull_count(t):
    return MasterEquation(lambda e: _C(max(1, e - t + 2))), None


# -- pair statistics over divisor splittings ---------------------------------

@_register("gcd_pairs", "sum of gcd(d, n/d)^t over divisors d", [_T1],
           bell=lambda t: BellRational(_xp(1, 1),
                                       _bin(1, 0, 1) * _bin(1, t, 2)),
           zeta=lambda t: _zf((1, 0, 2), (2, t, 1), (2, 0, -1)))
def _build_gcd_pairs(t):
    def rule(e):
        acc: dict[int, int] = {}
        for m in range(e + 1):
            l = t * min(m, e - m)
            acc[l] = acc.get(l, 0) + 1
        return PrimePoly(acc)
    return MasterEquation(rule), None


@_register("lcm_pairs", "sum of lcm(d, n/d)^t over divisors d", [_T1],
           bell=lambda t: BellRational(_xp(1, {t: 1}),
                                       _bin(1, t, 1) * _bin(1, t, 2)),
           zeta=lambda t: _zf((1, t, 2), (2, t, 1), (2, 2 * t, -1)))
def _build_lcm_pairs(t):
    def rule(e):
        acc: dict[int, int] = {}
        for m in range(e + 1):
            l = t * max(m, e - m)
            acc[l] = acc.get(l, 0) + 1
        return PrimePoly(acc)
    return MasterEquation(rule), None


# -- totients and their relatives --------------------------------------------

@_register("phi", "count of residues mod n coprime to n",
           bell=lambda: BellRational(_bin(1, 0, 1), _bin(1, 1, 1)),
           zeta=lambda: [(1, 1, 1), (1, 0, -1)])
def _build_phi():
    return MasterEquation(lambda e: _P(e) - _P(e - 1)), None


@_register("phi_kl", "weighted totient: divisor sum of mu(d) d^k (n/d)^l",
           [Param("k", 0, _MAX_K), Param("l", 1, _MAX_K)],
           bell=lambda k, l: BellRational(_bin(1, k, 1), _bin(1, l, 1)),
           zeta=lambda k, l: [(1, l, 1), (1, k, -1)],
           validate=lambda k, l: None if k < l else "needs k < l")
def _build_phi_kl(k, l):
    return MasterEquation(lambda e: _P(l * e) - _P(k + l * (e - 1))), None


@_register("phi_prime", "totient restricted to squarefree arguments",
           bell=lambda: BellRational(_xp(1, {1: 1, 0: -1}), _xp(1)),
           zeta=lambda: INFINITE)
def _build_phi_prime():
    return MasterEquation(
        lambda e: _P(1) - _ONE if e == 1 else _ZERO), None


@_register("jordan", "count of coprime k-tuples mod n", [_K1],
           bell=lambda k: BellRational(_bin(1, 0, 1), _bin(1, k, 1)),
           zeta=lambda k: [(1, k, 1), (1, 0, -1)])
def _build_jordan(k):
    return MasterEquation(lambda e: _P(k * e) - _P(k * (e - 1))), None


@_register("jordan_ratio", "ratio of the k-th to the first Jordan totient",
           [_K1],
           bell=lambda k: BellRational(_xp(1, _geom(1, k - 1)),
                                       _bin(1, k - 1, 1)),
           zeta=lambda k: ([(1, 0, 1)] if k == 1 else
                           _zf((1, 0, 1), (1, 1, 1), (2, 0, -1)) if k == 2
                           else INFINITE))
def _build_jordan_ratio(k):
    return MasterEquation(
        lambda e: _geom(1, k, start=(k - 1) * (e - 1))), None


@_register("dedekind", "totient-like product over p | n of n (1 + 1/p)",
           bell=lambda: BellRational(_xp(1, 1), _bin(1, 1, 1)),
           zeta=lambda: [(1, 0, 1), (1, 1, 1), (2, 0, -1)])
def _build_dedekind():
    return MasterEquation(lambda e: _P(e) + _P(e - 1)), None


@_register("psi_k", "k-th power analogue of the Dedekind product", [_K1],
           bell=lambda k: BellRational(_xp(1, 1), _bin(1, k, 1)),
           zeta=lambda k: _zf((1, 0, 1), (1, k, 1), (2, 0, -1)))
def _build_psi_k(k):
    return MasterEquation(lambda e: _P(k * e) + _P(k * (e - 1))), None


@_register("ramanujan", "trigonometric divisor sum at fixed modulus c: "
           "sum of d mu(c/d)-style weights over d | gcd(n, c)", [_CP],
           zeta=lambda c: [(1, 0, -1)])
def _build_ramanujan(c):
    def local_rule(q, eq):
        def rule(e):
            if e <= eq:
                return q**e - q ** (e - 1)
            return -(q**eq) if e == eq + 1 else 0
        return rule
    exc = {q: local_rule(q, eq) for q, eq in _factorize(c)}
    generic = lambda e: _C(-1) if e == 1 else _ZERO
    return MasterEquation(generic, exc), None


# -- unitary-divisor analogues ------------------------------------------------

@_register("sigma_star", "sum of k-th powers of unitary divisors "
           "(divisors coprime to their cofactor)", [_K],
           bell=lambda k: BellRational(_bin(1, k, 2),
                                       _bin(1, 0, 1) * _bin(1, k, 1)),
           zeta=lambda k: _zf((1, 0, 1), (1, k, 1), (2, k, -1)))
def _build_sigma_star(k):
    return MasterEquation(lambda e: _ONE + _P(k * e)), None


@_register("sigma_star_odd", "sum of k-th powers of odd unitary divisors",
           [_K],
           zeta=lambda k: _zf((1, 0, 1), (1, k, 1), (2, k, -1)))
def _build_sigma_star_odd(k):
    return MasterEquation(lambda e: _ONE + _P(k * e), {2: lambda e: 1}), None


@_register("phi_star", "unitary totient: product of p^e - 1 over "
           "maximal prime powers in n",
           bell=lambda: BellRational(_xp(1, -2, {1: 1}),
                                     _bin(1, 0, 1) * _bin(1, 1, 1)),
           zeta=lambda: INFINITE)
def _build_phi_star():
    return MasterEquation(lambda e: _P(e) - _ONE), None


@_register("jordan_star", "unitary Jordan totient: product of p^(ek) - 1",
           [_K1],
           bell=lambda k: BellRational(_xp(1, -2, {k: 1}),
                                       _bin(1, 0, 1) * _bin(1, k, 1)),
           zeta=lambda k: INFINITE)
def _build_jordan_star(k):
    return MasterEquation(lambda e: _P(e * k) - _ONE), None


@_register("tau_star", "k to the number of distinct primes dividing n",
           [_K1],
           bell=lambda k: BellRational(_xp(1, k - 1), _bin(1, 0, 1)),
           zeta=lambda k: ([(1, 0, 1)] if k == 1 else
                           _zf((1, 0, 2), (2, 0, -1)) if k == 2
                           else INFINITE))
def _build_tau_star(k):
    return MasterEquation(lambda e: _C(k)), None


# -- power congruence counts ---------------------------------------------------

@_register("congruence_count", "number of residues x mod n with "
           "x^t = 0 (mod n)", [_T],
           bell=lambda t: BellRational(
               _xp(1, *({r - 1: 1} for r in range(1, t))),
               _bin(1, t - 1, t)),
           zeta=lambda t: (_zf((1, 0, 1), (2, 1, 1), (2, 0, -1))
                           if t == 2 else INFINITE))
def _build_congruence_count(t):
    return MasterEquation(lambda e: _P(e - (e + t - 1) // t)), None


@_register("congruence_min", "least m whose t-th power n divides", [_T],
           bell=lambda t: BellRational(
               _xp(1, *({1: 1} for _ in range(1, t))),
               _bin(1, 1, t)),
           zeta=lambda t: (_zf((1, 1, 1), (2, 1, 1), (2, 2, -1))
                           if t == 2 else INFINITE))
def _build_congruence_min(t):
    return MasterEquation(lambda e: _P((e + t - 1) // t)), None
