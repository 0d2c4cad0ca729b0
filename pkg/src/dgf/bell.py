"""Master equations at prime powers and their Bell series.

A multiplicative function is pinned down by a master equation giving
a(p^e) as an integer polynomial in p, optionally overridden at finitely
many exceptional primes.  The Bell series sum_e a(p^e) x^e (x = p^-s)
is kept as an exact rational function over Z[p] whenever one exists.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .errors import DegreeBoundError, MasterEquationError
from .polys import PrimePoly, XPoly, series_eq, series_inv, series_mul

DEFAULT_DEGREE_CAP = 16
LOCAL_DEGREE_CAP = 40


# ---------------------------------------------------------------------------
# rational reconstruction

def _solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve an (over)determined linear system exactly.

    Returns None when inconsistent; free variables are set to zero.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = [row[:] + [rhs[i]] for i, row in enumerate(rows)]
    piv_cols = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][col]
        a[r] = [v * inv for v in a[r]]
        for i in range(m):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[r])]
        piv_cols.append(col)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if a[i][n] != 0:
            return None  # 0 = nonzero
    x = [Fraction(0)] * n
    for i, col in enumerate(piv_cols):
        x[col] = a[i][n]
    return x


def _scalar_pade(vals: Sequence[Fraction], d_cap: int):
    """Minimal-degree rational fit N/D, D(0)=1, matching all of vals.

    vals are the series coefficients at one numeric specialisation of p.
    Returns (num, den, degree) or None if nothing of degree <= d_cap fits.
    """
    M = len(vals) - 1
    for d in range(0, d_cap + 1):
        if 2 * d + 1 > M:
            return None
        if d == 0:
            den = [Fraction(1)]
            num = [Fraction(vals[0])]
            cand = (num, den)
        else:
            # sum_{i=1..d} D_i c_{j-i} = -c_j  for j = d+1 .. 2d+1
            rows = [[Fraction(vals[j - i]) for i in range(1, d + 1)]
                    for j in range(d + 1, 2 * d + 2)]
            rhs = [Fraction(-vals[j]) for j in range(d + 1, 2 * d + 2)]
            sol = _solve_exact(rows, rhs)
            if sol is None:
                continue
            den = [Fraction(1)] + sol
            num = [sum(den[i] * vals[j - i] for i in range(0, min(j, d) + 1))
                   for j in range(0, d + 1)]
            cand = (num, den)
        num, den = cand
        ok = True
        for j in range(d + 1, M + 1):
            s = sum(den[i] * vals[j - i] for i in range(0, min(j, d) + 1))
            if s != 0:
                ok = False
                break
        if ok:
            return num, den, d
    return None


def _interp_poly(xs: list[int], ys: list[Fraction]) -> list[Fraction]:
    """Coefficients (low to high) of the interpolating polynomial."""
    n = len(xs)
    dd = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)]
    basis = [Fraction(1)]
    for i in range(n):
        for e, b in enumerate(basis):
            if e == len(poly):
                poly.append(Fraction(0))
            poly[e] += dd[i] * b
        nb = [Fraction(0)] * (len(basis) + 1)
        for e, b in enumerate(basis):
            nb[e] -= xs[i] * b
            nb[e + 1] += b
        basis = nb
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


def _fractions_to_primepoly(poly: list[Fraction]) -> PrimePoly | None:
    c = {}
    for e, v in enumerate(poly):
        if v != 0:
            if v.denominator != 1:
                return None
            c[e] = int(v)
    return PrimePoly(c)


def rationalize(series: Sequence[PrimePoly], max_degree: int) -> "BellRational":
    """Reconstruct the minimal rational function in x matching a series.

    Needs at least 2*max_degree+2 coefficients; the fit is additionally
    checked against every remaining coefficient and then re-verified
    symbolically over Z[p].  Raises DegreeBoundError when no rational
    function with numerator and denominator degree <= max_degree fits.
    """
    series = list(series)
    M = len(series) - 1
    if M + 1 < 2 * max_degree + 2:
        raise ValueError("need at least %d coefficients for degree %d"
                         % (2 * max_degree + 2, max_degree))
    if not series[0].is_one():
        raise ValueError("series must start at 1")

    if all(c.is_constant() for c in series):
        # prime-independent series: one specialisation carries everything
        fit = _scalar_pade([Fraction(c.constant_value()) for c in series], max_degree)
        if fit is None:
            raise DegreeBoundError("no rational form of degree <= %d" % max_degree)
        num, den, _ = fit
        n_pp = [_fractions_to_primepoly([v]) for v in num]
        d_pp = [_fractions_to_primepoly([v]) for v in den]
        if any(c is None for c in n_pp + d_pp):
            raise DegreeBoundError("rational form has non-integer coefficients")
        return BellRational(XPoly(n_pp), XPoly(d_pp))

    pts: list[int] = []
    fits: dict[int, tuple] = {}
    dmax = 0
    p0 = 2
    want = 4
    for _round in range(32):
        while len(pts) < want:
            vals = [Fraction(c.evaluate(p0)) for c in series]
            fit = _scalar_pade(vals, max_degree)
            if fit is None:
                raise DegreeBoundError("no rational form of degree <= %d" % max_degree)
            num, den, d = fit
            if d > dmax:
                # earlier points were degenerate specialisations; drop them
                dmax = d
                drop = [q for q in pts if fits[q][2] < dmax]
                for q in drop:
                    pts.remove(q)
                    del fits[q]
            if d == dmax:
                pts.append(p0)
                fits[p0] = fit
            p0 += 1
        use, hold = pts[:-2], pts[-2:]
        if len(use) < 2:
            want += 2
            continue
        stable = True
        num_polys: list[list[Fraction]] = []
        den_polys: list[list[Fraction]] = []
        for j in range(dmax + 1):
            poly = _interp_poly(use, [fits[q][0][j] for q in use])
            if any(sum(c * q**e for e, c in enumerate(poly)) != fits[q][0][j] for q in hold):
                stable = False
                break
            num_polys.append(poly)
        if stable:
            for j in range(dmax + 1):
                poly = _interp_poly(use, [fits[q][1][j] for q in use])
                if any(sum(c * q**e for e, c in enumerate(poly)) != fits[q][1][j] for q in hold):
                    stable = False
                    break
                den_polys.append(poly)
        if not stable:
            want = want + max(2, want // 2)
            continue
        n_pp = [_fractions_to_primepoly(c) for c in num_polys]
        d_pp = [_fractions_to_primepoly(c) for c in den_polys]
        if any(c is None for c in n_pp + d_pp):
            raise DegreeBoundError("rational form has non-integer coefficients")
        cand = BellRational(XPoly(n_pp), XPoly(d_pp))
        # symbolic re-verification over Z[p] against the whole input window
        if series_eq(series_mul(cand.den.series(M), series, M),
                     cand.num.series(M), M):
            return cand
        want = want + max(2, want // 2)
    raise DegreeBoundError("rational reconstruction did not stabilise")


# ---------------------------------------------------------------------------

class BellRational:
    """Rational Bell series num/den, both with constant term 1."""

    __slots__ = ("num", "den")

    def __init__(self, num: XPoly, den: XPoly):
        if not num.coeffs or not num.coeffs[0].is_one():
            raise ValueError("numerator constant term must be 1")
        if not den.coeffs or not den.coeffs[0].is_one():
            raise ValueError("denominator constant term must be 1")
        self.num = num
        self.den = den

    @classmethod
    def from_lists(cls, num, den) -> "BellRational":
        def conv(rows):
            return XPoly([PrimePoly(r) if isinstance(r, dict)
                          else PrimePoly.const(r) if isinstance(r, int)
                          else r
                          for r in rows])
        return cls(conv(num), conv(den))

    def series(self, K: int) -> list[PrimePoly]:
        return series_mul(self.num.series(K), series_inv(self.den.series(K), K), K)

    def reciprocal(self) -> "BellRational":
        return BellRational(self.den, self.num)

    def mul(self, other: "BellRational") -> "BellRational":
        return BellRational(self.num * other.num, self.den * other.den)

    def substitute_x_pk(self, k: int) -> "BellRational":
        return BellRational(self.num.substitute_x_pk(k), self.den.substitute_x_pk(k))

    def bind_prime(self, q: int) -> "BellRational":
        def bind(xp: XPoly) -> XPoly:
            return XPoly([PrimePoly.const(c.evaluate(q)) for c in xp.coeffs])
        return BellRational(bind(self.num), bind(self.den))

    def evaluate(self, p: int, x) -> float:
        return self.num.evaluate(p, x) / self.den.evaluate(p, x)

    def degree(self) -> int:
        return max(self.num.degree(), self.den.degree())

    def __eq__(self, other) -> bool:
        return (isinstance(other, BellRational)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    def __repr__(self) -> str:
        return "BellRational(%s)" % self


class MasterEquation:
    """Rule e -> a(p^e) for generic p, plus per-prime integer overrides."""

    def __init__(self, generic: Callable[[int], PrimePoly],
                 exceptions: dict[int, Callable[[int], int]] | None = None):
        self.generic = generic
        self.exceptions = dict(exceptions or {})

    def generic_poly(self, e: int) -> PrimePoly:
        if e == 0:
            return PrimePoly.one
        v = self.generic(e)
        if not isinstance(v, PrimePoly):
            raise MasterEquationError("prime-uniform Bell series unavailable")
        return v

    def value(self, p: int, e: int) -> int:
        if e == 0:
            return 1
        rule = self.exceptions.get(p)
        if rule is not None:
            return rule(e)
        return self.generic_poly(e).evaluate(p)


def bell_from_master(master: MasterEquation, K: int) -> list[PrimePoly]:
    """First K+1 Bell series coefficients of the generic-prime rule."""
    return [master.generic_poly(e) for e in range(K + 1)]


_UNSET = object()


class MultiplicativeFunction:
    """A multiplicative function: master equation + cached Bell data."""

    def __init__(self, name: str, master: MasterEquation,
                 bell: BellRational | None = _UNSET,
                 degree_cap: int = DEFAULT_DEGREE_CAP):
        self.name = name
        self.master = master
        self.degree_cap = degree_cap
        self._bell = bell
        self._locals: dict[int, BellRational | None] = {}

    # -- Bell series ---------------------------------------------------

    @property
    def bell(self) -> BellRational | None:
        """Generic-prime Bell series; None marks a non-rational one."""
        if self._bell is _UNSET:
            try:
                series = bell_from_master(self.master, 2 * self.degree_cap + 3)
                self._bell = rationalize(series, self.degree_cap)
            except DegreeBoundError:
                self._bell = None
        return self._bell

    def series(self, K: int) -> list[PrimePoly]:
        return bell_from_master(self.master, K)

    def local_bell(self, q: int) -> BellRational | None:
        """Bell series at an exceptional prime, as a rational over Z."""
        if q not in self.master.exceptions:
            b = self.bell
            return b.bind_prime(q) if b is not None else None
        if q not in self._locals:
            rule = self.master.exceptions[q]
            vals = [1] + [rule(e) for e in range(1, 2 * LOCAL_DEGREE_CAP + 4)]
            series = [PrimePoly.const(v) for v in vals]
            try:
                self._locals[q] = rationalize(series, LOCAL_DEGREE_CAP)
            except DegreeBoundError:
                self._locals[q] = None
        return self._locals[q]

    def local_series(self, q: int, K: int) -> list[int]:
        """a(q^e) for e = 0..K at a concrete prime."""
        return [self.master.value(q, e) for e in range(K + 1)]

    def value(self, p: int, e: int) -> int:
        return self.master.value(p, e)

    @property
    def exceptional_primes(self) -> list[int]:
        return sorted(self.master.exceptions)

    def __repr__(self):
        return "MultiplicativeFunction(%r)" % self.name


# ---------------------------------------------------------------------------
# combinators

def _union_exceptions(f: MultiplicativeFunction, g: MultiplicativeFunction,
                      combine: Callable[..., Callable[[int], int]]):
    primes = set(f.master.exceptions) | set(g.master.exceptions)
    return {q: combine(f, g, q) for q in sorted(primes)}


def _reduce_product(num: XPoly, den: XPoly) -> BellRational:
    """Cancel common factors of an explicit rational via refitting."""
    d = max(num.degree(), den.degree())
    cand = BellRational(num, den)
    if d == 0:
        return cand
    return rationalize(cand.series(2 * d + 3), d)


def dirichlet_convolve(f: MultiplicativeFunction, g: MultiplicativeFunction,
                       name: str | None = None) -> MultiplicativeFunction:
    """(f * g)(p^e) = sum_l f(p^l) g(p^(e-l)); Bell series multiply."""
    fm, gm = f.master, g.master

    def generic(e: int) -> PrimePoly:
        acc = PrimePoly.zero
        for l in range(e + 1):
            acc = acc + fm.generic_poly(l) * gm.generic_poly(e - l)
        return acc

    def combine(f_, g_, q):
        def rule(e: int) -> int:
            return sum(f_.master.value(q, l) * g_.master.value(q, e - l)
                       for l in range(e + 1))
        return rule

    master = MasterEquation(generic, _union_exceptions(f, g, combine))
    bell: BellRational | None = _UNSET
    fb, gb = f.bell, g.bell
    if fb is not None and gb is not None:
        bell = _reduce_product(fb.num * gb.num, fb.den * gb.den)
    out = MultiplicativeFunction(name or "(%s <*> %s)" % (f.name, g.name),
                                 master, bell=bell)
    return out


def dirichlet_inverse(f: MultiplicativeFunction,
                      name: str | None = None) -> MultiplicativeFunction:
    """Inverse under Dirichlet convolution; Bell series is flipped."""
    fm = f.master
    cache: dict[int, PrimePoly] = {0: PrimePoly.one}

    def generic(e: int) -> PrimePoly:
        if e not in cache:
            acc = PrimePoly.zero
            for l in range(1, e + 1):
                acc = acc + fm.generic_poly(l) * generic(e - l)
            cache[e] = -acc
        return cache[e]

    def make_rule(q):
        vcache = {0: 1}

        def rule(e: int) -> int:
            if e not in vcache:
                vcache[e] = -sum(fm.value(q, l) * rule(e - l)
                                 for l in range(1, e + 1))
            return vcache[e]
        return rule

    master = MasterEquation(generic, {q: make_rule(q) for q in fm.exceptions})
    fb = f.bell
    bell = fb.reciprocal() if fb is not None else _UNSET
    return MultiplicativeFunction(name or "inv(%s)" % f.name, master, bell=bell)


def pointwise_product(f: MultiplicativeFunction, g: MultiplicativeFunction,
                      name: str | None = None,
                      degree_cap: int = DEFAULT_DEGREE_CAP) -> MultiplicativeFunction:
    """(f . g)(p^e) = f(p^e) g(p^e); Bell series refitted from the master."""
    fm, gm = f.master, g.master

    def generic(e: int) -> PrimePoly:
        return fm.generic_poly(e) * gm.generic_poly(e)

    def combine(f_, g_, q):
        return lambda e: f_.master.value(q, e) * g_.master.value(q, e)

    master = MasterEquation(generic, _union_exceptions(f, g, combine))
    return MultiplicativeFunction(name or "(%s * %s)" % (f.name, g.name),
                                  master, degree_cap=degree_cap)


def pointwise_power(f: MultiplicativeFunction, j: int,
                    name: str | None = None,
                    degree_cap: int = DEFAULT_DEGREE_CAP) -> MultiplicativeFunction:
    """j-th pointwise power, j >= 1."""
    if j < 1:
        raise ValueError("pointwise power needs j >= 1 (inverses are not integer-valued)")
    fm = f.master

    def generic(e: int) -> PrimePoly:
        v = fm.generic_poly(e)
        acc = PrimePoly.one
        for _ in range(j):
            acc = acc * v
        return acc

    exceptions = {q: (lambda e, q=q: fm.value(q, e) ** j) for q in fm.exceptions}
    master = MasterEquation(generic, exceptions)
    bell = f.bell if j == 1 else _UNSET
    return MultiplicativeFunction(name or "%s^%d" % (f.name, j), master,
                                  bell=bell, degree_cap=degree_cap)


def shift_by_power(f: MultiplicativeFunction, k: int,
                   name: str | None = None) -> MultiplicativeFunction:
    """Multiply by n^k: a(p^e) -> p^(ke) a(p^e)."""
    fm = f.master

    def generic(e: int) -> PrimePoly:
        try:
            return fm.generic_poly(e).shift_p(k * e)
        except ValueError:
            raise MasterEquationError(
                "shift by %d not integral at e=%d" % (k, e)) from None

    def make_rule(q):
        def rule(e: int) -> int:
            base = fm.value(q, e)
            if k >= 0:
                return base * q ** (k * e)
            div = q ** (-k * e)
            if base % div:
                raise MasterEquationError(
                    "shift by %d not integral at p=%d, e=%d" % (k, q, e))
            return base // div
        return rule

    master = MasterEquation(generic, {q: make_rule(q) for q in fm.exceptions})
    bell = _UNSET
    fb = f.bell
    if fb is not None:
        try:
            bell = fb.substitute_x_pk(k)
        except ValueError:
            bell = _UNSET  # recompute lazily; the shift may not be integral
    return MultiplicativeFunction(name or "shift(%s, %d)" % (f.name, k),
                                  master, bell=bell)


def unitary_convolve(f: MultiplicativeFunction, g: MultiplicativeFunction,
                     name: str | None = None) -> MultiplicativeFunction:
    """Unitary convolution: a(p^e) = f(p^e) + g(p^e) for e > 0."""
    fm, gm = f.master, g.master

    def generic(e: int) -> PrimePoly:
        return fm.generic_poly(e) + gm.generic_poly(e)

    def combine(f_, g_, q):
        return lambda e: f_.master.value(q, e) + g_.master.value(q, e)

    master = MasterEquation(generic, _union_exceptions(f, g, combine))
    bell: BellRational | None = _UNSET
    fb, gb = f.bell, g.bell
    if fb is not None and gb is not None:
        den = fb.den * gb.den
        num = fb.num * gb.den + gb.num * fb.den - den  # B_f + B_g - 1
        bell = _reduce_product(num, den)
    return MultiplicativeFunction(name or "(%s <+> %s)" % (f.name, g.name),
                                  master, bell=bell)
