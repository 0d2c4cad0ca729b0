"""Exact polynomial arithmetic underlying Bell series.

Two layers: PrimePoly is an integer polynomial in a formal prime p,
used for values of multiplicative functions at prime powers.  XPoly is
a polynomial in x (standing for p^-s) whose coefficients are PrimePolys.
Truncated power series in x are plain lists of PrimePoly.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable


class PrimePoly:
    """Integer polynomial in the formal prime p, kept sparse.

    Immutable by convention: no method mutates self.  Zero coefficients
    are never stored.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        c = {}
        if coeffs:
            for exp, v in coeffs.items():
                if v:
                    if exp < 0:
                        raise ValueError("negative exponent of p: %d" % exp)
                    c[exp] = v
        self._c = c

    @classmethod
    def const(cls, n: int) -> "PrimePoly":
        return cls({0: n})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "PrimePoly":
        return cls({exp: coeff})

    zero: "PrimePoly"
    one: "PrimePoly"
    p: "PrimePoly"

    def items(self):
        return self._c.items()

    def terms_desc(self) -> list[tuple[int, int]]:
        return sorted(self._c.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self._c

    def is_one(self) -> bool:
        return self._c == {0: 1}

    def is_constant(self) -> bool:
        return not self._c or set(self._c) == {0}

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError("not a constant: %s" % self)
        return self._c.get(0, 0)

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def degree(self) -> int:
        # degree of the zero polynomial reported as -1
        return max(self._c) if self._c else -1

    def __add__(self, other: "PrimePoly") -> "PrimePoly":
        c = dict(self._c)
        for e, v in other._c.items():
            r = c.get(e, 0) + v
            if r:
                c[e] = r
            else:
                c.pop(e, None)
        out = PrimePoly.__new__(PrimePoly)
        out._c = c
        return out

    def __neg__(self) -> "PrimePoly":
        out = PrimePoly.__new__(PrimePoly)
        out._c = {e: -v for e, v in self._c.items()}
        return out

    def __sub__(self, other: "PrimePoly") -> "PrimePoly":
        return self + (-other)

    def __mul__(self, other: "PrimePoly") -> "PrimePoly":
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                r = c.get(e, 0) + v1 * v2
                if r:
                    c[e] = r
                else:
                    c.pop(e, None)
        out = PrimePoly.__new__(PrimePoly)
        out._c = c
        return out

    def scale(self, n: int) -> "PrimePoly":
        if n == 0:
            return PrimePoly.zero
        out = PrimePoly.__new__(PrimePoly)
        out._c = {e: v * n for e, v in self._c.items()}
        return out

    def shift_p(self, k: int) -> "PrimePoly":
        """Multiply by p^k.  Negative k requires exact divisibility."""
        if k < 0 and any(e + k < 0 for e in self._c):
            raise ValueError("not divisible by p^%d: %s" % (-k, self))
        out = PrimePoly.__new__(PrimePoly)
        out._c = {e + k: v for e, v in self._c.items()}
        return out

    def evaluate(self, p: int) -> int:
        return sum(v * p**e for e, v in self._c.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimePoly) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, v in self.terms_desc():
            if e == 0:
                t = str(abs(v))
            else:
                base = "p" if e == 1 else "p^%d" % e
                t = base if abs(v) == 1 else "%d%s" % (abs(v), base)
            parts.append(("-" if v < 0 else ("+" if parts else "")) + t)
        return "".join(parts)

    def __repr__(self) -> str:
        return "PrimePoly(%s)" % self


PrimePoly.zero = PrimePoly()
PrimePoly.one = PrimePoly.const(1)
PrimePoly.p = PrimePoly.monomial(1)


class XPoly:
    """Polynomial in x with PrimePoly coefficients, dense list storage."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[PrimePoly]):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = cs

    @classmethod
    def from_ints(cls, ints: Iterable[int]) -> "XPoly":
        return cls([PrimePoly.const(n) for n in ints])

    @classmethod
    def one_poly(cls) -> "XPoly":
        return cls([PrimePoly.one])

    @classmethod
    def binomial(cls, S: int, l: int, u: int) -> "XPoly":
        """The binomial 1 - S p^l x^u."""
        cs = [PrimePoly.zero] * (u + 1)
        cs[0] = PrimePoly.one
        cs[u] = PrimePoly.monomial(l, -S)
        return cls(cs)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].is_one()

    def coeff(self, i: int) -> PrimePoly:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else PrimePoly.zero

    def __mul__(self, other: "XPoly") -> "XPoly":
        if not self.coeffs or not other.coeffs:
            return XPoly([])
        out = [PrimePoly.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return XPoly(out)

    def __add__(self, other: "XPoly") -> "XPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: "XPoly") -> "XPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly([self.coeff(i) - other.coeff(i) for i in range(n)])

    def __eq__(self, other) -> bool:
        return isinstance(other, XPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def evaluate(self, p: int, x: Fraction | float) -> Fraction | float:
        # Horner in x with p substituted into each coefficient
        acc: Fraction | float = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c.evaluate(p)
        return acc

    def divide_binomial(self, S: int, l: int, u: int) -> "XPoly | None":
        """Exact division by (1 - S p^l x^u); None if it does not divide."""
        n = len(self.coeffs)
        if n == 0:
            return None
        mono = PrimePoly.monomial(l, S)
        q = [PrimePoly.zero] * n
        for i in range(n):
            t = self.coeffs[i]
            if i >= u and not q[i - u].is_zero():
                t = t + mono * q[i - u]
            q[i] = t
        # exactness: quotient degree must drop by u
        if any(not q[i].is_zero() for i in range(max(0, n - u), n)):
            return None
        return XPoly(q[: n - u])

    def series(self, K: int) -> list[PrimePoly]:
        out = list(self.coeffs[: K + 1])
        out += [PrimePoly.zero] * (K + 1 - len(out))
        return out

    def substitute_x_pk(self, k: int) -> "XPoly":
        """x -> p^k x.  Negative k requires divisibility of each coefficient."""
        return XPoly([c.shift_p(k * e) for e, c in enumerate(self.coeffs)])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if e == 0:
                parts.append(str(c))
                continue
            xs = "x" if e == 1 else "x^%d" % e
            if c.is_one():
                t = xs
            elif (-c).is_one():
                t = "-" + xs
            elif c.is_monomial() or (c.is_constant()):
                t = "%s*%s" % (c, xs)
            else:
                t = "(%s)*%s" % (c, xs)
            if parts and not t.startswith("-"):
                parts.append("+ " + t)
            elif parts:
                parts.append("- " + t[1:])
            else:
                parts.append(t)
        return " ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return "XPoly(%s)" % self


# ---------------------------------------------------------------------------
# truncated power series helpers (series = list[PrimePoly], index = x power)

def series_mul(a: list[PrimePoly], b: list[PrimePoly], K: int) -> list[PrimePoly]:
    out = [PrimePoly.zero] * (K + 1)
    for i, ai in enumerate(a[: K + 1]):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b[: K + 1 - i]):
            if not bj.is_zero():
                out[i + j] = out[i + j] + ai * bj
    return out


def series_inv(a: list[PrimePoly], K: int) -> list[PrimePoly]:
    """Inverse of a series with constant term 1."""
    if not a or not a[0].is_one():
        raise ValueError("series inversion requires constant term 1")
    out = [PrimePoly.zero] * (K + 1)
    out[0] = PrimePoly.one
    for n in range(1, K + 1):
        acc = PrimePoly.zero
        for j in range(1, min(n, len(a) - 1) + 1):
            if not a[j].is_zero() and not out[n - j].is_zero():
                acc = acc + a[j] * out[n - j]
        out[n] = -acc
    return out


def series_eq(a: list[PrimePoly], b: list[PrimePoly], K: int) -> bool:
    for i in range(K + 1):
        ai = a[i] if i < len(a) else PrimePoly.zero
        bi = b[i] if i < len(b) else PrimePoly.zero
        if ai != bi:
            return False
    return True
