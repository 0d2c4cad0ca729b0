"""Euler-product factorization, zeta forms, and coefficient streams."""
from __future__ import annotations

from fractions import Fraction

from dgf.bell import BellRational, dirichlet_convolve, pointwise_power, pointwise_product
from dgf.catalog import make
from dgf.euler import (
    INFINITE,
    ZetaFactor,
    ZetaForm,
    abscissa,
    dirichlet_inv_stream,
    dirichlet_mul_streams,
    euler_expand,
    expand_factor_list,
    factor_bell,
    finite_zeta_form,
    zeta_form_to_coeffs,
)
from dgf.polys import PrimePoly, XPoly, series_eq

from conftest import ef_tuples, zf_tuples

P = PrimePoly

SQUAREFREE_TOTIENT = [  # expansion of 1 + (p-1)x through order 5
    (-1, 1, 1, 1), (1, 0, 1, 1), (-1, 1, 2, 1), (1, 2, 3, 1), (-1, 1, 3, 1),
    (-1, 3, 4, 1), (1, 2, 4, 1), (-1, 1, 4, 1), (1, 4, 5, 1), (-1, 3, 5, 2),
    (1, 2, 5, 2), (-1, 1, 5, 1),
]


def num_only(coeff_rows) -> BellRational:
    poly = XPoly([P.const(c) if isinstance(c, int) else c for c in coeff_rows])
    return BellRational(poly, XPoly.from_ints([1]))


def test_expand_squarefree_totient_numerator():
    b = num_only([1, P.monomial(1) + P.const(-1)])
    efl = euler_expand(b, 5)
    assert ef_tuples(efl) == SQUAREFREE_TOTIENT
    assert efl.truncated_at == 5


def test_expand_cleared_totient_square():
    # phi^2 numerator after clearing its pole
    b = num_only([1, P.const(1) + P.monomial(1, -2)])
    efl = euler_expand(b, 3)
    assert ef_tuples(efl) == [
        (1, 1, 1, 2), (-1, 0, 1, 1), (1, 2, 2, 1), (-1, 1, 2, 2),
        (1, 3, 3, 2), (-1, 2, 3, 4), (1, 1, 3, 2),
    ]


def test_expand_unit_is_empty():
    efl = euler_expand(num_only([1]), 6)
    assert list(efl) == []


def test_expand_merges_repeated_roots():
    sq = XPoly.binomial(1, 0, 1) * XPoly.binomial(1, 0, 1)
    efl = euler_expand(BellRational(sq, XPoly.from_ints([1])), 4)
    assert ef_tuples(efl) == [(1, 0, 1, 2)]


def necklace_gamma(c: int, j: int) -> int:
    # count of aperiodic cycles of length j over c symbols
    def mu(n: int) -> int:
        out, d = 1, 2
        while d * d <= n:
            if n % d == 0:
                n //= d
                if n % d == 0:
                    return 0
                out = -out
            d += 1
        return -out if n > 1 else out

    total = sum(mu(j // d) * c ** d for d in range(1, j + 1) if j % d == 0)
    assert total % j == 0
    return total // j


def test_binary_pole_peels_to_necklace_counts():
    # the factor base of 1/(1-2x) comes from peeling 1-2x itself
    b = BellRational(XPoly.from_ints([1, -2]), XPoly.from_ints([1]))
    efl = euler_expand(b, 8)
    got = ef_tuples(efl)
    assert got == [(1, 0, u, necklace_gamma(2, u)) for u in range(1, 9)]
    assert [g for (_, _, _, g) in got] == [2, 1, 2, 3, 6, 9, 18, 30]


def test_expansion_round_trips_series():
    for name, args in [("phi", ()), ("sigma", (2,)), ("mu_apostol", (2,)),
                       ("jordan_star", (3,)), ("congruence_min", (3,))]:
        f = make(name, *args)
        efl = factor_bell(f, U=6)
        assert series_eq(expand_factor_list(efl, 6), f.series(6), 6)


def test_factor_bell_exact_totient():
    efl = factor_bell(make("phi"))
    assert ef_tuples(efl) == [(1, 1, 1, -1), (1, 0, 1, 1)]
    assert str(efl) == "(1 - p x)^-1 (1 - x)"
    assert efl.truncated_at is None
    assert efl.to_json() == {
        "factors": [
            {"S": 1, "l": 1, "u": 1, "gamma": -1},
            {"S": 1, "l": 0, "u": 1, "gamma": 1},
        ],
        "truncated_at": None,
    }


def test_factor_bell_exact_alternating():
    efl = factor_bell(make("liouville"))
    assert ef_tuples(efl) == [(-1, 0, 1, -1)]
    assert str(efl) == "(1 + x)^-1"
    assert efl.truncated_at is None


def test_factor_bell_truncates_when_not_exact():
    efl = factor_bell(pointwise_power(make("phi"), 2), U=5)
    assert efl.truncated_at == 5


def test_finite_zeta_form_small():
    assert zf_tuples(finite_zeta_form(make("phi"))) == [(1, 0, -1), (1, 1, 1)]
    assert str(finite_zeta_form(make("phi"))) == "zeta(s-1)/zeta(s)"
    assert str(finite_zeta_form(make("mu"))) == "1/zeta(s)"
    assert str(finite_zeta_form(make("core", 2))) == "zeta(s-1)*zeta(2s)/zeta(2s-2)"
    assert str(finite_zeta_form(make("tau", 2))) == "zeta(s)^2"
    assert str(finite_zeta_form(make("tfull_count", 2))) == \
        "zeta(s)*zeta(2s)*zeta(3s)/zeta(6s)"
    assert str(finite_zeta_form(make("lcm_pairs", 2))) == \
        "zeta(s-2)^2*zeta(2s-2)/zeta(2s-4)"


def test_finite_zeta_form_detects_infinite():
    f = pointwise_product(make("sigma", 0), make("phi"))
    assert finite_zeta_form(f) is INFINITE
    assert finite_zeta_form(make("mu_star")) is INFINITE


def test_zeta_form_local_factors():
    zf = finite_zeta_form(make("gcdc", 4))
    assert str(zf) == "zeta(s) * (1 + 2^(-s) + 2*4^(-s)) [p=2]"
    lf = zf.local[0]
    assert (lf.prime, lf.num, lf.den) == (2, [1, 1, 2], [1])
    assert lf.is_polynomial()
    assert zf.to_json()["local"] == [{"prime": 2, "poly": [[1, 0], [1, 1], [2, 2]]}]

    zf = finite_zeta_form(make("ramanujan", 9))
    assert str(zf) == "1/zeta(s) * (1 + 3*3^(-s) + 9*9^(-s)) [p=3]"


def test_zeta_form_rational_local_factor():
    zf = finite_zeta_form(make("sigma_star_odd", 1))
    assert str(zf) == \
        "zeta(s-1)*zeta(s)/zeta(2s-1) * (1 - 2*2^(-s))/(1 - 2*4^(-s)) [p=2]"
    lf = zf.local[0]
    assert not lf.is_polynomial()
    assert lf.series(6) == [1, -2, 2, -4, 4, -8, 8]
    assert zf.to_json()["local"] == [{
        "prime": 2,
        "poly": [[1, 0], [-2, 1]],
        "den_poly": [[1, 0], [-2, 2]],
    }]


def test_zeta_form_to_coeffs_fixtures():
    two = ZetaForm([ZetaFactor(1, 0, 1), ZetaFactor(1, 1, 1)], [])
    assert zeta_form_to_coeffs(two, 6) == [1, 3, 4, 7, 6, 12]
    assert zeta_form_to_coeffs(ZetaForm([ZetaFactor(1, 0, 1)], []), 5) == [1] * 5
    ratio = ZetaForm([ZetaFactor(1, 1, 1), ZetaFactor(1, 0, -1)], [])
    assert zeta_form_to_coeffs(ratio, 6) == [1, 1, 2, 2, 4, 2]


def test_zeta_form_round_trip_with_local():
    for name, args in [("gcdc", (4,)), ("sigma_star_odd", (1,)),
                       ("depleted", (2, 3)), ("sigma_odd", (1,))]:
        f = make(name, *args)
        zf = finite_zeta_form(f)
        assert zf is not INFINITE
        from dgf.sequences import terms
        assert zeta_form_to_coeffs(zf, 64) == terms(f, 64)


def test_coefficient_streams():
    # streams are 1-indexed with an unused slot at 0
    ones = [0] + [1] * 8
    moebius = [0, 1, -1, -1, 0, -1, 1, -1, 0]
    assert dirichlet_mul_streams(ones, moebius) == [0, 1] + [0] * 7
    assert dirichlet_inv_stream(ones) == moebius
    seq = [0, 1, 4, -2, 7, 0, 3, 1, 1]
    assert dirichlet_mul_streams(seq, dirichlet_inv_stream(seq)) == \
        [0, 1] + [0] * 7


def test_abscissa_values():
    assert abscissa(factor_bell(make("phi"))).abscissa == Fraction(2)
    assert abscissa(factor_bell(make("mu"))).abscissa == Fraction(1)
    assert abscissa(finite_zeta_form(make("phi"))).abscissa == Fraction(2)
    assert str(abscissa(factor_bell(make("phi")))) == "2"


def test_abscissa_empty_product():
    delta = dirichlet_convolve(make("mu"), make("one"))
    ci = abscissa(factor_bell(delta))
    assert ci.from_empty_product
    assert ci.abscissa == 0
    assert str(ci) == "0 (empty product)"
