"""Randomized structural properties of the engine."""
from __future__ import annotations

import math
from functools import lru_cache

from hypothesis import given, settings, strategies as st

from dgf.bell import (
    BellRational,
    dirichlet_convolve,
    dirichlet_inverse,
    rationalize,
    shift_by_power,
    unitary_convolve,
)
from dgf.catalog import make
from dgf.euler import euler_expand, expand_factor_list
from dgf.parser import Atom, Conv, Inv, PMul, PPow, Shift, UConv, parse, to_text
from dgf.polys import XPoly, series_eq
from dgf.sequences import brute_convolve, brute_unitary_convolve, terms

from conftest import GRID

MODEST = settings(deadline=None, max_examples=60)
FEW = settings(deadline=None, max_examples=25)


@lru_cache(maxsize=None)
def cached_terms(name: str, args: tuple, N: int) -> tuple:
    return tuple(terms(make(name, *args), N))


@MODEST
@given(st.sampled_from(GRID), st.integers(2, 44), st.integers(2, 44))
def test_values_multiply_on_coprime_pairs(entry, m, n):
    if math.gcd(m, n) != 1:
        return
    name, args = entry
    seq = cached_terms(name, args, 2000)
    assert seq[m * n - 1] == seq[m - 1] * seq[n - 1]


small_seq = st.lists(st.integers(-9, 9), min_size=8, max_size=24)


@MODEST
@given(small_seq, small_seq)
def test_brute_convolution_commutes(a, b):
    n = min(len(a), len(b))
    a, b = a[:n], b[:n]
    assert brute_convolve(a, b) == brute_convolve(b, a)
    assert brute_unitary_convolve(a, b) == brute_unitary_convolve(b, a)


@FEW
@given(small_seq, small_seq, small_seq)
def test_brute_convolution_associates(a, b, c):
    n = min(len(a), len(b), len(c))
    a, b, c = a[:n], b[:n], c[:n]
    assert brute_convolve(brute_convolve(a, b), c) == \
        brute_convolve(a, brute_convolve(b, c))


@FEW
@given(st.sampled_from(GRID))
def test_dirichlet_inverse_round_trip(entry):
    name, args = entry
    f = make(name, *args)
    conv = dirichlet_convolve(f, dirichlet_inverse(f))
    assert terms(conv, 1000) == [1] + [0] * 999


@FEW
@given(st.sampled_from(GRID), st.sampled_from(GRID))
def test_inverse_distributes_over_convolution(left, right):
    f, g = make(left[0], *left[1]), make(right[0], *right[1])
    a = terms(dirichlet_inverse(dirichlet_convolve(f, g)), 1000)
    b = terms(dirichlet_convolve(dirichlet_inverse(f), dirichlet_inverse(g)),
              1000)
    assert a == b


@MODEST
@given(st.sampled_from(GRID), st.sampled_from(GRID))
def test_convolution_of_functions_commutes(left, right):
    f, g = make(left[0], *left[1]), make(right[0], *right[1])
    assert terms(dirichlet_convolve(f, g), 200) == \
        terms(dirichlet_convolve(g, f), 200)
    assert terms(unitary_convolve(f, g), 200) == \
        terms(unitary_convolve(g, f), 200)


int_poly = st.lists(st.integers(-4, 4), min_size=0, max_size=4)


@MODEST
@given(int_poly, int_poly)
def test_euler_expansion_round_trips(num_tail, den_tail):
    b = BellRational(XPoly.from_ints([1] + num_tail),
                     XPoly.from_ints([1] + den_tail))
    U = 5
    efl = euler_expand(b, U)
    assert series_eq(expand_factor_list(efl, U), b.series(U), U)


@MODEST
@given(int_poly, int_poly)
def test_rationalize_recovers_rational_series(num_tail, den_tail):
    b = BellRational(XPoly.from_ints([1] + num_tail),
                     XPoly.from_ints([1] + den_tail))
    d = max(b.num.degree(), b.den.degree())
    K = 2 * d + 4
    r = rationalize(b.series(K), d)
    assert (r.num * b.den).coeffs == (b.num * r.den).coeffs


@FEW
@given(st.sampled_from(GRID), st.integers(1, 3))
def test_shift_round_trip(entry, k):
    f = make(entry[0], *entry[1])
    g = shift_by_power(shift_by_power(f, k), -k)
    assert series_eq(g.series(6), f.series(6), 6)
    assert terms(g, 100) == terms(f, 100)


atoms = st.sampled_from([
    Atom("phi"), Atom("mu"), Atom("one"), Atom("sigma", (1,)),
    Atom("jordan", (2,)), Atom("sigma_pow", (1, 2)),
])


def ast_strategy():
    return st.recursive(
        atoms,
        lambda kids: st.one_of(
            st.tuples(kids, kids).map(lambda t: Conv(*t)),
            st.tuples(kids, kids).map(lambda t: UConv(*t)),
            st.tuples(kids, kids).map(lambda t: PMul(*t)),
            st.tuples(kids, st.integers(1, 5)).map(lambda t: PPow(*t)),
            kids.map(Inv),
            st.tuples(kids, st.integers(-3, 3)).map(lambda t: Shift(*t)),
        ),
        max_leaves=6,
    )


@MODEST
@given(ast_strategy())
def test_parser_round_trips_any_tree(ast):
    assert parse(to_text(ast)) == ast
