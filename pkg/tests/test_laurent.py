import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from loopbraid.laurent import (
    LaurentPolynomial as LP,
    NonUnit,
    VariableCountError,
    VariableMap,
    monomial_inverse,
)

K = 3


def polys(k=K, max_terms=5):
    exps = st.tuples(*[st.integers(-3, 3)] * k)
    return st.dictionaries(exps, st.integers(-5, 5), max_size=max_terms).map(lambda d: LP(k, d))


def var_maps(src=K, dst=2):
    return st.lists(st.one_of(st.none(), st.integers(1, dst)), min_size=src, max_size=src).map(
        lambda im: VariableMap(src, dst, tuple(im)))


# -- examples

def test_render_canonical_order():
    a1, a2 = LP.variable(1, 2), LP.variable(2, 2)
    assert str(1 - a1 + a1 * a2) == "1 - a1 + a1*a2"
    t = LP(2, {(0, 0): 1, (1, 0): 1, (0, 1): -1})
    assert t.render("t") == "1 + t1 - t2"


def test_render_zero_and_exponents():
    assert LP.zero(2).render() == "0"
    assert LP.monomial((-1, 2), -3).render() == "-3*a1^-1*a2^2"


def test_parse_round_trip_examples():
    for text in ["1 - a1 + a1*a2", "a1^-2 - 3*a2", "-a1*a2^-1 + 2", "0"]:
        p = LP.parse(text, 2)
        assert LP.parse(p.render(), 2) == p


def test_parse_t_prefix():
    assert LP.parse("1 + t1 - t2", 2) == LP(2, {(0, 0): 1, (1, 0): 1, (0, 1): -1})


def test_product_example_against_sympy():
    a1, a2 = LP.variable(1, 2), LP.variable(2, 2)
    p = (1 - a1) * (a1 + a2 ** -1)
    x, y = sp.symbols("x y")
    ref = sp.expand((1 - x) * (x + 1 / y))
    rng = random.Random(5)
    for _ in range(20):
        pt = (rng.choice([-3, -2, -1, 1, 2, 3, 5]), rng.choice([-2, -1, 1, 2, 7]))
        assert p.evaluate(pt) == Fraction(str(ref.subs({x: pt[0], y: pt[1]})))


def test_monomial_inverse_and_nonunit():
    m = LP.monomial((2, -1), -1)
    assert m * monomial_inverse(m) == LP.one(2)
    with pytest.raises(NonUnit):
        monomial_inverse(LP.parse("1 + a1", 2))


def test_negative_power_of_binomial_rejected():
    with pytest.raises(NonUnit):
        LP.parse("1 - a1", 1) ** -1


def test_variable_count_mismatch():
    with pytest.raises(VariableCountError):
        LP.variable(1, 2) + LP.variable(1, 3)


def test_coefficient_sum_and_degree_range():
    p = LP.parse("3*a1^-2 - a1*a2 + 1", 2)
    assert p.coefficient_sum() == 3
    assert p.degree_range(1) == (-2, 1)
    assert LP.zero(2).degree_range(1) is None


def test_collapse_map():
    p = LP.parse("1 - a2 + a1*a2^-1", 2)
    assert VariableMap.collapse(2)(p).render("t") == "2 - t1"


# -- properties

@settings(max_examples=1000, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == LP.zero(K)
    assert p * 1 == p


@settings(max_examples=300, deadline=None)
@given(polys(), polys(), var_maps())
def test_variable_map_is_ring_homomorphism(p, q, m):
    assert m(p + q) == m(p) + m(q)
    assert m(p * q) == m(p) * m(q)
    assert m(LP.one(K)) == LP.one(2)


@settings(max_examples=300, deadline=None)
@given(polys(), var_maps(K, 2), var_maps(2, 2))
def test_map_composition(p, f, g):
    assert f.then(g)(p) == g(f(p))


@settings(max_examples=300, deadline=None)
@given(polys())
def test_render_parse_round_trip(p):
    assert LP.parse(p.render(), K) == p
    assert LP.parse(p.render("t"), K) == p


@settings(max_examples=300, deadline=None)
@given(polys())
def test_eval_at_one_is_coefficient_sum(p):
    assert VariableMap.eval_at_one(K)(p).constant_term() == p.coefficient_sum()
    assert p.evaluate((1,) * K) == p.coefficient_sum()


@settings(max_examples=200, deadline=None)
@given(st.tuples(*[st.integers(-4, 4)] * K), st.sampled_from([1, -1]))
def test_monomials_are_units(exps, c):
    m = LP.monomial(exps, c)
    assert m.is_unit()
    assert m * monomial_inverse(m) == LP.one(K)


def test_parse_bare_variable_single_ring():
    assert LP.parse("1 - t + t^2", 1) == LP(1, {(0,): 1, (1,): -1, (2,): 1})
    with pytest.raises(ValueError):
        LP.parse("1 - t", 2)
