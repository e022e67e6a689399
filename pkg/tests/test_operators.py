import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import polys, same, sym, to_sympy
from grothlat.algebra import BETA, ONE, Q, X, Y, P, Poly, RatFunc, StructuredDenom, specialize_q_zero
from grothlat.operators import (
    apply_word, check_braid, check_commute, check_quadratic, mu, newton_dd, pi, pi_beta, pi_inv,
    pi_tilde, pi_tilde_inv,
)

b, q = sym(BETA), sym(Q)


def swap(e, u, v):
    return e.subs({u: v, v: u}, simultaneous=True)


def d(e, u, v):
    return sp.cancel((e - swap(e, u, v)) / (u - v))


def literal_pi(e, i):
    u, v = sym(X(i)), sym(X(i + 1))
    num = (1 - q**2) * (1 + b * v) * e - (1 + b * u - q**2 - q**2 * b * v) * swap(e, u, v)
    return sp.cancel(num / (u - v))


def literal_pi_tilde(e, i):
    u, v = sym(Y(i)), sym(Y(i + 1))
    return (d((1 + b * v) * e, u, v) - q**2 * (1 + b * v) * d(e, u, v)) / (b**2 * q**2)


def literal_pi_inv(e, i):
    u, v = sym(X(i)), sym(X(i + 1))
    return ((1 + b * u) * d(e, u, v) - q**2 * d((1 + b * u) * e, u, v)) / (b**2 * q**2)


def literal_pi_tilde_inv(e, i):
    u, v = sym(Y(i)), sym(Y(i + 1))
    return (1 + b * u) * d(e, u, v) - q**2 * d((1 + b * u) * e, u, v)


def literal_mu(e, i):
    u, v = sym(X(i)), sym(X(i + 1))
    return (1 + b * u) * d(e, u, v)


OPS = [
    (lambda i, f: pi(i, f), literal_pi),
    (pi_tilde, literal_pi_tilde),
    (lambda i, f: pi_inv(i, f), literal_pi_inv),
    (pi_tilde_inv, literal_pi_tilde_inv),
    (lambda i, f: mu(i, f), literal_mu),
]


@pytest.mark.parametrize("k", range(len(OPS)), ids=["pi", "pi_tilde", "pi_inv", "pi_tilde_inv", "mu"])
@settings(max_examples=25, deadline=None)
@given(f=polys(), i=st.integers(1, 2))
def test_matches_literal_formula(k, f, i):
    ours, lit = OPS[k]
    assert same(to_sympy(ours(i, f)), lit(to_sympy(f), i))


@settings(max_examples=25, deadline=None)
@given(polys(), st.integers(1, 2))
def test_operators_on_ratfuncs(f, i):
    # denominators not symmetric in the acted-on pair
    r = RatFunc(f, StructuredDenom.make(1, 1, {X(i): 1, Y(i + 1): 2}))
    assert same(to_sympy(pi(i, r)), literal_pi(to_sympy(r), i))
    assert same(to_sympy(pi_tilde_inv(i, r)), literal_pi_tilde_inv(to_sympy(r), i))


def test_small_examples():
    assert pi(1, ONE) == -P(BETA)
    assert pi_tilde(1, ONE) == RatFunc(-ONE, StructuredDenom(1, 2))
    assert mu(1, P(X(1))) == ONE + P(BETA) * P(X(1))
    assert newton_dd(1, "x", P(X(1)) ** 2) == P(X(1)) + P(X(2))
    assert newton_dd(1, "y", P(Y(1))) == ONE


@settings(max_examples=30, deadline=None)
@given(polys(), st.integers(1, 2))
def test_quadratic_relations(f, i):
    assert check_quadratic(i, f, "pi")
    assert check_quadratic(i, f, "pi_tilde")


@settings(max_examples=20, deadline=None)
@given(polys(max_terms=3))
def test_braid_relations(f):
    assert check_braid(1, f, pi)
    assert check_braid(1, f, pi_tilde)
    assert check_braid(1, f, lambda i, g: newton_dd(i, "x", g))


@settings(max_examples=30, deadline=None)
@given(polys(), st.integers(1, 2), st.integers(1, 2))
def test_commutation(f, i, j):
    assert check_commute(1, 3, f, pi)
    assert check_commute(i, j, f, pi, pi_tilde)
    assert check_commute(i, j, f, pi_inv, pi_tilde_inv)


@settings(max_examples=30, deadline=None)
@given(polys(), st.integers(1, 2))
def test_inverses(f, i):
    assert RatFunc.coerce(pi(i, pi_inv(i, f))) == f
    assert RatFunc.coerce(pi_inv(i, pi(i, f))) == f
    assert RatFunc.coerce(pi_tilde(i, pi_tilde_inv(i, f))) == f


@settings(max_examples=30, deadline=None)
@given(polys(), st.integers(1, 2))
def test_newton_squares_to_zero(f, i):
    assert RatFunc.coerce(newton_dd(i, "x", newton_dd(i, "x", f))).is_zero()


@settings(max_examples=30, deadline=None)
@given(polys(gens=[X(1), X(2), X(3), Y(1), BETA]), st.integers(1, 2))
def test_mu_is_scaled_inverse_at_q_zero(f, i):
    scaled = RatFunc.coerce(pi_inv(i, f)) * (P(BETA) ** 2 * P(Q) ** 2)
    assert specialize_q_zero(scaled) == mu(i, f)


@settings(max_examples=30, deadline=None)
@given(polys(gens=[X(1), X(2), X(3), Y(1), BETA]), st.integers(1, 2))
def test_q_zero_operator(f, i):
    assert specialize_q_zero(pi(i, f)) == pi_beta(i, f)
    # pi at q = 0 is d_i (1 + beta x_{i+1})
    assert pi_beta(i, f) == newton_dd(i, "x", (ONE + P(BETA) * P(X(i + 1))) * f)


def test_apply_word_order():
    f = P(X(1)) ** 2
    assert apply_word(lambda i, g: newton_dd(i, "x", g), [2, 1], f) == newton_dd(2, "x", newton_dd(1, "x", f))


def test_bad_axis():
    with pytest.raises(ValueError):
        pi(1, ONE, axis="w")
    with pytest.raises(ValueError):
        pi(0, ONE)
