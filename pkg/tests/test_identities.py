from itertools import product

import pytest

from grothlat import identities as ids
from grothlat.algebra import BETA, ONE, Q, X, Y, P, Poly, RatFunc, oplus, specialize_q_zero
from grothlat.symgroup import Perm, all_perms, bruhat_leq, length

S3 = all_perms(3)


def at_beta_zero(f):
    return Poly.coerce(f).set_zero(BETA)


def drop_y(f, n):
    f = Poly.coerce(f)
    for i in range(1, n + 1):
        f = f.set_zero(Y(i))
    return f


def x(i):
    return P(X(i))


def test_small_g():
    assert ids.G_q(Perm.parse("21"), "lattice", q0=True) == oplus(x(1), P(Y(1)))
    assert ids.G_q(Perm.parse("12"), q0=True) == ONE
    assert ids.G_q(Perm.parse("1"), "lattice") == ONE - P(Q) ** 2


# Schubert polynomials at beta = 0, y = 0
SCHUBERT = {
    "123": ONE,
    "213": x(1),
    "132": x(1) + x(2),
    "231": x(1) * x(2),
    "312": x(1) ** 2,
    "321": x(1) ** 2 * x(2),
}


@pytest.mark.parametrize("w", sorted(SCHUBERT))
def test_schubert_specialization(w):
    g = ids.G_beta(Perm.parse(w))
    assert drop_y(at_beta_zero(g), 3) == SCHUBERT[w]


@pytest.mark.parametrize("i", [1, 2, 3])
def test_simple_reflection_grothendieck(i):
    # G_{s_i}(x; 0) = (prod_{j<=i} (1 + beta x_j) - 1) / beta
    g = drop_y(ids.G_beta(Perm.s(i, 4)), 4)
    prod = ONE
    for j in range(1, i + 1):
        prod = prod * (ONE + P(BETA) * x(j))
    assert g * P(BETA) == prod - ONE


def test_double_schubert_21():
    assert at_beta_zero(ids.G_beta(Perm.parse("21"))) == x(1) + P(Y(1))


def test_beta_route_is_specialization():
    for w in S3:
        assert ids.G_beta(w) == specialize_q_zero(ids.G_q(w))


def test_biaxial_identity_left_is_g():
    for w in S3:
        assert RatFunc.coerce(ids.biaxial(Perm.identity(3), w)) == RatFunc.coerce(ids.G_q(w))


def test_unknown_route():
    with pytest.raises(ValueError):
        ids.G_q(Perm.parse("21"), "nope")
    with pytest.raises(ValueError):
        ids.G_q(Perm.parse("21"), "pipedreams")


def test_route_agreement_s3():
    assert ids.check_routes(S3)


def test_h_routes_s3():
    assert ids.check_H_routes(S3)


def test_biaxial_routes():
    assert ids.check_biaxial_routes(2)
    assert ids.check_biaxial_routes(3)


@pytest.mark.parametrize("w", S3, ids=str)
def test_reduced_word_independence(w):
    assert ids.check_braid_invariance(w)


def test_all_reduced_words_count():
    # w0 in S4 has 16 reduced words
    assert len(ids._all_reduced_words(Perm.longest(4).oneline)) == 16


@pytest.mark.parametrize("w", S3, ids=str)
def test_q_zero_symmetries(w):
    for check in (ids.check_hudson, ids.check_left_action, ids.check_dual_relation, ids.check_H_symmetry,
                  ids.check_dual_specialization):
        res = check(w)
        assert res, res.summary()


def test_h_of_w0_is_base_case():
    w0 = Perm.longest(3)
    assert RatFunc.coerce(ids.H_q(w0)) == ids.base_case(3)
    assert ids.H_beta(w0) == specialize_q_zero(ids.base_case(3))


def test_h_bruhat_sum_by_hand():
    # H_w = sum_{v >= w} beta^{l(v)-l(w)} G_v, here for w = 231 in S3
    w = Perm.parse("231")
    expect = Poly()
    for v in S3:
        if bruhat_leq(w, v):
            expect = expect + P(BETA) ** (length(v) - length(w)) * Poly.coerce(ids.G_beta(v))
    assert ids.H_beta(w, "mu") == expect


def test_vanishing():
    res = ids.check_vanishing(3)
    assert res
    # the converse fails: 132 <= 231 strongly, yet the polynomial vanishes
    v, w = Perm.parse("132"), Perm.parse("231")
    assert bruhat_leq(v, w)
    assert RatFunc.coerce(ids.biaxial(v, w, q0=True)).is_zero()


@pytest.mark.parametrize("w", S3, ids=str)
def test_cauchy(w):
    res = ids.check_cauchy(w)
    assert res, res.summary()


def test_biaxial_cauchy():
    for v, w in product(S3, S3):
        if bruhat_leq(v, w):
            res = ids.check_biaxial_cauchy(v, w)
            assert res, res.summary()


def test_interleaving_sets():
    for w in all_perms(4):
        s = ids.interleaving_set(w)
        assert all(v(1) == 1 for v in s)
        assert ids.interleaving_set_epsilon(w) == s


def test_interleaving_and_grassmannian():
    assert ids.check_interleaving(3)
    res = ids.check_grassmannian_interleaving(4)
    assert res
    assert any("nu_{i+1}" in n for n in res.notes)


@pytest.mark.parametrize("w", S3 + all_perms(4), ids=str)
def test_branching(w):
    assert ids.check_branching(w)
    assert ids.check_branching_set(w)


def test_hecke_on_small_inputs():
    assert ids.check_hecke([ONE, x(1), x(1) * P(Y(2)) + P(Q)], 3)


@pytest.mark.parametrize("w", S3, ids=str)
def test_pipedream_bijection(w):
    assert ids.check_pipedream_bijection(w)


def test_check_result_reports_first_failure():
    res = ids.CheckResult("demo")
    res.record(True, a=1)
    res.record(False, a=ONE + x(1))
    res.record(False, a=2)
    assert not res
    assert res.checked == 3
    assert res.counterexample == {"a": "1 + x1"}
    assert res.summary().startswith("FAIL demo: 3 identities checked")
