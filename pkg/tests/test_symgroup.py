from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grothlat.errors import BudgetExceeded, NotGrassmannian, ParseError
from grothlat.symgroup import (
    Perm, act_on_oneline, all_perms, bruhat_leq, compose, eta, from_eta, grassmannian_lambda,
    grassmannian_lambda_at, in_branching_interval, interleaves, is_grassmannian_at, length,
    w_max, w_min, w_minus, w_plus, weak_left_leq, weak_right_leq,
)


def subword_leq(u: Perm, v: Perm) -> bool:
    """u <= v iff some subword of a reduced word of v multiplies to u."""
    word = v.reduced_word()
    for k in range(len(word) + 1):
        for sub in combinations(word, k):
            if Perm.from_word(sub, v.n) == u:
                return True
    return False


def brute_length(w: Perm) -> int:
    o = w.oneline
    return sum(o[i] > o[j] for i in range(len(o)) for j in range(len(o)) if i < j)


perms4 = st.permutations([1, 2, 3, 4]).map(Perm)


def test_compose_conventions():
    s1 = Perm.s(1, 3)
    assert compose(s1, s1).is_identity()
    w0 = Perm.longest(4)
    assert (w0 * w0).is_identity()
    a, b = Perm.parse("231"), Perm.parse("132")
    assert all((a * b)(i) == a(b(i)) for i in range(1, 4))


def test_word_with_known_eta():
    w = Perm.from_word([1, 2, 3, 2, 1, 5], 6)
    assert "".join(map(str, eta(w))) == "423165"
    assert from_eta(eta(w)) == w


def test_lengths():
    assert length(Perm.identity(4)) == 0
    assert length(Perm.longest(4)) == 6
    assert length(Perm.parse("4312")) == 5
    for w in all_perms(4):
        assert length(w) == brute_length(w) == length(w.inverse())
        assert len(w.reduced_word()) == length(w)
        assert Perm.from_word(w.reduced_word(), 4) == w


@pytest.mark.parametrize("n", [3, 4])
def test_bruhat_matches_subword_oracle(n):
    S = all_perms(n)
    for u, v in product(S, S):
        assert bruhat_leq(u, v) == subword_leq(u, v), (u, v)


def test_bruhat_s3_count():
    # 13 strict relations; 19 once the six reflexive pairs are included
    S = all_perms(3)
    pairs = [(u, v) for u, v in product(S, S) if bruhat_leq(u, v)]
    assert len(pairs) == 19
    assert sum(1 for u, v in pairs if u != v) == 13


def test_weak_orders():
    S = all_perms(4)
    for u, v in product(S, S):
        assert weak_left_leq(u, u)
        if weak_left_leq(u, v) or weak_right_leq(u, v):
            assert bruhat_leq(u, v)
        # left order on u, v is right order on the inverses
        assert weak_left_leq(u, v) == weak_right_leq(u.inverse(), v.inverse())


def test_grassmannian_weak_equals_strong():
    S = all_perms(4)
    for b in range(1, 4):
        G = [w for w in S if is_grassmannian_at(w, b)]
        for u, v in product(G, G):
            assert weak_left_leq(u, v) == bruhat_leq(u, v), (b, u, v)


def test_order_reversing_bijection():
    for w in all_perms(3):
        lower = [s for s in all_perms(3) if weak_left_leq(s, w)]
        right = {s for s in all_perms(3) if weak_right_leq(s, w)}
        image = {s: w * s.inverse() for s in lower}
        assert set(image.values()) == right
        for a, b in product(lower, lower):
            assert weak_left_leq(a, b) == weak_right_leq(image[b], image[a])
            assert bruhat_leq(a, b) == bruhat_leq(image[b], image[a])


def test_derived_permutations_example():
    w = from_eta((4, 2, 3, 1, 6, 5))

    def e(p):
        return "".join(map(str, eta(p)))

    assert e(w_minus(w)) == "31254"
    assert e(w_plus(w)) == "1534276"
    assert e(w_max(w)) == "142365"
    assert e(w_min(w)) == "142356"


def test_identity_fixed():
    e = Perm.identity(4)
    assert w_max(e) == e and w_min(e) == e


@pytest.mark.parametrize("w", all_perms(4), ids=str)
def test_plus_minus(w):
    assert w_minus(w_plus(w)) == w
    assert w_plus(w_minus(w)) == w_max(w)


@settings(max_examples=50)
@given(perms4, st.integers(1, 3))
def test_letter_swap_action(w, i):
    assert act_on_oneline(i, eta(w)) == eta(Perm.s(i, 4) * w)


def test_interval_endpoints():
    for w in all_perms(4):
        assert in_branching_interval(w, w_min(w))
        assert in_branching_interval(w, w_max(w))
        assert weak_left_leq(w_max(w), w) and weak_left_leq(w_min(w), w)
        assert w_max(w)(1) == 1


def test_grassmannian_lambda():
    assert grassmannian_lambda(Perm.identity(3)) == (0, ())
    w = Perm.parse("1342")
    b, lam = grassmannian_lambda(w)
    assert b == 3
    assert lam == tuple(w(b + 1 - i) - (b + 1 - i) for i in range(1, b + 1))
    assert lam == (1, 1, 0)
    with pytest.raises(NotGrassmannian):
        grassmannian_lambda(Perm.parse("321"))
    with pytest.raises(NotGrassmannian):
        grassmannian_lambda_at(Perm.parse("2143"), 1)


def test_interleaves():
    assert interleaves((2, 1, 0), (1, 0, 0))
    assert not interleaves((2, 1), (1, 1))
    assert interleaves((2, 0), (1, 0))


def test_parsing():
    assert Perm.parse("4312") == Perm([4, 3, 1, 2])
    assert Perm.parse("2,1,3") == Perm([2, 1, 3])
    for bad in ("", "112", "abc", "1,,2", "13"):
        with pytest.raises(ParseError):
            Perm.parse(bad)


def test_size_cap():
    Perm.identity(8)
    with pytest.raises(BudgetExceeded):
        Perm.identity(9)
