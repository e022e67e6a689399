from itertools import combinations

import pytest

from grothlat.algebra import BETA, ONE, X, Y, P, Poly, RatFunc, oplus, specialize_q_zero
from grothlat.errors import BudgetExceeded, NotReduced
from grothlat.lattice import enumerate_states, partition_function, state_weight, vertex_pattern
from grothlat.pipedreams import (
    PipeDream, all_pipe_dreams, enumerate_pd, excess, excess_identity_holds, grothendieck_via_pd,
    is_reduced, ne_system, pd_system, pd_to_state, permutation_of, preimages, reduce_ne, reduce_sw,
    staircase, state_to_pd, state_to_pd_ne, trace_pipes, weight,
)
from grothlat.symgroup import Perm, all_perms, length


def xy(i, j):
    return oplus(P(X(i)), P(Y(j)))


DREAM_1432 = PipeDream(4, [(1, 2), (1, 3), (2, 1), (3, 1)])
DREAM_1432_REDUCED = PipeDream(4, [(1, 3), (2, 1), (3, 1)])

P1 = PipeDream(3, [(2, 1)])
P2 = PipeDream(3, [(1, 2), (2, 1)])
P3 = PipeDream(3, [(1, 2)])


def test_nonreduced_1432():
    w = Perm.parse("1432")
    assert permutation_of(DREAM_1432) == w
    assert permutation_of(DREAM_1432_REDUCED) == w
    assert reduce_sw(DREAM_1432) == (DREAM_1432_REDUCED, 1)
    assert weight(DREAM_1432) == xy(1, 2) * xy(1, 3) * xy(2, 1) * xy(3, 1)
    assert weight(DREAM_1432_REDUCED) == xy(1, 3) * xy(2, 1) * xy(3, 1)
    assert excess(DREAM_1432) == 1


def test_reduction_seen_by_the_lattice():
    # the dropped crossing sits at state vertex (row 2, col 1) as a 1 + beta(x1 (+) y2) vertex
    st = pd_to_state(DREAM_1432_REDUCED)
    sys = pd_system(Perm.parse("1432"))
    assert vertex_pattern(sys, st, 1, 0) == "C1"
    assert sys.vertex_weights(1, 0)["C1"] == ONE + P(BETA) * xy(1, 2)
    assert state_to_pd(sys, st) == DREAM_1432_REDUCED


def test_sw_correspondence_132():
    w = Perm.parse("132")
    assert set(enumerate_pd(w)) == {P1, P2, P3}
    sys = pd_system(w)
    states = enumerate_states(sys)
    assert len(states) == 2
    by_pd = {state_to_pd(sys, s): s for s in states}
    assert set(by_pd) == {P1, P3}
    s1, s2 = by_pd[P1], by_pd[P3]
    assert state_weight(sys, s1) == weight(P1) + weight(P2) * P(BETA)
    assert state_weight(sys, s2) == weight(P3)
    assert reduce_sw(P2) == (P1, 1)


def test_ne_correspondence_132():
    w = Perm.parse("132")
    sys = ne_system(w)
    states = enumerate_states(sys)
    by_pd = {state_to_pd_ne(sys, s): s for s in states}
    assert set(by_pd) == {P1, P3}
    # the nonreduced dream now goes with the state that keeps the north-eastern crossing
    assert reduce_ne(P2) == (P3, 1)
    assert state_weight(sys, by_pd[P1]) == weight(P1)
    assert state_weight(sys, by_pd[P3]) == weight(P3) + P(BETA) * weight(P2)


def test_small_cases():
    assert permutation_of(PipeDream(3, [])) == Perm.identity(3)
    assert enumerate_pd(Perm.identity(2)) == [PipeDream(2, [])]
    assert weight(PipeDream(3, [])) == ONE
    assert reduce_sw(P1) == (P1, 0) and reduce_ne(P1) == (P1, 0)
    assert grothendieck_via_pd(Perm.identity(3)) == ONE


def test_double_crossing_reduces():
    # every cell of the size-3 staircase crossed: pipes 2 and 3 meet twice
    p = PipeDream(3, [(1, 1), (1, 2), (2, 1)])
    red, ex = reduce_sw(p)
    assert ex == len(p) - length(permutation_of(p))
    assert is_reduced(red)


def test_full_staircase():
    for n in (2, 3, 4):
        full = PipeDream(n, staircase(n))
        assert permutation_of(full) == Perm.longest(n)
        assert trace_pipes(full) == Perm.longest(n)


def test_w0_sum():
    expect = ONE
    for i in range(1, 4):
        for j in range(1, 4):
            if i + j <= 3:
                expect = expect * xy(i, j)
    assert grothendieck_via_pd(Perm.longest(3)) == expect


@pytest.mark.parametrize("n", [3, 4])
def test_reduction_invariants(n):
    for p in all_pipe_dreams(n):
        for red_fn, which in ((reduce_sw, "sw"), (reduce_ne, "ne")):
            red, ex = red_fn(p)
            assert red_fn(red) == (red, 0)
            assert red.crossings <= p.crossings
            assert ex == len(p) - length(permutation_of(p, which))
            assert len(red) == length(permutation_of(p, which))
            assert permutation_of(red, which) == permutation_of(p, which)
            # a reduced dream is drawn exactly as it is read
            assert trace_pipes(red) == permutation_of(p, which)
        assert excess_identity_holds(p)


def test_reduced_dreams_match_between_reductions():
    for p in all_pipe_dreams(4):
        if is_reduced(p):
            assert reduce_ne(p) == (p, 0)


@pytest.mark.parametrize("w", all_perms(3), ids=str)
def test_sum_formula_matches_lattice(w):
    z = specialize_q_zero(partition_function(pd_system(w)))
    assert grothendieck_via_pd(w) == z


@pytest.mark.parametrize("w", all_perms(3) + all_perms(4), ids=str)
def test_bijection(w):
    sys = pd_system(w)
    states = enumerate_states(sys)
    reduced = {p for p in enumerate_pd(w) if is_reduced(p)}
    images = [state_to_pd(sys, s) for s in states]
    assert len(set(images)) == len(images)
    assert set(images) == reduced
    beta = P(BETA)
    for s, p in zip(states, images):
        assert pd_to_state(p) == s
        law = sum((weight(d) * beta ** excess(d) for d in preimages(p)), Poly())
        assert state_weight(sys, s) == law


def test_pd_to_state_rejects_nonreduced():
    with pytest.raises(NotReduced):
        pd_to_state(P2)


def test_ascii():
    assert DREAM_1432_REDUCED.ascii() == ". . + .\n+ . .\n+ .\n."


def test_bad_cell_and_budget():
    with pytest.raises(ValueError):
        PipeDream(3, [(2, 2)])
    with pytest.raises(BudgetExceeded):
        next(all_pipe_dreams(6))
