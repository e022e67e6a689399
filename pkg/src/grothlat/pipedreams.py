"""Pipe dreams on the staircase, their reductions, and the bijection with
states of the lattice system S_{1,w^{-1}}(y, x) at q = 0.

A pipe dream of size n is a set of crossing cells (i, j) with i + j <= n.
Every other cell of the staircase i + j <= n + 1 is an elbow.  Pipe i enters
the left edge of row i and travels up and to the right; elbows join west to
north and south to east.

Reduction is done in one sweep.  The SW sweep visits cells bottom to top and
left to right, which is an order compatible with the direction of travel, and
turns a crossing into an elbow whenever the two pipes meeting there have
already crossed.  Every pair therefore keeps exactly its first (south-western)
crossing along the re-routed pipes.  The NE sweep does the same from the top
boundary backwards and keeps the north-eastern crossing of each pair.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .algebra import ONE, X, Y, BETA, P, Poly, oplus
from .errors import BudgetExceeded, NotReduced
from .lattice import PLUS, LatticeState, LatticeSystem, build_system_G, vertex_pattern
from .symgroup import Perm, length

MAX_PD_N = 5


class PipeDream:
    __slots__ = ("n", "crossings")

    def __init__(self, n: int, crossings: Iterable = ()):
        cells = frozenset((int(i), int(j)) for i, j in crossings)
        for i, j in cells:
            if i < 1 or j < 1 or i + j > n:
                raise ValueError(f"cell {(i, j)} lies outside the size-{n} staircase")
        self.n = n
        self.crossings = cells

    def __eq__(self, other):
        return isinstance(other, PipeDream) and (self.n, self.crossings) == (other.n, other.crossings)

    def __hash__(self):
        return hash((self.n, self.crossings))

    def __repr__(self):
        return f"PipeDream({self.n}, {sorted(self.crossings)})"

    def __len__(self):
        return len(self.crossings)

    def ascii(self) -> str:
        """Row i from the top; '+' marks a crossing, '.' an elbow."""
        lines = []
        for i in range(1, self.n + 1):
            lines.append(" ".join("+" if (i, j) in self.crossings else "." for j in range(1, self.n + 2 - i)))
        return "\n".join(lines)

    dump = ascii


def staircase(n: int) -> list:
    """Cells that may hold a crossing."""
    return [(i, j) for i in range(1, n) for j in range(1, n + 1 - i)]


def _sweep_sw(n: int, crossings: frozenset):
    # north[j] is the pipe leaving the cell below through its top edge
    north = {}
    crossed = set()
    kept = []
    for i in range(n, 0, -1):
        west = i
        for j in range(1, n + 2 - i):
            south = north.get(j)
            if (i, j) in crossings and south is not None:
                pair = (min(west, south), max(west, south))
                if pair not in crossed:
                    crossed.add(pair)
                    kept.append((i, j))
                    north[j] = south
                    continue
            # elbow: west turns north, south turns east
            north[j], west = west, south
    w = [0] * n
    for j in range(1, n + 1):
        w[north[j] - 1] = j
    return Perm(w), frozenset(kept)


def _sweep_ne(n: int, crossings: frozenset):
    # pipes are named by their top column and traced backwards
    south = {}
    crossed = set()
    kept = []
    exit_row = {}
    for i in range(1, n + 1):
        east = None
        for j in range(n + 1 - i, 0, -1):
            north = south.get(j, j) if i > 1 else j
            if (i, j) in crossings and east is not None:
                pair = (min(north, east), max(north, east))
                if pair not in crossed:
                    crossed.add(pair)
                    kept.append((i, j))
                    south[j] = north
                    continue
            # elbow traced backwards: north turns west, east turns south
            south[j], east = east, north
        exit_row[i] = east
    return Perm(exit_row[i] for i in range(1, n + 1)), frozenset(kept)


@lru_cache(maxsize=None)
def _reduce_cached(n: int, crossings: frozenset, which: str):
    return (_sweep_sw if which == "sw" else _sweep_ne)(n, crossings)


def reduce_sw(p: PipeDream):
    """(red(P), ex(P)) keeping the south-western crossing of every pipe pair."""
    _, kept = _reduce_cached(p.n, p.crossings, "sw")
    return PipeDream(p.n, kept), len(p.crossings) - len(kept)


def reduce_ne(p: PipeDream):
    """(red(P), ex(P)) keeping the north-eastern crossing of every pipe pair."""
    _, kept = _reduce_cached(p.n, p.crossings, "ne")
    return PipeDream(p.n, kept), len(p.crossings) - len(kept)


def permutation_of(p: PipeDream, reduction: str = "sw") -> Perm:
    """w with pipe i ending in column w(i), read after reduction."""
    return _reduce_cached(p.n, p.crossings, reduction)[0]


def trace_pipes(p: PipeDream) -> Perm:
    """Follow the pipes of a pipe dream exactly as drawn, crossing every '+'."""
    n = p.n
    north = {}
    for i in range(n, 0, -1):
        west = i
        for j in range(1, n + 2 - i):
            south = north.get(j)
            if (i, j) in p.crossings:
                north[j] = south
            else:
                north[j], west = west, south
    w = [0] * n
    for j in range(1, n + 1):
        w[north[j] - 1] = j
    return Perm(w)


def is_reduced(p: PipeDream) -> bool:
    return reduce_sw(p)[1] == 0


def excess(p: PipeDream, reduction: str = "sw") -> int:
    return (reduce_sw if reduction == "sw" else reduce_ne)(p)[1]


def weight(p: PipeDream) -> Poly:
    """prod over crossings (i, j) of x_i (+) y_j."""
    out = ONE
    for i, j in sorted(p.crossings):
        out = out * oplus(P(X(i)), P(Y(j)))
    return out


def all_pipe_dreams(n: int):
    if n > MAX_PD_N:
        raise BudgetExceeded(f"pipe dream enumeration is capped at n = {MAX_PD_N}")
    cells = staircase(n)
    for k in range(len(cells) + 1):
        for sub in combinations(cells, k):
            yield PipeDream(n, sub)


def enumerate_pd(w: Perm, reduction: str = "sw") -> list:
    """Every pipe dream (reduced or not) whose reduction has permutation w."""
    return [p for p in all_pipe_dreams(w.n) if permutation_of(p, reduction) == w]


def grothendieck_via_pd(w: Perm) -> Poly:
    """sum over PD(w) of beta^ex(P) wt(P)."""
    beta = P(BETA)
    out = Poly()
    for p in enumerate_pd(w):
        out = out + beta ** excess(p) * weight(p)
    return out


def preimages(p: PipeDream, reduction: str = "sw") -> list:
    """All pipe dreams whose reduction is p."""
    red = reduce_sw if reduction == "sw" else reduce_ne
    return [d for d in all_pipe_dreams(p.n) if d.crossings >= p.crossings and red(d)[0] == p]


# ------------------------------------------------------------ bijection


def pd_system(w: Perm) -> LatticeSystem:
    """S_{1,w^{-1}}(y, x) at q = 0: rows carry y, columns carry x."""
    return build_system_G(Perm.identity(w.n), w.inverse(), row_vars="y", col_vars="x", q_zero=True)


def state_to_pd(sys: LatticeSystem, state: LatticeState) -> PipeDream:
    """B1 vertices of the state, reflected across the diagonal."""
    cells = [(c + 1, r + 1) for r in range(sys.rows) for c in range(sys.cols)
             if vertex_pattern(sys, state, r, c) == "B1"]
    return PipeDream(sys.rows, cells)


def pd_to_state(p: PipeDream) -> LatticeState:
    """Inverse of state_to_pd for the system pd_system(permutation_of(p))."""
    if not is_reduced(p):
        raise NotReduced(f"{p} is not reduced")
    w = permutation_of(p)
    n = p.n
    left = w.inverse().oneline
    # colors enter from the left and bottom and leave through the right and top
    h = [[left[r]] + [None] * n for r in range(n)]
    v = [[None] * n for _ in range(n)] + [[PLUS] * n]
    for r in range(n - 1, -1, -1):
        for c in range(n):
            west, south = h[r][c], v[r + 1][c]
            if (c + 1, r + 1) in p.crossings:
                h[r][c + 1], v[r][c] = west, south
            else:
                h[r][c + 1], v[r][c] = south, west
    state = LatticeState(tuple(tuple(x) for x in h), tuple(tuple(x) for x in v))
    if state.v[0] != tuple(range(1, n + 1)) or any(row[n] != PLUS for row in state.h):
        raise NotReduced(f"{p} does not close up to a state of the lattice system")
    return state


def ne_system(w: Perm) -> LatticeSystem:
    """S_{1,w}(x, y) at q = 0, matched with NE-reduced pipe dreams."""
    return build_system_G(Perm.identity(w.n), w, q_zero=True)


def state_to_pd_ne(sys: LatticeSystem, state: LatticeState) -> PipeDream:
    cells = [(r + 1, c + 1) for r in range(sys.rows) for c in range(sys.cols)
             if vertex_pattern(sys, state, r, c) == "B1"]
    return PipeDream(sys.rows, cells)


def excess_identity_holds(p: PipeDream) -> bool:
    red, ex = reduce_sw(p)
    return ex == len(p) - length(permutation_of(p)) and len(red) == length(permutation_of(p))
