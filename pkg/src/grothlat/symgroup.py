"""Permutations in one-line notation, Bruhat orders, and the branching
permutations w_max, w_min, w^- and w^+.

Composition is (a*b)(i) = a(b(i)).  For a permutation w we write eta(w) for
the one-line word of w^{-1}; left multiplication by s_i swaps positions i
and i+1 of that word.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

from .errors import BudgetExceeded, NotGrassmannian, ParseError

MAX_PERM_N = 8


class Perm:
    __slots__ = ("oneline",)

    def __init__(self, oneline: Iterable[int]):
        w = tuple(int(v) for v in oneline)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ParseError(f"{w} is not a permutation of 1..{len(w)}")
        if len(w) > MAX_PERM_N:
            raise BudgetExceeded(f"permutations of size {len(w)} exceed the cap {MAX_PERM_N}")
        self.oneline = w

    @classmethod
    def parse(cls, text: str) -> "Perm":
        text = text.strip()
        try:
            if "," in text:
                return cls(int(t) for t in text.split(","))
            if not text.isdigit():
                raise ParseError(f"cannot parse permutation {text!r}")
            return cls(int(ch) for ch in text)
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(1, n + 1))

    @classmethod
    def longest(cls, n: int) -> "Perm":
        return cls(range(n, 0, -1))

    @classmethod
    def s(cls, i: int, n: int) -> "Perm":
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(w)

    @classmethod
    def from_word(cls, word: Sequence[int], n: int) -> "Perm":
        w = cls.identity(n)
        for i in word:
            w = w * cls.s(i, n)
        return w

    @property
    def n(self) -> int:
        return len(self.oneline)

    def __call__(self, i: int) -> int:
        return self.oneline[i - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def inverse(self) -> "Perm":
        inv = [0] * self.n
        for i, v in enumerate(self.oneline, 1):
            inv[v - 1] = i
        return Perm(inv)

    def length(self) -> int:
        return length(self)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.oneline, 1))

    def right_descents(self) -> list:
        w = self.oneline
        return [i for i in range(1, self.n) if w[i - 1] > w[i]]

    def left_descents(self) -> list:
        return self.inverse().right_descents()

    def reduced_word(self) -> list:
        """Lexicographically first reduced word (a list of simple reflection indices)."""
        return list(_reduced_word(self.oneline))

    def __eq__(self, other):
        return isinstance(other, Perm) and self.oneline == other.oneline

    def __lt__(self, other):
        return self.oneline < other.oneline

    def __hash__(self):
        return hash(self.oneline)

    def __repr__(self):
        return f"Perm({self})"

    def __str__(self):
        sep = "," if self.n > 9 else ""
        return sep.join(str(v) for v in self.oneline)


@lru_cache(maxsize=None)
def _reduced_word(w: tuple) -> tuple:
    # w = s_a * u with l(u) = l(w) - 1 for the smallest left descent a
    if all(v == i for i, v in enumerate(w, 1)):
        return ()
    pos = {v: i for i, v in enumerate(w)}
    for a in range(1, len(w)):
        if pos[a] > pos[a + 1]:
            u = tuple(a + 1 if v == a else a if v == a + 1 else v for v in w)
            return (a,) + _reduced_word(u)
    raise AssertionError("non-identity permutation without descent")


def compose(a: Perm, b: Perm) -> Perm:
    if a.n != b.n:
        raise ValueError("permutations of different sizes")
    return Perm(a.oneline[v - 1] for v in b.oneline)


def length(w: Perm) -> int:
    o = w.oneline
    return sum(1 for i in range(len(o)) for j in range(i + 1, len(o)) if o[i] > o[j])


def all_perms(n: int) -> list:
    return [Perm(p) for p in permutations(range(1, n + 1))]


def eta(w: Perm) -> tuple:
    """One-line word of w^{-1}."""
    return w.inverse().oneline


def from_eta(word: Sequence[int]) -> Perm:
    return Perm(word).inverse()


def act_on_oneline(i: int, word: Sequence[int]) -> tuple:
    """s_i . word: swap positions i and i+1."""
    w = list(word)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def bruhat_leq(u: Perm, v: Perm) -> bool:
    """Strong Bruhat order by the rank-matrix criterion."""
    if u.n != v.n:
        raise ValueError("permutations of different sizes")
    n = u.n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            ru = sum(1 for a in range(i) if u.oneline[a] >= j)
            rv = sum(1 for a in range(i) if v.oneline[a] >= j)
            if ru > rv:
                return False
    return True


def weak_left_leq(u: Perm, v: Perm) -> bool:
    return length(v * u.inverse()) + length(u) == length(v)


def weak_right_leq(u: Perm, v: Perm) -> bool:
    return length(u.inverse() * v) + length(u) == length(v)


def w_max(w: Perm) -> Perm:
    """s_1 s_2 ... s_{k-1} w with k = w(1)."""
    n = w.n
    out = w
    for i in range(w(1) - 1, 0, -1):
        out = Perm.s(i, n) * out
    return out


def w_minus(w: Perm) -> Perm:
    """w_max restricted to 2..n, relabelled as an element of S_{n-1}."""
    m = w_max(w)
    if w.n == 1:
        raise ValueError("w_minus needs n >= 2")
    return Perm(m(i) - 1 for i in range(2, w.n + 1))


def w_plus(w: Perm) -> Perm:
    return Perm([1] + [v + 1 for v in w.oneline])


def _deltas(w: Perm) -> list:
    e = eta(w)
    n = w.n
    return [1 if any(e[i - 1] > e[j - 1] for j in range(i + 1, n + 1)) else 0 for i in range(1, n)]


def w_min(w: Perm) -> Perm:
    """s_1^{d_1} ... s_{n-1}^{d_{n-1}} w, d_i = 1 iff eta(w) has an inversion starting at i."""
    out = w
    n = w.n
    d = _deltas(w)
    for i in range(n - 1, 0, -1):
        if d[i - 1]:
            out = Perm.s(i, n) * out
    return out


def grassmannian_lambda(w: Perm) -> tuple:
    """(b, lambda) with (lambda)_{b+1-i} = w(i) - i, for w with at most one descent.

    The identity is reported with b = 0 and the empty partition; use
    grassmannian_lambda_at to read it relative to a chosen b.
    """
    d = w.right_descents()
    if len(d) > 1:
        raise NotGrassmannian(f"{w} has descents at {d}")
    if not d:
        return 0, ()
    return d[0], grassmannian_lambda_at(w, d[0])


def grassmannian_lambda_at(w: Perm, b: int) -> tuple:
    """lambda_w of length b, for w increasing on 1..b and on b+1..n."""
    o = w.oneline
    if any(o[i] > o[i + 1] for i in range(w.n - 1) if i != b - 1):
        raise NotGrassmannian(f"{w} is not Grassmannian with descent at {b}")
    return tuple(w(b + 1 - i) - (b + 1 - i) for i in range(1, b + 1))


def is_grassmannian_at(w: Perm, b: int) -> bool:
    try:
        grassmannian_lambda_at(w, b)
    except NotGrassmannian:
        return False
    return True


def interleaves(mu: Sequence[int], nu: Sequence[int]) -> bool:
    """nu_b = 0 and mu_i >= nu_i >= mu_{i+1} for all i."""
    b = len(mu)
    if len(nu) != b:
        raise ValueError("partitions must have the same number of parts")
    if b == 0:
        return True
    if nu[b - 1] != 0:
        return False
    for i in range(b):
        nxt = mu[i + 1] if i + 1 < b else 0
        if not mu[i] >= nu[i] >= nxt:
            return False
    return True


def interleaves_chained(mu: Sequence[int], nu: Sequence[int]) -> bool:
    """The chained condition nu_b = 0 and mu_i >= nu_i >= nu_{i+1}, which is not the interval test."""
    b = len(mu)
    if b == 0:
        return True
    if nu[b - 1] != 0:
        return False
    return all(mu[i] >= nu[i] >= (nu[i + 1] if i + 1 < b else 0) for i in range(b))


def in_branching_interval(w: Perm, v: Perm) -> bool:
    """w_min <= v (strong) and v <=_L w_max."""
    return bruhat_leq(w_min(w), v) and weak_left_leq(v, w_max(w))
