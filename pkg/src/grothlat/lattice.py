"""The colored six-vertex model: weight families, boundary systems, state
enumeration, partition functions, Yang-Baxter checks and the Drinfeld twist.

Rectangular vertices are read as (W, N, E, S).  Rotated R-vertices are read
as (SW, NW, NE, SE).  The label PLUS is larger than every color.

Grid conventions: rows are numbered from the top and columns from the left,
both from 0 internally.  In a state, h[r][c] is the horizontal edge left of
vertex (r, c) (so h[r][cols] is the right boundary) and v[r][c] is the
vertical edge above vertex (r, c) (so v[rows][c] is the bottom boundary).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Sequence

from . import kernels
from .algebra import (
    BETA,
    ONE,
    ONE_DEN,
    Q,
    P,
    Poly,
    RatFunc,
    StructuredDenom,
    VarId,
    X,
    Y,
    Z,
    ominus,
    oplus,
    specialize_q_zero,
    substitute,
)
from .errors import Inadmissible, state_budget, term_budget
from .symgroup import Perm, eta, in_branching_interval

PLUS = 1000
PATTERNS = ("A", "B1", "B2", "C1", "C2")

# letter codes over (W, N, E, S) for rectangular families, (SW, NW, NE, SE) for R
SHAPES = {
    "T": {"B1": "baba", "B2": "abab", "C1": "bbaa", "C2": "aabb"},
    "S": {"B1": "baba", "B2": "abab", "C1": "bbaa", "C2": "aabb"},
    "SSTAR": {"B1": "baba", "B2": "abab", "C1": "baab", "C2": "abba"},
    "R_ROW": {"B1": "abab", "B2": "baba", "C1": "abba", "C2": "baab"},
    "R_SSTAR_ROW": {"B1": "abab", "B2": "baba", "C1": "abba", "C2": "baab"},
    "R_COL": {"B1": "abab", "B2": "baba", "C1": "bbaa", "C2": "aabb"},
    "R_RHOMBUS": {"B1": "abab", "B2": "baba", "C1": "bbaa", "C2": "aabb"},
}
RECT_FAMILIES = ("T", "S", "SSTAR")
FAMILIES = tuple(SHAPES)
_CODE_TO_PATTERN = {f: {code: pat for pat, code in shapes.items()} for f, shapes in SHAPES.items()}


def label_str(lab: int) -> str:
    return "+" if lab == PLUS else str(lab)


def parse_label(text: str) -> int:
    return PLUS if text.strip() == "+" else int(text)


def classify_tuple(family: str, tup: Sequence[int]) -> str:
    """Pattern of a vertex given in the family's canonical order."""
    labs = set(tup)
    if len(labs) == 1:
        return "A"
    if len(labs) == 2:
        a, b = sorted(labs)
        code = "".join("a" if t == a else "b" for t in tup)
        pat = _CODE_TO_PATTERN[family].get(code)
        if pat is not None:
            return pat
    raise Inadmissible(f"{family} vertex {tuple(label_str(t) for t in tup)} matches no pattern")


def classify(family: str, a: int, b: int, c: int, d: int) -> str:
    """Rectangular families take (N, W, E, S); R-families take (SW, NW, NE, SE)."""
    if family in RECT_FAMILIES:
        return classify_tuple(family, (b, a, c, d))
    return classify_tuple(family, (a, b, c, d))


def _param(p):
    if isinstance(p, VarId):
        return P(p)
    return p


def weight_table(family: str, p, r) -> dict:
    """All five weights.  Rectangular: p row parameter, r column parameter.
    R-families: p, r are the parameters of the two strands, called i and j."""
    p, r = _param(p), _param(r)
    beta = P(BETA)
    q2 = P(Q) ** 2
    b2q2 = beta**2 * q2
    one_q2 = ONE - q2
    if family in ("T", "SSTAR", "S", "R_RHOMBUS"):
        u = oplus(p, ominus_of(r)) if family == "SSTAR" else oplus(p, r)
        t = {
            "A": ONE - q2 * (ONE + beta * u),
            "B1": u,
            "B2": b2q2 * u,
            "C1": one_q2 * (ONE + beta * u),
            "C2": one_q2,
        }
        if family == "S":
            t["B1"], t["B2"] = t["B2"], t["B1"]
    elif family == "R_ROW":
        t = {
            "A": ONE + beta * p - q2 * (ONE + beta * r),
            "B1": r - p,
            "B2": b2q2 * (r - p),
            "C1": one_q2 * (ONE + beta * r),
            "C2": one_q2 * (ONE + beta * p),
        }
    elif family == "R_COL":
        t = {
            "A": ONE + beta * p - q2 * (ONE + beta * r),
            "B1": b2q2 * (r - p),
            "B2": r - p,
            "C1": one_q2 * (ONE + beta * r),
            "C2": one_q2 * (ONE + beta * p),
        }
    elif family == "R_SSTAR_ROW":
        t = {
            "A": ONE + beta * r - q2 * (ONE + beta * p),
            "B1": b2q2 * (p - r),
            "B2": p - r,
            "C1": one_q2 * (ONE + beta * r),
            "C2": one_q2 * (ONE + beta * p),
        }
    else:
        raise ValueError(f"unknown family {family!r}")
    return {k: RatFunc.coerce(v) for k, v in t.items()}


def ominus_of(r):
    """The formal-group inverse of a single-variable parameter."""
    if isinstance(r, VarId):
        return ominus(r)
    vs = r.variables() if isinstance(r, Poly) else set()
    if len(vs) == 1:
        v = next(iter(vs))
        if v.kind in ("x", "y", "z") and r == P(v):
            return ominus(v)
    raise ValueError("ominus is only available for a single-variable parameter")


def weight(family: str, pattern: str, p, r, q_zero: bool = False):
    w = weight_table(family, p, r)[pattern]
    return specialize_q_zero(w) if q_zero else w


@lru_cache(maxsize=None)
def _vanishing_at_q0(family: str) -> frozenset:
    t = weight_table(family, X(1), Y(2) if family in RECT_FAMILIES else X(2))
    return frozenset(k for k, v in t.items() if RatFunc.coerce(specialize_q_zero(v)).is_zero())


@lru_cache(maxsize=None)
def completion_table(family: str, labels: tuple, q_zero: bool) -> dict:
    """(N, W) -> tuple of (E, S) completions, for rectangular families."""
    banned = _vanishing_at_q0(family) if q_zero else frozenset()
    out: dict = {}
    for w, n, e, s in product(labels, repeat=4):
        try:
            pat = classify_tuple(family, (w, n, e, s))
        except Inadmissible:
            continue
        if pat in banned:
            continue
        out.setdefault((n, w), []).append((e, s))
    return {k: tuple(sorted(v)) for k, v in out.items()}


@dataclass(frozen=True)
class LatticeState:
    h: tuple
    v: tuple

    def vertex(self, r: int, c: int) -> tuple:
        """(W, N, E, S) at vertex (r, c)."""
        return (self.h[r][c], self.v[r][c], self.h[r][c + 1], self.v[r + 1][c])

    @property
    def rows(self) -> int:
        return len(self.h)

    @property
    def cols(self) -> int:
        return len(self.v[0])

    def dump(self) -> str:
        lines = []
        for r in range(self.rows):
            lines.append(" " + " ".join(label_str(x) for x in self.v[r]))
            lines.append(" ".join(label_str(x) for x in self.h[r]))
        lines.append(" " + " ".join(label_str(x) for x in self.v[self.rows]))
        return "\n".join(lines)


@dataclass(frozen=True)
class LatticeSystem:
    top: tuple
    left: tuple
    right: tuple
    bottom: tuple
    families: tuple
    row_params: tuple
    col_params: tuple
    q_zero: bool = False
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @property
    def rows(self) -> int:
        return len(self.left)

    @property
    def cols(self) -> int:
        return len(self.top)

    def labels(self) -> tuple:
        return tuple(sorted(set(self.top) | set(self.left) | set(self.right) | set(self.bottom) | {PLUS}))

    def tables(self) -> list:
        labs = self.labels()
        return [completion_table(f, labs, self.q_zero) for f in self.families]

    def vertex_weights(self, r: int, c: int) -> dict:
        key = (r, c)
        if key not in self._cache:
            t = weight_table(self.families[r], self.row_params[r], self.col_params[c])
            if self.q_zero:
                t = {k: RatFunc.coerce(specialize_q_zero(v)) for k, v in t.items()}
            self._cache[key] = t
        return self._cache[key]

    def vertex_numerators(self, r: int, c: int):
        """Weights over a common denominator: (pattern -> numerator dict, den)."""
        key = ("num", r, c)
        if key not in self._cache:
            t = self.vertex_weights(r, c)
            den = ONE_DEN
            for w in t.values():
                den = den.lcm(w.den)
            nums = {k: (w.num * w.den.cofactor(den))._t for k, w in t.items()}
            self._cache[key] = (nums, den)
        return self._cache[key]

    def with_boundary(self, **kw) -> "LatticeSystem":
        d = dict(top=self.top, left=self.left, right=self.right, bottom=self.bottom,
                 families=self.families, row_params=self.row_params, col_params=self.col_params,
                 q_zero=self.q_zero)
        d.update(kw)
        return LatticeSystem(**d)


def _poly_params(kind: str, n: int):
    return tuple(P(VarId(kind, i)) for i in range(1, n + 1))


def build_system_G(v: Perm, w: Perm, row_vars: str = "x", col_vars: str = "y", q_zero: bool = False) -> LatticeSystem:
    """The system S_{v,w}: top boundary v, left boundary w, right and bottom PLUS."""
    if v.n != w.n:
        raise ValueError("permutations of different sizes")
    n = v.n
    return LatticeSystem(
        top=v.oneline,
        left=w.oneline,
        right=(PLUS,) * n,
        bottom=(PLUS,) * n,
        families=("T",) * n,
        row_params=_poly_params(row_vars, n),
        col_params=_poly_params(col_vars, n),
        q_zero=q_zero,
    )


def build_cauchy_system(v: Perm, w: Perm, q_zero: bool = True) -> LatticeSystem:
    """The 2n x n system: S* rows x_n..x_1 over S rows y_1..y_n, columns z_1..z_n.

    Left labels read w bottom-to-top on the top half and v top-to-bottom on the
    bottom half; every other boundary edge is PLUS.
    """
    if v.n != w.n:
        raise ValueError("permutations of different sizes")
    n = v.n
    return LatticeSystem(
        top=(PLUS,) * n,
        left=tuple(w(n - r) for r in range(n)) + v.oneline,
        right=(PLUS,) * (2 * n),
        bottom=(PLUS,) * n,
        families=("SSTAR",) * n + ("S",) * n,
        row_params=tuple(P(X(n - r)) for r in range(n)) + _poly_params("y", n),
        col_params=_poly_params("z", n),
        q_zero=q_zero,
    )


def build_branching_system(w: Perm) -> LatticeSystem:
    """S-weights, left boundary 1..n, top boundary eta(w), rows x, columns y, q = 0."""
    n = w.n
    return LatticeSystem(
        top=eta(w),
        left=tuple(range(1, n + 1)),
        right=(PLUS,) * n,
        bottom=(PLUS,) * n,
        families=("S",) * n,
        row_params=_poly_params("x", n),
        col_params=_poly_params("y", n),
        q_zero=True,
    )


def one_row_system(w: Perm, v: Perm) -> LatticeSystem:
    """Top row of the branching system with the bottom edges fixed by eta(v)."""
    n = w.n
    ev = eta(v)
    return LatticeSystem(
        top=eta(w),
        left=(1,),
        right=(PLUS,),
        bottom=tuple(ev[1:]) + (PLUS,),
        families=("S",),
        row_params=(P(X(1)),),
        col_params=_poly_params("y", n),
        q_zero=True,
    )


def one_row_T(w: Perm, v: Perm):
    """prod_i d_i, comparing eta(w)_i with eta(v)_{i+1} (PLUS past the end)."""
    if v(1) != 1:
        raise ValueError("one_row_T needs v(1) = 1")
    if not in_branching_interval(w, v):
        return Poly()
    ew = eta(w)
    ev = eta(v) + (PLUS,)
    out = ONE
    beta = P(BETA)
    for i in range(1, w.n + 1):
        u = oplus(P(X(1)), P(Y(i)))
        top, bot = ew[i - 1], ev[i]
        if top == bot:
            out = out * u
        elif top > bot:
            out = out * (ONE + beta * u)
    return out


# ---------------------------------------------------------------- enumeration


def _decode(sys: LatticeSystem, flat: tuple) -> LatticeState:
    rows, cols = sys.rows, sys.cols
    h = []
    v = [tuple(sys.top)]
    for r in range(rows):
        hr = [sys.left[r]]
        vr = []
        for c in range(cols):
            k = 2 * (r * cols + c)
            hr.append(flat[k])
            vr.append(flat[k + 1])
        h.append(tuple(hr))
        v.append(tuple(vr))
    return LatticeState(tuple(h), tuple(v))


def enumerate_states(sys: LatticeSystem, limit: int | None = None) -> list:
    limit = state_budget() if limit is None else limit
    flats = kernels.enumerate_grid(sys.rows, sys.cols, sys.top, sys.left, sys.right, sys.bottom, sys.tables(), limit)
    return [_decode(sys, f) for f in flats]


def count_states(sys: LatticeSystem) -> int:
    return len(kernels.enumerate_grid(sys.rows, sys.cols, sys.top, sys.left, sys.right, sys.bottom, sys.tables(), state_budget()))


def vertex_pattern(sys: LatticeSystem, state: LatticeState, r: int, c: int) -> str:
    return classify_tuple(sys.families[r], state.vertex(r, c))


def state_weight(sys: LatticeSystem, state: LatticeState) -> RatFunc:
    out = RatFunc(ONE)
    for r in range(sys.rows):
        for c in range(sys.cols):
            out = out * sys.vertex_weights(r, c)[vertex_pattern(sys, state, r, c)]
    return out


def _dp(sys: LatticeSystem, r0: int, r1: int, frontier: dict):
    """Vertex-by-vertex transfer over rows r0..r1-1.

    frontier maps the tuple of vertical labels above row r0 to a numerator
    dict.  Returns the frontier below row r1-1 and the accumulated denominator.
    """
    tables = sys.tables()
    budget = term_budget()
    den = ONE_DEN
    cols = sys.cols
    for r in range(r0, r1):
        last = r == sys.rows - 1
        cur = {(vs, sys.left[r]): z for vs, z in frontier.items()}
        for c in range(cols):
            nums, d = sys.vertex_numerators(r, c)
            den = den * d
            fam = sys.families[r]
            table = tables[r]
            nxt: dict = {}
            for (vs, hw), z in cur.items():
                for e, s in table.get((vs[c], hw), ()):
                    if last and s != sys.bottom[c]:
                        continue
                    if c == cols - 1 and e != sys.right[r]:
                        continue
                    pat = classify_tuple(fam, (hw, vs[c], e, s))
                    key = (vs[:c] + (s,) + vs[c + 1:], e)
                    prod_terms = kernels.mul_terms(z, nums[pat], budget)
                    acc = nxt.get(key)
                    if acc is None:
                        nxt[key] = prod_terms
                    else:
                        for k, v in prod_terms.items():
                            acc[k] = acc.get(k, 0) + v
            cur = nxt
        frontier = {}
        for (vs, hw), z in cur.items():
            z = {k: v for k, v in z.items() if v}
            if z:
                frontier[vs] = z
    return frontier, den


def partition_function(sys: LatticeSystem, method: str = "dp") -> RatFunc:
    """Sum of state weights.  method='dp' uses the transfer recursion, 'states'
    sums weights of the enumerated states."""
    if method == "states":
        total = RatFunc(Poly())
        for s in enumerate_states(sys):
            total = total + state_weight(sys, s)
        return total
    frontier, den = _dp(sys, 0, sys.rows, {tuple(sys.top): {0: 1}})
    z = frontier.get(tuple(sys.bottom), {})
    return RatFunc(Poly(z), den)


def partition_function_split(sys: LatticeSystem, after_row: int) -> dict:
    """Group the partition function by the labels crossing the cut below row
    after_row-1: returns {cut labels: (Z_above, Z_below)}."""
    frontier, den_top = _dp(sys, 0, after_row, {tuple(sys.top): {0: 1}})
    out = {}
    for cut, z in sorted(frontier.items()):
        below, den_bot = _dp(sys, after_row, sys.rows, {cut: {0: 1}})
        zb = below.get(tuple(sys.bottom))
        if zb:
            out[cut] = (RatFunc(Poly(z), den_top), RatFunc(Poly(zb), den_bot))
    return out


def trace_paths(state: LatticeState, families: Sequence[str]) -> bool:
    """Check each vertex conserves colors along its family's flow directions."""
    for r in range(state.rows):
        fam = families[r]
        for c in range(state.cols):
            w, n, e, s = state.vertex(r, c)
            if fam == "T":
                ins, outs = (w, s), (e, n)
            elif fam == "S":
                ins, outs = (n, e), (s, w)
            else:
                ins, outs = (w, n), (e, s)
            if sorted(ins) != sorted(outs):
                return False
    return True


# ------------------------------------------------------------ Yang-Baxter


def _vertex_entries(family: str, p, r, labels: tuple) -> list:
    t = weight_table(family, p, r)
    out = []
    for tup in product(labels, repeat=4):
        try:
            pat = classify_tuple(family, tup)
        except Inadmissible:
            continue
        if not t[pat].is_zero():
            out.append((tup, t[pat]))
    return out


def network_partition_functions(vertices: list, boundary: Sequence[str], labels: tuple) -> dict:
    """Partition functions of a small network for every boundary labeling.

    vertices: list of (family, p, r, edge-names in canonical order).  Edges
    named in boundary are external; all other names are summed over.
    """
    entries = [(_vertex_entries(f, p, r, labels), names) for f, p, r, names in vertices]
    out: dict = {}

    def rec(k, assign, wt):
        if k == len(entries):
            key = tuple(assign[b] for b in boundary)
            out[key] = out[key] + wt if key in out else wt
            return
        ents, names = entries[k]
        for tup, w in ents:
            new = dict(assign)
            ok = True
            for nm, lab in zip(names, tup):
                if new.setdefault(nm, lab) != lab:
                    ok = False
                    break
            if ok:
                rec(k + 1, new, w if wt is None else wt * w)

    rec(0, {}, None)
    return out


def _compare_networks(lhs: list, rhs: list, boundary: Sequence[str], labels: tuple):
    zl = network_partition_functions(lhs, boundary, labels)
    zr = network_partition_functions(rhs, boundary, labels)
    zero = RatFunc(Poly())
    for key in sorted(set(zl) | set(zr)):
        a = zl.get(key, zero)
        b = zr.get(key, zero)
        if a != b:
            return False, {"boundary": dict(zip(boundary, key)), "lhs": a.to_text(), "rhs": b.to_text()}
    return True, None


YBE_BOUNDARY = ("alpha", "beta", "gamma", "delta", "epsilon", "eta")
DEFAULT_LABELS = (1, 2, 3, PLUS)


def row_ybe_networks(top_family="T", bottom_family="T", r_family="R_ROW", pi=X(1), pj=X(2), col=Y(1),
                     top_param=None, bottom_param=None):
    """Both sides of the row equation: R on the left of rows (i over j) equals
    R on the right of rows (j over i)."""
    tp = pi if top_param is None else top_param
    bp = pj if bottom_param is None else bottom_param
    lhs = [
        (r_family, pi, pj, ("alpha", "beta", "h1", "h2")),
        (top_family, tp, col, ("h1", "gamma", "delta", "m")),
        (bottom_family, bp, col, ("h2", "m", "epsilon", "eta")),
    ]
    rhs = [
        (bottom_family, bp, col, ("beta", "gamma", "h1", "m")),
        (top_family, tp, col, ("alpha", "m", "h2", "eta")),
        (r_family, pi, pj, ("h2", "h1", "delta", "epsilon")),
    ]
    return lhs, rhs


def col_ybe_networks(yi=Y(1), yj=Y(2), row=X(1)):
    """Both sides of the column equation with the R-vertex above (left side)
    or below (right side) a row of two T vertices."""
    lhs = [
        ("T", row, yi, ("eta", "cl", "m", "epsilon")),
        ("T", row, yj, ("m", "cr", "gamma", "delta")),
        ("R_COL", yi, yj, ("cl", "alpha", "beta", "cr")),
    ]
    rhs = [
        ("T", row, yj, ("eta", "alpha", "m", "dl")),
        ("T", row, yi, ("m", "beta", "gamma", "dr")),
        ("R_COL", yi, yj, ("epsilon", "dl", "dr", "delta")),
    ]
    return lhs, rhs


def verify_row_ybe(labels: tuple = DEFAULT_LABELS):
    lhs, rhs = row_ybe_networks()
    return _compare_networks(lhs, rhs, YBE_BOUNDARY, labels)


def verify_col_ybe(labels: tuple = DEFAULT_LABELS):
    lhs, rhs = col_ybe_networks()
    return _compare_networks(lhs, rhs, YBE_BOUNDARY, labels)


def verify_rhombus_ybe(labels: tuple = DEFAULT_LABELS):
    """S row over S* row, swapped through a rhombus R-vertex."""
    lhs, rhs = row_ybe_networks("S", "SSTAR", "R_RHOMBUS", X(1), X(2), Z(1))
    return _compare_networks(lhs, rhs, YBE_BOUNDARY, labels)


# The strand entering the R-vertex at SW (the top row on the left side)
# carries the parameter x_i.  The other assignment fails the equation.
SSTAR_ROW_SWAP = False


def verify_sstar_row_ybe(labels: tuple = DEFAULT_LABELS, swap: bool | None = None):
    """Two S* rows swapped through their R-vertex."""
    swap = SSTAR_ROW_SWAP if swap is None else swap
    pi, pj = X(1), X(2)
    tp, bp = (pj, pi) if swap else (pi, pj)
    lhs, rhs = row_ybe_networks("SSTAR", "SSTAR", "R_SSTAR_ROW", pi, pj, Z(1), tp, bp)
    return _compare_networks(lhs, rhs, YBE_BOUNDARY, labels)


def example_4_2():
    """Both sides of the column equation at the boundary of the worked example."""
    lhs, rhs = col_ybe_networks(Y(1), Y(2), X(3))
    b = (1, 2, 3, 3, 1, 2)
    labels = (1, 2, 3, PLUS)
    zl = network_partition_functions(lhs, YBE_BOUNDARY, labels)[b]
    zr = network_partition_functions(rhs, YBE_BOUNDARY, labels)[b]
    return zl, zr


# --------------------------------------------------------- Drinfeld twist

BASIS = ("aa", "ab", "ba", "bb")


def _rtilde(z):
    """The two-color block of R~(z), keyed by (row, column) basis words."""
    q = P(Q)
    one = RatFunc(ONE)
    return {
        ("aa", "aa"): one - q**2 * z,
        ("ab", "ab"): (z - one) * q,
        ("ba", "ba"): (z - one) * q,
        ("ab", "ba"): one - q**2,
        ("ba", "ab"): (one - q**2) * z,
        ("bb", "bb"): one - q**2 * z,
    }


# F = diag(1, s, 1/s, 1) with s = (q beta)^{1/2}; exponents of s
F_HALF = {"aa": 0, "ab": 1, "ba": -1, "bb": 0}


def twisted_rmatrix(z) -> dict:
    """F21 R~ F^{-1} with F21 = F^{-1}, powers of s = (q beta)^{1/2} tracked as integers."""
    out = {}
    for (rw, cl), val in _rtilde(z).items():
        half = -F_HALF[rw] - F_HALF[cl]
        if half % 2:
            raise ValueError("odd power of (q beta)^{1/2} in the twisted matrix")
        k = half // 2
        factor = RatFunc(Poly.monomial({Q: k, BETA: k})) if k >= 0 else RatFunc(ONE, StructuredDenom(-k, -k))
        out[(rw, cl)] = val * factor
    return out


def verify_drinfeld_twist():
    """Compare the twisted matrix with the T weights and the row R weights.

    Matrix rows are indexed by the outgoing pair (N, E), resp. (NE, SE), and
    columns by the incoming pair (S, W), resp. (SW, NW).
    """
    z = RatFunc(P(Z(1)))
    problems = []
    beta = P(BETA)
    x, y = X(1), Y(1)
    zt = substitute(P(Z(1)), {Z(1): (ONE + beta * P(x)) * (ONE + beta * P(y))})
    mt = {k: substitute(v.num, {Z(1): zt}).divide(v.den) for k, v in twisted_rmatrix(z).items()}
    xi, xj = X(1), X(2)
    zr = RatFunc(ONE + beta * P(xj), StructuredDenom(0, 0, ((xi.slot, 1),)))
    scale = ONE + beta * P(xi)
    mr = {k: substitute(v.num, {Z(1): zr}).divide(v.den) * scale for k, v in twisted_rmatrix(z).items()}
    tw = weight_table("T", x, y)
    rw = weight_table("R_ROW", xi, xj)
    for a, b in ((1, 2), (1, PLUS), (2, 3), (3, PLUS)):
        lab = {"a": a, "b": b}
        for rw_, cl in product(BASIS, repeat=2):
            n, e = lab[rw_[0]], lab[rw_[1]]
            s, w = lab[cl[0]], lab[cl[1]]
            for fam, mat, tup, table in (
                ("T", mt, (w, n, e, s), tw),
                ("R_ROW", mr, (s, w, n, e), rw),
            ):
                entry = mat.get((rw_, cl))
                try:
                    pat = classify_tuple(fam, tup)
                except Inadmissible:
                    pat = None
                if pat is None:
                    if entry is not None and not entry.is_zero():
                        problems.append((fam, rw_, cl, "nonzero entry at inadmissible vertex"))
                elif entry is None or entry != table[pat]:
                    problems.append((fam, rw_, cl, pat))
    return not problems, problems


# ----------------------------------------------- Cauchy emptiness checks


def modified_rainbow_systems(n: int) -> list:
    """R_w with the right edges of one x-row and one y-row both set to a color c."""
    from .symgroup import all_perms

    out = []
    for w in all_perms(n):
        base = build_cauchy_system(Perm.identity(n), w)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for c in range(1, n + 1):
                    right = list(base.right)
                    right[n - i] = c
                    right[n + j - 1] = c
                    out.append(((str(w), i, j, c), base.with_boundary(right=tuple(right))))
    return out


def swapped_rainbow_systems(n: int, max_systems: int | None = None) -> list:
    """R'' systems: S* and S rows interleaved, each color's S* row above its
    S row, and two right edges (an S* row above an S row) set to a color c."""
    from itertools import combinations, permutations

    out = []
    colors = list(range(1, n + 1))
    for star_rows in combinations(range(2 * n), n):
        s_rows = [r for r in range(2 * n) if r not in star_rows]
        fams = tuple("SSTAR" if r in star_rows else "S" for r in range(2 * n))
        for star_lab in permutations(colors):
            pos_star = {c: star_rows[k] for k, c in enumerate(star_lab)}
            for s_lab in permutations(colors):
                if any(pos_star[c] > s_rows[k] for k, c in enumerate(s_lab)):
                    continue
                left = [0] * (2 * n)
                for k, c in enumerate(star_lab):
                    left[star_rows[k]] = c
                for k, c in enumerate(s_lab):
                    left[s_rows[k]] = c
                xs = iter(range(n, 0, -1))
                ys = iter(range(1, n + 1))
                params = tuple(P(X(next(xs))) if f == "SSTAR" else P(Y(next(ys))) for f in fams)
                for rs in star_rows:
                    for rt in s_rows:
                        if rs > rt:
                            continue
                        for c in colors:
                            right = [PLUS] * (2 * n)
                            right[rs] = c
                            right[rt] = c
                            sys = LatticeSystem(
                                top=(PLUS,) * n, left=tuple(left), right=tuple(right), bottom=(PLUS,) * n,
                                families=fams, row_params=params, col_params=_poly_params("z", n), q_zero=True,
                            )
                            out.append(((star_rows, tuple(left), rs, rt, c), sys))
                            if max_systems is not None and len(out) >= max_systems:
                                return out
    return out


def no_admissible_states_check(systems: list):
    """True iff none of the given systems has an admissible state."""
    for desc, sys in systems:
        if count_states(sys):
            return False, desc
    return True, None
