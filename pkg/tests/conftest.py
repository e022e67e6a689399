"""Shared fixtures: a sympy view of our polynomials and hypothesis strategies."""

from __future__ import annotations

import sympy as sp
from hypothesis import strategies as st

from grothlat.algebra import BETA, Q, X, Y, Z, P, Poly, RatFunc

SYMS = {}


def sym(v):
    name = v.name
    if name not in SYMS:
        SYMS[name] = sp.Symbol(name)
    return SYMS[name]


def to_sympy(f):
    """Independent evaluation of a Poly or RatFunc as a sympy expression."""
    if isinstance(f, RatFunc):
        return to_sympy(f.num) / to_sympy(f.den.to_poly())
    f = Poly.coerce(f)
    total = sp.Integer(0)
    for exps, c in f.terms():
        term = sp.Rational(c.numerator, c.denominator) if hasattr(c, "denominator") else sp.Integer(c)
        for v, e in exps.items():
            term *= sym(v) ** e
        total += term
    return total


def same(a, b) -> bool:
    return sp.simplify(sp.together(a - b)) == 0


def expand_eq(a, b) -> bool:
    return sp.expand(a - b) == 0


GENS = [X(1), X(2), X(3), Y(1), Y(2), Y(3), BETA, Q]


@st.composite
def polys(draw, gens=GENS, max_terms=4, max_deg=3):
    f = Poly()
    for _ in range(draw(st.integers(0, max_terms))):
        c = draw(st.integers(-4, 4))
        m = Poly.const(c)
        for _ in range(draw(st.integers(0, max_deg))):
            m = m * P(draw(st.sampled_from(gens)))
        f = f + m
    return f


__all__ = ["sym", "to_sympy", "same", "expand_eq", "polys", "GENS", "Z"]


def poly_dict(f, gens):
    """{exponent tuple: coefficient} of a Poly over the given VarIds."""
    out = {}
    for exps, c in Poly.coerce(f).terms():
        key = tuple(exps.get(v, 0) for v in gens)
        out[key] = sp.Rational(c.numerator, c.denominator) if hasattr(c, "denominator") else sp.Integer(c)
    return out


def sympy_dict(expr, gens):
    return {k: v for k, v in sp.Poly(expr, *[sym(g) for g in gens]).as_dict().items() if v}
