"""Divided-difference operators: Newton's d_i, the (beta, q)-operators pi_i and
pi~_i, their inverses, and mu_i = (1 + beta x_i) d_i.

Every operator is linear over functions symmetric in the two variables it
touches, so a RatFunc is handled by first making its denominator symmetric
in those variables and then acting on the numerator.
"""

from __future__ import annotations

from . import kernels
from .algebra import (
    BETA,
    FIELD_BITS,
    ONE,
    Q,
    P,
    Poly,
    RatFunc,
    StructuredDenom,
    VarId,
    shift_poly,
)

B2Q2 = StructuredDenom(2, 2)


def _pair(i: int, axis: str):
    kind = axis.lower()
    if kind not in ("x", "y", "z"):
        raise ValueError(f"bad axis {axis!r}")
    if i < 1:
        raise ValueError("operator index must be >= 1")
    return VarId(kind, i), VarId(kind, i + 1)


def _dd(f: Poly, a: VarId, b: VarId) -> Poly:
    return Poly._raw(kernels.dd_terms(f._t, FIELD_BITS * a.slot, FIELD_BITS * b.slot))


def _symmetric_parts(f, a: VarId, b: VarId):
    """Split f as num/den with den symmetric in a, b."""
    if not isinstance(f, RatFunc):
        return Poly.coerce(f), None
    sm = f.den.shift_map()
    ea, eb = sm.get(a.slot, 0), sm.get(b.slot, 0)
    if ea == eb:
        return f.num, f.den
    m = max(ea, eb)
    num = f.num * shift_poly(a.slot, m - ea) * shift_poly(b.slot, m - eb)
    sm[a.slot] = m
    sm[b.slot] = m
    return num, StructuredDenom(f.den.beta, f.den.q, tuple(sorted(sm.items())))


def _wrap(num: Poly, den, extra=None, force_rat=False):
    if den is None and extra is None and not force_rat:
        return num
    d = den if den is not None else StructuredDenom()
    if extra is not None:
        d = d * extra
    return RatFunc(num, d)


def newton_dd(i: int, axis: str, f):
    """(f - s_i f) / (v_i - v_{i+1}) for v the chosen axis."""
    a, b = _pair(i, axis)
    num, den = _symmetric_parts(f, a, b)
    return _wrap(_dd(num, a, b), den)


def _hecke_core(num: Poly, a: VarId, b: VarId) -> Poly:
    """(1 + beta a) d f - q^2 (1 + beta b) d f, shared by all four Hecke operators."""
    g = _dd(num, a, b)
    beta = P(BETA)
    return (ONE + beta * P(a)) * g - P(Q) ** 2 * (ONE + beta * P(b)) * g


def pi(i: int, f, axis: str = "x"):
    """pi_i = d_i (1 + beta x_{i+1}) - q^2 (1 + beta x_{i+1}) d_i."""
    a, b = _pair(i, axis)
    num, den = _symmetric_parts(f, a, b)
    core = _hecke_core(num, a, b)
    return _wrap(core - P(BETA) * num, den)


def pi_tilde(i: int, f):
    """pi~_i = (d^y_i (1 + beta y_{i+1}) - q^2 (1 + beta y_{i+1}) d^y_i) / (beta^2 q^2)."""
    a, b = _pair(i, "y")
    num, den = _symmetric_parts(f, a, b)
    core = _hecke_core(num, a, b)
    return _wrap(core - P(BETA) * num, den, B2Q2)


def pi_inv(i: int, f, axis: str = "x"):
    """pi_i^{-1} = ((1 + beta x_i) d_i - q^2 d_i (1 + beta x_i)) / (beta^2 q^2)."""
    a, b = _pair(i, axis)
    num, den = _symmetric_parts(f, a, b)
    core = _hecke_core(num, a, b)
    return _wrap(core - P(BETA) * P(Q) ** 2 * num, den, B2Q2)


def pi_tilde_inv(i: int, f):
    """pi~_i^{-1} = (1 + beta y_i) d^y_i - q^2 d^y_i (1 + beta y_i)."""
    a, b = _pair(i, "y")
    num, den = _symmetric_parts(f, a, b)
    core = _hecke_core(num, a, b)
    return _wrap(core - P(BETA) * P(Q) ** 2 * num, den)


def mu(i: int, f, axis: str = "x"):
    """mu_i = (1 + beta x_i) d_i."""
    a, b = _pair(i, axis)
    num, den = _symmetric_parts(f, a, b)
    return _wrap((ONE + P(BETA) * P(a)) * _dd(num, a, b), den)


def pi_beta(i: int, f, axis: str = "x"):
    """The q = 0 operator d_i (1 + beta v_{i+1}) = (1 + beta v_i) d_i - beta."""
    a, b = _pair(i, axis)
    num, den = _symmetric_parts(f, a, b)
    return _wrap((ONE + P(BETA) * P(a)) * _dd(num, a, b) - P(BETA) * num, den)


def pi_beta_y(i: int, f):
    """(beta^2 q^2 pi~_i) at q = 0, which is pi_beta acting on y."""
    return pi_beta(i, f, "y")


def apply_word(op, word, f):
    """Apply op(i, .) for i in word, rightmost letter first."""
    for i in reversed(list(word)):
        f = op(i, f)
    return f


def _is_zero(r) -> bool:
    return r.is_zero()


def check_quadratic(i: int, f, which: str = "pi") -> bool:
    """(pi+beta)(pi-beta q^2) f = 0, or (pi~ + 1/(beta q^2))(pi~ - 1/beta) f = 0."""
    beta = P(BETA)
    if which == "pi":
        g = RatFunc.coerce(pi(i, f)) - beta * P(Q) ** 2 * RatFunc.coerce(f)
        h = RatFunc.coerce(pi(i, g)) + beta * g
        return _is_zero(h)
    if which == "pi_tilde":
        f = RatFunc.coerce(f)
        g = pi_tilde(i, f) - f.divide(StructuredDenom(1, 0))
        h = pi_tilde(i, g) + g.divide(StructuredDenom(1, 2))
        return _is_zero(h)
    raise ValueError(f"unknown operator family {which!r}")


def check_braid(i: int, f, op) -> bool:
    """op_i op_{i+1} op_i f = op_{i+1} op_i op_{i+1} f."""
    lhs = RatFunc.coerce(op(i, op(i + 1, op(i, f))))
    rhs = RatFunc.coerce(op(i + 1, op(i, op(i + 1, f))))
    return lhs == rhs


def check_commute(i: int, j: int, f, op_a, op_b=None) -> bool:
    op_b = op_b or op_a
    return RatFunc.coerce(op_a(i, op_b(j, f))) == RatFunc.coerce(op_b(j, op_a(i, f)))
