"""Exact sparse polynomials in x, y, z, beta, q and rational functions whose
denominators are products of beta, q and shift factors (1 + beta*v).

A monomial is packed into a single int: every variable owns a 16-bit field,
so the product of two monomials is the sum of their keys and the integer
order of keys is a lex monomial order (q > beta > z > y > x).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

from . import kernels
from .errors import BudgetExceeded, NonDivisible, QPole, term_budget

MAXN = 8
FIELD_BITS = 16
FIELD_MASK = (1 << FIELD_BITS) - 1
KIND_ORDER = ("x", "y", "z", "beta", "q")
NSLOTS = 3 * MAXN + 2
BETA_SLOT = 3 * MAXN
Q_SLOT = 3 * MAXN + 1


@dataclass(frozen=True, order=True)
class VarId:
    kind: str
    index: int = 0

    def __post_init__(self):
        if self.kind not in KIND_ORDER:
            raise ValueError(f"unknown variable kind {self.kind!r}")
        if self.kind in ("beta", "q"):
            object.__setattr__(self, "index", 0)
        elif not 1 <= self.index <= MAXN:
            raise BudgetExceeded(f"variable index {self.index} outside 1..{MAXN}")

    @property
    def slot(self) -> int:
        return _slot(self.kind, self.index)

    @property
    def name(self) -> str:
        return self.kind if self.kind in ("beta", "q") else f"{self.kind}{self.index}"

    def __str__(self):
        return self.name


def _slot(kind, index):
    if kind == "beta":
        return BETA_SLOT
    if kind == "q":
        return Q_SLOT
    return KIND_ORDER.index(kind) * MAXN + index - 1


def slot_var(slot: int) -> VarId:
    if slot == BETA_SLOT:
        return VarId("beta")
    if slot == Q_SLOT:
        return VarId("q")
    return VarId(KIND_ORDER[slot // MAXN], slot % MAXN + 1)


def X(i):
    return VarId("x", i)


def Y(i):
    return VarId("y", i)


def Z(i):
    return VarId("z", i)


BETA = VarId("beta")
Q = VarId("q")


def parse_var(name: str) -> VarId:
    if name in ("beta", "q"):
        return VarId(name)
    return VarId(name[0], int(name[1:]))


def pack(exps: Mapping[int, int]) -> int:
    key = 0
    for s, e in exps.items():
        if e < 0 or e > FIELD_MASK:
            raise BudgetExceeded(f"exponent {e} out of range")
        key += e << (FIELD_BITS * s)
    return key


def unpack(key: int) -> dict:
    out = {}
    s = 0
    while key:
        e = key & FIELD_MASK
        if e:
            out[s] = e
        key >>= FIELD_BITS
        s += 1
    return out


def field(key: int, slot: int) -> int:
    return (key >> (FIELD_BITS * slot)) & FIELD_MASK


def _divides(m: int, k: int) -> bool:
    for s, e in unpack(m).items():
        if field(k, s) < e:
            return False
    return True


def _qdiv(c, d):
    if d == 1:
        return c
    if d == -1:
        return -c
    r = Fraction(c) / d
    return r.numerator if r.denominator == 1 else r


Coeff = Union[int, Fraction]


class Poly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[int, Coeff] | None = None):
        self._t = {k: c for k, c in terms.items() if c} if terms else {}

    @classmethod
    def _raw(cls, d):
        p = cls.__new__(cls)
        p._t = d
        return p

    @classmethod
    def const(cls, c) -> "Poly":
        return cls._raw({0: c} if c else {})

    @classmethod
    def var(cls, v: VarId) -> "Poly":
        return cls._raw({1 << (FIELD_BITS * v.slot): 1})

    @classmethod
    def monomial(cls, exps: Mapping[VarId, int], coeff=1) -> "Poly":
        return cls._raw({pack({v.slot: e for v, e in exps.items()}): coeff} if coeff else {})

    @classmethod
    def coerce(cls, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return cls.const(other)
        raise TypeError(f"cannot coerce {type(other).__name__} to Poly")

    # -- inspection
    def items(self):
        return self._t.items()

    def terms(self) -> Iterable[tuple[dict, Coeff]]:
        for k, c in self._t.items():
            yield {slot_var(s): e for s, e in unpack(k).items()}, c

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_term(self):
        return self._t.get(0, 0)

    def degree_in(self, v: VarId) -> int:
        s = v.slot
        return max((field(k, s) for k in self._t), default=0)

    def min_degree_in(self, v: VarId) -> int:
        s = v.slot
        return min((field(k, s) for k in self._t), default=0)

    def variables(self) -> set:
        out = set()
        for k in self._t:
            out.update(unpack(k))
        return {slot_var(s) for s in out}

    # -- arithmetic
    def __add__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        try:
            o = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        if len(o._t) > len(self._t):
            a, b = o._t, self._t
        else:
            a, b = self._t, o._t
        d = dict(a)
        for k, c in b.items():
            v = d.get(k, 0) + c
            if v:
                d[k] = v
            else:
                d.pop(k, None)
        return Poly._raw(d)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        try:
            return self + (-Poly.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly()
            return Poly._raw({k: c * other for k, c in self._t.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        if not self._t or not other._t:
            return Poly()
        if len(other._t) == 1 and len(self._t) > 1:
            (k2, c2), = other._t.items()
            return Poly._raw({k + k2: c * c2 for k, c in self._t.items()})
        return Poly._raw(kernels.mul_terms(self._t, other._t, term_budget()))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a Poly")
        result = Poly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly._raw({k: _qdiv(c, other) for k, c in self._t.items()})
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self._t == ({0: other} if other else {})
        if isinstance(other, RatFunc):
            return other == self
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    # -- variable maps
    def swap(self, v1: VarId, v2: VarId) -> "Poly":
        return self.rename({v1: v2, v2: v1})

    def rename(self, mapping: Mapping[VarId, VarId]) -> "Poly":
        """Apply a variable-to-variable substitution (any map, not only bijections)."""
        smap = [(a.slot, b.slot) for a, b in mapping.items() if a != b]
        if not smap:
            return self
        shifts = [(FIELD_BITS * a, FIELD_BITS * b) for a, b in smap]
        d = {}
        for k, c in self._t.items():
            nk = k
            for sa, sb in shifts:
                e = (k >> sa) & FIELD_MASK
                if e:
                    nk += (e << sb) - (e << sa)
            d[nk] = d.get(nk, 0) + c
        return Poly(d)

    def set_zero(self, v: VarId) -> "Poly":
        s = FIELD_BITS * v.slot
        return Poly._raw({k: c for k, c in self._t.items() if not (k >> s) & FIELD_MASK})

    def evaluate(self, values: Mapping[VarId, Coeff]):
        """Numeric evaluation; variables missing from values must not occur."""
        vals = {v.slot: Fraction(x) for v, x in values.items()}
        total = Fraction(0)
        for k, c in self._t.items():
            t = Fraction(c)
            for s, e in unpack(k).items():
                if s not in vals:
                    raise KeyError(slot_var(s).name)
                t *= vals[s] ** e
            total += t
        return total

    # -- output
    def sorted_items(self):
        def order(kc):
            ex = [field(kc[0], s) for s in range(NSLOTS)]
            return (sum(ex), [-e for e in ex])

        return sorted(self._t.items(), key=order)

    def to_text(self) -> str:
        return _format_terms(self.sorted_items(), latex=False)

    def to_latex(self) -> str:
        return _format_terms(self.sorted_items(), latex=True)

    def to_json(self) -> dict:
        return {
            "terms": [
                {"coeff": str(Fraction(c)), "exps": {slot_var(s).name: e for s, e in sorted(unpack(k).items())}}
                for k, c in self.sorted_items()
            ]
        }

    @classmethod
    def from_json(cls, obj) -> "Poly":
        d = {}
        for t in obj["terms"]:
            c = Fraction(t["coeff"])
            c = c.numerator if c.denominator == 1 else c
            k = pack({parse_var(n).slot: e for n, e in t["exps"].items()})
            d[k] = d.get(k, 0) + c
        return cls(d)

    def __repr__(self):
        return f"Poly({self.to_text()})"

    __str__ = to_text


def _format_coeff(c, latex):
    f = Fraction(c)
    if f.denominator == 1:
        return str(f.numerator)
    if latex:
        sign = "-" if f < 0 else ""
        return f"{sign}\\frac{{{abs(f.numerator)}}}{{{f.denominator}}}"
    return f"({f})"


def _format_mono(k, latex):
    parts = []
    for s, e in sorted(unpack(k).items(), key=lambda se: (se[0] < BETA_SLOT, se[0])):
        v = slot_var(s)
        if latex:
            base = "\\beta" if v.kind == "beta" else ("q" if v.kind == "q" else f"{v.kind}_{{{v.index}}}")
            parts.append(base if e == 1 else f"{base}^{{{e}}}")
        else:
            parts.append(v.name if e == 1 else f"{v.name}^{e}")
    return parts


def _format_terms(items, latex):
    if not items:
        return "0"
    out = []
    for k, c in items:
        mono = _format_mono(k, latex)
        neg = c < 0
        a = -c if neg else c
        if mono:
            body = (" " if latex else "*").join(mono)
            if a != 1:
                body = _format_coeff(a, latex) + (" " if latex else "*") + body
        else:
            body = _format_coeff(a, latex)
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


ZERO = Poly()
ONE = Poly.const(1)


def P(v) -> Poly:
    """Shorthand: VarId or number to Poly."""
    if isinstance(v, VarId):
        return Poly.var(v)
    return Poly.coerce(v)


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def oplus(a, b):
    """Formal group law a + b + beta*a*b (Poly or RatFunc arguments)."""
    return a + b + P(BETA) * a * b


@lru_cache(maxsize=None)
def shift_poly(slot: int, e: int = 1) -> Poly:
    """(1 + beta*v)^e for the variable at slot."""
    return (ONE + Poly._raw({(1 << (FIELD_BITS * BETA_SLOT)) + (1 << (FIELD_BITS * slot)): 1})) ** e


# ---------------------------------------------------------------- division


def exact_div(num: Poly, den: Poly) -> Poly:
    """Quotient num/den for a monomial or binomial den; NonDivisible otherwise."""
    d = den._t
    if not d:
        raise ZeroDivisionError("division by zero polynomial")
    if len(d) == 1:
        (m, c), = d.items()
        out = {}
        for k, a in num._t.items():
            if not _divides(m, k):
                raise NonDivisible(f"{num} is not divisible by {den}")
            out[k - m] = _qdiv(a, c)
        return Poly._raw(out)
    if len(d) != 2:
        raise ValueError("exact_div supports monomial or binomial divisors only")
    (k1, c1), (k2, c2) = sorted(d.items(), reverse=True)
    return Poly._raw(_div_binomial(num._t, k1, c1, k2, c2))


def _div_binomial(terms, lead, lc, tail, tc):
    lead_exps = unpack(lead)
    rem = dict(terms)
    heap = [-k for k in rem]
    heapq.heapify(heap)
    quot = {}
    while heap:
        k = -heapq.heappop(heap)
        c = rem.pop(k, 0)
        if not c:
            continue
        for s, e in lead_exps.items():
            if field(k, s) < e:
                raise NonDivisible("nonzero remainder in binomial division")
        qk = k - lead
        qc = _qdiv(c, lc)
        quot[qk] = qc
        nk = qk + tail
        if nk in rem:
            rem[nk] -= qc * tc
        else:
            rem[nk] = -qc * tc
            heapq.heappush(heap, -nk)
    return quot


def _try_div_shift(p: Poly, slot: int):
    if not p._t:
        return p
    lead = (1 << (FIELD_BITS * BETA_SLOT)) + (1 << (FIELD_BITS * slot))
    try:
        return Poly._raw(_div_binomial(p._t, lead, 1, 0, 1))
    except NonDivisible:
        return None


# ---------------------------------------------------------- rational functions


@dataclass(frozen=True)
class StructuredDenom:
    """beta^beta * q^q * prod (1 + beta*v)^e, with shifts as sorted (slot, e) pairs."""

    beta: int = 0
    q: int = 0
    shifts: tuple = ()

    @classmethod
    def make(cls, beta=0, q=0, shifts: Mapping | None = None):
        items = []
        for v, e in (shifts or {}).items():
            s = v.slot if isinstance(v, VarId) else v
            if isinstance(v, VarId) and v.kind not in ("x", "y", "z"):
                raise ValueError("shift factors only for x, y, z variables")
            if e:
                items.append((s, e))
        return cls(beta, q, tuple(sorted(items)))

    def is_one(self) -> bool:
        return not (self.beta or self.q or self.shifts)

    def shift_map(self) -> dict:
        return dict(self.shifts)

    def lcm(self, other: "StructuredDenom") -> "StructuredDenom":
        m = self.shift_map()
        for s, e in other.shifts:
            m[s] = max(m.get(s, 0), e)
        return StructuredDenom(max(self.beta, other.beta), max(self.q, other.q), tuple(sorted(m.items())))

    def __mul__(self, other: "StructuredDenom") -> "StructuredDenom":
        m = self.shift_map()
        for s, e in other.shifts:
            m[s] = m.get(s, 0) + e
        return StructuredDenom(self.beta + other.beta, self.q + other.q, tuple(sorted(m.items())))

    def __pow__(self, e: int) -> "StructuredDenom":
        return StructuredDenom(self.beta * e, self.q * e, tuple((s, x * e) for s, x in self.shifts))

    def cofactor(self, big: "StructuredDenom") -> Poly:
        """big / self as a Poly (self must divide big)."""
        bm = big.shift_map()
        sm = self.shift_map()
        if big.beta < self.beta or big.q < self.q or any(bm.get(s, 0) < e for s, e in sm.items()):
            raise ValueError("denominator does not divide")
        p = Poly.monomial({BETA: big.beta - self.beta, Q: big.q - self.q})
        for s, e in bm.items():
            d = e - sm.get(s, 0)
            if d:
                p = p * shift_poly(s, d)
        return p

    def to_poly(self) -> Poly:
        return StructuredDenom().cofactor(self)

    def to_json(self) -> dict:
        return {"beta": self.beta, "q": self.q, "shifts": {slot_var(s).name: e for s, e in self.shifts}}

    @classmethod
    def from_json(cls, obj) -> "StructuredDenom":
        return cls.make(obj.get("beta", 0), obj.get("q", 0), {parse_var(n): e for n, e in obj.get("shifts", {}).items()})

    def to_text(self) -> str:
        parts = []
        if self.beta:
            parts.append("beta" if self.beta == 1 else f"beta^{self.beta}")
        if self.q:
            parts.append("q" if self.q == 1 else f"q^{self.q}")
        for s, e in self.shifts:
            f = f"(1 + beta*{slot_var(s).name})"
            parts.append(f if e == 1 else f"{f}^{e}")
        return "*".join(parts) or "1"


ONE_DEN = StructuredDenom()


class RatFunc:
    """num / den with a structured denominator.  Equality is by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den: StructuredDenom = ONE_DEN, cancel: bool = True):
        num = Poly.coerce(num)
        if cancel and not den.is_one():
            num, den = _cancel(num, den)
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        return cls(Poly.coerce(x))

    def is_poly(self) -> bool:
        return self.den.is_one()

    def to_poly(self) -> Poly:
        if not self.den.is_one():
            raise NonDivisible(f"denominator {self.den.to_text()} did not cancel")
        return self.num

    def _aligned(self, other: "RatFunc"):
        L = self.den.lcm(other.den)
        a = self.num if self.den == L else self.num * self.den.cofactor(L)
        b = other.num if other.den == L else other.num * other.den.cofactor(L)
        return a, b, L

    def __add__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, L = self._aligned(other)
        return RatFunc(a + b, L)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, cancel=False)

    def __sub__(self, other):
        try:
            return self + (-RatFunc.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return RatFunc(self.num**e, self.den**e)

    def divide(self, den: StructuredDenom) -> "RatFunc":
        return RatFunc(self.num, self.den * den)

    def __eq__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, _ = self._aligned(other)
        return a == b

    __hash__ = None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def rename(self, mapping) -> "RatFunc":
        d = self.den.shift_map()
        nd = {}
        for s, e in d.items():
            t = mapping.get(slot_var(s), slot_var(s)).slot
            nd[t] = nd.get(t, 0) + e
        return RatFunc(self.num.rename(mapping), StructuredDenom(self.den.beta, self.den.q, tuple(sorted(nd.items()))))

    def to_text(self) -> str:
        if self.den.is_one():
            return self.num.to_text()
        return f"({self.num.to_text()}) / ({self.den.to_text()})"

    def to_latex(self) -> str:
        if self.den.is_one():
            return self.num.to_latex()
        return f"\\frac{{{self.num.to_latex()}}}{{{self.den.to_text()}}}"

    def to_json(self) -> dict:
        return {"terms": self.num.to_json()["terms"], "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj) -> "RatFunc":
        return cls(Poly.from_json(obj), StructuredDenom.from_json(obj.get("den", {})))

    def __repr__(self):
        return f"RatFunc({self.to_text()})"

    __str__ = to_text


def _cancel(num: Poly, den: StructuredDenom):
    if num.is_zero():
        return num, ONE_DEN
    b = min(den.beta, num.min_degree_in(BETA))
    qq = min(den.q, num.min_degree_in(Q))
    if b or qq:
        num = exact_div(num, Poly.monomial({BETA: b, Q: qq}))
    shifts = []
    for s, e in den.shifts:
        while e:
            r = _try_div_shift(num, s)
            if r is None:
                break
            num = r
            e -= 1
        if e:
            shifts.append((s, e))
    return num, StructuredDenom(den.beta - b, den.q - qq, tuple(shifts))


def as_ratfunc(x) -> RatFunc:
    return RatFunc.coerce(x)


def ratfunc_add(a, b) -> RatFunc:
    return RatFunc.coerce(a) + RatFunc.coerce(b)


def ratfunc_mul(a, b) -> RatFunc:
    return RatFunc.coerce(a) * RatFunc.coerce(b)


def ominus(v: VarId) -> RatFunc:
    """The formal-group inverse -v/(1 + beta*v)."""
    if v.kind not in ("x", "y", "z"):
        raise ValueError("ominus is defined for x, y, z variables")
    return RatFunc(-Poly.var(v), StructuredDenom(0, 0, ((v.slot, 1),)), cancel=False)


def substitute(f, bindings: Mapping[VarId, object]) -> RatFunc:
    """Homomorphic image of f (Poly or RatFunc) under v -> bindings[v]."""
    if isinstance(f, RatFunc):
        return substitute(f.num, bindings) * _substitute_den(f.den, bindings)
    f = Poly.coerce(f)
    binds = [(v.slot, RatFunc.coerce(b)) for v, b in bindings.items()]
    if not binds:
        return RatFunc(f)
    slots = [s for s, _ in binds]
    shifts = [FIELD_BITS * s for s in slots]
    maxe = [0] * len(slots)
    groups: dict = {}
    for k, c in f._t.items():
        ex = tuple((k >> sh) & FIELD_MASK for sh in shifts)
        rest = k - sum(e << sh for e, sh in zip(ex, shifts))
        g = groups.setdefault(ex, {})
        g[rest] = g.get(rest, 0) + c
        for i, e in enumerate(ex):
            if e > maxe[i]:
                maxe[i] = e
    den = ONE_DEN
    for (s, b), E in zip(binds, maxe):
        den = den * (b.den**E)
    num_pows = [_powers(b.num, E) for (_, b), E in zip(binds, maxe)]
    den_pows = [_powers(b.den.to_poly(), E) for (_, b), E in zip(binds, maxe)]
    total = Poly()
    for ex, g in sorted(groups.items()):
        term = Poly(g)
        for i, e in enumerate(ex):
            term = term * num_pows[i][e] * den_pows[i][maxe[i] - e]
        total = total + term
    return RatFunc(total, den)


def _powers(p: Poly, E: int):
    out = [ONE]
    for _ in range(E):
        out.append(out[-1] * p)
    return out


def _substitute_den(den: StructuredDenom, bindings) -> RatFunc:
    """1/den after substitution; bound shift variables must map to single variables."""
    for v in (BETA, Q):
        if v in bindings and (den.beta if v is BETA or v == BETA else den.q):
            raise ValueError(f"cannot substitute {v} inside a denominator")
    shifts = {}
    for s, e in den.shifts:
        v = slot_var(s)
        b = bindings.get(v)
        if b is None:
            t = s
        else:
            bp = RatFunc.coerce(b)
            vs = bp.num.variables() if bp.den.is_one() else set()
            if len(bp.num) != 1 or len(vs) != 1 or bp.num != Poly.var(next(iter(vs))):
                raise ValueError("substitution into a denominator must map a variable to a variable")
            t = next(iter(vs)).slot
        shifts[t] = shifts.get(t, 0) + e
    return RatFunc(ONE, StructuredDenom(den.beta, den.q, tuple(sorted(shifts.items()))), cancel=False)


def specialize_q_zero(r):
    """Set q = 0.  Returns a Poly when the denominator cancels, else a RatFunc.

    Raises QPole if q stays in the denominator after cancellation.
    """
    r = RatFunc.coerce(r)
    if r.den.q:
        r = RatFunc(r.num, r.den)
        if r.den.q:
            raise QPole(f"q^{r.den.q} remains in the denominator")
    out = RatFunc(r.num.set_zero(Q), r.den)
    return out.num if out.den.is_one() else out
