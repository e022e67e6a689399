"""Pure-Python versions of the hot loops.

Monomials are packed ints (see algebra.FIELD_BITS), so multiplying two
monomials is adding their keys.  The compiled module _ckernels exposes the
same three functions with the same semantics.
"""

from .errors import BudgetExceeded

FIELD_MASK = 0xFFFF


def mul_terms(a, b, limit):
    if len(a) > len(b):
        a, b = b, a
    out = {}
    get = out.get
    items_b = list(b.items())
    for ka, ca in a.items():
        for kb, cb in items_b:
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    out = {k: c for k, c in out.items() if c}
    if len(out) > limit:
        raise BudgetExceeded(f"product has {len(out)} terms")
    return out


def dd_terms(a, si, sj):
    """Divided difference in the variables at bit offsets si, sj.

    Uses (u^p v^r - u^r v^p)/(u - v) = (uv)^r * sum_t u^t v^(p-r-1-t) for p > r.
    """
    out = {}
    get = out.get
    ui = 1 << si
    uj = 1 << sj
    for k, c in a.items():
        p = (k >> si) & FIELD_MASK
        r = (k >> sj) & FIELD_MASK
        if p == r:
            continue
        if p > r:
            lo, d = r, p - r
        else:
            lo, d = p, r - p
            c = -c
        base = k - p * ui - r * uj + lo * (ui + uj)
        key = base + (d - 1) * uj
        for _ in range(d):
            out[key] = get(key, 0) + c
            key += ui - uj
    return {k: c for k, c in out.items() if c}


def enumerate_grid(rows, cols, top, left, right, bottom, tables, limit):
    """All admissible fillings of a rows x cols grid.

    tables[r] maps (N, W) to the allowed (E, S) pairs for row r.  Each result
    is a flat tuple holding (E, S) for every vertex in row-major order.
    """
    out = []
    vert = list(top)
    choice = [0] * (2 * rows * cols)

    def rec(r, c, w):
        if c == cols:
            if w != right[r]:
                return
            if r == rows - 1:
                out.append(tuple(choice))
                if len(out) > limit:
                    raise BudgetExceeded(f"more than {limit} states")
                return
            rec(r + 1, 0, left[r + 1])
            return
        n = vert[c]
        last = r == rows - 1
        k = 2 * (r * cols + c)
        for e, s in tables[r].get((n, w), ()):
            if last and s != bottom[c]:
                continue
            vert[c] = s
            choice[k] = e
            choice[k + 1] = s
            rec(r, c + 1, e)
        vert[c] = n

    if rows and cols:
        rec(0, 0, left[0])
    return out
