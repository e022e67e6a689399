# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the kernels in _pykernels."""

from libc.stdlib cimport malloc, free

from .errors import BudgetExceeded


def mul_terms(dict a, dict b, Py_ssize_t limit):
    cdef dict out = {}
    cdef list items_b
    cdef object ka, ca, kb, cb, k, old
    if len(a) > len(b):
        a, b = b, a
    items_b = list(b.items())
    for ka, ca in a.items():
        for kb, cb in items_b:
            k = ka + kb
            old = out.get(k)
            if old is None:
                out[k] = ca * cb
            else:
                out[k] = old + ca * cb
    out = {k: c for k, c in out.items() if c}
    if len(out) > limit:
        raise BudgetExceeded(f"product has {len(out)} terms")
    return out


def dd_terms(dict a, int si, int sj):
    cdef dict out = {}
    cdef object k, c, base, key, step, old
    cdef long p, r, lo, d, t
    cdef object one = 1
    cdef object ui = one << si
    cdef object uj = one << sj
    step = ui - uj
    for k, c in a.items():
        p = (k >> si) & 0xFFFF
        r = (k >> sj) & 0xFFFF
        if p == r:
            continue
        if p > r:
            lo = r
            d = p - r
        else:
            lo = p
            d = r - p
            c = -c
        base = k - p * ui - r * uj + lo * (ui + uj)
        key = base + (d - 1) * uj
        for t in range(d):
            old = out.get(key)
            out[key] = c if old is None else old + c
            key = key + step
    return {k: c for k, c in out.items() if c}


cdef struct Grid:
    int rows
    int cols
    int nlab
    int *top
    int *left
    int *right
    int *bottom
    int *off      # [rows][nlab][nlab][2] start/end into comp
    int *comp_e
    int *comp_s
    int *vert
    int *choice


cdef int _rec(Grid *g, int r, int c, int w, list out, list labels, Py_ssize_t limit) except -1:
    cdef int n, idx, lo, hi, t, e, s, k, last
    if c == g.cols:
        if w != g.right[r]:
            return 0
        if r == g.rows - 1:
            out.append(tuple([labels[g.choice[t]] for t in range(2 * g.rows * g.cols)]))
            if len(out) > limit:
                raise BudgetExceeded(f"more than {limit} states")
            return 0
        return _rec(g, r + 1, 0, g.left[r + 1], out, labels, limit)
    n = g.vert[c]
    last = r == g.rows - 1
    k = 2 * (r * g.cols + c)
    idx = ((r * g.nlab + n) * g.nlab + w) * 2
    lo = g.off[idx]
    hi = g.off[idx + 1]
    for t in range(lo, hi):
        e = g.comp_e[t]
        s = g.comp_s[t]
        if last and s != g.bottom[c]:
            continue
        g.vert[c] = s
        g.choice[k] = e
        g.choice[k + 1] = s
        _rec(g, r, c + 1, e, out, labels, limit)
    g.vert[c] = n
    return 0


def enumerate_grid(int rows, int cols, top, left, right, bottom, tables, Py_ssize_t limit):
    cdef Grid g
    cdef list out = []
    cdef int i, r, n, w, pos
    if rows == 0 or cols == 0:
        return out
    labset = set(top) | set(left) | set(right) | set(bottom)
    for tab in tables:
        for (n_, w_), comps in tab.items():
            labset.add(n_)
            labset.add(w_)
            for e_, s_ in comps:
                labset.add(e_)
                labset.add(s_)
    cdef list labels = sorted(labset)
    index = {lab: i for i, lab in enumerate(labels)}
    cdef int nlab = len(labels)
    ncomp = sum(len(v) for tab in tables for v in tab.values())
    g.rows = rows
    g.cols = cols
    g.nlab = nlab
    g.top = <int *> malloc(cols * sizeof(int))
    g.bottom = <int *> malloc(cols * sizeof(int))
    g.left = <int *> malloc(rows * sizeof(int))
    g.right = <int *> malloc(rows * sizeof(int))
    g.vert = <int *> malloc(cols * sizeof(int))
    g.choice = <int *> malloc(2 * rows * cols * sizeof(int))
    g.off = <int *> malloc(rows * nlab * nlab * 2 * sizeof(int))
    g.comp_e = <int *> malloc((ncomp + 1) * sizeof(int))
    g.comp_s = <int *> malloc((ncomp + 1) * sizeof(int))
    try:
        for i in range(cols):
            g.top[i] = index[top[i]]
            g.bottom[i] = index[bottom[i]]
            g.vert[i] = g.top[i]
        for i in range(rows):
            g.left[i] = index[left[i]]
            g.right[i] = index[right[i]]
        for i in range(2 * rows * cols):
            g.choice[i] = 0
        pos = 0
        for r in range(rows):
            tab = tables[r]
            for n in range(nlab):
                for w in range(nlab):
                    i = ((r * nlab + n) * nlab + w) * 2
                    g.off[i] = pos
                    for e_, s_ in tab.get((labels[n], labels[w]), ()):
                        g.comp_e[pos] = index[e_]
                        g.comp_s[pos] = index[s_]
                        pos += 1
                    g.off[i + 1] = pos
        _rec(&g, 0, 0, g.left[0], out, labels, limit)
    finally:
        free(g.top); free(g.bottom); free(g.left); free(g.right)
        free(g.vert); free(g.choice); free(g.off); free(g.comp_e); free(g.comp_s)
    return out
