"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each kernel is timed on the same inputs under both backends and the results
are checked for equality.  The last section times a full G_q computation in
a subprocess per backend, since the backend is chosen at import.
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import timeit

from grothlat import _pykernels, lattice
from grothlat.algebra import BETA, FIELD_BITS, ONE, Q, P, X, Y, oplus
from grothlat.symgroup import Perm

try:
    from grothlat import _ckernels
except ImportError:
    _ckernels = None

LIMIT = 10**7


def _base_poly(n: int):
    f = ONE
    for i in range(1, n + 1):
        for j in range(1, n + 1 - i):
            f = f * oplus(P(X(i)), P(Y(j)))
    return f * (ONE - P(Q) ** 2) + P(BETA)


def _cases():
    f, g = _base_poly(3), _base_poly(4)
    sys_ = lattice.build_system_G(Perm.identity(6), Perm.identity(6), q_zero=False)
    grid = (sys_.rows, sys_.cols, sys_.top, sys_.left, sys_.right, sys_.bottom, sys_.tables(), LIMIT)
    x1, x2 = X(1), X(2)
    return [
        (f"mul_terms ({len(f._t)} x {len(g._t)} terms)", "mul_terms", (f._t, g._t, LIMIT)),
        (f"dd_terms ({len(g._t)} terms)", "dd_terms", (g._t, FIELD_BITS * x1.slot, FIELD_BITS * x2.slot)),
        ("enumerate_grid (n=6, 51256 states)", "enumerate_grid", grid),
    ]


def _time(fn, args, repeat: int) -> float:
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def _gq_seconds(pure: bool, perm: str) -> float:
    env = dict(os.environ, GROTHLAT_PURE="1" if pure else "0")
    code = ("import time; from grothlat import G_q; from grothlat.symgroup import Perm; "
            f"t = time.perf_counter(); G_q(Perm.parse('{perm}'), 'lattice'); print(time.perf_counter() - t)")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--perm", default="4321", help="permutation for the end-to-end timing")
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels are not built; only the fallback can run")
        return 1
    print(f"{'kernel':40} {'cython':>10} {'python':>10} {'speedup':>8}")
    for label, name, inputs in _cases():
        fast, slow = getattr(_ckernels, name), getattr(_pykernels, name)
        if fast(*inputs) != slow(*inputs):
            print(f"{label}: backends disagree")
            return 1
        tc, tp = _time(fast, inputs, args.repeat), _time(slow, inputs, args.repeat)
        print(f"{label:40} {tc:10.4f} {tp:10.4f} {tp / tc:7.1f}x")
    tc, tp = _gq_seconds(False, args.perm), _gq_seconds(True, args.perm)
    print(f"{'G_q(' + args.perm + ') lattice route':40} {tc:10.4f} {tp:10.4f} {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
