import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grothlat import _pykernels, kernels
from grothlat.errors import BudgetExceeded
from grothlat.lattice import build_system_G, build_cauchy_system
from grothlat.symgroup import Perm, all_perms

ck = pytest.importorskip("grothlat._ckernels")

# packed monomials over a few 16-bit slots, kept small so sums never overflow a field
monos = st.builds(lambda a, b, c: a + (b << 16) + (c << 32), st.integers(0, 5), st.integers(0, 5), st.integers(0, 5))
term_dicts = st.dictionaries(monos, st.integers(-50, 50).filter(bool), max_size=12)


@settings(max_examples=100)
@given(term_dicts, term_dicts)
def test_mul_terms_agree(a, b):
    assert ck.mul_terms(a, b, 10**6) == _pykernels.mul_terms(a, b, 10**6)


@settings(max_examples=100)
@given(term_dicts, st.sampled_from([(0, 16), (16, 32), (0, 32), (32, 0)]))
def test_dd_terms_agree(a, slots):
    assert ck.dd_terms(a, *slots) == _pykernels.dd_terms(a, *slots)


def test_mul_terms_budget():
    a = {i: 1 for i in range(10)}
    b = {i << 16: 1 for i in range(10)}
    for impl in (ck, _pykernels):
        with pytest.raises(BudgetExceeded):
            impl.mul_terms(a, b, 50)


def test_big_coefficients():
    a = {1: 10**30, 2: -(10**30)}
    b = {1: 3**50}
    assert ck.mul_terms(a, b, 100) == _pykernels.mul_terms(a, b, 100)


def _grid_args(sys):
    return (sys.rows, sys.cols, sys.top, sys.left, sys.right, sys.bottom, sys.tables())


@pytest.mark.parametrize("q0", [False, True])
def test_enumerate_grid_agrees(q0):
    systems = [build_system_G(v, w, q_zero=q0) for v in all_perms(3) for w in all_perms(3)]
    systems.append(build_cauchy_system(Perm.identity(3), Perm.longest(3)))
    for sys in systems:
        args = _grid_args(sys)
        assert ck.enumerate_grid(*args, 10**6) == _pykernels.enumerate_grid(*args, 10**6)


def test_enumerate_grid_budget():
    args = _grid_args(build_system_G(Perm.identity(3), Perm.longest(3)))
    for impl in (ck, _pykernels):
        with pytest.raises(BudgetExceeded):
            impl.enumerate_grid(*args, 0)


def test_backend_selection():
    assert kernels.BACKEND == "cython"
    env = dict(os.environ, GROTHLAT_PURE="1")
    out = subprocess.run([sys.executable, "-c", "from grothlat import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_pure_backend_gives_same_polynomial():
    code = ("from grothlat import G_q, Perm; import json; "
            "print(json.dumps(G_q(Perm.parse('231')).to_json(), sort_keys=True))")
    res = []
    for pure in ("0", "1"):
        env = dict(os.environ, GROTHLAT_PURE=pure)
        res.append(subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                                  check=True).stdout)
    assert res[0] == res[1]
