from __future__ import annotations

import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from drinfeld import GF, compiled_available
from drinfeld import _pykernel
from drinfeld.backend import select

needs_compiled = pytest.mark.skipif(not compiled_available(), reason="compiled kernel not built")


def _ctx(mod, F):
    return mod.FieldContext(F.p, F.q, F._add, F._mul, F._neg, F._inv)


@needs_compiled
@pytest.mark.parametrize("q", [2, 3, 4, 7, 8, 9, 31, 32749])
@given(data=st.data())
def test_kernels_identical(q, data):
    from drinfeld import _kernel

    F = GF(q, "python")
    elems = st.integers(0, q - 1)
    a = tuple(data.draw(st.lists(elems, max_size=40)))
    b = tuple(data.draw(st.lists(elems, max_size=25)))
    c = data.draw(elems)
    pc, cc = _ctx(_pykernel, F), _ctx(_kernel, F)

    def norm(t):
        t = list(t)
        while t and t[-1] == 0:
            t.pop()
        return tuple(t)

    a, b = norm(a), norm(b)
    for name in ("poly_add", "poly_sub", "poly_mul"):
        assert getattr(_pykernel, name)(pc, a, b) == getattr(_kernel, name)(cc, a, b)
    assert _pykernel.poly_neg(pc, a) == _kernel.poly_neg(cc, a)
    assert _pykernel.poly_scale(pc, a, c) == _kernel.poly_scale(cc, a, c)
    if b:
        assert _pykernel.poly_divmod(pc, a, b) == _kernel.poly_divmod(cc, a, b)
    if a or b:
        assert _pykernel.poly_gcd(pc, a, b) == _kernel.poly_gcd(cc, a, b)


@needs_compiled
def test_selection_limits():
    from drinfeld import _kernel

    assert select(3, 3, prefer_compiled=True) is _kernel
    assert select(2**15 + 3, 2**15 + 3, prefer_compiled=True) is _pykernel
    assert select(2, 2048, prefer_compiled=True) is _pykernel
    assert select(3, 3, prefer_compiled=False) is _pykernel


def test_env_forces_python():
    code = "from drinfeld import GF, default_backend_name; print(default_backend_name(), GF(3).backend_name)"
    env = dict(os.environ, DRINFELD_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env, check=True).stdout
    assert out.split() == ["python", "python"]


def test_large_degree_agreement():
    # degree ~600 products and gcds on both kernels
    names = ["python"] + (["compiled"] if compiled_available() else [])
    results = []
    for name in names:
        F = GF(5, name)
        T = F.T
        a = (T**3 + 2 * T + 1) ** 200
        b = (T**3 + 2 * T + 1) ** 120 * (T**2 + 2)
        results.append((a.gcd(b).coeffs, (a * b).coeffs[:50], divmod(a, b)[1].coeffs))
    assert all(r == results[0] for r in results)


@pytest.mark.parametrize("q", [2, 3, 4, 8, 9, 25, 32749])
@given(data=st.data())
def test_kronecker_matches_schoolbook(q, data):
    F = GF(q, "python")
    ctx = _ctx(_pykernel, F)
    elems = st.integers(0, q - 1)
    a = tuple(data.draw(st.lists(elems, min_size=1, max_size=70)))
    b = tuple(data.draw(st.lists(elems, min_size=1, max_size=70)))
    a = a[:-1] + (a[-1] or 1,)
    b = b[:-1] + (b[-1] or 1,)
    school = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            school[i + j] = F.add(school[i + j], F.mul(x, y))
    assert _pykernel._kronecker_mul(ctx, a, b) == tuple(school)
