import numpy as np
import pytest

from bkgsets import _pykernels, kernels
from bkgsets.finite_field import field_context


def test_default_backend_is_available():
    assert kernels.DEFAULT_BACKEND in kernels.available_backends()
    assert kernels.get() is kernels.get(kernels.DEFAULT_BACKEND)
    with pytest.raises(ValueError):
        kernels.get("fortran")


@pytest.mark.parametrize("p,k", [(2, 2), (3, 3), (5, 4), (13, 2), (2, 10), (31, 3)])
def test_sweep_agrees(backend, p, k):
    ctx = field_context(p, k)
    got = kernels.get(backend).bc_sweep(p, k, ctx.f, ctx.theta)
    assert list(got) == _pykernels.bc_sweep(p, k, ctx.f, ctx.theta)
    assert len(got) == p


@pytest.mark.parametrize("k,g,n", [(2, 1, 24), (2, 3, 16), (3, 1, 18), (4, 2, 12)])
def test_branch_and_bound_agrees(backend, k, g, n):
    kern = kernels.get(backend)
    inc = kern.greedy(n, k, g)
    a = kern.branch_and_bound(n, k, g, inc, float("inf"), (1,))
    b = _pykernels.branch_and_bound(n, k, g, inc, float("inf"), (1,))
    assert list(a[0]) == list(b[0]) and a[2] and b[2]


def test_counts_add_remove_roundtrip():
    c = _pykernels._Counts(20, 3)
    start = c.rows.copy()
    for x in (1, 5, 5, 17):
        c.add(x)
    for x in (17, 5, 5, 1):
        c.remove(x)
    assert np.array_equal(c.rows, start)


def test_suffix_bounds_are_valid():
    from math import comb

    b = _pykernels.suffix_bounds(40, 3, 2)
    for m in range(1, 41):
        s = b[m]
        assert comb(s + 2, 3) <= 2 * (3 * (m - 1) + 1)
        if s < m:
            assert comb(s + 3, 3) > 2 * (3 * (m - 1) + 1)
