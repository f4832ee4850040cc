"""The compiled and pure-Python kernels must agree exactly."""

import random

import pytest

from meyer import _backend, _kernels_py

compiled = pytest.importorskip("meyer._kernels_c", reason="compiled kernels not built")

KERNELS = ("rref_int", "kernel_int", "inertia_int", "matmul_int")


def _rand(rng, r, c, bound):
    return [[rng.randint(-bound, bound) for _ in range(c)] for _ in range(r)]


def _agree(name, *args):
    """Compiled result equals Python; on overflow the dispatcher must still be right."""
    expected = getattr(_kernels_py, name)(*args)
    try:
        got = getattr(compiled, name)(*args)
    except OverflowError:
        got = getattr(_backend, name)(*args)
    assert got == expected


def _sym(rng, n, bound):
    m = _rand(rng, n, n, bound)
    return [[m[min(i, j)][max(i, j)] for j in range(n)] for i in range(n)]


@pytest.mark.parametrize("seed", range(5))
def test_rref_and_kernel_agree(seed):
    rng = random.Random(seed)
    for _ in range(40):
        r, c = rng.randint(1, 7), rng.randint(1, 8)
        rows = _rand(rng, r, c, rng.choice((1, 3, 50)))
        _agree("rref_int", rows, c)
        _agree("kernel_int", rows, c)


@pytest.mark.parametrize("seed", range(5))
def test_inertia_agrees(seed):
    rng = random.Random(100 + seed)
    for _ in range(40):
        g = _sym(rng, rng.randint(1, 8), rng.choice((1, 4, 100)))
        _agree("inertia_int", g)


def test_matmul_agrees():
    rng = random.Random(7)
    for _ in range(40):
        n, k, m = (rng.randint(1, 6) for _ in range(3))
        a, b = _rand(rng, n, k, 1000), _rand(rng, k, m, 1000)
        _agree("matmul_int", a, b)


def test_overflow_falls_back_to_bignums():
    big = 2 ** 62
    a = [[big, big], [big, big]]
    with pytest.raises(OverflowError):
        compiled.matmul_int(a, a)
    assert _backend.matmul_int(a, a) == [[2 * big * big] * 2] * 2
    rows = [[big, 3, 1], [5, big, 7]]
    assert _backend.kernel_int(rows, 3) == _kernels_py.kernel_int(rows, 3)


def test_backend_is_reported():
    assert _backend.BACKEND in ("cython", "python")
    for name in KERNELS:
        assert callable(getattr(_backend, name))
