"""Integral symplectic matrices and the upper-right-triangular subgroup urSp.

Basis convention, used everywhere in the package: coordinates ``0..g-1`` are
``alpha_1..alpha_g`` and ``g..2g-1`` are ``beta_1..beta_g``, with
``<alpha_i, beta_j> = delta_ij``.  The alpha classes bound meridian disks of
the handlebody, so handlebody mapping classes act by block matrices
``[[P, Q], [0, S]]``.
"""

import random
from dataclasses import dataclass
from functools import lru_cache

from .errors import (DimensionMismatch, GenusDecrease, GenusMismatch, NotSymplectic,
                     NotUpperTriangular, NotUrSp)
from .exactlin import Matrix


@lru_cache(maxsize=None)
def standard_form(g: int) -> Matrix:
    """The Gram matrix J = [[0, I], [-I, 0]] of the symplectic pairing."""
    i, z = Matrix.identity(g), Matrix.zeros(g)
    return Matrix.block([[z, i], [-i, z]])


def symplectic_pairing(u, v, g):
    return sum(u[i] * v[g + i] - u[g + i] * v[i] for i in range(g))


def is_symplectic(m, g: int) -> bool:
    m = m if isinstance(m, Matrix) else Matrix(m)
    if m.shape != (2 * g, 2 * g):
        raise DimensionMismatch(f"expected a {2 * g}x{2 * g} matrix, got {m.nrows}x{m.ncols}")
    if not m.is_integral():
        return False
    j = standard_form(g)
    return m.T @ j @ m == j


def _sp_inverse(m, g):
    # A^{-1} = -J tA J for symplectic A
    j = standard_form(g)
    return -(j @ m.T @ j)


@dataclass(frozen=True)
class SpElement:
    genus: int
    matrix: Matrix

    def __post_init__(self):
        m = self.matrix
        if not isinstance(m, Matrix):
            m = Matrix(m)
            object.__setattr__(self, "matrix", m)
        if self.genus < 1:
            raise DimensionMismatch("genus must be positive")
        if not is_symplectic(m, self.genus):
            raise NotSymplectic("matrix does not satisfy tA J A = J over Z")

    @classmethod
    def _trusted(cls, genus, matrix):
        obj = object.__new__(cls)
        object.__setattr__(obj, "genus", genus)
        object.__setattr__(obj, "matrix", matrix)
        return obj

    @classmethod
    def identity(cls, g):
        return cls._trusted(g, Matrix.identity(2 * g))

    def __matmul__(self, other):
        if not isinstance(other, (SpElement, UrSpElement)):
            return NotImplemented
        other = as_sp(other)
        if other.genus != self.genus:
            raise GenusMismatch(f"genus {self.genus} vs {other.genus}")
        return SpElement._trusted(self.genus, self.matrix @ other.matrix)

    def inverse(self):
        return SpElement._trusted(self.genus, _sp_inverse(self.matrix, self.genus))

    def __pow__(self, k):
        base = self if k >= 0 else self.inverse()
        out = SpElement.identity(self.genus)
        for _ in range(abs(k)):
            out = out @ base
        return out

    def is_identity(self):
        return self.matrix == Matrix.identity(2 * self.genus)

    def blocks(self):
        g = self.genus
        m = self.matrix
        return (m.submatrix(range(g), range(g)), m.submatrix(range(g), range(g, 2 * g)),
                m.submatrix(range(g, 2 * g), range(g)),
                m.submatrix(range(g, 2 * g), range(g, 2 * g)))


@dataclass(frozen=True)
class UrSpElement:
    """Block triple (P, Q, S) of an element ``[[P, Q], [0, S]]`` of urSp(2g; Z)."""

    genus: int
    P: Matrix
    Q: Matrix
    S: Matrix

    def __post_init__(self):
        g = self.genus
        for name in ("P", "Q", "S"):
            b = getattr(self, name)
            if not isinstance(b, Matrix):
                b = Matrix(b)
                object.__setattr__(self, name, b)
            if b.shape != (g, g):
                raise DimensionMismatch(f"block {name} must be {g}x{g}")
            if not b.is_integral():
                raise NotUrSp(f"block {name} has non-integer entries")
        p, q, s = self.P, self.Q, self.S
        if p.T @ s != Matrix.identity(g):
            raise NotUrSp("tP S != I")
        if q.T @ s != s.T @ q:
            raise NotUrSp("tQ S is not symmetric")

    @classmethod
    def _trusted(cls, genus, p, q, s):
        obj = object.__new__(cls)
        object.__setattr__(obj, "genus", genus)
        object.__setattr__(obj, "P", p)
        object.__setattr__(obj, "Q", q)
        object.__setattr__(obj, "S", s)
        return obj

    @classmethod
    def identity(cls, g):
        return cls._trusted(g, Matrix.identity(g), Matrix.zeros(g), Matrix.identity(g))

    @property
    def matrix(self):
        return Matrix.block([[self.P, self.Q], [Matrix.zeros(self.genus), self.S]])

    def to_sp(self):
        return SpElement._trusted(self.genus, self.matrix)

    def __matmul__(self, other):
        if isinstance(other, SpElement):
            return self.to_sp() @ other
        if not isinstance(other, UrSpElement):
            return NotImplemented
        if other.genus != self.genus:
            raise GenusMismatch(f"genus {self.genus} vs {other.genus}")
        return UrSpElement._trusted(self.genus, self.P @ other.P,
                                    self.P @ other.Q + self.Q @ other.S, self.S @ other.S)

    def inverse(self):
        # [[P, Q], [0, S]]^{-1} = [[tS, -tS Q tP], [0, tP]]
        st, pt = self.S.T, self.P.T
        return UrSpElement._trusted(self.genus, st, -(st @ self.Q @ pt), pt)

    def is_identity(self):
        g = self.genus
        return (self.P == Matrix.identity(g) and self.S == Matrix.identity(g)
                and self.Q.is_zero())


def as_sp(a) -> SpElement:
    if isinstance(a, SpElement):
        return a
    if isinstance(a, UrSpElement):
        return a.to_sp()
    raise TypeError(f"expected SpElement or UrSpElement, got {type(a).__name__}")


def split_ursp(a) -> UrSpElement:
    """Read off (P, Q, S) from a symplectic matrix with vanishing lower-left block."""
    if isinstance(a, UrSpElement):
        return a
    a = as_sp(a)
    p, q, r, s = a.blocks()
    if not r.is_zero():
        raise NotUpperTriangular("lower-left block is not zero; not in urSp(2g; Z)")
    return UrSpElement(a.genus, p, q, s)


def _elementary(g, rng):
    """Random elementary unimodular matrix together with its inverse."""
    kind = rng.random()
    e = [[int(i == j) for j in range(g)] for i in range(g)]
    inv = [[int(i == j) for j in range(g)] for i in range(g)]
    if g == 1 or kind < 0.15:
        i = rng.randrange(g)
        e[i][i] = inv[i][i] = -1
    elif kind < 0.3:
        i, j = rng.sample(range(g), 2)
        for m in (e, inv):
            m[i][i] = m[j][j] = 0
            m[i][j] = m[j][i] = 1
    else:
        i, j = rng.sample(range(g), 2)
        k = rng.choice((-2, -1, 1, 2))
        e[i][j] = k
        inv[i][j] = -k
    return Matrix.from_ints(e, g), Matrix.from_ints(inv, g)


def random_ursp(g: int, seed: int, complexity: int = 3) -> UrSpElement:
    """Deterministic pseudo-random element of urSp(2g; Z).

    P is a product of ``complexity`` random elementary integer matrices,
    S = (tP)^{-1} and Q = P N for a random symmetric N with entries in
    ``[-complexity, complexity]``.  Then tQ S = N is symmetric, so the
    result lies in urSp without rejection sampling.
    """
    if g < 1:
        raise DimensionMismatch("genus must be positive")
    rng = random.Random(f"ursp:{g}:{seed}:{complexity}")
    p = Matrix.identity(g)
    p_inv = Matrix.identity(g)
    for _ in range(complexity):
        e, e_inv = _elementary(g, rng)
        p = p @ e
        p_inv = e_inv @ p_inv
    n = [[0] * g for _ in range(g)]
    for i in range(g):
        for j in range(i, g):
            n[i][j] = n[j][i] = rng.randint(-complexity, complexity)
    q = p @ Matrix.from_ints(n, g)
    return UrSpElement(g, p, q, p_inv.T)


def _pad(m, g, g_target, diag):
    rows = [list(r) + [0] * (g_target - g) for r in m.rows]
    for k in range(g, g_target):
        rows.append([0] * g_target)
        rows[k][k] = diag
    return Matrix.from_ints(rows, g_target)


def stabilize(a, g_target: int):
    """Stabilization urSp(2g) -> urSp(2g'), or Sp(2g) -> Sp(2g').

    P and S are extended by the identity and Q by zero; for a general
    symplectic matrix the new alpha/beta coordinates are fixed.
    """
    g = a.genus
    if g_target < g:
        raise GenusDecrease(f"cannot stabilize from genus {g} down to {g_target}")
    if g_target == g:
        return a
    if isinstance(a, UrSpElement):
        return UrSpElement._trusted(g_target, _pad(a.P, g, g_target, 1),
                                    _pad(a.Q, g, g_target, 0), _pad(a.S, g, g_target, 1))
    a = as_sp(a)
    n = 2 * g_target
    idx = list(range(g)) + [g_target + i for i in range(g)]
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    src = a.matrix.rows
    for ai, i in enumerate(idx):
        for aj, j in enumerate(idx):
            rows[i][j] = src[ai][aj]
    return SpElement._trusted(g_target, Matrix.from_ints(rows, n))
