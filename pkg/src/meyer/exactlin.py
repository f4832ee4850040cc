"""Exact dense linear algebra over Q and Z.

Entries are Python ``int`` or :class:`fractions.Fraction`; a Fraction with
denominator 1 is stored as ``int`` so integer matrices stay on the fast
integer kernels.  Matrices are immutable.
"""

from fractions import Fraction
from math import gcd, lcm
from typing import NamedTuple, Sequence

from . import _backend
from .errors import DimensionMismatch, NonSymmetricInput, SingularMatrix


def _norm(x):
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    f = Fraction(x)
    return f.numerator if f.denominator == 1 else f


class Matrix:
    """Immutable dense matrix with exact rational entries."""

    __slots__ = ("_rows", "nrows", "ncols", "_hash", "_integral")

    def __init__(self, rows, ncols=None):
        rows = tuple(tuple(_norm(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise DimensionMismatch("cannot infer column count of an empty matrix")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch("ragged rows")
        self._rows = rows
        self.nrows = len(rows)
        self.ncols = ncols
        self._hash = None
        self._integral = None

    @classmethod
    def _raw(cls, rows, ncols, integral=None):
        # rows already normalized tuples
        m = cls.__new__(cls)
        m._rows = rows
        m.nrows = len(rows)
        m.ncols = ncols
        m._hash = None
        m._integral = integral
        return m

    @classmethod
    def from_ints(cls, rows, ncols=None):
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls._raw(rows, ncols)

    @classmethod
    def identity(cls, n):
        return cls._raw(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n, True)

    @classmethod
    def zeros(cls, m, n=None):
        n = m if n is None else n
        return cls._raw(tuple((0,) * n for _ in range(m)), n, True)

    @classmethod
    def diag(cls, entries):
        entries = [_norm(x) for x in entries]
        n = len(entries)
        return cls._raw(tuple(tuple(entries[i] if i == j else 0 for j in range(n))
                              for i in range(n)), n)

    @classmethod
    def block(cls, blocks):
        """Assemble ``[[A, B], [C, D]]``-style nested lists of matrices."""
        rows = []
        ncols = None
        for brow in blocks:
            h = brow[0].nrows
            if any(b.nrows != h for b in brow):
                raise DimensionMismatch("block row heights differ")
            w = sum(b.ncols for b in brow)
            if ncols is None:
                ncols = w
            elif w != ncols:
                raise DimensionMismatch("block column widths differ")
            for i in range(h):
                rows.append(sum((b._rows[i] for b in brow), ()))
        return cls._raw(tuple(rows), ncols or 0)

    @classmethod
    def from_columns(cls, columns, nrows):
        cols = [tuple(_norm(x) for x in c) for c in columns]
        return cls._raw(tuple(tuple(c[i] for c in cols) for i in range(nrows)), len(cols))

    @property
    def shape(self):
        return self.nrows, self.ncols

    @property
    def rows(self):
        return self._rows

    def tolist(self):
        return [list(r) for r in self._rows]

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def row(self, i):
        return self._rows[i]

    def column(self, j):
        return tuple(r[j] for r in self._rows)

    def columns(self):
        return list(zip(*self._rows)) if self.nrows else [() for _ in range(self.ncols)]

    @property
    def T(self):
        return Matrix._raw(tuple(zip(*self._rows)) if self.nrows else
                           tuple(() for _ in range(self.ncols)), self.nrows, self._integral)

    def submatrix(self, rows, cols):
        rows = range(*rows.indices(self.nrows)) if isinstance(rows, slice) else rows
        cols = range(*cols.indices(self.ncols)) if isinstance(cols, slice) else cols
        cols = list(cols)
        return Matrix._raw(tuple(tuple(self._rows[i][j] for j in cols) for i in rows), len(cols),
                           self._integral)

    def is_square(self):
        return self.nrows == self.ncols

    def is_integral(self):
        if self._integral is None:
            self._integral = all(type(x) is int for r in self._rows for x in r)
        return self._integral

    def is_symmetric(self):
        if not self.is_square():
            return False
        rows = self._rows
        return all(rows[i][j] == rows[j][i]
                   for i in range(self.nrows) for j in range(i + 1, self.ncols))

    def is_zero(self):
        return not any(x for r in self._rows for x in r)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ncols == other.ncols and self._rows == other._rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ncols, self._rows))
        return self._hash

    def __repr__(self):
        return f"Matrix({self.tolist()!r})"

    def __str__(self):
        return format_matrix(self)

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other):
        self._check_same_shape(other)
        if self.is_integral() and other.is_integral():
            return Matrix._raw(tuple(tuple(a + b for a, b in zip(r, s))
                                     for r, s in zip(self._rows, other._rows)), self.ncols, True)
        return Matrix._raw(tuple(tuple(_norm(a + b) for a, b in zip(r, s))
                                 for r, s in zip(self._rows, other._rows)), self.ncols)

    def __sub__(self, other):
        self._check_same_shape(other)
        if self.is_integral() and other.is_integral():
            return Matrix._raw(tuple(tuple(a - b for a, b in zip(r, s))
                                     for r, s in zip(self._rows, other._rows)), self.ncols, True)
        return Matrix._raw(tuple(tuple(_norm(a - b) for a, b in zip(r, s))
                                 for r, s in zip(self._rows, other._rows)), self.ncols)

    def __neg__(self):
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self._rows), self.ncols,
                           self._integral)

    def scale(self, c):
        c = _norm(c)
        return Matrix._raw(tuple(tuple(_norm(c * a) for a in r) for r in self._rows), self.ncols)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        if self.ncols == 0:
            return Matrix.zeros(self.nrows, other.ncols)
        if self.is_integral() and other.is_integral():
            out = _backend.matmul_int(self._rows, other._rows)
            return Matrix._raw(tuple(map(tuple, out)), other.ncols, True)
        cols = list(zip(*other._rows))
        return Matrix._raw(tuple(tuple(_norm(sum(a * b for a, b in zip(r, c))) for c in cols)
                                 for r in self._rows), other.ncols)

    def apply(self, v):
        """Matrix-vector product."""
        if len(v) != self.ncols:
            raise DimensionMismatch("vector length does not match column count")
        return tuple(_norm(sum(a * b for a, b in zip(r, v))) for r in self._rows)

    def __pow__(self, k):
        if not self.is_square():
            raise DimensionMismatch("power of a non-square matrix")
        base = self if k >= 0 else inverse(self)
        k = abs(k)
        out = Matrix.identity(self.nrows)
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def integer_rows(self):
        """Rows scaled by the lcm of their denominators (same row space)."""
        out = []
        for r in self._rows:
            d = 1
            for x in r:
                if type(x) is not int:
                    d = lcm(d, x.denominator)
            out.append([int(x * d) for x in r] if d != 1 else list(r))
        return out

    def rank(self):
        if self.nrows == 0 or self.ncols == 0:
            return 0
        pivots, _ = _backend.rref_int(self.integer_rows(), self.ncols)
        return len(pivots)

    def det(self):
        if not self.is_square():
            raise DimensionMismatch("determinant of a non-square matrix")
        return determinant(self)

    def inverse(self):
        return inverse(self)


def format_matrix(m):
    if m.nrows == 0:
        return "[]"
    cells = [[str(x) for x in r] for r in m.rows]
    width = max((len(c) for r in cells for c in r), default=1)
    return "\n".join("[" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)


def as_matrix(m):
    return m if isinstance(m, Matrix) else Matrix(m)


class SignatureTriple(NamedTuple):
    positive: int
    negative: int
    null: int

    @property
    def signature(self):
        return self.positive - self.negative

    @property
    def dimension(self):
        return self.positive + self.negative + self.null


def kernel_basis(m) -> list[tuple]:
    """Basis of the right null space ``{v : m v = 0}`` over Q.

    The basis is the reduced-row-echelon free-variable basis (one vector per
    free column, in column order), each vector rescaled by a positive factor
    to a primitive integer vector.  So the result is deterministic and the
    vectors have integer entries even for rational input.

    >>> kernel_basis(Matrix([[-2, 1], [0, 0]]))
    [(1, 2)]
    """
    m = as_matrix(m)
    if m.ncols == 0:
        return []
    if m.nrows == 0:
        return [tuple(int(i == j) for j in range(m.ncols)) for i in range(m.ncols)]
    return [tuple(v) for v in _backend.kernel_int(m.integer_rows(), m.ncols)]


def signature_of_symmetric(g) -> SignatureTriple:
    """Inertia of a symmetric rational matrix by congruence diagonalization.

    Raises NonSymmetricInput if ``g`` is not exactly symmetric.
    """
    g = as_matrix(g)
    if not g.is_symmetric():
        raise NonSymmetricInput("matrix is not symmetric")
    if g.nrows == 0:
        return SignatureTriple(0, 0, 0)
    if g.is_integral():
        rows = g.rows
    else:
        # a positive common multiple does not change the inertia
        d = 1
        for r in g.rows:
            for x in r:
                if type(x) is not int:
                    d = lcm(d, x.denominator)
        rows = [[int(x * d) for x in r] for r in g.rows]
    return SignatureTriple(*_backend.inertia_int(rows))


def determinant(m):
    """Bareiss fraction-free determinant (exact)."""
    n = m.nrows
    if n == 0:
        return 1
    d = 1
    for r in m.rows:
        for x in r:
            if type(x) is not int:
                d = lcm(d, x.denominator)
    a = [[int(x * d) for x in r] for r in m.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ai, ak = a[i], a[k]
            for j in range(k + 1, n):
                ai[j] = (akk * ai[j] - aik * ak[j]) // prev
        prev = akk
    return _norm(Fraction(sign * a[n - 1][n - 1], d ** n))


def inverse(m):
    """Exact inverse; raises SingularMatrix when ``det m == 0``."""
    m = as_matrix(m)
    if not m.is_square():
        raise DimensionMismatch("inverse of a non-square matrix")
    n = m.nrows
    aug = [list(map(Fraction, r)) + [Fraction(int(i == j)) for j in range(n)]
           for i, r in enumerate(m.rows)]
    for c in range(n):
        p = next((i for i in range(c, n) if aug[i][c]), None)
        if p is None:
            raise SingularMatrix("matrix is singular")
        aug[c], aug[p] = aug[p], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return Matrix([r[n:] for r in aug])


class SmithForm(NamedTuple):
    D: Matrix
    U: Matrix
    V: Matrix

    @property
    def diagonal(self):
        k = min(self.D.nrows, self.D.ncols)
        return tuple(self.D[i, i] for i in range(k))


def smith_normal_form(m) -> SmithForm:
    """Smith normal form ``U m V = D`` over Z.

    U and V are unimodular and ``D`` is diagonal with nonnegative entries
    ``d1 | d2 | ...``.  Pivots are chosen by smallest nonzero absolute value,
    scanning rows then columns, so the transforms are reproducible.
    """
    m = as_matrix(m)
    if not m.is_integral():
        raise DimensionMismatch("Smith normal form needs an integer matrix")
    nr, nc = m.nrows, m.ncols
    a = m.tolist()
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]
    v = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def row_op(dst, src, k):  # row dst += k * row src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def col_op(dst, src, k):  # col dst += k * col src
        for r in a:
            r[dst] += k * r[src]
        for r in v:
            r[dst] += k * r[src]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    for t in range(min(nr, nc)):
        while True:
            best = None
            for i in range(t, nr):
                for j in range(t, nc):
                    x = a[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, i, j = best
            swap_rows(t, i)
            swap_cols(t, j)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    row_op(i, t, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, nc):
                if a[t][j]:
                    col_op(j, t, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            # enforce divisibility of the rest of the block by the pivot
            bad = next(((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc)
                        if a[i][j] % p), None)
            if bad is None:
                break
            row_op(t, bad[0], 1)
        if best is None:
            break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return SmithForm(Matrix.from_ints(a, nc), Matrix.from_ints(u, nr), Matrix.from_ints(v, nc))


def integer_kernel_basis(m) -> list[tuple]:
    """Z-basis of the saturated lattice ``{v in Z^n : m v = 0}``.

    Read off the columns of V in the Smith form ``U m V = D`` that meet a zero
    diagonal entry.
    """
    m = as_matrix(m)
    snf = smith_normal_form(m)
    diag = snf.diagonal
    rank = sum(1 for d in diag if d)
    return [snf.V.column(j) for j in range(rank, m.ncols)]


def primitive(v: Sequence[int]) -> tuple:
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v) if g > 1 else tuple(v)
