"""Pure-Python integer kernels.

Reference implementations of the hot loops.  The compiled module
``_kernels_c`` implements the same algorithms on 64-bit words and must
return bit-identical results; ``_backend`` picks one at import time.

All inputs are lists of lists of Python ints.  Nothing here allocates a
Fraction: row operations are fraction-free and rows are divided by their
content after every update to keep entries small.
"""

from math import gcd


def _content_reduce(row):
    c = 0
    for x in row:
        if x:
            c = gcd(c, x)
            if c == 1:
                return row
    if c > 1:
        return [x // c for x in row]
    return row


def rref_int(rows, ncols):
    """Fraction-free Gauss-Jordan reduction.

    Returns ``(pivots, reduced)`` where ``reduced[k]`` is a primitive row whose
    leading entry sits in column ``pivots[k]``, is positive, and is the only
    nonzero entry of that column among the reduced rows.  Dividing each row by
    its pivot gives the (unique) reduced row echelon form.
    """
    m = [_content_reduce(list(r)) for r in rows]
    nrows = len(m)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        best = -1
        best_abs = 0
        for i in range(r, nrows):
            a = m[i][c]
            if a:
                a = abs(a)
                if best < 0 or a < best_abs:
                    best, best_abs = i, a
                    if a == 1:
                        break
        if best < 0:
            continue
        if best != r:
            m[r], m[best] = m[best], m[r]
        prow = m[r]
        if prow[c] < 0:
            prow = [-x for x in prow]
            m[r] = prow
        p = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = m[i]
            a = row[c]
            if not a:
                continue
            h = gcd(a, p)
            sp, sa = p // h, a // h
            m[i] = _content_reduce([sp * x - sa * y for x, y in zip(row, prow)])
        pivots.append(c)
        r += 1
    return pivots, m[:r]


def kernel_int(rows, ncols):
    """Primitive integer basis of the rational null space of ``rows``.

    One vector per free column ``f`` (in increasing order): the reduced row
    echelon free-variable vector, scaled by a positive factor to be a
    primitive integer vector.  Its ``f`` entry is therefore positive.
    """
    pivots, red = rref_int(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        # scale = lcm of the denominators p_k / gcd(p_k, red[k][f])
        scale = 1
        for k, c in enumerate(pivots):
            a = red[k][f]
            if a:
                p = red[k][c]
                d = p // gcd(p, a)
                scale = scale * d // gcd(scale, d)
        v = [0] * ncols
        v[f] = scale
        for k, c in enumerate(pivots):
            a = red[k][f]
            if a:
                v[c] = -(scale * a) // red[k][c]
        basis.append(_content_reduce(v))
    return basis


def inertia_int(gram):
    """Inertia ``(positive, negative, null)`` of a symmetric integer matrix.

    Symmetric Gaussian elimination over the integers.  Each step removes a
    1 x 1 pivot (smallest nonzero diagonal in absolute value) or, when the
    whole remaining diagonal vanishes, a hyperbolic 2 x 2 block
    ``[[0, b], [b, 0]]`` contributing one positive and one negative square.
    The Schur complement is multiplied by ``|pivot|`` so it stays integral,
    then divided by its content; both scalings are positive and so preserve
    inertia.
    """
    g = [list(r) for r in gram]
    n0 = len(g)
    pos = neg = 0
    while g:
        n = len(g)
        k = -1
        best = 0
        for i in range(n):
            d = g[i][i]
            if d and (k < 0 or abs(d) < best):
                k, best = i, abs(d)
                if best == 1:
                    break
        if k >= 0:
            p = g[k][k]
            if p > 0:
                pos += 1
                sgn = 1
            else:
                neg += 1
                sgn = -1
            ap = abs(p)
            idx = [i for i in range(n) if i != k]
            col = [g[i][k] for i in idx]
            new = []
            for a_i, i in zip(col, idx):
                gi = g[i]
                if a_i:
                    s = sgn * a_i
                    new.append([ap * gi[j] - s * a_j for a_j, j in zip(col, idx)])
                else:
                    new.append([ap * gi[j] for j in idx])
            g = _reduce_block(new)
            continue
        pair = None
        for i in range(n):
            gi = g[i]
            for j in range(i + 1, n):
                if gi[j]:
                    pair = (i, j)
                    break
            if pair:
                break
        if pair is None:
            break
        i0, j0 = pair
        b = g[i0][j0]
        pos += 1
        neg += 1
        sgn = 1 if b > 0 else -1
        ab = abs(b)
        idx = [r for r in range(n) if r not in pair]
        u = [g[r][i0] for r in idx]
        v = [g[r][j0] for r in idx]
        new = []
        for ur, vr, r in zip(u, v, idx):
            gr = g[r]
            new.append([ab * gr[s] - sgn * (ur * vs + vr * us)
                        for us, vs, s in zip(u, v, idx)])
        g = _reduce_block(new)
    return pos, neg, n0 - pos - neg


def _reduce_block(block):
    c = 0
    for row in block:
        for x in row:
            if x:
                c = gcd(c, x)
                if c == 1:
                    return block
    if c > 1:
        return [[x // c for x in row] for row in block]
    return block


def matmul_int(a, b):
    bt = list(zip(*b))
    if not bt:
        return [[] for _ in a]
    return [[sum(x * y for x, y in zip(row, colv)) for colv in bt] for row in a]
