"""Generic dense linear algebra over any of the scalar backends.

Matrices are tuples of row tuples; everything is small (2n <= 8 on the
exact side), so clarity beats speed.  The reduced row-echelon form is the
canonical representative used for subspace equality.
"""

from __future__ import annotations


def mat(field, rows):
    return tuple(tuple(field.of(x) for x in row) for row in rows)

def vec(field, entries):
    return tuple(field.of(x) for x in entries)

def identity(field, n):
    return tuple(
        tuple(field.one if i == j else field.zero for j in range(n))
        for i in range(n)
    )

def zeros(field, m, n):
    return tuple(tuple(field.zero for _ in range(n)) for _ in range(m))

def transpose(a):
    return tuple(zip(*a)) if a else ()


def mat_mul(field, a, b):
    bt = transpose(b)
    out = []
    for row in a:
        out_row = []
        for col in bt:
            s = field.zero
            for x, y in zip(row, col):
                s = field.add(s, field.mul(x, y))
            out_row.append(s)
        out.append(tuple(out_row))
    return tuple(out)


def mat_vec(field, a, v):
    out = []
    for row in a:
        s = field.zero
        for x, y in zip(row, v):
            s = field.add(s, field.mul(x, y))
        out.append(s)
    return tuple(out)


def dot(field, u, v):
    s = field.zero
    for x, y in zip(u, v):
        s = field.add(s, field.mul(x, y))
    return s


def vec_add(field, u, v):
    return tuple(field.add(x, y) for x, y in zip(u, v))

def vec_sub(field, u, v):
    return tuple(field.sub(x, y) for x, y in zip(u, v))

def vec_scale(field, c, u):
    return tuple(field.mul(c, x) for x in u)

def vec_neg(field, u):
    return tuple(field.neg(x) for x in u)

def is_zero_vec(field, u):
    return all(field.is_zero(x) for x in u)


def rref(field, rows):
    """Reduced row-echelon form; returns (rows, pivot column list)."""
    m = [list(row) for row in rows]
    if not m:
        return (), []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if not field.is_zero(m[i][c]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and not field.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    reduced = tuple(tuple(row) for row in m[:r])
    return reduced, pivots


def rank(field, rows):
    return len(rref(field, rows)[0])


def kernel(field, rows):
    """Canonical (RREF) basis of the right null space of the row matrix."""
    if not rows:
        return ()
    ncols = len(rows[0])
    red, pivots = rref(field, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(red[i][fc])
        basis.append(tuple(v))
    return rref(field, basis)[0]


def solve(field, a, b):
    """One solution x of A x = b, or None if inconsistent."""
    if not a:
        return None
    ncols = len(a[0])
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, pivots = rref(field, aug)
    x = [field.zero] * ncols
    for row, pc in zip(red, pivots):
        if pc == ncols:
            return None
        x[pc] = row[-1]
    return tuple(x)


def inverse(field, a):
    n = len(a)
    aug = [list(row) + list(e) for row, e in zip(a, identity(field, n))]
    red, pivots = rref(field, aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in red)
