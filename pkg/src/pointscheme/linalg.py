"""Small exact linear algebra helpers over the ground fields, plus numpy
mod-p routines for the batch scans."""

import numpy as np


def rref(field, rows):
    """Reduced row echelon form.  Returns (rows, pivot_columns); zero rows
    are dropped and pivots are normalized to 1."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(m)):
            if not field.is_zero(m[i][c]):
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, v) for v in m[r]]
        for i in range(len(m)):
            if i != r and not field.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [field.sub(m[i][j], field.mul(f, m[r][j])) for j in range(ncols)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def in_row_space(field, rref_rows, pivots, vec):
    """Membership of vec in the span of rows already in reduced echelon form."""
    v = list(vec)
    for row, p in zip(rref_rows, pivots):
        c = v[p]
        if field.is_zero(c):
            continue
        for j in range(len(v)):
            v[j] = field.sub(v[j], field.mul(c, row[j]))
    return all(field.is_zero(c) for c in v)


def reduce_against(field, rref_rows, pivots, vec):
    """Reduce vec modulo an echelon basis; returns the residual vector."""
    v = list(vec)
    for row, p in zip(rref_rows, pivots):
        c = v[p]
        if field.is_zero(c):
            continue
        for j in range(len(v)):
            v[j] = field.sub(v[j], field.mul(c, row[j]))
    return tuple(v)


def nullspace(field, rows, ncols=None):
    """Echelon basis of {v : M v = 0} for the matrix with the given rows."""
    if not rows:
        if ncols is None:
            raise ValueError("need ncols for an empty matrix")
        basis = []
        for i in range(ncols):
            v = [field.zero()] * ncols
            v[i] = field.one()
            basis.append(tuple(v))
        return basis
    ncols = len(rows[0])
    red, pivots = rref(field, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero()] * ncols
        v[fc] = field.one()
        for row, p in zip(red, pivots):
            v[p] = field.neg(row[fc])
        basis.append(tuple(v))
    red2, _ = rref(field, basis)
    return red2


def solve(field, rows, rhs):
    """One solution x of M x = rhs, or None if inconsistent."""
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(field, aug)
    x = [field.zero()] * ncols
    for row, p in zip(red, pivots):
        if p == ncols:
            return None
        x[p] = row[ncols]
    return x


def mat_mul(field, a, b):
    n, k, m = len(a), len(b), len(b[0])
    return [
        [field.sum(field.mul(a[i][t], b[t][j]) for t in range(k)) for j in range(m)]
        for i in range(n)
    ]


def mat_det3(field, m):
    def d2(a, b, c, d):
        return field.sub(field.mul(a, d), field.mul(b, c))

    return field.add(
        field.sub(
            field.mul(m[0][0], d2(m[1][1], m[1][2], m[2][1], m[2][2])),
            field.mul(m[0][1], d2(m[1][0], m[1][2], m[2][0], m[2][2])),
        ),
        field.mul(m[0][2], d2(m[1][0], m[1][1], m[2][0], m[2][1])),
    )


def mat_rank(field, m):
    red, pivots = rref(field, m)
    return len(pivots)


def mat_inv3(field, m):
    aug = [list(m[i]) + [field.one() if j == i else field.zero() for j in range(3)] for i in range(3)]
    red, pivots = rref(field, aug)
    if pivots[:3] != [0, 1, 2]:
        raise ZeroDivisionError("singular matrix")
    return [list(row[3:]) for row in red]


# mod-p numpy routines


def rref_mod(a, p):
    """RREF of an int array mod p.  Returns (array, pivot list)."""
    a = np.array(a, dtype=np.int64) % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        nz = np.nonzero(a[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + nz[0]
        a[[r, i]] = a[[i, r]]
        a[r] = a[r] * pow(int(a[r, c]), p - 2, p) % p
        other = [i for i in range(rows) if i != r and a[i, c] != 0]
        if other:
            a[other] = (a[other] - np.outer(a[other, c], a[r])) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a[:r], pivots


def nullspace_mod(a, p):
    """Echelon nullspace basis mod p as an int array (possibly 0 rows)."""
    a = np.array(a, dtype=np.int64) % p
    ncols = a.shape[1]
    red, pivots = rref_mod(a, p)
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return np.zeros((0, ncols), dtype=np.int64)
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for row, piv in zip(red, pivots):
            basis[k, piv] = (-row[fc]) % p
    red2, _ = rref_mod(basis, p)
    return red2
