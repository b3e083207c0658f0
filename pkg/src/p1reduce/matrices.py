"""Small dense matrices over truncated Laurent series.

Plain list-of-lists helpers; everything returns fresh matrices.  Sizes here
are the ranks of the groups involved (2..8), so cofactor determinants and
Gaussian inversion are fine.
"""

from __future__ import annotations

from .errors import PrecisionError
from .scalars import PuiseuxScalar
from .series import TLaurent


def mat_identity(n, field, N=1):
    one = TLaurent.one_(field, N)
    zero = TLaurent.zero(field, N)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_copy(m):
    return [row[:] for row in m]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = a[i][0] * b[0][j]
            for s in range(1, k):
                acc = acc + a[i][s] * b[s][j]
            row.append(acc)
        out.append(row)
    return out


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_map(m, f):
    return [[f(x) for x in row] for row in m]


def mat_det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    acc = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * mat_det(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    return acc


def mat_inv(m, target_prec=None):
    """Inverse over the Laurent series field via Gaussian elimination.

    Pivots are chosen by minimal t-valuation to keep precision loss small.
    """
    n = len(m)
    field = m[0][0].field
    N = m[0][0].N
    work = mat_copy(m)
    out = mat_identity(n, field, N)
    for col in range(n):
        # pick the pivot row with minimal t-valuation in this column
        best, best_v = None, None
        for i in range(col, n):
            entry = work[i][col]
            if entry.is_zero_to_prec():
                continue
            v = entry.val_t()
            if best_v is None or v < best_v:
                best, best_v = i, v
        if best is None:
            raise PrecisionError("matrix not invertible to precision (column %d)" % col)
        work[col], work[best] = work[best], work[col]
        out[col], out[best] = out[best], out[col]
        inv = work[col][col].invert(target_prec)
        work[col] = [x * inv for x in work[col]]
        out[col] = [x * inv for x in out[col]]
        for i in range(n):
            if i == col:
                continue
            f = work[i][col]
            if f.is_zero_to_prec():
                continue
            work[i] = [x - f * y for x, y in zip(work[i], work[col])]
            out[i] = [x - f * y for x, y in zip(out[i], out[col])]
    return out


def mat_specialize(m):
    return mat_map(m, lambda x: x.specialize_pi_zero())


def mat_extend_pi_root(m, d):
    return mat_map(m, lambda x: x.extend_pi_root(d))


def mat_val_pi(m):
    vals = [x.val_pi() for row in m for x in row]
    vals = [v for v in vals if v is not None]
    return min(vals) if vals else None


def mat_is_identity(m, upto=None):
    n = len(m)
    field = m[0][0].field
    N = m[0][0].N
    ident = mat_identity(n, field, N)
    return all(
        m[i][j].agrees_with(ident[i][j], upto) for i in range(n) for j in range(n)
    )


def mat_agrees(a, b, upto=None):
    return all(
        x.agrees_with(y, upto) for ra, rb in zip(a, b) for x, y in zip(ra, rb)
    )


def mat_min_prec(m):
    precs = [x.prec for row in m for x in row if x.prec is not None]
    return min(precs) if precs else None


def elementary(n, i, j, entry, field, N=1):
    """Identity plus ``entry`` at position (i, j)."""
    m = mat_identity(n, field, N)
    m[i][j] = entry if i != j else m[i][j] + entry
    return m


def scalar_matrix(n, scalars, field, N=1):
    zero = TLaurent.zero(field, N)
    return [
        [TLaurent.from_scalar(scalars[i]) if i == j else zero for j in range(n)]
        for i in range(n)
    ]


def diag_t_powers(n, powers, field, N=1):
    zero = TLaurent.zero(field, N)
    return [
        [TLaurent.t_power(field, powers[i], N) if i == j else zero for j in range(n)]
        for i in range(n)
    ]


def constant_matrix(n, consts, field, N=1):
    """Matrix of ground-field constants (list of lists of ints/fractions)."""
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            c = PuiseuxScalar.constant(field, consts[i][j], N)
            row.append(TLaurent.from_scalar(c))
        out.append(row)
    return out
