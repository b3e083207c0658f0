# cython: language_level=3
"""Compiled dense univariate polynomial kernel.

Same contract as ``_poly_py``: lists of field elements, ascending degree,
no trailing zeros, zero polynomial == empty list.  Coefficients stay Python
objects (exact Fractions / F_p elements); the win over the pure version is
C-level loop and index handling in the convolution and division loops.
"""

BACKEND = "cython"


cpdef list poly_trim(list a):
    cdef Py_ssize_t n = len(a)
    while n and not a[n - 1]:
        n -= 1
    del a[n:]
    return a


cpdef list poly_add(list a, list b):
    cdef Py_ssize_t i
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    for i in range(len(b)):
        out[i] = out[i] + b[i]
    return poly_trim(out)


cpdef list poly_sub(list a, list b):
    cdef Py_ssize_t i
    cdef list out = list(a)
    if len(b) > len(out):
        zero = b[0] - b[0]
        out.extend([zero] * (len(b) - len(out)))
    for i in range(len(b)):
        out[i] = out[i] - b[i]
    return poly_trim(out)


cpdef list poly_neg(list a):
    return [-c for c in a]


cpdef list poly_mul(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    if na == 0 or nb == 0:
        return []
    zero = a[0] - a[0]
    cdef list out = [zero] * (na + nb - 1)
    for i in range(na):
        ai = a[i]
        if not ai:
            continue
        for j in range(nb):
            bj = b[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return poly_trim(out)


cpdef tuple poly_divmod(list a, list b):
    cdef Py_ssize_t db, dr, i
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    cdef list r = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(r) - 1 < db:
        return [], poly_trim(r)
    zero = lb - lb
    cdef list q = [zero] * (len(r) - db)
    while r and len(r) - 1 >= db:
        dr = len(r) - 1
        c = r[-1] / lb
        q[dr - db] = c
        for i in range(db + 1):
            r[dr - db + i] = r[dr - db + i] - c * b[i]
        poly_trim(r)
    return poly_trim(q), r


cpdef list poly_gcd(list a, list b):
    a = list(a)
    b = list(b)
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        inv = (lead / lead) / lead
        a = [c * inv for c in a]
    return a
