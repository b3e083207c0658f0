"""Pure-Python dense univariate polynomial kernel.

Polynomials are lists of field elements in ascending degree order with no
trailing zeros; the zero polynomial is the empty list.  Coefficients are
``Fraction`` or ``FpElement`` objects; a coefficient is zero iff it is falsy.

This module is the fallback for the Cython kernel ``_poly_cy``; the two must
stay behaviourally identical (the benchmark and the test suite compare them).
"""

BACKEND = "python"


def poly_trim(a):
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    del a[n:]
    return a


def poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i in range(len(b)):
        out[i] = out[i] + b[i]
    return poly_trim(out)


def poly_sub(a, b):
    out = list(a)
    if len(b) > len(out):
        zero = b[0] - b[0]
        out.extend([zero] * (len(b) - len(out)))
    for i in range(len(b)):
        out[i] = out[i] - b[i]
    return poly_trim(out)


def poly_neg(a):
    return [-c for c in a]


def poly_mul(a, b):
    if not a or not b:
        return []
    na, nb = len(a), len(b)
    zero = a[0] - a[0]
    out = [zero] * (na + nb - 1)
    for i in range(na):
        ai = a[i]
        if not ai:
            continue
        for j in range(nb):
            bj = b[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return poly_trim(out)


def poly_divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(r) - 1 < db:
        return [], poly_trim(r)
    zero = lb - lb
    q = [zero] * (len(r) - db)
    while r and len(r) - 1 >= db:
        dr = len(r) - 1
        c = r[-1] / lb
        q[dr - db] = c
        for i in range(db + 1):
            r[dr - db + i] = r[dr - db + i] - c * b[i]
        poly_trim(r)
    return poly_trim(q), r


def poly_gcd(a, b):
    """Monic gcd via the Euclidean algorithm."""
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
