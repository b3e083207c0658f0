"""Shared builders for the test suite."""

from __future__ import annotations

from fractions import Fraction

import pytest

from p1reduce import QQ, GroundField, LoopCocycle, PuiseuxScalar, TLaurent

F5 = GroundField("prime", 5)
F7 = GroundField("prime", 7)


def const(c, field=QQ, N=1):
    return PuiseuxScalar.constant(field, c, N)


def tl(coeffs, field=QQ, N=1, prec=None):
    """TLaurent from {t_exp: int | Fraction | PuiseuxScalar}."""
    out = {}
    for e, c in coeffs.items():
        out[e] = c if isinstance(c, PuiseuxScalar) else const(c, field, N)
    return TLaurent(field, N, out, prec)


def mat(rows, field=QQ, N=1):
    """Matrix of TLaurent entries from {t_exp: coeff} dicts."""
    return [[tl(x, field, N) if isinstance(x, dict) else x for x in row] for row in rows]


def cocycle(rows, group="SL", base="residue", field=QQ, N=1):
    entries = mat(rows, field, N)
    return LoopCocycle(len(rows), group, base, field, N, entries)


def pi(r, field=QQ, N=1):
    return PuiseuxScalar.pi_power(field, Fraction(r), N)


@pytest.fixture
def worked_family_doc():
    """[[t, pi], [0, t^-1]]: generic (0,0), special (1,-1)."""
    return {
        "field": "Q",
        "group": "SL",
        "rank": 2,
        "pi_denominator": 1,
        "t_precision": 32,
        "entries": [
            [[{"c": 1, "t": 1, "pi": 0}], [{"c": 1, "t": 0, "pi": 1}]],
            [[], [{"c": 1, "t": -1, "pi": 0}]],
        ],
    }
