"""Truncated Laurent series in t over exact Puiseux scalars.

A ``TLaurent`` stores a sparse map {t-exponent: PuiseuxScalar} plus a
precision bound: coefficients of t^e for e >= prec are unknown.  prec=None
means the element is an exact Laurent polynomial.  Zero coefficients are
never stored, so equality of exact elements is structural.

Precision propagates pessimistically: a product of elements with precisions
T1, T2 and lowest exponents v1, v2 is reported to precision
min(T1 + v2, T2 + v1).
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import NonIntegralError, PrecisionError
from .scalars import PuiseuxScalar

INF = None  # precision value meaning "exact"


def _minprec(*precs):
    vals = [p for p in precs if p is not None]
    return min(vals) if vals else None


class TLaurent:
    __slots__ = ("field", "N", "coeffs", "prec")

    def __init__(self, field, N, coeffs, prec=None):
        self.field = field
        self.N = N
        if prec is not None:
            coeffs = {e: c for e, c in coeffs.items() if e < prec and not c.is_zero()}
        else:
            coeffs = {e: c for e, c in coeffs.items() if not c.is_zero()}
        self.coeffs = coeffs
        self.prec = prec

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, field, N=1, prec=None):
        return cls(field, N, {}, prec)

    @classmethod
    def one_(cls, field, N=1, prec=None):
        return cls.monomial(field, PuiseuxScalar.one_(field, N), 0, N, prec)

    @classmethod
    def monomial(cls, field, scalar, t_exp, N=1, prec=None):
        return cls(field, N, {t_exp: scalar}, prec)

    @classmethod
    def t_power(cls, field, e, N=1):
        return cls.monomial(field, PuiseuxScalar.one_(field, N), e, N)

    @classmethod
    def from_scalar(cls, scalar, prec=None):
        return cls(scalar.field, scalar.N, {0: scalar}, prec)

    # -- views ---------------------------------------------------------

    def is_exact(self):
        return self.prec is None

    def is_zero(self):
        """True when the element is exactly zero (requires exactness)."""
        return not self.coeffs and self.prec is None

    def is_zero_to_prec(self):
        return not self.coeffs

    def coeff(self, e):
        if self.prec is not None and e >= self.prec:
            raise PrecisionError("coefficient of t^%d is beyond precision %d" % (e, self.prec))
        return self.coeffs.get(e, PuiseuxScalar.zero(self.field, self.N))

    def val_t(self):
        """t-adic valuation; None (=+infinity) for exact zero."""
        if self.coeffs:
            return min(self.coeffs)
        if self.prec is None:
            return None
        raise PrecisionError("element is zero to precision %d; val_t unknown" % self.prec)

    def val_pi(self):
        """Min pi-valuation over coefficients; None for zero-to-precision."""
        vals = [c.val_pi() for c in self.coeffs.values()]
        return min(vals) if vals else None

    def is_integral(self):
        v = self.val_pi()
        return v is None or v >= 0

    # -- structure maps ------------------------------------------------

    def _align(self, other):
        if self.N == other.N:
            return self, other
        M = lcm(self.N, other.N)
        return self.extend_pi_root(M // self.N), other.extend_pi_root(M // other.N)

    def extend_pi_root(self, d):
        if d == 1:
            return self
        return TLaurent(
            self.field, self.N * d,
            {e: c.extend(d) for e, c in self.coeffs.items()}, self.prec,
        )

    def truncate(self, prec):
        p = _minprec(self.prec, prec)
        return TLaurent(self.field, self.N, self.coeffs, p)

    def specialize_pi_zero(self):
        """Coefficient-wise evaluation at pi = 0 over the residue field."""
        out = {}
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            v = c.val_pi()
            if v is not None and v < 0:
                raise NonIntegralError(
                    "non-integral element: coefficient of t^%d has pi-valuation %s" % (e, v),
                    t_exponent=e,
                )
            r = c.specialize0()
            if r:
                out[e] = PuiseuxScalar.constant(self.field, r, self.N)
        return TLaurent(self.field, self.N, out, self.prec)

    def evaluate_pi(self, c):
        """Evaluate every coefficient at u = c; the result has constant
        coefficients over the ground field."""
        out = {}
        for e, s in self.coeffs.items():
            v = s.evaluate(c)
            if v:
                out[e] = PuiseuxScalar.constant(self.field, v, self.N)
        return TLaurent(self.field, self.N, out, self.prec)

    def times_pi(self, r):
        r = Fraction(r)
        if r == 0:
            return self
        return TLaurent(
            self.field, self.N, {e: c.times_pi(r) for e, c in self.coeffs.items()}, self.prec
        )

    def shift_t(self, k):
        return TLaurent(
            self.field, self.N, {e + k: c for e, c in self.coeffs.items()},
            None if self.prec is None else self.prec + k,
        )

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        a, b = self._align(other)
        prec = _minprec(a.prec, b.prec)
        out = dict(a.coeffs)
        for e, c in b.coeffs.items():
            if e in out:
                out[e] = out[e] + c
            else:
                out[e] = c
        return TLaurent(a.field, a.N, out, prec)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TLaurent(self.field, self.N, {e: -c for e, c in self.coeffs.items()}, self.prec)

    def __mul__(self, other):
        a, b = self._align(other)
        if not a.coeffs or not b.coeffs:
            if (not a.coeffs and a.prec is None) or (not b.coeffs and b.prec is None):
                return TLaurent.zero(a.field, a.N)  # exact zero annihilates
            # zero to precision: the product is zero to a propagated precision
            prec = _minprec(
                None if a.prec is None else a.prec + (min(b.coeffs) if b.coeffs else 0),
                None if b.prec is None else b.prec + (min(a.coeffs) if a.coeffs else 0),
            )
            return TLaurent.zero(a.field, a.N, prec)
        va, vb = min(a.coeffs), min(b.coeffs)
        prec = _minprec(
            None if a.prec is None else a.prec + vb,
            None if b.prec is None else b.prec + va,
        )
        out = {}
        for e1, c1 in a.coeffs.items():
            for e2, c2 in b.coeffs.items():
                e = e1 + e2
                if prec is not None and e >= prec:
                    continue
                p = c1 * c2
                if e in out:
                    out[e] = out[e] + p
                else:
                    out[e] = p
        return TLaurent(a.field, a.N, out, prec)

    def scale(self, scalar):
        if scalar.is_zero():
            return TLaurent.zero(self.field, self.N, self.prec)
        a = self
        if scalar.N != a.N:
            M = lcm(scalar.N, a.N)
            scalar = scalar.extend(M // scalar.N)
            a = a.extend_pi_root(M // a.N)
        return TLaurent(a.field, a.N, {e: c * scalar for e, c in a.coeffs.items()}, a.prec)

    def invert(self, target_prec=None):
        """Multiplicative inverse as a Laurent series.

        For a truncated input of precision T and valuation v the result is
        certified to precision T - 2v; an exact monomial inverts exactly;
        any other exact input needs an explicit ``target_prec``.
        """
        if not self.coeffs:
            raise PrecisionError("cannot invert an element that is zero to precision")
        v = min(self.coeffs)
        c0 = self.coeffs[v]
        if len(self.coeffs) == 1 and self.prec is None:
            return TLaurent.monomial(self.field, c0.inverse(), -v, self.N)
        if self.prec is None:
            if target_prec is None:
                raise ValueError("target_prec required to invert an exact non-monomial")
            out_prec = target_prec
        else:
            out_prec = self.prec - 2 * v
            if target_prec is not None:
                out_prec = min(out_prec, target_prec)
        if out_prec <= -v:
            raise PrecisionError("precision exhausted inverting element of valuation %d" % v)
        # solve sum_{k} y_{-v+k} * x_{v+j-k} = delta_{j0} term by term
        inv0 = c0.inverse()
        ycoeffs = {}
        nterms = out_prec + v  # exponents -v .. out_prec-1
        for k in range(nterms):
            acc = PuiseuxScalar.zero(self.field, self.N)
            for e, yc in ycoeffs.items():
                xe = (k - v) - e + v  # exponent in x pairing with y-term e
                xc = self.coeffs.get(xe)
                if xc is not None:
                    acc = acc + yc * xc
            if k == 0:
                val = inv0
            else:
                val = -(acc * inv0)
            if not val.is_zero():
                ycoeffs[-v + k] = val
        return TLaurent(self.field, self.N, ycoeffs, out_prec)

    def __eq__(self, other):
        if not isinstance(other, TLaurent):
            return NotImplemented
        a, b = self._align(other)
        return a.coeffs == b.coeffs and a.prec == b.prec

    __hash__ = None

    def agrees_with(self, other, upto=None):
        """Equality of all coefficients below min(precisions, upto)."""
        d = self - other
        prec = _minprec(d.prec, upto)
        if prec is None:
            return not d.coeffs
        return all(e >= prec for e in d.coeffs)

    def __repr__(self):
        terms = ", ".join("t^%d: %r" % (e, c) for e, c in sorted(self.coeffs.items()))
        return "TLaurent({%s}, prec=%s)" % (terms, self.prec)
