"""Exact scalars: rational functions in u = pi^(1/N) over a ground field.

A ``PuiseuxScalar`` is a reduced fraction num/den of dense polynomials in u.
The denominator is kept monic and coprime to the numerator, so equality at a
fixed root denominator N is structural.  The pi-valuation of num/den is
(ord_u num - ord_u den)/N, an exact ``Fraction``.

Rescaling N -> N*d substitutes u -> u^d and commutes with all arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

from . import _kernels as K
from .errors import NonIntegralError
from .groundfield import GroundField


def _ord(coeffs):
    for i, c in enumerate(coeffs):
        if c:
            return i
    return None


class PuiseuxScalar:
    __slots__ = ("field", "N", "num", "den")

    def __init__(self, field, N, num, den, _reduced=False):
        self.field = field
        self.N = N
        if not _reduced:
            num, den = self._reduce(list(num), list(den))
        self.num = tuple(num)
        self.den = tuple(den)

    @staticmethod
    def _reduce(num, den):
        if not den:
            raise ZeroDivisionError("zero denominator")
        K.poly_trim(num)
        K.poly_trim(den)
        if not num:
            return [], [den[-1] / den[-1]]
        if len(num) > 1 or len(den) > 1:
            g = K.poly_gcd(num, den)
            if len(g) > 1 or _ord_nonzero(g):
                num = K.poly_divmod(num, g)[0]
                den = K.poly_divmod(den, g)[0]
        lead = den[-1]
        if lead != lead / lead:
            inv = (lead / lead) / lead
            num = [c * inv for c in num]
            den = [c * inv for c in den]
        return num, den

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, field, c, N=1):
        c = field.coerce(c)
        one = field.one
        return cls(field, N, [c], [one], _reduced=True) if c else cls.zero(field, N)

    @classmethod
    def zero(cls, field, N=1):
        return cls(field, N, [], [field.one], _reduced=True)

    @classmethod
    def one_(cls, field, N=1):
        return cls.constant(field, 1, N)

    @classmethod
    def pi_power(cls, field, r, N):
        """pi^r with r*N a (possibly negative) integer."""
        r = Fraction(r)
        e = r * N
        if e.denominator != 1:
            raise ValueError("pi^%s is not representable with N=%d" % (r, N))
        e = int(e)
        one = field.one
        zero = field.zero
        if e >= 0:
            return cls(field, N, [zero] * e + [one], [one], _reduced=True)
        return cls(field, N, [one], [zero] * (-e) + [one], _reduced=True)

    # -- predicates / views -------------------------------------------

    def is_zero(self):
        return not self.num

    def is_constant(self):
        return len(self.num) <= 1 and len(self.den) == 1

    def val_pi(self):
        """Exact pi-valuation as a Fraction; None for the zero scalar."""
        if not self.num:
            return None
        return Fraction(_ord(self.num) - _ord(self.den), self.N)

    def specialize0(self):
        """Evaluate at u = 0 (reduction mod the maximal ideal).

        Requires val_pi >= 0; returns a ground-field element.
        """
        v = self.val_pi()
        if v is None:
            return self.field.zero
        if v < 0:
            raise NonIntegralError("scalar with pi-valuation %s < 0" % v)
        if v > 0:
            return self.field.zero
        on = _ord(self.num)
        od = _ord(self.den)
        return self.num[on] / self.den[od]

    def evaluate(self, c):
        """Evaluate at u = c (a ground-field element); c must avoid the poles."""
        c = self.field.coerce(c)

        def horner(coeffs):
            acc = self.field.zero
            for a in reversed(coeffs):
                acc = acc * c + a
            return acc

        den = horner(self.den)
        if not den:
            raise ZeroDivisionError("denominator vanishes at u = %s" % (c,))
        return horner(self.num) / den if self.num else self.field.zero

    def extend(self, d):
        """Re-express over N' = N*d (substitute u -> u^d)."""
        if d == 1:
            return self
        if d < 1:
            raise ValueError("extension degree must be >= 1")
        return PuiseuxScalar(
            self.field, self.N * d, _stretch(self.num, d), _stretch(self.den, d),
            _reduced=True,
        )

    # -- arithmetic ----------------------------------------------------

    def _align(self, other):
        if self.N == other.N:
            return self, other
        from math import lcm

        M = lcm(self.N, other.N)
        return self.extend(M // self.N), other.extend(M // other.N)

    def __add__(self, other):
        a, b = self._align(other)
        if a.is_constant() and b.is_constant():
            c = (a.num[0] if a.num else a.field.zero) + (b.num[0] if b.num else b.field.zero)
            return PuiseuxScalar.constant(a.field, c, a.N)
        num = K.poly_add(
            K.poly_mul(list(a.num), list(b.den)), K.poly_mul(list(b.num), list(a.den))
        )
        den = K.poly_mul(list(a.den), list(b.den))
        return PuiseuxScalar(a.field, a.N, num, den)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return PuiseuxScalar(
            self.field, self.N, K.poly_neg(list(self.num)), list(self.den), _reduced=True
        )

    def __mul__(self, other):
        a, b = self._align(other)
        if a.is_zero() or b.is_zero():
            return PuiseuxScalar.zero(a.field, a.N)
        if a.is_constant() and b.is_constant():
            return PuiseuxScalar.constant(a.field, a.num[0] * b.num[0], a.N)
        num = K.poly_mul(list(a.num), list(b.num))
        den = K.poly_mul(list(a.den), list(b.den))
        return PuiseuxScalar(a.field, a.N, num, den)

    def __truediv__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        a, b = self._align(other)
        num = K.poly_mul(list(a.num), list(b.den))
        den = K.poly_mul(list(a.den), list(b.num))
        return PuiseuxScalar(a.field, a.N, num, den)

    def inverse(self):
        return PuiseuxScalar.one_(self.field, self.N) / self

    def times_pi(self, r):
        """Multiply by pi^r (r a Fraction with r*N integral)."""
        return self * PuiseuxScalar.pi_power(self.field, r, self.N)

    def __eq__(self, other):
        if not isinstance(other, PuiseuxScalar):
            return NotImplemented
        a, b = self._align(other)
        return a.num == b.num and a.den == b.den

    __hash__ = None

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return "PuiseuxScalar(%s / %s, N=%d)" % (list(self.num), list(self.den), self.N)


def _ord_nonzero(g):
    return _ord(g) not in (None, 0)


def _stretch(coeffs, d):
    if not coeffs:
        return []
    zero = None
    out = []
    for c in coeffs:
        if out:
            out.extend([zero] * (d - 1))
        out.append(c)
    # fill the placeholder zeros with real field zeros
    if coeffs:
        z = coeffs[-1] - coeffs[-1]
        out = [z if c is None else c for c in out]
    return out
