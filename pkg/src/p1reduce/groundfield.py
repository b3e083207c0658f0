"""Exact ground fields: the rationals and prime fields F_p.

Every coefficient in the system is either a ``fractions.Fraction`` or an
``FpElement``; no floating point appears anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class FpElement:
    """An element of F_p with the usual arithmetic dunders."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def __add__(self, other):
        return FpElement(self.v + other.v, self.p)

    def __sub__(self, other):
        return FpElement(self.v - other.v, self.p)

    def __neg__(self):
        return FpElement(-self.v, self.p)

    def __mul__(self, other):
        return FpElement(self.v * other.v, self.p)

    def __truediv__(self, other):
        if other.v % other.p == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return FpElement(self.v * pow(other.v, self.p - 2, self.p), self.p)

    def __bool__(self):
        return self.v % self.p != 0

    def __eq__(self, other):
        return isinstance(other, FpElement) and self.p == other.p and self.v == other.v

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return "%d" % self.v


@dataclass(frozen=True)
class GroundField:
    """kind is "rationals" or "prime"; p is set in the prime-field case."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("rationals", "prime"):
            raise ValueError("unknown ground field kind %r" % self.kind)
        if self.kind == "prime":
            if self.p is None or self.p < 2 or not _is_prime(self.p):
                raise ValueError("prime field needs a prime p, got %r" % (self.p,))

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def coerce(self, v):
        """Coerce an int, Fraction, "a/b" string, or field element."""
        if self.kind == "rationals":
            if isinstance(v, Fraction):
                return v
            if isinstance(v, int):
                return Fraction(v)
            if isinstance(v, str):
                return Fraction(v)
            raise TypeError("cannot coerce %r into Q" % (v,))
        if isinstance(v, FpElement):
            if v.p != self.p:
                raise TypeError("wrong characteristic")
            return v
        if isinstance(v, int):
            return FpElement(v, self.p)
        if isinstance(v, str):
            if "/" in v:
                a, b = v.split("/")
                return FpElement(int(a), self.p) / FpElement(int(b), self.p)
            return FpElement(int(v), self.p)
        raise TypeError("cannot coerce %r into F_%d" % (v, self.p))

    def format(self, v):
        """Serialize a field element as a decimal-free string."""
        return str(v)

    def to_json(self):
        if self.kind == "rationals":
            return {"kind": "rationals"}
        return {"kind": "prime", "p": self.p}

    @staticmethod
    def from_json(doc):
        kind = doc.get("kind")
        if kind == "rationals":
            return GroundField("rationals")
        if kind == "prime":
            return GroundField("prime", doc.get("p"))
        raise ValueError("bad ground field document: %r" % (doc,))


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


QQ = GroundField("rationals")
