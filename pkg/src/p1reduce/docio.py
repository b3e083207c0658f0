"""JSON wire format for cocycles and results.

An input document looks like

    {"field": "Q", "group": "SL", "rank": 2,
     "pi_denominator": 1, "t_precision": 32,
     "entries": [[[{"c": 1, "t": 1, "pi": 0}], [{"c": 1, "t": 0, "pi": 1}]],
                 [[], [{"c": 1, "t": -1, "pi": 0}]]]}

Each matrix entry is a list of terms, a term being c * pi^pi * t^t with c a
rational (or F_p) coefficient written as an int or "a/b" string and pi a
rational exponent whose denominator divides pi_denominator.  Serialization
orders terms by (t, pi) so round-trips are canonical.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .bundles import LoopCocycle
from .errors import P1ReduceError
from .groundfield import GroundField, QQ
from .scalars import PuiseuxScalar
from .series import TLaurent


class DocumentError(P1ReduceError):
    """The input document is malformed or inconsistent."""


def field_from_name(name):
    if isinstance(name, dict):
        return GroundField.from_json(name)
    if name in ("Q", "QQ", "rationals"):
        return QQ
    m = re.fullmatch(r"F(\d+)", str(name))
    if m:
        return GroundField("prime", int(m.group(1)))
    raise DocumentError("unknown field %r (use \"Q\" or \"F<p>\")" % (name,))


def field_to_name(field):
    return "Q" if field.kind == "rationals" else "F%d" % field.p


def _frac(v, what):
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError):
            pass
    raise DocumentError("bad %s: %r" % (what, v))


def _frac_str(f):
    f = Fraction(f)
    return f.numerator if f.denominator == 1 else "%d/%d" % (f.numerator, f.denominator)


def terms_to_entry(terms, field, N, prec=None):
    if not isinstance(terms, list):
        raise DocumentError("matrix entry must be a list of terms, got %r" % (terms,))
    coeffs = {}
    for term in terms:
        if not isinstance(term, dict) or "c" not in term:
            raise DocumentError("bad term %r" % (term,))
        try:
            c = field.coerce(term["c"])
        except (TypeError, ValueError) as exc:
            raise DocumentError("bad coefficient %r: %s" % (term.get("c"), exc))
        te = term.get("t", 0)
        if not isinstance(te, int):
            raise DocumentError("t-exponent must be an integer, got %r" % (te,))
        pe = _frac(term.get("pi", 0), "pi-exponent")
        if (pe * N).denominator != 1:
            raise DocumentError(
                "pi-exponent %s needs pi_denominator divisible by %d"
                % (pe, pe.denominator)
            )
        s = PuiseuxScalar.constant(field, c, N).times_pi(pe)
        coeffs[te] = coeffs[te] + s if te in coeffs else s
    return TLaurent(field, N, coeffs, prec)


def entry_to_terms(entry):
    """Canonical term list of an entry: each Laurent coefficient expanded
    into pi-monomials; requires coefficients that are polynomial in the
    pi-root (true for everything the engine emits)."""
    out = []
    for te in sorted(entry.coeffs):
        c = entry.coeffs[te]
        for pe, gc in _pi_monomials(c):
            out.append({"c": _coeff_json(gc), "t": te, "pi": _frac_str(pe)})
    return out


def _pi_monomials(scalar):
    """(exponent, ground coefficient) pairs of a scalar, lowest pi first."""
    den = list(scalar.den)
    if len(den) != 1:
        raise DocumentError("entry has a pi-denominator; not serializable as terms")
    d = den[0]
    for i, c in enumerate(scalar.num):
        if c:
            yield Fraction(i, scalar.N), c / d


def _coeff_json(c):
    if isinstance(c, Fraction):
        return _frac_str(c)
    return int(c.v)  # FpElement


def parse_document(doc):
    """InputDocument -> (LoopCocycle, t_precision)."""
    if not isinstance(doc, dict):
        raise DocumentError("input document must be a JSON object")
    try:
        field = field_from_name(doc.get("field", "Q"))
        group = doc.get("group", "SL")
        rank = doc["rank"]
        N = doc.get("pi_denominator", 1)
        t_precision = doc.get("t_precision", 32)
        entries_doc = doc["entries"]
    except KeyError as exc:
        raise DocumentError("missing key %s in input document" % exc)
    if group not in ("SL", "GL"):
        raise DocumentError("group must be \"SL\" or \"GL\", got %r" % (group,))
    if not isinstance(rank, int) or rank < 1:
        raise DocumentError("rank must be a positive integer")
    if not isinstance(N, int) or N < 1:
        raise DocumentError("pi_denominator must be a positive integer")
    if not isinstance(t_precision, int) or t_precision < 1:
        raise DocumentError("t_precision must be a positive integer")
    if (not isinstance(entries_doc, list) or len(entries_doc) != rank
            or any(not isinstance(r, list) or len(r) != rank for r in entries_doc)):
        raise DocumentError("entries must be a %dx%d nested list" % (rank, rank))
    base = doc.get("base", "dvr")
    entries = [
        [terms_to_entry(entries_doc[i][j], field, N) for j in range(rank)]
        for i in range(rank)
    ]
    coc = LoopCocycle(rank, group, base, field, N, entries)
    return coc, t_precision


def cocycle_to_json(coc):
    return {
        "field": field_to_name(coc.field),
        "group": coc.group,
        "rank": coc.n,
        "base": coc.base,
        "pi_denominator": coc.N,
        "entries": [[entry_to_terms(x) for x in row] for row in coc.entries],
    }
