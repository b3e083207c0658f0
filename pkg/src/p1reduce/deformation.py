"""One-parameter contraction of a modified fiber onto its graded form.

After an elementary modification the special fiber is block lower
triangular: diagonal blocks t^{v_i}, a nontrivial lower-left part, zero
above.  Scaling the lower-left block by a parameter s gives a family over
the affine line whose fiber at s = 0 is the block-diagonal (destabilized)
bundle and whose fibers at s != 0 are all isomorphic to the modified one.
The first-order behaviour at s = 0 is a cohomology class that must agree,
up to one overall scalar, with the obstruction class the reduction engine
used to certify the step.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bundles import LoopCocycle, h1_project, splitting_type


@dataclass
class LeviFamily:
    """The contraction family of a block lower triangular residue cocycle."""

    cocycle: LoopCocycle
    cut: int
    exponents: tuple  # splitting exponents of the diagonal, descending

    def __post_init__(self):
        coc = self.cocycle
        if coc.base != "residue":
            raise ValueError("contraction families live over the residue field")
        for i in range(self.cut):
            for j in range(self.cut, coc.n):
                if not coc.entries[i][j].is_zero_to_prec():
                    raise ValueError(
                        "entry (%d, %d) above the cut is nonzero; the cocycle "
                        "is not block lower triangular" % (i, j)
                    )

    def fiber(self, s):
        """The cocycle at parameter value s (a ground-field element)."""
        coc = self.cocycle
        sc = coc.field.coerce(s)
        entries = []
        for i in range(coc.n):
            row = []
            for j in range(coc.n):
                x = coc.entries[i][j]
                if i >= self.cut > j:
                    x = x.scale(_const(coc, sc))
                row.append(x)
            entries.append(row)
        return LoopCocycle(coc.n, coc.group, "residue", coc.field, coc.N, entries)


def _const(coc, c):
    from .scalars import PuiseuxScalar

    return PuiseuxScalar.constant(coc.field, c, coc.N)


def build_levi_family(residue_cocycle, cut, exponents):
    return LeviFamily(cocycle=residue_cocycle, cut=cut,
                      exponents=tuple(exponents))


def first_order_class(family):
    """d/ds at s = 0 of the family, as classes [(row, col, twist, class)].

    The s-linear term is the lower-left block itself; untwisting each entry
    by the diagonal t-power of its column makes it a cochain for
    O(a_row - a_col).
    """
    coc = family.cocycle
    out = []
    for r in range(family.cut, coc.n):
        for c in range(family.cut):
            x = coc.entries[r][c]
            vbar = x.shift_t(family.exponents[c])
            d = family.exponents[r] - family.exponents[c]
            out.append((r, c, d, h1_project(vbar, d)))
    return out


def classes_match(a, b):
    """Do two class lists agree up to a single overall nonzero scalar?"""
    pos_a = {(r, c): (d, cls) for r, c, d, cls in a}
    pos_b = {(r, c): (d, cls) for r, c, d, cls in b}
    if pos_a.keys() != pos_b.keys():
        return False
    lam = None
    for key, (da, ca) in pos_a.items():
        db, cb = pos_b[key]
        if da != db or len(ca.coordinates) != len(cb.coordinates):
            return False
        for x, y in zip(ca.coordinates, cb.coordinates):
            if bool(x) != bool(y):
                return False
            if not x:
                continue
            ratio = y / x
            if lam is None:
                lam = ratio
            elif ratio != lam:
                return False
    return True


def check_fibers(family, engine_classes=None, samples=(1, 2, 3),
                 t_precision=None):
    """Splitting types across the contraction family, as a JSON-able report.

    Verifies that the s = 0 fiber has the diagonal (destabilized) type, that
    all s != 0 fibers share one type, and that the first-order class at
    s = 0 is nonzero exactly when those two types differ.  When the engine's
    own obstruction classes are supplied, checks they agree with the family's
    first-order class up to one overall scalar.
    """
    kwargs = {} if t_precision is None else {"t_precision": t_precision}
    fibers = []
    nonzero_types = set()
    for s in (0,) + tuple(samples):
        st = splitting_type(family.fiber(s), **kwargs)
        fibers.append({"s": str(s), "type": list(st.exponents)})
        if s != 0:
            nonzero_types.add(st.exponents)
    levi_type = tuple(fibers[0]["type"])
    ok_levi = levi_type == tuple(sorted(family.exponents, reverse=True))
    ok_constant = len(nonzero_types) == 1
    foc = first_order_class(family)
    class_nonzero = any(not cls.is_zero() for _, _, _, cls in foc)
    jumps = ok_constant and next(iter(nonzero_types)) != levi_type
    matches = None
    if engine_classes is not None:
        matches = classes_match(foc, engine_classes)
    return {
        "fibers": fibers,
        "levi_type": list(levi_type),
        "levi_type_is_diagonal": ok_levi,
        "generic_fibers_constant": ok_constant,
        "class_nonzero": class_nonzero,
        "jump_at_zero": jumps,
        "jump_iff_class": jumps == class_nonzero,
        "matches_engine": matches,
    }


def report_ok(report):
    return (report["levi_type_is_diagonal"] and report["generic_fibers_constant"]
            and report["jump_iff_class"]
            and report["matches_engine"] in (None, True))


def check_reduction(result, samples=(1, 2, 3), t_precision=None):
    """Contraction-family checks for every step of a finished reduction."""
    reports = []
    for step in result.steps:
        family = build_levi_family(
            step.post_cocycle.specialize(), step.cut, step.before
        )
        reports.append(
            check_fibers(family, engine_classes=step.classes, samples=samples,
                         t_precision=t_precision)
        )
    return {"checks": reports, "all_ok": all(report_ok(r) for r in reports)}
