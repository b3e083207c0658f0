"""Iterated elementary modification of families of bundles over a DVR.

Input: a cocycle over R = k[[pi]] (possibly with a pi-root adjoined) whose
generic fiber is semistable but whose special fiber is not.  Each step
conjugates a normalized representative by a central one-parameter subgroup
of the Levi of the destabilizing parabolic, pushed as far into the special
fiber as integrality allows.  The special fiber's instability polygon
strictly drops at every step, so the loop terminates in a semistable
special fiber without ever touching the generic one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .bundles import (
    LoopCocycle,
    SplittingType,
    birkhoff_factorize,
    canonical_parabolic,
    coboundary_split,
    h1_project,
    splitting_type,
)
from .errors import (
    AlreadySemistableError,
    BigCellError,
    InternalBoundError,
    NotCoboundaryError,
    PrecisionError,
    UnboundedExponentError,
    UnstableGenericError,
)
from .matrices import (
    mat_copy,
    mat_identity,
    mat_inv,
    mat_mul,
    mat_val_pi,
)
from .series import TLaurent

DEFAULT_MAX_STEPS = 64
DEFAULT_INNER_CAP = 64


@dataclass
class StepTrace:
    before: tuple
    after: tuple | None
    blocks: tuple
    cut: int
    e_star: Fraction
    inner_adjustments: int
    cover_N: int
    # (row, col, twist, CohClass) of the depth that made the step succeed,
    # and the family after the step; kept out of the JSON trace, used by
    # the deformation cross-check
    classes: list = field(default_factory=list)
    post_cocycle: object = None

    def to_json(self):
        return {
            "before": list(self.before),
            "after": list(self.after) if self.after is not None else None,
            "blocks": list(self.blocks),
            "cut": self.cut,
            "e_star": "%d/%d" % (self.e_star.numerator, self.e_star.denominator),
            "inner_adjustments": self.inner_adjustments,
            "N": self.cover_N,
        }


@dataclass
class ReductionResult:
    cocycle: LoopCocycle
    final_type: tuple
    generic_type: tuple
    steps: list = field(default_factory=list)

    def to_json(self):
        return {
            "steps": [s.to_json() for s in self.steps],
            "final": list(self.final_type),
            "generic": list(self.generic_type),
        }


def extend_trivially(coc, d):
    """Pull the family back along pi -> pi^d (adjoin a d-th root of pi)."""
    return coc.extend_pi_root(d)


def normalize_to_canonical(coc, t_precision=None, factorization=None):
    """Left/right-multiply the family so its special fiber is diag(t^{v}).

    The multipliers come from Birkhoff factorization of the special fiber;
    their coefficients are residue constants, hence integral, so the family
    class over R is unchanged.  Raises AlreadySemistableError when there is
    nothing to normalize towards.
    """
    kwargs = {} if t_precision is None else {"t_precision": t_precision}
    fac = factorization
    if fac is None:
        fac = birkhoff_factorize(coc.specialize(), **kwargs)
    if SplittingType(fac.exponents()).is_semistable():
        raise AlreadySemistableError("special fiber is already semistable")
    entries = mat_mul(mat_mul(fac.A, coc.entries), fac.B)
    out = LoopCocycle(coc.n, coc.group, "dvr", coc.field, coc.N, entries)
    return out, fac


def block_ldu(entries, cut, t_precision=None):
    """Factor [[A,B],[C,D]] = v * l * u across the given row/column cut.

    v is block-lower unipotent with corner X = C * A^{-1}, l block diagonal,
    u block-upper unipotent.  Raises BigCellError when the leading block is
    not invertible.
    """
    n = len(entries)
    A = [row[:cut] for row in entries[:cut]]
    B = [row[cut:] for row in entries[:cut]]
    C = [row[:cut] for row in entries[cut:]]
    D = [row[cut:] for row in entries[cut:]]
    try:
        Ainv = mat_inv(A, t_precision)
    except PrecisionError as exc:
        raise BigCellError("leading %dx%d block is not invertible: %s" % (cut, cut, exc))
    X = mat_mul(C, Ainv)
    AinvB = mat_mul(Ainv, B)
    CAinvB = mat_mul(X, B)
    schur = [[D[i][j] - CAinvB[i][j] for j in range(n - cut)] for i in range(n - cut)]
    fld, N = entries[0][0].field, entries[0][0].N
    zero = TLaurent.zero(fld, N)

    def assemble(tl, tr, bl, br):
        top = [tl[i] + tr[i] for i in range(cut)]
        bot = [bl[i] + br[i] for i in range(n - cut)]
        return top + bot

    ident_t = mat_identity(cut, fld, N)
    ident_b = mat_identity(n - cut, fld, N)
    zeros_tr = [[zero] * (n - cut) for _ in range(cut)]
    zeros_bl = [[zero] * cut for _ in range(n - cut)]
    v = assemble(ident_t, zeros_tr, X, ident_b)
    l = assemble(A, zeros_tr, zeros_bl, schur)
    u = assemble(ident_t, AinvB, zeros_bl, ident_b)
    return v, l, u, X


def maximal_central_exponent(X, n1, n2, group):
    """Largest central twist keeping the family integral, from the v-part.

    For the 2-block Levi the cross-block conjugation weight is n/gcd(n1,n2)
    times the primitive generator, so the bound is w * gcd / n (SL) or w
    itself (GL), with w the pi-valuation of X.
    """
    w = mat_val_pi(X)
    if w is None:
        raise UnboundedExponentError(
            "lower-left block vanishes identically; the central exponent is unbounded"
        )
    if w <= 0:
        raise ValueError("family is not normalized: lower-left block is a pi-unit")
    if group == "GL":
        return Fraction(w)
    return Fraction(w) * gcd(n1, n2) / (n1 + n2)


def _ordered_cuts(canon):
    """Cut positions ordered by decreasing slope gap, then by position."""
    cuts = canon.cut_positions()
    gaps = [
        canon.block_values[k] - canon.block_values[k + 1]
        for k in range(len(canon.block_sizes) - 1)
    ]
    order = sorted(range(len(cuts)), key=lambda k: (-gaps[k], cuts[k]))
    return [cuts[k] for k in order]


def _lower_left_w(entries, cut):
    block = [row[:cut] for row in entries[cut:]]
    w = mat_val_pi(block)
    if w is not None:
        return w
    for row in block:
        for x in row:
            if not x.is_exact():
                raise PrecisionError(
                    "lower-left block is zero to precision; cannot bound the twist"
                )
    return None  # exactly zero


def _cross_classes(entries, cut, exponents, w):
    """Obstruction classes of the depth-w lower-left residue.

    Entry (r, c) below the cut, divided by pi^w and reduced, then untwisted
    by the column's t-power, is a cochain for O(a_r - a_c); its class decides
    whether the twist at exponent w changes the special fiber's polygon.
    """
    n = len(entries)
    out = []
    for r in range(cut, n):
        for c in range(cut):
            x = entries[r][c].times_pi(-w).specialize_pi_zero()
            vbar = x.shift_t(exponents[c])  # t^{-a_c} untwist
            d = exponents[r] - exponents[c]
            out.append((r, c, d, vbar, h1_project(vbar, d)))
    return out


def _coboundary_adjust(entries, cut, classes, w):
    """Push the lower-left block one level deeper when all classes vanish."""
    n = len(entries)
    fld, N = entries[0][0].field, entries[0][0].N
    L = mat_identity(n, fld, N)
    U = mat_identity(n, fld, N)
    for r, c, d, vbar, _cls in classes:
        x_out, x_in = coboundary_split(vbar, d)
        if not x_out.is_zero():
            L[r][c] = (-x_out).times_pi(w)
        x_in_tw = x_in.shift_t(d)
        if not x_in_tw.is_zero_to_prec():
            U[r][c] = (-x_in_tw).times_pi(w)
    return mat_mul(mat_mul(L, entries), U)


def langton_step(state, fac, t_precision=None, inner_cap=DEFAULT_INNER_CAP):
    """One elementary modification; returns (new cocycle, StepTrace)."""
    coc, fac = normalize_to_canonical(state, t_precision, factorization=fac)
    exponents = fac.exponents()
    before = SplittingType(exponents)
    canon = canonical_parabolic(before)
    cuts = _ordered_cuts(canon)
    last_exc = None
    for cut in cuts:
        try:
            return _step_at_cut(coc, exponents, before, canon, cut, inner_cap)
        except UnboundedExponentError as exc:
            last_exc = exc
    raise UnstableGenericError(
        "every destabilizing cut has an identically vanishing lower-left block, "
        "so the generic fiber carries the same destabilizing subbundle: %s" % last_exc,
        hn_type=before.exponents,
    )


def _step_at_cut(coc, exponents, before, canon, cut, inner_cap):
    n = coc.n
    entries = mat_copy(coc.entries)
    adjustments = 0
    while True:
        w = _lower_left_w(entries, cut)
        if w is None:
            raise UnboundedExponentError("lower-left block at cut %d is zero" % cut)
        classes = _cross_classes(entries, cut, exponents, w)
        if any(not cls.is_zero() for _, _, _, _, cls in classes):
            break
        prev_w = w
        try:
            entries = _coboundary_adjust(entries, cut, classes, w)
        except NotCoboundaryError as exc:  # pragma: no cover - classes were zero
            raise InternalBoundError("split failed after zero class: %s" % exc)
        adjustments += 1
        new_w = _lower_left_w(entries, cut)
        if new_w is not None and new_w <= prev_w:
            raise InternalBoundError(
                "coboundary adjustment did not raise the pi-level (%s -> %s)"
                % (prev_w, new_w)
            )
        if adjustments > inner_cap:
            raise InternalBoundError(
                "more than %d coboundary adjustments at one step" % inner_cap
            )
    n1, n2 = cut, n - cut
    e_star = Fraction(w) if coc.group == "GL" else Fraction(w) * gcd(n1, n2) / n
    # conjugate by the central cocharacter at pi^{e_star}: cross-block
    # entries scale by pi^{-w} (lower) and pi^{+w} (upper)
    new_entries = [
        [
            entries[i][j].times_pi(-w if (i >= cut and j < cut) else
                                   (w if (i < cut and j >= cut) else 0))
            for j in range(n)
        ]
        for i in range(n)
    ]
    out = LoopCocycle(n, coc.group, "dvr", coc.field, coc.N, new_entries)
    out.validate(check_det=False)
    trace = StepTrace(
        before=before.exponents,
        after=None,
        blocks=canon.block_sizes,
        cut=cut,
        e_star=e_star,
        inner_adjustments=adjustments,
        cover_N=lcm(coc.N, e_star.denominator),
        classes=[(r, c, d, cls) for r, c, d, _vbar, cls in classes],
    )
    return out, trace


_SAMPLE_POINTS = (1, 2, 3, 5, 7, 11)


def generic_splitting_type(coc, t_precision=None):
    """Splitting type of the generic fiber, sampling first.

    The instability polygon is upper semicontinuous over the base, so the
    fiber at any sample point u = c dominates the generic one; a semistable
    sample therefore *certifies* that the generic fiber is semistable (it is
    the unique minimal polygon for the given determinant winding).  Only
    when no sample is semistable do we fall back to exact factorization
    over the fraction field, which is much slower.
    """
    kwargs = {} if t_precision is None else {"t_precision": t_precision}
    starved = None
    sampled = []
    for c in _SAMPLE_POINTS:
        if not coc.field.coerce(c):
            continue  # c reduces to zero in a small prime field
        try:
            fib = coc.evaluate_pi(c)
            st = splitting_type(fib, **kwargs)
        except (ZeroDivisionError, ValueError):
            continue
        except PrecisionError as exc:
            starved = exc
            continue
        if st.is_semistable():
            return st
        sampled.append(st)
    if starved is not None:
        # the samples could not be resolved at this precision; report that
        # rather than guessing, so callers can retry with more
        raise starved
    return splitting_type(coc.as_generic(), **kwargs)


def semistable_reduce(coc, max_steps=DEFAULT_MAX_STEPS, t_precision=None,
                      inner_cap=DEFAULT_INNER_CAP, check_generic=True):
    """Modify the family until the special fiber is semistable.

    Verifies, step by step, that the special polygon strictly drops and
    (optionally) that the generic splitting type never changes.  When a
    truncation runs dry mid-run the whole reduction is retried from the
    (exact) input with doubled working precision, up to two times.
    """
    base_T = t_precision if t_precision is not None else 32
    last = None
    for T in (t_precision, base_T * 2, base_T * 4):
        try:
            return _reduce_once(coc, max_steps, T, inner_cap, check_generic)
        except PrecisionError as exc:
            last = exc
    raise last


def _reduce_once(coc, max_steps, t_precision, inner_cap, check_generic):
    kwargs = {} if t_precision is None else {"t_precision": t_precision}
    coc.validate(check_det=False)
    generic = generic_splitting_type(coc, t_precision)
    if not generic.is_semistable():
        raise UnstableGenericError(
            "generic fiber is unstable with splitting type %s" % (generic.exponents,),
            hn_type=generic.exponents,
        )
    g = coc
    fac = birkhoff_factorize(g.specialize(), **kwargs)
    current = SplittingType(fac.exponents())
    steps = []
    while not current.is_semistable():
        if len(steps) >= max_steps:
            raise InternalBoundError(
                "special fiber still unstable after %d steps" % max_steps
            )
        g, trace = langton_step(g, fac, t_precision=t_precision, inner_cap=inner_cap)
        trace.post_cocycle = g
        fac = birkhoff_factorize(g.specialize(), **kwargs)
        after = SplittingType(fac.exponents())
        trace.after = after.exponents
        if not current.dominates(after, strict=True):
            raise InternalBoundError(
                "instability polygon did not strictly drop: %s -> %s"
                % (current.exponents, after.exponents)
            )
        if check_generic:
            gen_now = generic_splitting_type(g, t_precision)
            if gen_now.exponents != generic.exponents:
                raise InternalBoundError(
                    "generic splitting type changed: %s -> %s"
                    % (generic.exponents, gen_now.exponents)
                )
        steps.append(trace)
        current = after
    return ReductionResult(
        cocycle=g,
        final_type=current.exponents,
        generic_type=generic.exponents,
        steps=steps,
    )
