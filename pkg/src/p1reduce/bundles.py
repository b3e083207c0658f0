"""Bundles on the projective line as loop-group cocycles.

A bundle is glued at a single point p from the trivial bundle on P^1 - p and
on the formal disc at p; the glueing datum is an invertible matrix over
Laurent series in the local coordinate t.  Equivalent cocycles differ by
X * M * Y with X over polynomials in 1/t and Y over power series in t, and
Birkhoff factorization finds the diagonal representative diag(t^{d_i}) of
the double coset.

Sign convention (pinned by the H^0-dimension test in the suite): the
diagonal entry t^d is the line bundle of degree -d, i.e. splitting exponent
a = -d, and dim H^0 of that summand is max(0, a+1).  Consequently
H^1(O(d)) is modeled as k((t)) / (k[1/t] + t^{-d} k[[t]]), with basis the
monomials t^e for 0 < e < -d.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonIntegralError, NotCoboundaryError, PrecisionError
from .groundfield import GroundField
from .matrices import (
    diag_t_powers,
    mat_agrees,
    mat_copy,
    mat_det,
    mat_identity,
    mat_inv,
    mat_min_prec,
    mat_mul,
    mat_specialize,
    mat_extend_pi_root,
)
from .scalars import PuiseuxScalar
from .series import TLaurent

DEFAULT_T_PRECISION = 32


# ---------------------------------------------------------------------------
# cocycles


@dataclass
class LoopCocycle:
    """An n x n invertible matrix of truncated Laurent series."""

    n: int
    group: str  # "SL" | "GL"
    base: str  # "residue" | "dvr" | "generic"
    field: GroundField
    N: int
    entries: list

    def __post_init__(self):
        if self.group not in ("SL", "GL"):
            raise ValueError("group must be SL or GL")
        if self.base not in ("residue", "dvr", "generic"):
            raise ValueError("unknown base tag %r" % self.base)

    def validate(self, check_det=True):
        if self.base in ("residue", "dvr"):
            for i, row in enumerate(self.entries):
                for j, x in enumerate(row):
                    v = x.val_pi()
                    if v is not None and v < 0:
                        raise NonIntegralError(
                            "entry (%d, %d) has pi-valuation %s < 0" % (i, j, v),
                            t_exponent=x.val_t(),
                        )
        if check_det and self.group == "SL":
            d = mat_det(self.entries)
            one = TLaurent.one_(self.field, d.N)
            if not d.agrees_with(one):
                raise ValueError("SL cocycle must have determinant 1")
        return self

    def copy(self):
        return LoopCocycle(self.n, self.group, self.base, self.field, self.N,
                           mat_copy(self.entries))

    def specialize(self):
        """Reduce mod pi^(1/N): the special fiber over the residue field."""
        return LoopCocycle(self.n, self.group, "residue", self.field, self.N,
                           mat_specialize(self.entries))

    def evaluate_pi(self, c):
        """The fiber at the sample point u = c of the base, over the ground
        field.  Raises ZeroDivisionError when c hits a coefficient pole."""
        entries = [[x.evaluate_pi(c) for x in row] for row in self.entries]
        return LoopCocycle(self.n, self.group, "residue", self.field, self.N, entries)

    def as_generic(self):
        """View the same matrix over the fraction field (pi invertible)."""
        return LoopCocycle(self.n, self.group, "generic", self.field, self.N,
                           mat_copy(self.entries))

    def extend_pi_root(self, d):
        return LoopCocycle(self.n, self.group, self.base, self.field, self.N * d,
                           mat_extend_pi_root(self.entries, d))


# ---------------------------------------------------------------------------
# splitting types


@dataclass(frozen=True)
class SplittingType:
    exponents: tuple

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(sorted(self.exponents, reverse=True)))

    @property
    def polygon(self):
        sums, acc = [], 0
        for a in self.exponents:
            acc += a
            sums.append(acc)
        return tuple(sums)

    def is_semistable(self):
        return len(set(self.exponents)) <= 1

    def total(self):
        return sum(self.exponents)

    def dominates(self, other, strict=False):
        """Polygon comparison: self lies weakly above other (more unstable)."""
        pa, pb = self.polygon, other.polygon
        if len(pa) != len(pb) or pa[-1] != pb[-1]:
            return False
        above = all(x >= y for x, y in zip(pa, pb))
        if not above:
            return False
        return any(x > y for x, y in zip(pa[:-1], pb[:-1])) if strict else True


@dataclass(frozen=True)
class CanonicalReductionData:
    block_sizes: tuple
    block_degrees: tuple
    block_values: tuple
    dominant_positive: tuple

    def is_semistable(self):
        return len(self.block_sizes) == 1

    def cut_positions(self):
        """Row indices where a new block starts (the possible maximal Q cuts)."""
        cuts, acc = [], 0
        for s in self.block_sizes[:-1]:
            acc += s
            cuts.append(acc)
        return cuts


def canonical_parabolic(s):
    """Group equal exponents into blocks: the canonical (HN) reduction data."""
    sizes, degrees, values, flags = [], [], [], []
    exps = s.exponents
    i = 0
    while i < len(exps):
        j = i
        while j < len(exps) and exps[j] == exps[i]:
            j += 1
        sizes.append(j - i)
        degrees.append(sum(exps[i:j]))
        values.append(exps[i])
        i = j
    n = len(exps)
    total = sum(exps)
    acc_size, acc_deg = 0, 0
    for k in range(len(sizes) - 1):
        acc_size += sizes[k]
        acc_deg += degrees[k]
        # degree of the dominant character at this cut, cleared of the center
        flags.append(n * acc_deg - acc_size * total > 0)
    return CanonicalReductionData(
        block_sizes=tuple(sizes),
        block_degrees=tuple(degrees),
        block_values=tuple(values),
        dominant_positive=tuple(flags),
    )


# ---------------------------------------------------------------------------
# Birkhoff factorization


@dataclass
class BirkhoffFactorization:
    A: list  # matrix over polynomials in 1/t
    d_powers: tuple  # ascending diagonal t-powers
    B: list  # matrix over power series in t
    certified_precision: int | None
    field: GroundField
    N: int

    @property
    def D(self):
        return diag_t_powers(len(self.d_powers), self.d_powers, self.field, self.N)

    def exponents(self):
        return tuple(-d for d in self.d_powers)


def _scalar_singular(rows):
    """True when the square matrix of exact scalars has zero determinant."""
    n = len(rows)
    work = [row[:] for row in rows]
    for c in range(n):
        piv = next((r for r in range(c, n) if work[r][c]), None)
        if piv is None:
            return True
        work[c], work[piv] = work[piv], work[c]
        inv = work[c][c].inverse()
        for r in range(c + 1, n):
            f = work[r][c]
            if f:
                f = f * inv
                work[r] = [a - b * f for a, b in zip(work[r], work[c])]
    return False


def _residual(p_row, Ms, c, order, zero):
    """Coefficient of t^order in (row vector p_row) * (column c of Ms)."""
    acc = zero
    for j, pj in enumerate(p_row):
        mc = Ms[j][c].coeffs
        for e, coef in pj.coeffs.items():
            x = mc.get(order - e)
            if x is not None:
                acc = acc + coef * x
    return acc


def _stable_order_basis(coc):
    """Minimal approximant basis of the cocycle matrix, iterated to order.

    Writes M = t^mu * M' with M' over power series and maintains row vectors
    p_i over polynomials in t with p_i * M' = 0 mod t^sigma, together with
    their degrees d_i, raising the order one step at a time: at each order
    the residual matrix R (coefficients of t^{sigma-1} of p_i * M') is
    eliminated column by column, and each pivot row is multiplied by t.

    Once the matrix of residuals stays nonsingular, every degree rises in
    lockstep with the order and the readings v_i = mu + sigma - d_i freeze;
    these are the diagonal powers of the Birkhoff factorization.  The
    returned state certifies itself: val(t^{-d_i} p_i M) >= v_i holds
    exactly by construction, the residuals form the unit constant term of
    the power-series factor, and sum(v_i) matching the winding of det M
    forces the 1/t-side factor to have constant determinant.

    Returns (P, deg, sigma, mu) for the last fully processed order sigma.
    """
    if coc.base == "dvr":
        raise ValueError("birkhoff_factorize needs a field base (residue or generic)")
    entries = coc.entries
    n = coc.n
    det = mat_det(entries)
    if det.is_zero_to_prec():
        if det.is_exact():
            raise ValueError("cocycle matrix is singular")
        raise PrecisionError("determinant is zero to precision; raise the t-precision")
    w0 = det.val_t()
    exps = [e for row in entries for x in row for e in x.coeffs]
    mu = min(exps)
    span = max(exps) - mu
    Ms = [[x.shift_t(-mu) for x in row] for row in entries]
    minprec = mat_min_prec(Ms)
    sigma_cap = max(64, 16 * (span + 2))
    window = max(3, n)
    zero = PuiseuxScalar.zero(coc.field, coc.N)
    P = mat_identity(n, coc.field, coc.N)
    deg = [0] * n
    stable = 0
    sigma = 0
    while True:
        sigma += 1
        if minprec is not None and sigma > minprec:
            raise PrecisionError(
                "t-precision exhausted at order %d before the factorization "
                "stabilized; raise the t-precision" % sigma
            )
        if sigma > sigma_cap:
            raise PrecisionError(
                "order-basis iteration did not stabilize within %d orders" % sigma_cap
            )
        R = [[_residual(P[i], Ms, c, sigma - 1, zero) for c in range(n)]
             for i in range(n)]
        if stable >= window:
            vs = [mu + (sigma - 1) - d for d in deg]
            if sum(vs) == w0 and not _scalar_singular(R):
                return P, deg, sigma - 1, mu
        bumped_all = True
        for c in range(n):
            cand = [i for i in range(n) if R[i][c]]
            if not cand:
                bumped_all = False
                continue
            piv = min(cand, key=lambda i: (deg[i], i))
            inv = R[piv][c].inverse()
            for i in cand:
                if i == piv:
                    continue
                f = R[i][c] * inv
                P[i] = [x - y.scale(f) for x, y in zip(P[i], P[piv])]
                R[i] = [a - b * f for a, b in zip(R[i], R[piv])]
            P[piv] = [x.shift_t(1) for x in P[piv]]
            deg[piv] += 1
            R[piv] = [zero] * n
        stable = stable + 1 if bumped_all else 0


def _ordered_exponent_data(P, deg, sigma, mu):
    n = len(P)
    vs = [mu + sigma - deg[i] for i in range(n)]
    order = sorted(range(n), key=lambda i: (vs[i], i))
    return vs, order


def birkhoff_factorize(coc, t_precision=DEFAULT_T_PRECISION):
    """Factor A * M * B = diag(t^{d_1}, ..., t^{d_n}) with d ascending.

    A is invertible over polynomials in 1/t, B over power series in t.  The
    result carries the precision to which the certificate A*M*B = D was
    actually verified; failure to certify raises.
    """
    P, deg, sigma, mu = _stable_order_basis(coc)
    n = coc.n
    vs, order = _ordered_exponent_data(P, deg, sigma, mu)
    d_powers = tuple(vs[i] for i in order)
    A = [[P[i][j].shift_t(-deg[i]) for j in range(n)] for i in order]
    AM = mat_mul(A, coc.entries)
    beta = [[AM[r][c].shift_t(-d_powers[r]) for c in range(n)] for r in range(n)]
    B = mat_inv(beta, t_precision)
    prod = mat_mul(AM, B)
    D = diag_t_powers(n, d_powers, coc.field, coc.N)
    cert = mat_min_prec(prod)
    if not mat_agrees(prod, D, cert):
        raise ArithmeticError("internal error: Birkhoff certificate failed")
    if cert is not None and cert <= max(d_powers):
        raise PrecisionError(
            "certified precision %d does not cover diagonal power %d; "
            "raise the t-precision" % (cert, max(d_powers))
        )
    detB = mat_det(B)
    vb = detB.val_t()
    if vb is None or vb != 0:
        raise ArithmeticError("internal error: B is not a power-series unit")
    return BirkhoffFactorization(
        A=A, d_powers=d_powers, B=B,
        certified_precision=cert, field=coc.field, N=coc.N,
    )


def _exponent_span(entries):
    exps = [e for row in entries for x in row for e in x.coeffs]
    if not exps:
        return 0
    return max(exps) - min(exps)


def splitting_type(coc, t_precision=DEFAULT_T_PRECISION):
    """Splitting exponents (descending) of the bundle glued by the cocycle.

    Uses the order-basis state directly: the stabilized readings are already
    certified, so the power-series factor is never inverted here.
    """
    P, deg, sigma, mu = _stable_order_basis(coc)
    vs, _ = _ordered_exponent_data(P, deg, sigma, mu)
    return SplittingType(tuple(-v for v in vs))


# ---------------------------------------------------------------------------
# Cech cohomology of line bundles O(d) on P^1


@dataclass(frozen=True)
class CohClass:
    twist: int
    coordinates: tuple  # coefficients at t^1 .. t^{-d-1}

    def is_zero(self):
        return all(not c for c in self.coordinates)


def h1_project(x, d):
    """Image of a 1-cochain in H^1(P^1, O(d)) for the two-chart cover."""
    dim = max(0, -d - 1)
    if x.prec is not None and x.prec < dim + 1:
        raise PrecisionError(
            "need coefficients up to t^%d but precision is %d" % (dim, x.prec)
        )
    coords = []
    for e in range(1, dim + 1):
        c = x.coeffs.get(e)
        coords.append(c.specialize0() if c is not None else x.field.zero)
    return CohClass(twist=d, coordinates=tuple(coords))


def coboundary_split(x, d):
    """Split a class-zero cochain into chart-at-infinity and disc parts.

    Returns (x_out, x_in) with x = x_out + x_in, x_out a polynomial in 1/t
    and x_in inside t^{-d} k[[t]].
    """
    cls = h1_project(x, d)
    if not cls.is_zero():
        raise NotCoboundaryError(
            "cochain has nonzero class in H^1(O(%d)): %s" % (d, [str(c) for c in cls.coordinates])
        )
    out = {e: c for e, c in x.coeffs.items() if e <= 0}
    inn = {e: c for e, c in x.coeffs.items() if e > 0}
    for e in inn:
        if e < -d:
            # zero class guarantees these coefficients vanish; reaching here
            # means h1_project and this split disagree
            raise AssertionError("inconsistent coboundary split at t^%d" % e)
    x_out = TLaurent(x.field, x.N, out)
    x_in = TLaurent(x.field, x.N, inn, x.prec)
    return x_out, x_in


def cohomology_dims(d, window=None):
    """(h0, h1) of O(d) by explicit Cech rank computations on monomial bases.

    Works over a finite exponent window in the overlap chart.  Chart bases
    are 1, 1/t, ..., t^-J (away from the glueing point) and t^{-d}, ...,
    t^{-d+J} (on the disc); h0 is the kernel dimension of the difference map
    and h1 the codimension of its image inside the safe middle of the
    window.  Ranks come from Gaussian elimination, not from a closed form.
    """
    J = window if window is not None else 2 * abs(d) + 4
    rows = list(range(-J, J + 1))  # exponents of C^1 monomials
    row_index = {e: i for i, e in enumerate(rows)}
    cols = []
    for j in range(J + 1):
        cols.append(("out", -j))
    for j in range(J + 1):
        if -d + j in row_index:  # keep the disc basis inside the window
            cols.append(("in", -d + j))
    mat = []
    for tag, e in cols:
        col = [Fraction(0)] * len(rows)
        col[row_index[e]] = Fraction(1) if tag == "in" else Fraction(-1)
        mat.append(col)
    rank = _rank(mat)
    h0 = len(mat) - rank
    # image codimension, measured where both bases reach: |e| <= |d| + 1
    W = abs(d) + 1
    mid = [r for r in rows if -W <= r <= W]
    sub = [[col[row_index[e]] for e in mid] for col in mat]
    h1 = len(mid) - _rank(sub)
    return h0, h1


def _rank(columns):
    """Rank of a list of coefficient columns via Gaussian elimination."""
    mat = [list(col) for col in columns]
    nrows = len(mat[0]) if mat else 0
    rank = 0
    pivot_cols = []  # (row, column) of accepted pivots
    for col in mat:
        for r, pcol in pivot_cols:
            if col[r]:
                f = col[r] / pcol[r]
                for rr in range(nrows):
                    col[rr] -= f * pcol[rr]
        piv = next((r for r in range(nrows) if col[r]), None)
        if piv is not None:
            pivot_cols.append((piv, col))
            rank += 1
    return rank
