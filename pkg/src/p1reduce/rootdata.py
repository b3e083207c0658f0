"""Root-system combinatorics for the simple types.

Roots live in the simple-root coordinate basis, so the coefficient of a
distinguished simple root is a direct lookup.  Cartan matrices follow the
Bourbaki numbering.  The module also computes, for a maximal parabolic, the
graded filtration of the unipotent radical, the conjugation weights of the
connected Levi center, and the characteristic bounds table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .errors import InvalidTypeError

VALID_RANKS = {
    "A": (1, None),
    "B": (2, None),
    "C": (3, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

CHAR_BOUNDS = {
    "A": "none",
    "B": "char != 2",
    "C": "char != 2",
    "D": "char != 2",
    "G": "char > 7",
    "F": "char > 19",
    "E6": "char > 19",
    "E7": "char > 31",
    "E8": "char > 53",
}


def cartan_matrix(label, rank):
    """Cartan matrix with C[i][j] = <alpha_j, alpha_i^vee>, Bourbaki numbering."""
    n = rank
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, cij=-1, cji=-1):
        C[i][j] = cij
        C[j][i] = cji

    if label == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif label == "B":
        # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -1, -2)
    elif label == "C":
        # alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -2, -1)
    elif label == "D":
        for i in range(n - 3):
            link(i, i + 1)
        link(n - 3, n - 2)
        link(n - 3, n - 1)
    elif label == "G":
        # alpha_1 short: <alpha_2, alpha_1^vee> = -3
        link(0, 1, -3, -1)
    elif label == "F":
        # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif label == "E":
        # node 2 hangs off node 4; chain 1-3-4-5-6(-7-8) (Bourbaki)
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for a, b in zip(chain, chain[1:]):
            link(a, b)
        link(1, 3)
    return C


@dataclass(frozen=True)
class RootSystem:
    label: str
    rank: int
    simple_roots: tuple
    positive_roots: tuple
    cartan: tuple

    def beta_coefficient(self, root, beta_index):
        return root[beta_index]

    def highest_root(self):
        return max(self.positive_roots, key=sum)

    def to_json(self):
        return {
            "label": self.label,
            "rank": self.rank,
            "positive_roots": [list(r) for r in self.positive_roots],
            "cartan": [list(r) for r in self.cartan],
        }


def build_root_system(label, rank):
    """Generate the full root system by reflection closure of the simple roots."""
    label = label.upper()
    if label not in VALID_RANKS:
        raise InvalidTypeError(
            "unknown type %r; valid labels are A, B, C, D, E, F, G" % label
        )
    lo, hi = VALID_RANKS[label]
    if rank < lo or (hi is not None and rank > hi):
        hi_txt = str(hi) if hi is not None else "any"
        raise InvalidTypeError(
            "invalid rank %d for type %s (valid: %d..%s)" % (rank, label, lo, hi_txt)
        )
    C = cartan_matrix(label, rank)
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    roots = set(simple) | {tuple(-x for x in s) for s in simple}
    frontier = set(roots)
    while frontier:
        new = set()
        for r in frontier:
            for i in range(rank):
                pairing = sum(C[i][j] * r[j] for j in range(rank))
                img = list(r)
                img[i] -= pairing
                img = tuple(img)
                if img not in roots:
                    new.add(img)
        roots |= new
        frontier = new
    positive = sorted(r for r in roots if all(x >= 0 for x in r))
    return RootSystem(
        label=label,
        rank=rank,
        simple_roots=tuple(simple),
        positive_roots=tuple(positive),
        cartan=tuple(tuple(row) for row in C),
    )


@dataclass(frozen=True)
class ParabolicData:
    root_system: RootSystem
    levi_simple_roots: frozenset
    beta: int
    filtration: tuple  # filtration[i] = roots with beta-coefficient >= i+1
    h: int

    def level_sizes(self):
        return [len(s) for s in self.filtration]

    def is_maximal(self):
        return len(self.levi_simple_roots) == self.root_system.rank - 1


def unipotent_filtration(rs, levi_simple_roots, beta):
    """Grade the unipotent radical by the beta-coefficient of its roots."""
    levi = frozenset(levi_simple_roots)
    if beta in levi:
        raise ValueError("beta (index %d) must lie outside the Levi subset" % beta)
    if beta < 0 or beta >= rs.rank:
        raise ValueError("beta index %d out of range for rank %d" % (beta, rs.rank))
    levels = {}
    for r in rs.positive_roots:
        m = r[beta]
        if m >= 1:
            levels.setdefault(m, set()).add(r)
    h = max(levels) if levels else 0
    filtration = []
    for i in range(1, h + 1):
        cur = frozenset().union(*(levels[m] for m in levels if m >= i))
        filtration.append(cur)
    return ParabolicData(
        root_system=rs,
        levi_simple_roots=levi,
        beta=beta,
        filtration=tuple(filtration),
        h=h,
    )


@dataclass(frozen=True)
class CentralWeight:
    kernel_order: int
    level_weights: tuple  # weight of the center-conjugation action on level i
    required_N: int
    cocharacter: tuple  # coordinates in the coroot/cocharacter basis used


def central_weight(pd, group_form="adjoint"):
    """Kernel order and conjugation weights of the connected Levi center.

    The central one-parameter subgroup is the primitive cocharacter of the
    declared form's lattice killed by every Levi simple root; its pairing m
    with beta is the kernel order, the level-i action weight is m*i, and
    required_N is the lcm of the occupied level weights.
    """
    if not pd.is_maximal():
        raise ValueError(
            "central_weight needs a maximal parabolic (one simple root outside "
            "the Levi); got %d outside" % (pd.root_system.rank - len(pd.levi_simple_roots))
        )
    rs = pd.root_system
    n = rs.rank
    C = rs.cartan
    if group_form in ("SL", "simply-connected"):
        # cocharacter lattice = coroot lattice; solve alpha_j(x) = 0, j in Levi
        x = _primitive_coroot_kernel(C, pd.levi_simple_roots, n)
        m = abs(sum(x[i] * C[i][pd.beta] for i in range(n)))
    elif group_form == "adjoint":
        # lattice = coweight lattice; the fundamental coweight of beta works
        x = tuple(1 if i == pd.beta else 0 for i in range(n))  # coweight coords
        m = 1
    elif group_form == "GL":
        # the full diagonal torus contributes a cocharacter with pairing 1
        x = ()
        m = 1
    else:
        raise ValueError("unknown group form %r" % group_form)
    weights = tuple(m * i for i in range(1, pd.h + 1))
    occupied = [m * i for i in range(1, pd.h + 1) if pd.filtration[i - 1]]
    required_N = lcm(*occupied) if occupied else m
    return CentralWeight(
        kernel_order=m, level_weights=weights, required_N=required_N, cocharacter=tuple(x)
    )


def _primitive_coroot_kernel(C, levi, n):
    """Primitive integer vector x with sum_i x_i C[i][j] = 0 for all Levi j."""
    rows = sorted(levi)
    # solve over Q: n unknowns, n-1 equations of rank n-1
    from fractions import Fraction as F

    mat = [[F(C[i][j]) for i in range(n)] for j in rows]
    # append nothing; find nullspace by Gaussian elimination
    ncols = n
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    if len(free) != 1:
        raise ValueError("Levi kernel is not one-dimensional")
    fcol = free[0]
    x = [F(0)] * ncols
    x[fcol] = F(1)
    for rr, c in enumerate(pivots):
        x[c] = -mat[rr][fcol]
    den = lcm(*(xi.denominator for xi in x))
    xi = [int(v * den) for v in x]
    g = 0
    for v in xi:
        g = gcd(g, v)
    xi = [v // g for v in xi]
    if sum(xi) < 0:
        xi = [-v for v in xi]
    return tuple(xi)


def char_bound(label, rank=None):
    """The characteristic condition attached to each simple type."""
    label = label.upper()
    if len(label) > 1 and label[1:].isdigit():
        rank = int(label[1:])
        label = label[0]
    if label == "E":
        if rank not in (6, 7, 8):
            raise InvalidTypeError("type E needs rank 6, 7 or 8")
        return CHAR_BOUNDS["E%d" % rank]
    if label not in VALID_RANKS:
        raise InvalidTypeError("unknown type %r" % label)
    return CHAR_BOUNDS[label]
