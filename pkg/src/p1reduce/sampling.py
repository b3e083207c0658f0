"""Random instance generators for exercising the factorization and engine.

Randomness comes from a caller-supplied ``random.Random`` so runs are
reproducible from a seed.  Generators multiply simple seed matrices by
elementary matrices over the rings that leave the relevant double cosets
unchanged: polynomials in 1/t on the left, polynomials in t on the right,
with coefficients integral over the DVR, so both the generic and the
special isomorphism class of a family are preserved by construction.
"""

from __future__ import annotations

from .bundles import LoopCocycle
from .matrices import mat_identity, mat_mul
from .scalars import PuiseuxScalar
from .series import TLaurent


def _const(field, c, N=1):
    return PuiseuxScalar.constant(field, c, N)


def _poly(rng, field, exps, N=1, pi_val=0, nterms=2):
    """Random Laurent polynomial supported on the given t-exponents."""
    coeffs = {}
    for _ in range(rng.randint(1, nterms)):
        e = rng.choice(exps)
        c = rng.choice([-2, -1, 1, 2])
        s = _const(field, c, N)
        if pi_val:
            s = s.times_pi(pi_val)
        coeffs[e] = coeffs[e] + s if e in coeffs else s
    return TLaurent(field, N, coeffs)


def _apply_elementary(entries, rng, field, N, side, exps, pi_val=0):
    n = len(entries)
    i, j = rng.sample(range(n), 2)
    E = mat_identity(n, field, N)
    E[i][j] = _poly(rng, field, exps, N, pi_val)
    if side == "left":
        return mat_mul(E, entries)
    return mat_mul(entries, E)


def scramble(entries, rng, field, N, nops=4, max_exp=2, integral_pi=False):
    """Multiply by random unipotent elementaries on both sides.

    Left factors use exponents <= 0 (the chart away from the glueing
    point), right factors exponents >= 0 (the disc); determinants stay 1.
    """
    out_exps = list(range(-max_exp, 1))
    in_exps = list(range(0, max_exp + 1))
    for _ in range(nops):
        pv = rng.choice([0, 0, 1]) if integral_pi else 0
        if rng.random() < 0.5:
            entries = _apply_elementary(entries, rng, field, N, "left", out_exps, pv)
        else:
            entries = _apply_elementary(entries, rng, field, N, "right", in_exps, pv)
    return entries


def random_residue_cocycle(rng, field, n, group="SL", spread=2, nops=5):
    """A residue-field cocycle with a known diagonal double coset."""
    while True:
        exps = [rng.randint(-spread, spread) for _ in range(n - 1)]
        last = -sum(exps) if group == "SL" else rng.randint(-spread, spread)
        if abs(last) <= spread:
            exps.append(last)
            break
    entries = [
        [
            TLaurent.t_power(field, exps[i]) if i == j else TLaurent.zero(field)
            for j in range(n)
        ]
        for i in range(n)
    ]
    entries = scramble(entries, rng, field, 1, nops=nops)
    coc = LoopCocycle(n, group, "residue", field, 1, entries)
    return coc, tuple(sorted((-e for e in exps), reverse=True))


def random_dvr_family(rng, field, n, group="SL", max_d=2, max_j=2, nops=4):
    """A family over the DVR: generic fiber semistable, special fiber not.

    Seeds with a 2x2 block [[t^d, c*pi^j], [0, t^-d]] (semistable away from
    pi = 0, splitting (d, -d) at pi = 0) embedded at a random position,
    then scrambles by integral elementaries that fix both fibers' classes.
    Returns (cocycle, special splitting exponents of the seed).
    """
    d = rng.randint(1, max_d)
    j = rng.randint(1, max_j)
    c = rng.choice([1, -1, 2])
    pos = rng.randint(0, n - 2)
    entries = mat_identity(n, field, 1)
    entries[pos][pos] = TLaurent.t_power(field, d)
    entries[pos + 1][pos + 1] = TLaurent.t_power(field, -d)
    entries[pos][pos + 1] = TLaurent.from_scalar(_const(field, c).times_pi(j))
    entries = scramble(entries, rng, field, 1, nops=nops, integral_pi=True)
    coc = LoopCocycle(n, group, "dvr", field, 1, entries)
    special = tuple(sorted([d, -d] + [0] * (n - 2), reverse=True))
    return coc, special
