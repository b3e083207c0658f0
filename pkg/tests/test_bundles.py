"""Birkhoff factorization, splitting types and Cech cohomology."""

import random
from fractions import Fraction

import pytest

from p1reduce import (
    QQ,
    SplittingType,
    TLaurent,
    birkhoff_factorize,
    canonical_parabolic,
    coboundary_split,
    cohomology_dims,
    h1_project,
    splitting_type,
)
from p1reduce.errors import NotCoboundaryError, PrecisionError
from p1reduce.matrices import mat_agrees, mat_mul
from p1reduce.sampling import random_residue_cocycle, scramble
from p1reduce.bundles import LoopCocycle

from conftest import F5, F7, cocycle, tl


# -- splitting types and the canonical parabolic ------------------------


def test_splitting_type_sorts_descending():
    s = SplittingType((-1, 2, 0))
    assert s.exponents == (2, 0, -1)
    assert s.polygon == (2, 2, 1)
    assert not s.is_semistable()
    assert SplittingType((1, 1)).is_semistable()


def test_dominance_partial_order():
    a, b = SplittingType((2, -2)), SplittingType((1, -1))
    c = SplittingType((0, 0))
    assert a.dominates(b, strict=True)
    assert b.dominates(c, strict=True)
    assert not c.dominates(b)
    assert b.dominates(b) and not b.dominates(b, strict=True)
    # different totals are incomparable
    assert not SplittingType((1, 0)).dominates(c)


def test_canonical_parabolic_blocks():
    canon = canonical_parabolic(SplittingType((3, 1, 1, -2)))
    assert canon.block_sizes == (1, 2, 1)
    assert canon.block_degrees == (3, 2, -2)
    assert canon.cut_positions() == [1, 3]
    assert canon.dominant_positive == (True, True)
    assert canonical_parabolic(SplittingType((1, 1))).is_semistable()


# -- factorization ------------------------------------------------------


def test_sign_pinning_diagonal():
    """The pinned convention: entry t^d is the degree -d line bundle."""
    coc = cocycle([[{-1: 1}, {}], [{}, {1: 1}]])
    assert splitting_type(coc).exponents == (1, -1)
    fac = birkhoff_factorize(coc)
    assert fac.d_powers == (-1, 1)
    assert fac.exponents() == (1, -1)


def test_factorization_certificate_reconstructs():
    coc = cocycle([[{0: 2, 1: 3}, {-2: 1}], [{1: 5}, {0: 1, 2: -1}]],
                  group="GL")
    fac = birkhoff_factorize(coc, t_precision=24)
    prod = mat_mul(mat_mul(fac.A, coc.entries), fac.B)
    assert mat_agrees(prod, fac.D, fac.certified_precision)
    assert fac.certified_precision > max(fac.d_powers)
    assert list(fac.d_powers) == sorted(fac.d_powers)


def test_factorization_double_coset_invariance():
    rng = random.Random(3)
    for k in range(25):
        field = F7 if k % 3 == 0 else QQ
        coc, expected = random_residue_cocycle(rng, field, rng.choice([2, 3]))
        assert splitting_type(coc).exponents == expected
        # further moves do not change the class
        moved = scramble(coc.entries, rng, field, 1, nops=3)
        coc2 = LoopCocycle(coc.n, coc.group, "residue", field, 1, moved)
        assert splitting_type(coc2).exponents == expected


def test_factorization_unit_series_rank1():
    coc = cocycle([[{0: 1, 1: 2, 3: -1}]], group="GL")
    assert splitting_type(coc).exponents == (0,)


def test_factorization_singular_and_starved():
    sing = cocycle([[{0: 1}, {0: 1}], [{0: 2}, {0: 2}]], group="GL")
    with pytest.raises(ValueError):
        splitting_type(sing)
    starved = cocycle([[{-4: 1}, {}], [{}, tl({4: 1}, prec=5)]], group="GL")
    with pytest.raises(PrecisionError):
        splitting_type(starved)


def test_factorization_rejects_dvr_base():
    coc = cocycle([[{0: 1}]], group="GL", base="dvr")
    with pytest.raises(ValueError):
        birkhoff_factorize(coc)


def test_sl_exponents_sum_zero():
    rng = random.Random(9)
    for _ in range(10):
        coc, _ = random_residue_cocycle(rng, QQ, 3)
        assert sum(splitting_type(coc).exponents) == 0


# -- cohomology ---------------------------------------------------------


def test_cohomology_dims_match_closed_forms():
    for d in range(-6, 7):
        h0, h1 = cohomology_dims(d)
        assert h0 == max(0, d + 1)
        assert h1 == max(0, -d - 1)


def test_h1_project_basis_window():
    # H^1(O(-3)) has basis t^1, t^2
    x = tl({-1: 7, 0: 4, 1: 2, 2: 3, 5: 9})
    cls = h1_project(x, -3)
    assert cls.coordinates == (Fraction(2), Fraction(3))
    assert not cls.is_zero()
    assert h1_project(x, 0).is_zero()
    assert h1_project(tl({-2: 1, 0: 5}), -3).is_zero()


def test_coboundary_split_roundtrip():
    x = tl({-2: 1, 0: 4, 3: 5})
    out, inn = coboundary_split(x, -3)
    assert (out + inn).agrees_with(x)
    assert all(e <= 0 for e in out.coeffs)
    assert all(e >= 3 for e in inn.coeffs)
    with pytest.raises(NotCoboundaryError):
        coboundary_split(tl({1: 1}), -3)


def test_h1_project_needs_window_precision():
    with pytest.raises(PrecisionError):
        h1_project(tl({1: 1}, prec=2), -5)
