"""The reduction engine: normalization, single steps, full runs."""

import random
from fractions import Fraction

import pytest

from p1reduce import (
    QQ,
    SplittingType,
    birkhoff_factorize,
    block_ldu,
    langton_step,
    maximal_central_exponent,
    normalize_to_canonical,
    semistable_reduce,
    splitting_type,
)
from p1reduce.docio import parse_document
from p1reduce.engine import generic_splitting_type
from p1reduce.errors import (
    AlreadySemistableError,
    BigCellError,
    UnboundedExponentError,
    UnstableGenericError,
)
from p1reduce.matrices import mat_agrees, mat_mul, mat_val_pi
from p1reduce.sampling import random_dvr_family

from conftest import cocycle, mat, pi, tl


def ladder_doc(terms):
    """[[t^d, sum of pi-terms], [0, t^-d]] with d from the terms' reach."""
    d = max(t["t"] for t in terms) + 1
    return {
        "field": "Q", "group": "SL", "rank": 2, "pi_denominator": 1,
        "t_precision": 32,
        "entries": [[[{"c": 1, "t": d, "pi": 0}], terms],
                    [[], [{"c": 1, "t": -d, "pi": 0}]]],
    }


# -- building blocks ----------------------------------------------------


def test_block_ldu_reconstructs():
    entries = mat([
        [{0: 1, 1: 2}, {0: 3}, {-1: 1}],
        [{1: 1}, {0: 1}, {2: 5}],
        [{0: pi(1)}, {1: pi(1)}, {0: 1}],
    ])
    v, l, u, X = block_ldu(entries, 2, t_precision=16)
    prod = mat_mul(mat_mul(v, l), u)
    assert mat_agrees(prod, entries, upto=8)
    # v is block-lower unipotent with the pi-valued corner
    assert v[0][1].is_zero() and v[0][2].is_zero() and v[1][2].is_zero()
    assert mat_val_pi(X) == 1


def test_block_ldu_needs_big_cell():
    entries = mat([[{}, {0: 1}], [{0: 1}, {}]])
    with pytest.raises(BigCellError):
        block_ldu(entries, 1, t_precision=8)


def test_maximal_central_exponent():
    X = mat([[{0: pi(1)}]])
    assert maximal_central_exponent(X, 1, 1, "SL") == Fraction(1, 2)
    assert maximal_central_exponent(X, 1, 1, "GL") == 1
    X2 = mat([[{0: pi(2)}]])
    assert maximal_central_exponent(X2, 1, 1, "SL") == 1  # doubling w doubles e*
    assert maximal_central_exponent(X2, 2, 2, "SL") == 1
    with pytest.raises(UnboundedExponentError):
        maximal_central_exponent(mat([[{}]]), 1, 1, "SL")
    with pytest.raises(ValueError):
        maximal_central_exponent(mat([[{0: 1}]]), 1, 1, "SL")


def test_normalize_to_canonical():
    coc, _ = parse_document(ladder_doc([{"c": 1, "t": 0, "pi": 1}]))
    norm, fac = normalize_to_canonical(coc, t_precision=24)
    special = norm.specialize()
    for i in range(2):
        for j in range(2):
            x = special.entries[i][j]
            if i == j:
                assert x.val_t() == fac.d_powers[i]
            else:
                assert x.is_zero_to_prec()


def test_normalize_rejects_semistable():
    coc = cocycle([[{0: 1}, {1: 1}], [{}, {0: 1}]], base="dvr")
    with pytest.raises(AlreadySemistableError):
        normalize_to_canonical(coc, t_precision=16)


# -- one step: the four cocycle conditions ------------------------------


def test_step_satisfies_cocycle_conditions(worked_family_doc):
    coc, T = parse_document(worked_family_doc)
    fac = birkhoff_factorize(coc.specialize(), t_precision=T)
    new, trace = langton_step(coc, fac, t_precision=T)

    # (1) before the twist the reduction is the canonical one: diagonal
    # special fiber with the HN exponents, upper-triangular over the DVR
    assert trace.before == (1, -1)
    assert trace.blocks == (1, 1)

    # (2) the twisted cocycle is integral over the extended DVR
    new.validate(check_det=False)
    assert trace.e_star == Fraction(1, 2)
    assert trace.cover_N == 2

    # (3) its reduction lands in the opposite parabolic: block lower
    # triangular with the same diagonal
    special = new.specialize()
    for i in range(new.n):
        for j in range(i + 1, new.n):
            assert special.entries[i][j].is_zero_to_prec()

    # (4) the obstruction class of the lower-left part is nonzero
    assert any(not cls.is_zero() for _, _, _, cls in trace.classes)


# -- full runs ----------------------------------------------------------


def test_worked_family_end_to_end(worked_family_doc):
    coc, T = parse_document(worked_family_doc)
    res = semistable_reduce(coc, t_precision=T)
    assert res.generic_type == (0, 0)
    assert len(res.steps) == 1
    assert res.steps[0].before == (1, -1)
    assert res.final_type == (0, 0)
    res.cocycle.validate(check_det=False)


def test_multi_step_ladder():
    doc = ladder_doc([{"c": 1, "t": 1, "pi": 1}, {"c": 1, "t": 0, "pi": 2}])
    coc, T = parse_document(doc)
    res = semistable_reduce(coc, t_precision=T)
    path = [SplittingType(s.before) for s in res.steps] + [SplittingType(res.final_type)]
    assert len(res.steps) >= 2
    for a, b in zip(path, path[1:]):
        assert a.dominates(b, strict=True)
    assert res.final_type == (0, 0)


def test_already_semistable_runs_zero_steps():
    coc = cocycle([[{0: 1}, {1: 1}], [{}, {0: 1}]], base="dvr")
    res = semistable_reduce(coc, t_precision=16)
    assert res.steps == []
    assert res.final_type == res.generic_type == (0, 0)


def test_unstable_generic_rejected():
    coc = cocycle([[{1: 1}, {}], [{}, {-1: 1}]], base="dvr")
    with pytest.raises(UnstableGenericError) as err:
        semistable_reduce(coc, t_precision=16)
    assert err.value.hn_type == (1, -1)


def test_generic_sampling_agrees_with_exact():
    rng = random.Random(4)
    for _ in range(5):
        coc, _ = random_dvr_family(rng, QQ, 2)
        st = generic_splitting_type(coc, t_precision=24)
        exact = splitting_type(coc.as_generic(), t_precision=24)
        assert st.exponents == exact.exponents


def test_randomized_families_reduce():
    rng = random.Random(21)
    for _ in range(8):
        n = rng.choice([2, 3])
        coc, special = random_dvr_family(rng, QQ, n)
        res = semistable_reduce(coc, t_precision=32)
        assert res.final_type == res.generic_type
        assert res.steps[0].before == special
        # polygon-area bound on the number of steps
        area = sum(SplittingType(special).polygon) - sum(
            SplittingType(res.generic_type).polygon
        )
        assert 1 <= len(res.steps) <= area
