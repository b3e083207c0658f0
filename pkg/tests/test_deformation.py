"""Contraction families and the first-order class comparison."""

import random

import pytest

from p1reduce import (
    QQ,
    build_levi_family,
    check_fibers,
    check_reduction,
    classes_match,
    first_order_class,
    semistable_reduce,
    splitting_type,
)
from p1reduce.deformation import report_ok
from p1reduce.docio import parse_document
from p1reduce.sampling import random_dvr_family

from conftest import cocycle


def lower_family(lower={0: 1}, exps=(1, -1)):
    """diag(t^-1, t) with a lower-left entry; the basic jumping family."""
    coc = cocycle([[{-exps[0]: 1}, {}], [lower, {-exps[1]: 1}]])
    return build_levi_family(coc, 1, exps)


def test_rejects_bad_shapes():
    not_lower = cocycle([[{-1: 1}, {0: 1}], [{}, {1: 1}]])
    with pytest.raises(ValueError):
        build_levi_family(not_lower, 1, (1, -1))
    dvr = cocycle([[{0: 1}]], base="dvr")
    with pytest.raises(ValueError):
        build_levi_family(dvr, 0, (0,))


def test_fiber_scaling():
    fam = lower_family()
    zero = fam.fiber(0)
    assert zero.entries[1][0].is_zero()
    assert splitting_type(zero).exponents == (1, -1)
    # any nonzero parameter gives the modified (here: semistable) bundle
    for s in (1, 2, 7):
        assert splitting_type(fam.fiber(s)).exponents == (0, 0)


def test_first_order_class_window():
    # untwisting by the column power t^1 sends the t^0 entry to the single
    # basis vector t^1 of H^1(O(-2))
    fam = lower_family(lower={0: 1})
    [(r, c, d, cls)] = first_order_class(fam)
    assert (r, c, d) == (1, 0, -2)
    assert not cls.is_zero()
    # an entry landing outside the window gives the zero class and no jump
    flat = lower_family(lower={1: 1})
    [(_, _, _, cls0)] = first_order_class(flat)
    assert cls0.is_zero()
    assert splitting_type(flat.fiber(1)).exponents == (1, -1)


def test_classes_match_one_global_scalar():
    a = first_order_class(lower_family(lower={0: 2}))
    b = first_order_class(lower_family(lower={0: 6}))
    assert classes_match(a, a)
    assert classes_match(a, b)  # uniform scaling by 3
    # rank-3 with exponents (2, 0, -2): both lower entries at t^-1 land in
    # their windows, so non-uniform scaling across positions must not match
    def fam3(x, y):
        coc = cocycle([
            [{-2: 1}, {}, {}],
            [{-1: x}, {0: 1}, {}],
            [{-1: y}, {}, {2: 1}],
        ])
        return build_levi_family(coc, 1, (2, 0, -2))

    u = first_order_class(fam3(1, 1))
    v = first_order_class(fam3(2, 2))
    w = first_order_class(fam3(2, 3))
    assert classes_match(u, v)
    assert not classes_match(u, w)


def test_check_fibers_report():
    fam = lower_family()
    rep = check_fibers(fam, samples=(1, 2, 3, 5))
    assert rep["levi_type"] == [1, -1]
    assert rep["levi_type_is_diagonal"]
    assert rep["generic_fibers_constant"]
    assert rep["class_nonzero"] and rep["jump_at_zero"] and rep["jump_iff_class"]
    assert rep["matches_engine"] is None
    assert len(rep["fibers"]) == 5 and rep["fibers"][0]["s"] == "0"
    assert report_ok(rep)
    # mismatched engine classes are reported
    other = first_order_class(lower_family(lower={-1: 1, 0: 4}))
    rep2 = check_fibers(fam, engine_classes=other)
    assert rep2["matches_engine"] in (True, False)


def test_check_reduction_on_worked_family(worked_family_doc):
    coc, T = parse_document(worked_family_doc)
    res = semistable_reduce(coc, t_precision=T)
    out = check_reduction(res)
    assert out["all_ok"]
    assert len(out["checks"]) == len(res.steps)
    for rep in out["checks"]:
        assert rep["matches_engine"] is True
        assert rep["class_nonzero"]


def test_check_reduction_randomized():
    rng = random.Random(17)
    for _ in range(5):
        coc, _ = random_dvr_family(rng, QQ, rng.choice([2, 3]))
        res = semistable_reduce(coc, t_precision=32)
        s = rng.randrange(4, 40)
        out = check_reduction(res, samples=(1, 2, 3, s))
        assert out["all_ok"]
