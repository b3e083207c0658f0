"""Root systems, unipotent filtrations and central weights."""

from math import lcm

import pytest

from p1reduce import build_root_system, central_weight, char_bound, unipotent_filtration
from p1reduce.errors import InvalidTypeError

POSITIVE_ROOT_COUNTS = {
    ("A", 3): 6,
    ("B", 3): 9,
    ("C", 3): 9,
    ("D", 4): 12,
    ("G", 2): 6,
    ("F", 4): 24,
    ("E", 6): 36,
    ("E", 7): 63,
    ("E", 8): 120,
}


@pytest.mark.parametrize("label,rank", sorted(POSITIVE_ROOT_COUNTS))
def test_positive_root_counts(label, rank):
    rs = build_root_system(label, rank)
    assert len(rs.positive_roots) == POSITIVE_ROOT_COUNTS[(label, rank)]


def test_reflection_closure_idempotent():
    rs = build_root_system("F", 4)
    C = rs.cartan
    roots = set(rs.positive_roots) | {tuple(-x for x in r) for r in rs.positive_roots}
    for r in roots:
        for i in range(rs.rank):
            pairing = sum(C[i][j] * r[j] for j in range(rs.rank))
            img = list(r)
            img[i] -= pairing
            assert tuple(img) in roots


def test_highest_root_coefficients_bound_filtration():
    for label, rank in sorted(POSITIVE_ROOT_COUNTS):
        rs = build_root_system(label, rank)
        high = rs.highest_root()
        for beta in range(rank):
            levi = frozenset(range(rank)) - {beta}
            pd = unipotent_filtration(rs, levi, beta)
            assert pd.h == max(
                (r[beta] for r in rs.positive_roots if r[beta] >= 1), default=0
            )
            assert pd.h <= max(high)


def test_filtration_level_counting():
    rs = build_root_system("G", 2)
    pd = unipotent_filtration(rs, frozenset({1}), 0)
    # levels are nested and count every root with nonzero beta-coefficient
    sizes = pd.level_sizes()
    assert sizes == sorted(sizes, reverse=True)
    diffs = [sizes[i] - (sizes[i + 1] if i + 1 < len(sizes) else 0)
             for i in range(len(sizes))]
    assert sum(diffs) == sum(1 for r in rs.positive_roots if r[0] >= 1)


def test_central_weight_sl2_borel():
    rs = build_root_system("A", 1)
    pd = unipotent_filtration(rs, frozenset(), 0)
    cw = central_weight(pd, "SL")
    assert cw.kernel_order == 2
    assert pd.h == 1
    assert cw.required_N == 2


def test_central_weight_sl_blocks():
    # SL_n with blocks (n1, n2): coprime blocks give kernel order n
    for n, beta, expected_m in [(3, 0, 3), (3, 1, 3), (4, 1, 2), (4, 0, 4)]:
        rs = build_root_system("A", n - 1)
        levi = frozenset(range(n - 1)) - {beta}
        pd = unipotent_filtration(rs, levi, beta)
        cw = central_weight(pd, "SL")
        assert pd.h == 1  # type A: single level
        assert cw.kernel_order == expected_m


def test_central_weight_required_n_minimal():
    rs = build_root_system("G", 2)
    pd = unipotent_filtration(rs, frozenset({1}), 0)
    cw = central_weight(pd, "simply-connected")
    occupied = [cw.kernel_order * (i + 1)
                for i in range(pd.h) if pd.filtration[i]]
    assert cw.required_N == lcm(*occupied)
    # minimality: no proper divisor is a common multiple of the level weights
    for div in range(1, cw.required_N):
        if cw.required_N % div == 0:
            assert any(div % w for w in occupied)


def test_central_weight_rejects_non_maximal():
    rs = build_root_system("A", 3)
    pd = unipotent_filtration(rs, frozenset({2}), 0)
    with pytest.raises(ValueError):
        central_weight(pd, "SL")


def test_char_bounds_table():
    assert char_bound("A", 5) == "none"
    assert char_bound("B", 4) == "char != 2"
    assert char_bound("C", 3) == "char != 2"
    assert char_bound("D4") == "char != 2"
    assert char_bound("G", 2) == "char > 7"
    assert char_bound("F", 4) == "char > 19"
    assert char_bound("E6") == "char > 19"
    assert char_bound("E7") == "char > 31"
    assert char_bound("E8") == "char > 53"


def test_invalid_types_rejected():
    with pytest.raises(InvalidTypeError):
        build_root_system("H", 3)
    with pytest.raises(InvalidTypeError):
        build_root_system("E", 9)
    with pytest.raises(InvalidTypeError):
        build_root_system("G", 3)
    with pytest.raises(InvalidTypeError):
        char_bound("E", 5)


def test_json_export_shape():
    rs = build_root_system("B", 2)
    doc = rs.to_json()
    assert doc["label"] == "B" and doc["rank"] == 2
    assert sorted(map(tuple, doc["positive_roots"])) == sorted(rs.positive_roots)
    assert doc["cartan"] == [[2, -1], [-2, 2]]
