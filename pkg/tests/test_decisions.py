import pytest

from perminvariants.cohomology import FieldChar
from perminvariants.decisions import (
    ShankWehlauVerdict,
    build_report,
    is_invariant_ring_polynomial_for_N,
    quasi_gorenstein,
    shank_wehlau_verdict,
    splits,
    transvection_count,
)
from perminvariants.perms import group_from_cycles
from perminvariants.series import Poly, RationalFunction, young_product_series

F = FieldChar


@pytest.mark.parametrize(
    "name, p, expected",
    [("C4=<(1234)>", 0, False), ("C4=<(1234)>", 2, True), ("C4=<(1234)>", 3, False), ("A3", 0, True), ("D4", 0, True)],
)
def test_quasi_gorenstein(group, name, p, expected):
    assert quasi_gorenstein(group(name), F(p)) is expected


def test_qg_without_transpositions_iff_alternating(corpus):
    for name, g in corpus.items():
        if g.c == 0:
            for p in (0, 3, 5):
                assert quasi_gorenstein(g, F(p)) == g.is_in_alternating_group(), name


def test_qg_char2_always(corpus):
    assert all(quasi_gorenstein(g, F(2)) for g in corpus.values())


def test_qg_same_for_odd_chars(corpus):
    for name, g in corpus.items():
        assert len({quasi_gorenstein(g, F(p)) for p in (0, 3, 5, 7)}) == 1, name


def test_splits(group, corpus):
    assert splits(group("<(12)(34)(56)>"), F(2)) is False
    assert all(splits(g, F(0)) for g in corpus.values())
    assert splits(group("C4=<(1234)>"), F(3)) is True
    assert splits(group("C4=<(1234)>"), F(2)) is False


def test_transvections(group):
    assert transvection_count(group("S3"), F(2)) == 3
    assert transvection_count(group("S3"), F(5)) == 0
    assert transvection_count(group("A3"), F(2)) == 0


def test_polynomial_for_n(group):
    t = RationalFunction(Poly([1]), Poly([1, -1]) * Poly([1, 0, -1]))
    ok, hilb = is_invariant_ring_polynomial_for_N(group("<(12),(34)>"))
    assert ok and hilb == t * t
    ok, hilb = is_invariant_ring_polynomial_for_N(group("S4"))
    assert hilb == young_product_series([(1, 2, 3, 4)])
    ok, hilb = is_invariant_ring_polynomial_for_N(group("C4=<(1234)>"))
    one_minus_t = Poly([1, -1])
    assert hilb == RationalFunction(Poly([1]), one_minus_t * one_minus_t * one_minus_t * one_minus_t)


def test_shank_wehlau():
    assert shank_wehlau_verdict(group_from_cycles(["(1 2)"], 2), 2) == ShankWehlauVerdict(True, True, True)
    assert shank_wehlau_verdict(group_from_cycles(["(1 2)(3 4)"], 4), 2) == ShankWehlauVerdict(True, False, False)
    assert shank_wehlau_verdict(group_from_cycles(["(1 2 3)"], 3), 2) == ShankWehlauVerdict(False, True, False)
    with pytest.raises(ValueError):
        shank_wehlau_verdict(group_from_cycles([], 2), 4)


def test_uniform_splitting_iff_generated(corpus):
    for name, g in corpus.items():
        every_prime = all(splits(g, F(p)) for p in (2, 3, 5, 7))
        assert every_prime == (g.index_g_n == 1) == g.is_generated_by_transpositions(), name


def test_report_c4(group):
    r = build_report(group("C4=<(1234)>"), [0, 2, 3], 6)
    a = {p: cr.a_invariant for p, cr in r.per_char.items()}
    assert a[2] == -4 and a[0] == a[3]
    assert {p: cr.quasi_gorenstein for p, cr in r.per_char.items()} == {0: False, 2: True, 3: False}
    assert {p: cr.splits for p, cr in r.per_char.items()} == {0: True, 2: False, 3: True}
    assert r.per_char[0].gorenstein is False and r.per_char[3].gorenstein is None
    assert not r.uniformly_split and not r.generated_by_transpositions


def test_report_trivial(group):
    r = build_report(group("trivial"), [0, 2, 3, 5], 4)
    for cr in r.per_char.values():
        assert cr.quasi_gorenstein and cr.splits and cr.a_invariant == -3
    assert r.uniformly_split and r.generated_by_transpositions


@pytest.mark.parametrize("name, n", [("S2", 2), ("S3", 3), ("S4", 4), ("S5", 5)])
def test_report_symmetric(group, name, n):
    r = build_report(group(name), [0, 2, 3], 4)
    for cr in r.per_char.values():
        assert cr.quasi_gorenstein and cr.splits
        assert cr.a_invariant == -n * (n + 1) // 2
    assert r.hilb_degree == -n * (n + 1) // 2


def test_report_dedupes_chars(group):
    r = build_report(group("S2"), [0, 0, F(2), 2], 2)
    assert sorted(r.per_char) == [0, 2]
    with pytest.raises(ValueError):
        build_report(group("S2"), [], 2)
