import pytest

from perminvariants.characters import (
    CharacterTable,
    characters_equal_on_group,
    chi_character,
    chi_of,
    sign_character,
    trivial_character,
)
from perminvariants.perms import Permutation, group_from_cycles, parse_cycles


def test_chi_of_transposition():
    assert chi_of(parse_cycles("(1 2)", 2), [(1, 2)]) == -1


def test_chi_of_three_cycle_in_s3():
    # (1 2 3) reverses (1,3) and (2,3) but not (1,2): s = 2
    sigma = parse_cycles("(1 2 3)", 3)
    assert chi_of(sigma, [(1, 2), (1, 3), (2, 3)]) == 1
    assert chi_of(sigma, [(3, 1), (2, 1), (3, 2)]) == 1


def test_chi_of_empty():
    assert chi_of(parse_cycles("(1 2 3 4)", 4), []) == 1


def test_chi_accepts_permutations():
    t = Permutation.transposition(1, 3, 3)
    assert chi_of(parse_cycles("(1 3)", 3), [t]) == -1


def test_equal_on_s3():
    g = group_from_cycles(["(1 2)", "(1 2 3)"], 3)
    assert characters_equal_on_group(g, sign_character(g), chi_character(g))


def test_not_equal_on_c4():
    g = group_from_cycles(["(1 2 3 4)"], 4)
    assert chi_character(g).is_trivial()
    assert not characters_equal_on_group(g, sign_character(g), chi_character(g))


def test_trivial_group():
    g = group_from_cycles([], 3)
    assert characters_equal_on_group(g, sign_character(g), trivial_character(g))


def test_table_validation():
    g = group_from_cycles(["(1 2)"], 2)
    with pytest.raises(ValueError):
        CharacterTable(g, {Permutation.identity(2): 1})
    with pytest.raises(ValueError):
        CharacterTable.from_function(g, lambda s: 2)


def test_corpus_characters_multiplicative(corpus):
    for name, g in corpus.items():
        if g.order > 200:
            continue
        for table in (sign_character(g), chi_character(g)):
            assert table.is_multiplicative(), name
            assert table[Permutation.identity(g.n)] == 1
            assert set(table.values.values()) <= {1, -1}


def test_chi_equals_sign_when_generated_by_transpositions(corpus):
    for name, g in corpus.items():
        if g.is_generated_by_transpositions():
            assert characters_equal_on_group(g, sign_character(g), chi_character(g)), name


def test_quotient():
    g = group_from_cycles(["(1 2 3 4)"], 4)
    q = sign_character(g).quotient(chi_character(g))
    assert q == sign_character(g)
