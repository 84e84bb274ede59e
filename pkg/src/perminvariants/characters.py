"""±1-valued characters of permutation groups.

Besides the trivial and sign characters, the interesting one is the character
by which the group scales the product of ``x_i - x_j`` over its transpositions
``(i j)``, ``i < j``.  That product is never formed; its character value at
``σ`` is ``(-1)**s`` where ``s`` counts the transpositions ``(i, j)`` whose
order ``σ`` reverses.
"""

from __future__ import annotations

from typing import Callable, Iterable

from .perms import Permutation, PermGroup


class CharacterTable:
    """Values of a ±1 character on every element of ``group``."""

    def __init__(self, group: PermGroup, values: dict[Permutation, int], name: str = ""):
        if set(values) != group.element_set:
            raise ValueError("character table must cover exactly the group elements")
        if any(v not in (1, -1) for v in values.values()):
            raise ValueError("character values must be +1 or -1")
        self.group = group
        self.values = dict(values)
        self.name = name

    @classmethod
    def from_function(cls, group: PermGroup, fn: Callable[[Permutation], int], name: str = ""):
        return cls(group, {g: fn(g) for g in group.elements}, name)

    def __getitem__(self, sigma: Permutation) -> int:
        return self.values[sigma]

    def __eq__(self, other):
        if not isinstance(other, CharacterTable):
            return NotImplemented
        return self.group == other.group and self.values == other.values

    def __hash__(self):
        return hash((self.group, frozenset(self.values.items())))

    def __repr__(self):
        return f"CharacterTable({self.name or 'unnamed'}, order={self.group.order})"

    def is_trivial(self) -> bool:
        return all(v == 1 for v in self.values.values())

    def kernel(self) -> set[Permutation]:
        return {g for g, v in self.values.items() if v == 1}

    def is_multiplicative(self) -> bool:
        vals = self.values
        return all(vals[a * b] == vals[a] * vals[b] for a in vals for b in vals)

    def quotient(self, other: CharacterTable) -> CharacterTable:
        """Pointwise ``self / other`` (for ±1 values, the product)."""
        return CharacterTable(
            self.group,
            {g: v * other.values[g] for g, v in self.values.items()},
            f"{self.name}/{other.name}",
        )


def chi_of(sigma: Permutation, t_set: Iterable[Permutation | tuple[int, int]]) -> int:
    """Character value of ``sigma`` on the product of ``x_i - x_j`` over ``t_set``.

    ``t_set`` may hold transpositions or ``(i, j)`` pairs; pairs are normalised
    to ``i < j``.
    """
    s = 0
    for t in t_set:
        i, j = t.moved_pair() if isinstance(t, Permutation) else t
        if i > j:
            i, j = j, i
        if sigma(i) > sigma(j):
            s += 1
    return -1 if s % 2 else 1


def trivial_character(g: PermGroup) -> CharacterTable:
    return CharacterTable.from_function(g, lambda _: 1, "trivial")


def sign_character(g: PermGroup) -> CharacterTable:
    return CharacterTable.from_function(g, Permutation.sign, "sign")


def chi_character(g: PermGroup) -> CharacterTable:
    pairs = g.transposition_pairs()
    return CharacterTable.from_function(g, lambda s: chi_of(s, pairs), "chi")


def characters_equal_on_group(g: PermGroup, c1: CharacterTable, c2: CharacterTable) -> bool:
    return all(c1[s] == c2[s] for s in g.elements)
