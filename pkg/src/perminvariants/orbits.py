"""Monomials of a fixed degree, their orbits under a permutation group, and
which orbits are "good" for a ±1 character.

A monomial is an exponent tuple ``m`` of length ``n``.  A permutation acts by
moving exponents: ``(σ·m)[σ(i)] = m[i]``, matching ``σ·x_i = x_{σ(i)}``.

An orbit is good for ``χ`` when the stabiliser of one (equivalently every)
member lies in ``ker χ``.  Good orbits index a basis of the degree-``d``
``χ``-semi-invariants over any field in which ``χ`` makes sense, so their count
is the dimension of that graded piece.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from . import limits
from .characters import CharacterTable
from .errors import CapExceededError, ConsistencyError
from .perms import Permutation, PermGroup

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class OrbitRecord:
    representative: Monomial
    size: int
    good: bool


def act(sigma: Permutation, m: Monomial) -> Monomial:
    out = [0] * len(m)
    for i, e in enumerate(m):
        out[sigma.images[i] - 1] = e
    return tuple(out)


def monomial_count(n: int, d: int) -> int:
    return math.comb(d + n - 1, n - 1)


def _descending(n: int, d: int) -> Iterator[Monomial]:
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _descending(n - 1, d - first):
            yield (first,) + rest


def enumerate_monomials(n: int, d: int) -> list[Monomial]:
    """All degree-``d`` exponent vectors in ``n`` variables, lexicographically
    decreasing (``(2,0), (1,1), (0,2)`` for ``n = d = 2``)."""
    if n < 1 or d < 0:
        raise ValueError(f"need n >= 1 and d >= 0, got n={n}, d={d}")
    count = monomial_count(n, d)
    cap = limits.current().max_monomials
    if count > cap:
        raise CapExceededError(f"{count} monomials of degree {d} in {n} variables exceeds cap {cap}")
    return list(_descending(n, d))


def stabilizer_of(m: Monomial, g: PermGroup) -> set[Permutation]:
    if len(m) != g.n:
        raise ValueError(f"monomial has {len(m)} exponents, group acts on {g.n} points")
    return {s for s in g.elements if act(s, m) == m}


def is_chi_good(m: Monomial, g: PermGroup, chi: CharacterTable) -> bool:
    return all(chi[s] == 1 for s in stabilizer_of(m, g))


@lru_cache(maxsize=512)
def _orbit_structure(g: PermGroup, d: int) -> tuple[tuple[Monomial, int, frozenset[Permutation]], ...]:
    """``(canonical representative, orbit size, stabiliser)`` for each orbit.

    The canonical representative is the lexicographically greatest member.
    """
    seen: set[Monomial] = set()
    out = []
    for m in enumerate_monomials(g.n, d):
        if m in seen:
            continue
        orbit = {act(s, m) for s in g.elements}
        seen |= orbit
        rep = max(orbit)
        stab = frozenset(s for s in g.elements if act(s, rep) == rep)
        out.append((rep, len(orbit), stab))
    return tuple(out)


def orbit_decompose(g: PermGroup, d: int, chi: CharacterTable) -> list[OrbitRecord]:
    return [
        OrbitRecord(rep, size, all(chi[s] == 1 for s in stab))
        for rep, size, stab in _orbit_structure(g, d)
    ]


def count_orbits(g: PermGroup, d: int) -> int:
    return len(_orbit_structure(g, d))


def count_good_orbits(g: PermGroup, chi: CharacterTable, d: int) -> int:
    return sum(rec.good for rec in orbit_decompose(g, d, chi))


def min_good_degree(g: PermGroup, chi: CharacterTable) -> int:
    """Least ``d`` with a ``chi``-good monomial of degree ``d``.

    The staircase monomial ``(0, 1, ..., n-1)`` has trivial stabiliser, so the
    scan stops by ``n(n-1)/2``.
    """
    bound = g.n * (g.n - 1) // 2
    for d in range(bound + 1):
        if count_good_orbits(g, chi, d):
            return d
    raise ConsistencyError(f"no good monomial up to degree {bound}; staircase argument violated")
