"""Brute-force cross-checks for the orbit counts.

Two routes that share no code with :mod:`perminvariants.orbits`:

* :func:`brute_dim_by_orbits` joins monomials along generator edges in a
  union-find that also tracks the ``χ`` phase each edge imposes.  A component
  whose phases close up inconsistently supports no semi-invariant; every
  consistent component supports exactly one.
* :func:`fixed_space_dim_mod_p` writes down the representation matrices of the
  generators on the degree-``d`` monomial space over ``F_p`` and computes the
  nullity of the stacked ``σ - χ(σ)`` constraints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from . import limits
from .characters import CharacterTable
from .cohomology import is_prime
from .errors import CapExceededError
from .perms import Permutation, PermGroup


def _monomials(n: int, d: int) -> list[tuple[int, ...]]:
    # Filtered product rather than stars-and-bars, to stay independent of orbits.py.
    count = math.comb(d + n - 1, n - 1)
    cap = limits.current().max_oracle_monomials
    if count > cap:
        raise CapExceededError(f"oracle monomial count {count} exceeds cap {cap}")
    return [e for e in product(range(d + 1), repeat=n) if sum(e) == d]


def _move(sigma: Permutation, m: tuple[int, ...]) -> tuple[int, ...]:
    inv = sigma.inverse().images
    return tuple(m[inv[k] - 1] for k in range(len(m)))


class _PhaseUnionFind:
    """Union-find over ±1-weighted edges ``value[y] = rel * value[x]``."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.phase = [1] * size  # value[x] = phase[x] * value[parent[x]]
        self.rank = [0] * size
        self.contradicted = [False] * size

    def find(self, x: int) -> tuple[int, int]:
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        root = x
        # Compress, accumulating phases from the top of the path down.
        acc = 1
        for node in reversed(path):
            acc *= self.phase[node]
            self.phase[node] = acc
            self.parent[node] = root
        return root, (self.phase[path[0]] if path else 1)

    def union(self, x: int, y: int, rel: int) -> None:
        rx, px = self.find(x)
        ry, py = self.find(y)
        if rx == ry:
            if py != rel * px:
                self.contradicted[rx] = True
            return
        if self.rank[rx] < self.rank[ry]:
            rx, ry, px, py = ry, rx, py, px
        # value[ry] = rel * px * py * value[rx]; symmetric in swapping x and y.
        self.parent[ry] = rx
        self.phase[ry] = rel * px * py
        self.contradicted[rx] = self.contradicted[rx] or self.contradicted[ry]
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1

    def consistent_components(self) -> int:
        return sum(
            1 for x in range(len(self.parent)) if self.parent[x] == x and not self.contradicted[x]
        )


def brute_dim_by_orbits(g: PermGroup, chi: CharacterTable, d: int) -> int:
    """Dimension of the degree-``d`` ``chi``-semi-invariants, via phase union-find."""
    monos = _monomials(g.n, d)
    index = {m: k for k, m in enumerate(monos)}
    uf = _PhaseUnionFind(len(monos))
    for sigma in g.generators:
        rel = chi[sigma]
        for m in monos:
            uf.union(index[m], index[_move(sigma, m)], rel)
    return uf.consistent_components()


@dataclass
class ModularMatrix:
    entries: np.ndarray
    p: int

    def __post_init__(self):
        self.entries = np.asarray(self.entries, dtype=np.int64) % self.p

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def rank(self) -> int:
        a = self.entries.copy()
        rows, cols = a.shape
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.nonzero(a[r:, c])[0]
            if nz.size == 0:
                continue
            piv = r + nz[0]
            if piv != r:
                a[[r, piv]] = a[[piv, r]]
            a[r] = (a[r] * pow(int(a[r, c]), -1, self.p)) % self.p
            below = r + 1 + np.nonzero(a[r + 1:, c])[0]
            if below.size:
                a[below] = (a[below] - np.outer(a[below, c], a[r])) % self.p
            r += 1
        return r

    def nullity(self) -> int:
        return self.shape[1] - self.rank()


def representation_matrix(sigma: Permutation, monos: list[tuple[int, ...]]) -> np.ndarray:
    """Matrix of ``σ`` on the monomial basis ``monos`` (columns = inputs)."""
    index = {m: k for k, m in enumerate(monos)}
    mat = np.zeros((len(monos), len(monos)), dtype=np.int64)
    for k, m in enumerate(monos):
        mat[index[_move(sigma, m)], k] = 1
    return mat


def fixed_space_dim_mod_p(
    g: PermGroup, chi: CharacterTable, d: int, p: int, all_elements: bool = False
) -> int:
    """``dim_{F_p} {v : σ·v = χ(σ) v for every generator σ}`` in degree ``d``.

    With ``all_elements=True`` the constraints are stacked for every group
    element rather than just the generators.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2 and not chi.is_trivial():
        raise ValueError("a nontrivial ±1 character is not realisable over F_2")
    monos = _monomials(g.n, d)
    sigmas = g.elements if all_elements else g.generators
    size = len(monos)
    blocks = [
        representation_matrix(s, monos) - chi[s] * np.eye(size, dtype=np.int64) for s in sigmas
    ]
    if not blocks:
        return size
    return ModularMatrix(np.vstack(blocks), p).nullity()
