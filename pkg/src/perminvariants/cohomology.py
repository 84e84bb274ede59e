"""Hilbert functions of top local cohomology, the canonical module, and the
a-invariant of a permutation invariant ring.

Local cohomology appears here only through Hilbert-function windows.  Over a
field of characteristic ``p``:

* ``H_m^n(S)^G`` in degree ``-n-d`` has dimension equal to the number of
  sign-good monomial orbits of degree ``d`` (all orbits when ``p == 2``, where
  the sign character is trivial).  Graded duality becomes degree negation.
* ``H_n^n(S^G)`` has the same Hilbert function when ``p != 2``; when ``p == 2``
  it is the same function moved down by ``c`` degrees, ``c`` the number of
  transpositions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .characters import CharacterTable, sign_character, trivial_character
from .errors import ConsistencyError
from .orbits import count_good_orbits, min_good_degree
from .perms import PermGroup
from .series import molien_series, rf_degree


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True, order=True)
class FieldChar:
    p: int

    def __post_init__(self):
        if self.p != 0 and not is_prime(self.p):
            raise ValueError(f"characteristic must be 0 or a prime, got {self.p}")

    @property
    def is_two(self) -> bool:
        return self.p == 2

    def __str__(self):
        return str(self.p)


@dataclass(frozen=True)
class GradedWindow:
    """Dimensions of a graded vector space on the degrees ``lo..hi``."""

    lo: int
    hi: int
    dims: dict[int, int] = field(hash=False)

    def __post_init__(self):
        if set(self.dims) != set(range(self.lo, self.hi + 1)):
            raise ValueError("window dims must be defined exactly on [lo, hi]")

    def __getitem__(self, degree: int) -> int:
        return self.dims[degree]

    def as_list(self) -> list[int]:
        """Dimensions from ``lo`` up to ``hi``."""
        return [self.dims[j] for j in range(self.lo, self.hi + 1)]

    def top_nonzero_degree(self) -> int | None:
        for j in range(self.hi, self.lo - 1, -1):
            if self.dims[j]:
                return j
        return None

    def shifted(self, t: int) -> GradedWindow:
        """The window of ``M(t)``: ``[M(t)]_j = [M]_{j+t}``."""
        return GradedWindow(self.lo - t, self.hi - t, {j - t: v for j, v in self.dims.items()})


class CanonicalBase(str, Enum):
    INVARIANT_RING = "invariant-ring"
    SIGN_SEMI_INVARIANTS = "sign-semi-invariants"


@dataclass(frozen=True)
class CanonicalDescriptor:
    """The canonical module is ``base`` shifted: ``ω ≅ base(shift)``."""

    base: CanonicalBase
    shift: int


def effective_character(g: PermGroup, char: FieldChar) -> CharacterTable:
    """Sign in characteristic ≠ 2; trivial in characteristic 2, where ``-1 = 1``."""
    return trivial_character(g) if char.is_two else sign_character(g)


def hilb_top_cohomology_invariants(g: PermGroup, char: FieldChar, depth: int) -> GradedWindow:
    """Hilbert function of ``H_m^n(S)^G`` on degrees ``[-n-depth, -n]``."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    chi = effective_character(g, char)
    dims = {-g.n - d: count_good_orbits(g, chi, d) for d in range(depth + 1)}
    return GradedWindow(-g.n - depth, -g.n, dims)


def hilb_top_cohomology_of_invariant_ring(g: PermGroup, char: FieldChar, depth: int) -> GradedWindow:
    """Hilbert function of ``H_n^n(S^G)``.

    Equal to :func:`hilb_top_cohomology_invariants` unless ``char == 2``, in
    which case the window sits ``c`` degrees lower, on ``[-(c+n)-depth, -(c+n)]``.
    """
    window = hilb_top_cohomology_invariants(g, char, depth)
    if char.is_two:
        return window.shifted(g.c)
    return window


def a_invariant(g: PermGroup, char: FieldChar) -> int:
    """Top nonvanishing degree of ``H_n^n(S^G)``.

    Characteristic 2: ``-(c+n)``.  Otherwise ``-(d+n)`` for ``d`` the least
    degree of a monomial whose stabiliser is even; this is cross-checked
    against the degree of the Molien series of ``S^G``.
    """
    if char.is_two:
        return -(g.c + g.n)
    by_orbits = -(min_good_degree(g, sign_character(g)) + g.n)
    by_series = rf_degree(molien_series(g, trivial_character(g)))
    if by_orbits != by_series:
        raise ConsistencyError(
            f"a-invariant routes disagree for {g}: orbit scan {by_orbits}, Hilbert degree {by_series}"
        )
    return by_orbits


def canonical_descriptor(g: PermGroup, char: FieldChar) -> CanonicalDescriptor:
    if char.is_two:
        return CanonicalDescriptor(CanonicalBase.INVARIANT_RING, -(g.c + g.n))
    return CanonicalDescriptor(CanonicalBase.SIGN_SEMI_INVARIANTS, -g.n)
