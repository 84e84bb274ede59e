"""Exact univariate polynomials and rational functions over Q, and the Molien
sums built from them.

Everything is ``fractions.Fraction``; there is no floating point anywhere.
"""

from __future__ import annotations

import math
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, Sequence

from .characters import CharacterTable
from .perms import CycleType, PermGroup


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Poly:
    """Polynomial in ``t`` with rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c) -> Poly:
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> Poly:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int | None:
        """``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> Fraction:
        return self.coeffs[-1]

    def low(self) -> Fraction:
        """Lowest-order nonzero coefficient."""
        return next(c for c in self.coeffs if c != 0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: Poly) -> Poly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lb = other.lead()
        quo = [Fraction(0)] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1, db - 1, -1):
            q = rem[k] / lb
            if q:
                quo[k - db] = q
                for j, y in enumerate(other.coeffs):
                    rem[k - db + j] -= q * y
        return Poly(quo), Poly(rem[:db])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        return self * (1 / self.lead()) if self.coeffs else self

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            var = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            body = str(mag) if not var else (var if mag == 1 else f"{mag}*{var}")
            terms.append(("-" if c < 0 else "+", body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for s, body in terms[1:]:
            out += f" {s} {body}"
        return out


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by Euclid, normalising each remainder to keep sizes down."""
    a, b = a.monic(), b.monic()
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a


class RationalFunction:
    """``numerator / denominator`` kept in canonical form.

    Canonical form: numerator and denominator are coprime and the
    denominator's lowest-order nonzero coefficient is 1.  Two equal rational
    functions therefore have identical representations.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Poly, denominator: Poly | None = None):
        if denominator is None:
            denominator = Poly([1])
        if denominator.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if numerator.is_zero():
            numerator, denominator = Poly(), Poly([1])
        else:
            g = poly_gcd(numerator, denominator)
            if g.degree:
                numerator, denominator = numerator // g, denominator // g
            scale = 1 / denominator.low()
            numerator, denominator = numerator * scale, denominator * scale
        self.numerator = numerator
        self.denominator = denominator

    @classmethod
    def from_integer_arrays(cls, num: Sequence[int], den: Sequence[int]) -> RationalFunction:
        return cls(Poly(num), Poly(den))

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __add__(self, other: RationalFunction) -> RationalFunction:
        if self.denominator == other.denominator:
            return RationalFunction(self.numerator + other.numerator, self.denominator)
        return RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other: RationalFunction) -> RationalFunction:
        return self + (-other)

    def __mul__(self, other) -> RationalFunction:
        if isinstance(other, (int, Fraction)):
            return RationalFunction(self.numerator * other, self.denominator)
        return RationalFunction(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    __rmul__ = __mul__

    def __truediv__(self, other: RationalFunction) -> RationalFunction:
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(
            self.numerator * other.denominator, self.denominator * other.numerator
        )

    def degree(self) -> int:
        return rf_degree(self)

    def expand(self, cutoff: int) -> list[Fraction]:
        return expand_series(self, cutoff)

    def to_integer_arrays(self) -> tuple[list[int], list[int]]:
        """Primitive integer coefficient arrays, lowest degree first.

        Both arrays are scaled by the same positive rational, so the ratio is
        unchanged; the result is deterministic.
        """
        cs = self.numerator.coeffs + self.denominator.coeffs
        lcm = reduce(math.lcm, (c.denominator for c in cs), 1)
        num = [int(c * lcm) for c in self.numerator.coeffs]
        den = [int(c * lcm) for c in self.denominator.coeffs]
        g = reduce(math.gcd, num + den, 0) or 1
        return [x // g for x in num], [x // g for x in den]

    def __repr__(self):
        return f"RationalFunction({self.numerator!r}, {self.denominator!r})"

    def __str__(self):
        return f"({self.numerator}) / ({self.denominator})"


def one_minus_t_pow(k: int) -> Poly:
    return Poly([1] + [0] * (k - 1) + [-1])


@lru_cache(maxsize=None)
def denom_factor_of(ct: CycleType) -> Poly:
    """``det(1 - σt)`` for a permutation of cycle type ``ct``: ``∏ (1 - t^ℓ)``."""
    out = Poly([1])
    for length in ct:
        out = out * one_minus_t_pow(length)
    return out


@lru_cache(maxsize=256)
def molien_series(g: PermGroup, chi: CharacterTable) -> RationalFunction:
    """``(1/|G|) Σ_σ χ(σ) / det(1 - σt)`` reduced to canonical form.

    Terms sharing a cycle type share a denominator, so they are combined
    before the fold.
    """
    weights: dict[CycleType, int] = defaultdict(int)
    for s in g.elements:
        weights[s.cycle_type()] += chi[s]
    total = RationalFunction(Poly())
    for ct in sorted(weights, reverse=True):
        w = weights[ct]
        if w:
            total = total + RationalFunction(Poly([Fraction(w, g.order)]), denom_factor_of(ct))
    return total


def expand_series(rf: RationalFunction, cutoff: int) -> list[Fraction]:
    """Power-series coefficients of ``rf`` in degrees ``0..cutoff``."""
    den = rf.denominator.coeffs
    if not den or den[0] == 0:
        raise ValueError("denominator has zero constant term; not a power series")
    num = rf.numerator.coeffs
    b0 = den[0]
    out: list[Fraction] = []
    for k in range(cutoff + 1):
        acc = num[k] if k < len(num) else Fraction(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc / b0)
    return out


def rf_degree(rf: RationalFunction) -> int:
    """``deg(numerator) - deg(denominator)``."""
    if rf.is_zero():
        raise ValueError("degree of the zero rational function is undefined")
    return rf.numerator.degree - rf.denominator.degree


def young_product_series(blocks: Iterable[Sequence[int]]) -> RationalFunction:
    """Hilbert series of the invariants of a Young subgroup:
    ``∏_blocks ∏_{i=1}^{|A|} 1/(1 - t^i)``."""
    den = Poly([1])
    for block in blocks:
        for i in range(1, len(block) + 1):
            den = den * one_minus_t_pow(i)
    return RationalFunction(Poly([1]), den)
