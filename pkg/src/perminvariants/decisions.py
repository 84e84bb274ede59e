"""Yes/no verdicts on a permutation invariant ring, and the report that bundles
them with the numerical invariants.

Every verdict with two available derivations computes both and raises
:class:`ConsistencyError` on disagreement.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .characters import (
    characters_equal_on_group,
    chi_character,
    sign_character,
    trivial_character,
)
from .cohomology import (
    CanonicalDescriptor,
    FieldChar,
    GradedWindow,
    a_invariant,
    canonical_descriptor,
    hilb_top_cohomology_invariants,
    hilb_top_cohomology_of_invariant_ring,
    is_prime,
)
from .errors import ConsistencyError
from .perms import PermGroup, generate_group
from .series import RationalFunction, molien_series, rf_degree, young_product_series

DEFAULT_CHARS = (0, 2, 3)


def quasi_gorenstein(g: PermGroup, char: FieldChar) -> bool:
    """Whether the canonical module of ``S^G`` is a shifted copy of ``S^G``.

    Always true in characteristic 2.  Otherwise decided by comparing the sign
    character with the transposition character, and independently by testing
    ``a(S^G) == -(c + n)``.
    """
    if char.is_two:
        return True
    by_characters = characters_equal_on_group(g, sign_character(g), chi_character(g))
    by_degree = a_invariant(g, char) == -(g.c + g.n)
    if by_characters != by_degree:
        raise ConsistencyError(
            f"quasi-Gorenstein routes disagree for {g} in char {char}: "
            f"characters say {by_characters}, a-invariant says {by_degree}"
        )
    return by_characters


def splits(g: PermGroup, char: FieldChar) -> bool:
    """Whether ``S^G ⊂ S`` is a direct summand: ``p`` does not divide ``|G/N|``."""
    return char.p == 0 or g.index_g_n % char.p != 0


def transvection_count(g: PermGroup, char: FieldChar) -> int:
    """Transpositions are transvections exactly in characteristic 2."""
    return g.c if char.is_two else 0


def is_invariant_ring_polynomial_for_N(g: PermGroup) -> tuple[bool, RationalFunction]:
    """``S^N`` is polynomial; return it with its Hilbert series.

    The series is the Young-subgroup product formula, checked against the
    Molien sum over ``N``.
    """
    n_group = generate_group(list(g.transpositions), g.n)
    if n_group.element_set != g.n_subgroup:
        raise ConsistencyError("regenerated transposition subgroup differs from stored one")
    product = young_product_series(g.partition)
    molien = molien_series(n_group, trivial_character(n_group))
    if product != molien:
        raise ConsistencyError(f"Young product series {product} != Molien series {molien} of N")
    return True, product


@dataclass(frozen=True)
class ShankWehlauVerdict:
    is_p_group: bool
    splits: bool
    polynomial: bool  # G == N, so S^G = S^N is a polynomial ring

    @property
    def holds(self) -> bool:
        return not (self.is_p_group and self.splits) or self.polynomial


def shank_wehlau_verdict(g: PermGroup, p: int) -> ShankWehlauVerdict:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return ShankWehlauVerdict(
        is_p_group=g.is_p_group(p),
        splits=splits(g, FieldChar(p)),
        polynomial=g.element_set == g.n_subgroup,
    )


def _primes_up_to(m: int) -> list[int]:
    return [p for p in range(2, m + 1) if is_prime(p)]


@dataclass
class CharReport:
    char: FieldChar
    a_invariant: int
    quasi_gorenstein: bool
    gorenstein: bool | None  # only decided in characteristic 0
    splits: bool
    transvections: int
    canonical: CanonicalDescriptor
    invariants_of_cohomology: GradedWindow
    cohomology_of_invariants: GradedWindow
    shank_wehlau: ShankWehlauVerdict | None

    def to_dict(self) -> dict:
        def window(w: GradedWindow) -> dict:
            return {"lo": w.lo, "hi": w.hi, "dims": w.as_list()}

        out = {
            "a_invariant": self.a_invariant,
            "quasi_gorenstein": self.quasi_gorenstein,
            "gorenstein": self.gorenstein,
            "splits": self.splits,
            "transvections": self.transvections,
            "canonical": {"base": self.canonical.base.value, "shift": self.canonical.shift},
            "cohomology_window": window(self.cohomology_of_invariants),
            "invariants_of_cohomology_window": window(self.invariants_of_cohomology),
        }
        if self.shank_wehlau is not None:
            sw = self.shank_wehlau
            out["shank_wehlau"] = {
                "is_p_group": sw.is_p_group,
                "splits": sw.splits,
                "polynomial": sw.polynomial,
            }
        return out


@dataclass
class InvariantReport:
    group: PermGroup
    depth: int
    hilb_invariants: RationalFunction
    hilb_sign_semiinvariants: RationalFunction
    generated_by_transpositions: bool
    uniformly_split: bool
    per_char: dict[int, CharReport] = field(default_factory=dict)

    @property
    def hilb_degree(self) -> int:
        return rf_degree(self.hilb_invariants)

    def to_dict(self) -> dict:
        g = self.group

        def rf(r: RationalFunction) -> dict:
            num, den = r.to_integer_arrays()
            return {"num": num, "den": den}

        return {
            "n": g.n,
            "generators": [str(s) for s in g.generators],
            "order": g.order,
            "c": g.c,
            "transpositions": [list(pair) for pair in g.transposition_pairs()],
            "partition": [list(b) for b in g.partition],
            "index_G_over_N": g.index_g_n,
            "depth": self.depth,
            "hilb_invariants": rf(self.hilb_invariants),
            "hilb_sign_semiinvariants": rf(self.hilb_sign_semiinvariants),
            "hilb_degree": self.hilb_degree,
            "per_char": {str(p): cr.to_dict() for p, cr in sorted(self.per_char.items())},
            "uniformly_split": self.uniformly_split,
            "generated_by_transpositions": self.generated_by_transpositions,
        }


def _char_report(g: PermGroup, char: FieldChar, depth: int) -> CharReport:
    qg = quasi_gorenstein(g, char)
    return CharReport(
        char=char,
        a_invariant=a_invariant(g, char),
        quasi_gorenstein=qg,
        gorenstein=qg if char.p == 0 else None,
        splits=splits(g, char),
        transvections=transvection_count(g, char),
        canonical=canonical_descriptor(g, char),
        invariants_of_cohomology=hilb_top_cohomology_invariants(g, char, depth),
        cohomology_of_invariants=hilb_top_cohomology_of_invariant_ring(g, char, depth),
        shank_wehlau=shank_wehlau_verdict(g, char.p) if char.p else None,
    )


def build_report(g: PermGroup, chars: Iterable[int | FieldChar] = DEFAULT_CHARS, depth: int = 10) -> InvariantReport:
    fcs = sorted({c if isinstance(c, FieldChar) else FieldChar(int(c)) for c in chars})
    if not fcs:
        raise ValueError("at least one characteristic is required")

    generated = g.element_set == g.n_subgroup
    # Splitting in every characteristic only needs checking at primes <= |G/N|.
    uniformly = all(splits(g, FieldChar(p)) for p in _primes_up_to(g.index_g_n))
    if not (generated == uniformly == (g.index_g_n == 1)):
        raise ConsistencyError(
            f"generated_by_transpositions={generated}, uniformly_split={uniformly}, |G/N|={g.index_g_n}"
        )
    is_invariant_ring_polynomial_for_N(g)

    report = InvariantReport(
        group=g,
        depth=depth,
        hilb_invariants=molien_series(g, trivial_character(g)),
        hilb_sign_semiinvariants=molien_series(g, sign_character(g)),
        generated_by_transpositions=generated,
        uniformly_split=uniformly,
    )
    for fc in fcs:
        cr = _char_report(g, fc, depth)
        if fc.is_two and not cr.quasi_gorenstein:
            raise ConsistencyError("characteristic 2 ring reported not quasi-Gorenstein")
        if cr.shank_wehlau is not None and not cr.shank_wehlau.holds:
            raise ConsistencyError(f"split {fc.p}-group with G != N: {g}")
        report.per_char[fc.p] = cr
    return report
