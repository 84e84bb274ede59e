"""Exact homological invariants of rings of invariants of permutation groups.

Typical use::

    from perminvariants import group_from_cycles, build_report
    g = group_from_cycles(["(1 2 3 4)"], 4)
    report = build_report(g, chars=[0, 2], depth=6)
"""

from .characters import (
    CharacterTable,
    characters_equal_on_group,
    chi_character,
    chi_of,
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
)
from .decisions import (
    InvariantReport,
    build_report,
    is_invariant_ring_polynomial_for_N,
    quasi_gorenstein,
    shank_wehlau_verdict,
    splits,
    transvection_count,
)
from .errors import CapExceededError, ConsistencyError, PermParseError
from .orbits import (
    OrbitRecord,
    count_good_orbits,
    enumerate_monomials,
    is_chi_good,
    min_good_degree,
    orbit_decompose,
    stabilizer_of,
)
from .perms import (
    Permutation,
    PermGroup,
    compose,
    cycle_type,
    generate_group,
    group_from_cycles,
    parse_cycles,
    sign_of,
    transposition_closure,
)
from .series import (
    Poly,
    RationalFunction,
    denom_factor_of,
    expand_series,
    molien_series,
    rf_degree,
)

__version__ = "0.1.0"
