"""Enumeration of commutative monoids and AG-monoids up to isomorphism."""

from .automorphisms import (
    AutomorphismGroup,
    InvolutionClasses,
    are_conjugate,
    automorphism_group,
    conjugacy_classes_of_involutions,
    involutions,
)
from .core import (
    AlgebraError,
    CayleyTable,
    Permutation,
    PropertyResult,
    StructureKind,
    apply_permutation,
    canonical_form,
    is_associative,
    is_commutative,
    is_homomorphic_image,
    is_left_invertive,
    is_medial,
    left_identities,
    satisfies_paramedial_swap,
    tables_isomorphic,
    two_sided_identity,
)
from .enumeration import (
    EnumerationResult,
    enumerate_ag_monoids_bruteforce,
    enumerate_ag_monoids_via_construction,
    enumerate_commutative_monoids,
    table1_row,
)
from .storage import (
    TableDatabase,
    decode_table,
    encode_table,
    format_cycle_notation,
    parse_cycle_notation,
    read_db,
    relabel_identity_to_zero,
    write_db,
)
from .twist import (
    TwistPair,
    ag_isomorphic_via_monoid,
    count_ag_monoids_from_monoid,
    is_ag_monoid,
    twist,
    untwist,
)

__version__ = "0.1.0"
