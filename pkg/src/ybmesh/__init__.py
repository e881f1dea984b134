"""Finite involutive set-theoretic solutions of the Yang-Baxter equation of
multipermutation level 2: construction, verification and isomorph-free
enumeration through sums of trivial affine meshes and their isotopes."""

from .abelian import FiniteAbelianGroup, abelian_groups_of_order, invariant_factors_from_orders
from .algebra import (
    LeftQuasigroup,
    PermutationGroup,
    Property,
    check_property,
    left_divide,
    lmlt,
    lq_from_table,
    orbits,
    t_map,
)
from .birack import (
    BirackProperty,
    InvolutiveBirack,
    RetractionResult,
    birack_from_cycle_set,
    birack_from_table,
    birack_from_tables,
    birack_isomorphism,
    check_birack_property,
    check_braid,
    mp_level,
    permutation_group_structure,
    retraction,
)
from .canon import canonical_key
from .enumerate import (
    CatalogEntry,
    CountReport,
    Kind,
    counts,
    enumerate_distributive,
    enumerate_involutive_bruteforce,
    enumerate_level2_nondistributive,
    enumerate_racks_bruteforce,
)
from .errors import *  # noqa: F401,F403
from .isotope import (
    IsoCondition,
    IsotopeWitness,
    birack_isotope,
    check_iso_condition,
    check_sigma,
    isotope_isomorphism_by_automorphism,
    lq_isotope,
    to_distributive,
)
from .mesh import (
    TrivialAffineMesh,
    cyclic_mesh,
    enumerate_meshes,
    iyb_mesh,
    mesh_condition_star,
    mesh_from_birack,
    mesh_iso,
    mesh_sum,
    validate_mesh,
)
from .perm import Permutation

__version__ = "0.1.0"
