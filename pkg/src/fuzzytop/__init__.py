"""Exact computation on finite fuzzy topological spaces.

Fuzzy sets take values in ``fractions.Fraction``; subsets of the carrier are
integer bitmasks; extensional fuzzy topologies live on the grid ``{0, 1/q, ..., 1}``.
"""
from .compactness import (
    ALL_COMPACT,
    CompactnessOracle,
    CoverInstance,
    NotCompact,
    check_condition_L,
    extract_subcover,
    is_fuzzy_closed,
    is_fuzzy_compact,
    is_fuzzy_open,
    one_point_extension,
    tychonoff_level_identity,
)
from .census import (
    enumerate_fuzzy_topologies,
    enumerate_topologies,
    random_fuzzy_topology,
    run_equivalence_census,
)
from .constructions import (
    coproduct_fuzzy_topology,
    is_fuzzy_continuous,
    is_fuzzy_quotient,
    product_fuzzy_topology,
    pullback,
    relative_fuzzy_topology,
)
from .fuzzy import (
    ClassificationReport,
    ExtensionalFuzzyTopology,
    InducedFuzzyTopology,
    SupClosedSubgrid,
    chi,
    chi_star,
    classify,
    generate_fuzzy_topology,
    iota,
    omega,
    reconstruct_lsc,
    subbase_witness,
    witness_bump,
)
from .instance import InstanceDocument, InstanceError, parse_instance, render_instance
from .lattice import FuzzySet, Grid, level_above, level_at_least
from .topology import GroundMap, Topology, generate_topology

__version__ = "0.1.0"

__all__ = [
    "ALL_COMPACT",
    "check_condition_L",
    "chi",
    "chi_star",
    "ClassificationReport",
    "classify",
    "CompactnessOracle",
    "coproduct_fuzzy_topology",
    "CoverInstance",
    "enumerate_fuzzy_topologies",
    "enumerate_topologies",
    "ExtensionalFuzzyTopology",
    "extract_subcover",
    "FuzzySet",
    "generate_fuzzy_topology",
    "generate_topology",
    "Grid",
    "GroundMap",
    "InducedFuzzyTopology",
    "InstanceDocument",
    "InstanceError",
    "iota",
    "is_fuzzy_closed",
    "is_fuzzy_compact",
    "is_fuzzy_continuous",
    "is_fuzzy_open",
    "is_fuzzy_quotient",
    "level_above",
    "level_at_least",
    "NotCompact",
    "omega",
    "one_point_extension",
    "parse_instance",
    "product_fuzzy_topology",
    "pullback",
    "random_fuzzy_topology",
    "reconstruct_lsc",
    "relative_fuzzy_topology",
    "render_instance",
    "run_equivalence_census",
    "subbase_witness",
    "SupClosedSubgrid",
    "Topology",
    "tychonoff_level_identity",
    "witness_bump",
]
