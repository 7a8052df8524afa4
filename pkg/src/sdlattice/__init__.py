"""Finite lattices, semidistributivity, congruence lattices, doubling and
interval gluing."""

from .catalog import (
    add_unit,
    add_zero,
    boolean,
    census,
    chain,
    describe,
    enumerate_lattices,
    l9,
    l10,
    m3,
    n5,
    n6,
    ordinal_sum,
)
from .congruence import (
    ConLattice,
    Congruence,
    all_congruences,
    atoms,
    is_simple,
    principal_congruence,
    quotient,
)
from .core import (
    FiniteLattice,
    antichains,
    classify,
    dual,
    is_isomorphic,
    principal_filter,
    principal_ideal,
    validate_lattice,
)
from .doubling import check_boolean_embedding, double_antichain, double_element, mu, mu_V
from .glue import (
    delete_interval,
    find_isolated_intervals,
    glue,
    partition_pqr,
    transfer_congruence,
    verify_con_isomorphism,
)
from .sd import check_join_sd_filters, check_meet_sd_ideals, check_sd_direct, is_distributive

__version__ = "0.1.0"
