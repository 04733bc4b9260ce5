"""Exact counting of permutation-group orbits on subsets and multisets."""

from .catalog import (
    CatalogError,
    GroupRecord,
    OrderTable,
    load_catalog,
    load_order_table,
    load_pattern_fixtures,
    required_group_names,
)
from .counting import (
    BudgetError,
    CycleIndex,
    InconsistencyError,
    brute_force_multiset_orbits,
    brute_force_set_orbits,
    cycle_index,
    multiset_orbit_count,
    set_orbit_count,
)
from .enclosure import Enclosure
from .permgroup import (
    Permutation,
    StrongGenSet,
    format_cycles,
    parse_cycles,
    schreier_sims,
)
from .wreath import (
    SequenceTerm,
    limit_enclosure,
    pattern_orbit_table,
    sequence_terms,
    tower_count,
    wreath_generators,
    wreath_set_orbits,
    wreath_set_orbits_partitionwise,
)

__all__ = [
    "BudgetError",
    "CatalogError",
    "CycleIndex",
    "Enclosure",
    "GroupRecord",
    "InconsistencyError",
    "OrderTable",
    "Permutation",
    "SequenceTerm",
    "StrongGenSet",
    "brute_force_multiset_orbits",
    "brute_force_set_orbits",
    "cycle_index",
    "format_cycles",
    "limit_enclosure",
    "load_catalog",
    "load_order_table",
    "load_pattern_fixtures",
    "multiset_orbit_count",
    "parse_cycles",
    "pattern_orbit_table",
    "required_group_names",
    "schreier_sims",
    "sequence_terms",
    "set_orbit_count",
    "tower_count",
    "wreath_generators",
    "wreath_set_orbits",
    "wreath_set_orbits_partitionwise",
]

__version__ = "0.1.0"
