"""Rainbow stars and trees in collections of graphs on a shared vertex set."""

__version__ = "0.1.0"

from .model import (
    AuxDigraph,
    GraphCollection,
    RainbowWitness,
    StarGraph,
    build_aux_digraph,
    dump_collection,
    load_collection,
    star_multiset_at,
    validate_witness,
)
from .rainbow_star import check_claim_star1, find_rainbow_star, max_rainbow_star_at, star_capacities
from .rainbow_tree import (
    compute_R,
    decompose,
    extend_through_R,
    find_max_rainbow_tree,
    find_maximal_rainbow_tree,
    has_rainbow_tree_of_order,
)
from .extremal import (
    construct_star_family,
    construct_tree_family,
    decompose_params,
    star_bound,
    tree_bound,
)
from .certify import check_extremal_structure, is_member_A, is_member_B
from .oracle import (
    canonical_form,
    oracle_star_max,
    oracle_tree_threshold,
    saturation_check,
)
