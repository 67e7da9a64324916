from .teammap import (
    TeamMap,
    compose,
    image,
    check_isomorphism,
    check_embedding,
    lift_isomorphism,
    lift_map,
    lift_embedding,
    identity_map,
)
from .checks import (
    check_partial_team_isomorphism,
    check_boolean_embedding,
    check_tarski_vaught,
    check_intersection_preservation,
    check_join_preservation,
    check_quantifier_free_preservation,
    check_forward_preservation,
    check_term_graphs,
    extract_isomorphism,
)
from .elementary import (
    expansion_isomorphisms,
    check_elementary_map,
    find_partial_elementary_map,
    all_partial_elementary_maps,
    expansions_isomorphic,
)
from .substructure import induced_substructure
