"""Promotion, evacuation and growth-diagram bijections for highest weight words.

The package implements the minuscule local rule ``mu = dom_W(kappa + nu -
lambda)`` and everything built from it: promotion and evacuation of
oscillating (symplectic) and alternating (general linear) tableaux, the
cactus-group action, Sundaram's correspondence with partial matchings, the
square-diagram correspondence with partial permutations, chord-diagram
symmetries, and an exhaustive verification harness for the intertwining
theorems relating them.
"""

from .shapes import (
    EMPTY,
    Partition,
    ShapeError,
    Staircase,
    WeylKind,
    add_cell,
    assemble_staircase,
    conjugate,
    dom,
    extent,
    hyperoctahedral_group,
    join,
    meet,
    remove_cell,
    split_staircase,
    symmetric_group,
    zero_staircase,
)
from .tableaux import (
    AlternatingTableau,
    OscillatingTableau,
    StaircaseTableau,
    TableauError,
    alternating_from_text,
    alternating_from_word,
    embed_osc_as_alt,
    min_embedding_rank,
    oscillating_from_text,
    oscillating_from_word,
    pad_zeros,
    restrict_alt_to_osc,
    strip_zeros,
    tableau_from_json,
    tableau_to_json,
    tableau_to_text,
    word_from_alternating,
    word_from_oscillating,
)
from .local_rules import (
    EvacuationDiagram,
    PromotionDiagram,
    cactus_apply,
    decorate_evacuation_diagram,
    evacuate,
    evacuation_diagram,
    half_promote_alternating,
    local_rule,
    permutation_from_decorations,
    promote,
    promote_alternating,
    promote_empty_shape_variant,
    promote_oscillating,
    promotion_diagram,
)
from .growth import (
    Filling,
    GrowthDiagram,
    GrowthError,
    PartialSYT,
    backward_cell,
    chain_from_syt,
    forward_cell,
    full_perm_from_alt,
    growth_diagram_alternating,
    growth_diagram_oscillating,
    perm_growth,
    perm_growth_inverse,
    sundaram,
    sundaram_inverse,
    syt_from_chain,
)
from .diagrams import (
    DiagramError,
    NoncrossingSetPartition,
    PartialPermutation,
    PerfectMatching,
    catalan,
    corteel_crossings,
    invert,
    lis_length,
    max_crossing_matching,
    ncpartition_to_perm,
    perm_to_ncpartition,
    render_chord_svg,
    reverse_complement,
    reverse_matching,
    rotate_matching,
    rotate_permutation,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
