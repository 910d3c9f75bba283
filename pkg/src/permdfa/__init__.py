"""State complexity of boolean combinations of permutation automata.

The package builds deterministic automata whose letters act as permutations,
combines them with binary boolean operations on their languages, and checks
when the product construction is already minimal.  Structural predictions
(connectivity, pair graph components, conjugate bases) are kept separate
from the minimization oracle so campaigns can compare the two on every
instance.
"""

from .automaton import (
    DFA,
    Semiautomaton,
    TransitionSemigroup,
    accepts,
    distinguishability_complexity,
    equivalence_classes,
    format_automaton_text,
    from_basis,
    is_connected,
    is_strongly_connected,
    is_uniformly_minimal,
    minimize,
    parse_automaton_text,
    reachable_states,
    run,
    transition_semigroup,
)
from .boolops import (
    CANONICAL_TABLES,
    NAMED_TABLES,
    BoolFn,
    final_set_product,
    is_proper,
    proper_functions,
    representative_of,
)
from .errors import (
    AutomatonFormatError,
    CapExceededError,
    CycleFormatError,
    DegreeMismatchError,
    NotAPermutationError,
    TwoPathDisagreement,
)
from .harness import (
    CampaignConfig,
    CampaignResult,
    ConnectivityCheck,
    VerificationRecord,
    enumerate_bases,
    evaluate_instance,
    reproduce,
    sample_instances,
    verify_theorem1,
    verify_theorem2,
)
from .perm import (
    Basis,
    GroupClosure,
    Perm,
    acts_doubly_transitively,
    acts_transitively,
    bases_conjugate,
    compose,
    conjugate,
    count_generating_pairs,
    format_cycles,
    generate_group,
    generates_symmetric,
    parse_cycles,
)
from .product import (
    ComponentLabel,
    PairGraph,
    ProductAutomaton,
    StabilizerImage,
    classify_component,
    direct_product,
    flat_final_set,
    format_pair_graph,
    has_distinguishing_pair,
    pair_graph,
    predict_connected,
    predict_minimal,
    product_dfa,
    stabilizer_image,
)

__version__ = "0.1.0"

__all__ = [
    "AutomatonFormatError",
    "Basis",
    "BoolFn",
    "CANONICAL_TABLES",
    "CampaignConfig",
    "CampaignResult",
    "CapExceededError",
    "ComponentLabel",
    "ConnectivityCheck",
    "CycleFormatError",
    "DFA",
    "DegreeMismatchError",
    "GroupClosure",
    "NAMED_TABLES",
    "NotAPermutationError",
    "PairGraph",
    "Perm",
    "ProductAutomaton",
    "Semiautomaton",
    "StabilizerImage",
    "TransitionSemigroup",
    "TwoPathDisagreement",
    "VerificationRecord",
    "accepts",
    "acts_doubly_transitively",
    "acts_transitively",
    "bases_conjugate",
    "classify_component",
    "compose",
    "conjugate",
    "count_generating_pairs",
    "direct_product",
    "distinguishability_complexity",
    "enumerate_bases",
    "equivalence_classes",
    "evaluate_instance",
    "final_set_product",
    "flat_final_set",
    "format_automaton_text",
    "format_cycles",
    "format_pair_graph",
    "from_basis",
    "generate_group",
    "generates_symmetric",
    "has_distinguishing_pair",
    "is_connected",
    "is_proper",
    "is_strongly_connected",
    "is_uniformly_minimal",
    "minimize",
    "pair_graph",
    "parse_automaton_text",
    "parse_cycles",
    "predict_connected",
    "predict_minimal",
    "product_dfa",
    "proper_functions",
    "reachable_states",
    "reproduce",
    "run",
    "sample_instances",
    "stabilizer_image",
    "transition_semigroup",
    "verify_theorem1",
    "verify_theorem2",
]
