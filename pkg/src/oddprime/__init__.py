"""Construct, verify, search for and refute odd prime graph labelings."""

from .coprime import CoprimeMatching, bertrand_prime, coprime_matching, is_prime, reorder_power_of_two
from .core import (
    Graph,
    Labeling,
    LabelSetDefect,
    VerificationReport,
    expected_label_set,
    gcd,
    to_dot,
    verify_labeling,
)
from .errors import (
    DegreeTooLarge,
    HypothesisViolated,
    InvalidParameters,
    MatchingFailure,
    NotAPrimeLabeling,
    OddPrimeError,
    OrderLimitExceeded,
    OrderOutOfRange,
    PartialLabeling,
    ProvablyInfeasible,
    TargetNotInSequence,
    UnsupportedPolygon,
)
from .families import (
    FAMILIES,
    Book,
    Caterpillar,
    CycleChain,
    CyclePower,
    DisjointCycles,
    Firecracker,
    GeneralizedPetersen,
    Grid,
    MaximalPrimeGraph,
    PathPower,
    PerfectBinaryTree,
    Snake,
    Spider,
    StackedPrism,
    TToedCaterpillar,
    build_family,
    family_order,
    make_spec,
    power_graph,
)
from .labelers import (
    Verdict,
    classify,
    label_book,
    label_caterpillar_maxdeg5,
    label_cycle_chain,
    label_cycle_power2,
    label_disjoint_cycles,
    label_family,
    label_firecracker,
    label_grid,
    label_path_power2,
    label_perfect_binary_tree,
    label_prism,
    label_small_power,
    label_snake,
    label_spider,
    label_stacked_prism,
    label_t_toed_caterpillar,
)
from .rn import RnTable, convert_prime_to_odd, rn_labeling, rn_sequence, verify_rn
from .search import Lemma2Result, SearchOutcome, exhaustive_search, independence_number, lemma2_check

__version__ = "0.1.0"
