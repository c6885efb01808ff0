"""Chromatic-number concentration toolkit for dense random graphs G(n, p)."""

from .coloring import (
    CHI_EXACT_MAX_N,
    MIS_EXACT_MAX_N,
    S_EXACT_MAX_N,
    Coloring,
    TwoPhaseResult,
    chromatic_number_exact,
    max_independent_set,
    peel_coloring,
    s_of_g,
    two_phase_upper,
)
from .errors import EnumerationBudgetExceeded, GraphTooLarge, GuardExceeded
from .graph import GnpParams, Graph, complement, derive_seed, edge_count, gen_gnp, induced_subgraph
from .lab import (
    ConcentrationReport,
    OmegaSpec,
    TrialRecord,
    azuma_tail,
    estimate_h,
    lipschitz_check_s,
    run_concentration_experiment,
    theorem1_width_target,
)
from .lemma import TailParams, c_of_p, chernoff_lower_tail, density_event_check, greedy_clique, sparse_subset_bound

__version__ = "0.1.0"
