"""Classical measurement theory on finite state spaces.

Observables, pure and statistical measurements, Fisher and Bayes inference,
Markov causal families and the equal-probability reduction, with the
Monty Hall and three-prisoners problems as worked instances.
"""

from .causality import (
    CausalFamily,
    CausalTree,
    MarkovOperator,
    compose,
    dual_apply,
    identity_operator,
    is_deterministic,
    make_causal_family,
    make_causal_tree,
    make_markov_operator,
    pull_back,
)
from .core import (
    KnownPoint,
    MeasurementSession,
    MixedState,
    Observable,
    StateSpace,
    Unknown,
    UnknownWithPrior,
    effect,
    identity_observable,
    make_mixed_state,
    make_observable,
    make_state_space,
    new_session,
    outcome_distribution,
    point_mass,
    uniform_state,
)
from .errors import *  # noqa: F401,F403
from .inference import (
    BayesResult,
    FisherResult,
    bayes_posterior,
    fisher_mle,
    pure_probability,
    statistical_indistinguishability_check,
    statistical_probability,
)
from .problems import (
    MontyHallSpec,
    PrisonersSpec,
    Variant,
    Verdict,
    VerdictKind,
    bayes_verdict,
    build_observable,
    equal_probability_verdict,
    fisher_verdict,
    solve,
    utterance,
)
from .scalar import Scalar, as_scalar, format_scalar
from .simulation import SimConfig, SimReport, compare, simulate
from .symmetry import (
    Bijection,
    WeightedObservableFamily,
    cyclic_family,
    cyclic_shift,
    equal_probability_reduction,
    is_state_independent,
    mixture_probability,
    orbit_observable,
)

__version__ = "0.1.0"
