"""Probabilities of measured values and the two classical inference rules.

``pure_probability`` and ``statistical_probability`` give the probability that
a measured value falls in an event when the state is a known point or is
distributed according to a prior.  ``fisher_mle`` infers the point(s) that
make the observed event most likely; ``bayes_posterior`` conditions a prior
on the observed event.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    Event,
    MixedState,
    Observable,
    UnknownWithPrior,
    effect,
    new_session,
)
from .errors import (
    SpaceMismatchError,
    ZeroEvidenceError,
    ZeroLikelihoodEverywhereError,
)
from .scalar import ZERO

__all__ = [
    "FisherResult",
    "BayesResult",
    "pure_probability",
    "statistical_probability",
    "fisher_mle",
    "bayes_posterior",
    "statistical_indistinguishability_check",
]


@dataclass(frozen=True)
class FisherResult:
    maximizers: frozenset[str]
    max_likelihood: Fraction


@dataclass(frozen=True)
class BayesResult:
    posterior: MixedState
    evidence: Fraction


def _check_prior(obs: Observable, prior: MixedState):
    if prior.space != obs.space:
        raise SpaceMismatchError("prior and observable live on different state spaces")


def pure_probability(obs: Observable, point: str, event: Event) -> Fraction:
    """Probability of ``event`` when the state is the point ``point``."""
    return effect(obs, event, point)


def statistical_probability(obs: Observable, prior: MixedState, event: Event) -> Fraction:
    """Probability of ``event`` when the state is distributed as ``prior``."""
    _check_prior(obs, prior)
    return prior.pair(obs.effect_function(event))


def fisher_mle(obs: Observable, event: Event) -> FisherResult:
    """Maximum-likelihood points for an observed ``event``.

    Ties are all reported.  Raises :class:`ZeroLikelihoodEverywhereError` when
    no point gives the event positive probability.
    """
    likelihood = obs.effect_function(event)
    best = max(likelihood)
    if best == 0:
        raise ZeroLikelihoodEverywhereError(
            f"event {sorted(obs.normalize_event(event))} has probability 0 at every point"
        )
    maximizers = frozenset(
        label for label, v in zip(obs.space.labels, likelihood) if v == best
    )
    return FisherResult(maximizers, best)


def bayes_posterior(obs: Observable, prior: MixedState, event: Event) -> BayesResult:
    """Posterior after observing ``event``: ``F(event) * prior`` normalized."""
    _check_prior(obs, prior)
    likelihood = obs.effect_function(event)
    joint = [f * w for f, w in zip(likelihood, prior.weights)]
    evidence = sum(joint, ZERO)
    if evidence == 0:
        raise ZeroEvidenceError(
            f"event {sorted(obs.normalize_event(event))} has probability 0 under the prior"
        )
    return BayesResult(MixedState(obs.space, tuple(j / evidence for j in joint)), evidence)


def statistical_indistinguishability_check(
    obs: Observable, prior: MixedState, hidden1: str, hidden2: str
) -> bool:
    """Whether two statistical measurements differing only in the hidden point agree.

    Both sessions are run and their outcome laws compared.  Since the law only
    depends on the observable and the prior, the answer is always ``True``;
    the function exists to make that guarantee checkable.
    """
    _check_prior(obs, prior)
    first = new_session(obs, UnknownWithPrior(prior, hidden1)).outcome_distribution()
    second = new_session(obs, UnknownWithPrior(prior, hidden2)).outcome_distribution()
    return first == second
