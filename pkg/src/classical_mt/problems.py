"""Monty Hall and three-prisoners problems.

Both stories share one measurement.  The state ``ω_m`` means "the car is
behind door m" (resp. "prisoner m will be freed").  The player who picks a
door (resp. the prisoner who asks) performs a measurement whose outcome
``"k"`` means "the host opens the k-th door" (resp. "the emperor names the
k-th prisoner").  When the car is behind the picked door the host has a
choice; he opens the first remaining door with probability ``alpha`` and
the second with ``1 - alpha``.  Otherwise his move is forced.

Three variants are solved:

* ``FISHER``: no prior, the state is inferred by maximum likelihood.
* ``BAYES``: a prior over the states is given and updated.
* ``EQUAL_PROBABILITY``: no prior is given, but the door/prisoner was
  chosen by a fair die; the uniform prior is derived from the cyclic
  symmetry of the measurement and then updated.

The stories differ only in what is asked of the posterior: whether to
switch doors, or whether the asking prisoner's chance of survival changed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .core import MixedState, Observable, StateSpace, make_observable
from .errors import (
    InvalidAlphaError,
    InvalidProblemError,
    MissingPriorError,
    PriorSuppliedError,
    UnknownLabelError,
)
from .inference import bayes_posterior, fisher_mle
from .scalar import ONE, ZERO, as_scalar
from .symmetry import cyclic_family, equal_probability_reduction

__all__ = [
    "Variant",
    "VerdictKind",
    "MontyHallSpec",
    "PrisonersSpec",
    "Verdict",
    "build_observable",
    "utterance",
    "fisher_verdict",
    "bayes_verdict",
    "equal_probability_verdict",
    "solve",
]

HALF = Fraction(1, 2)


class Variant(str, enum.Enum):
    FISHER = "fisher"
    BAYES = "bayes"
    EQUAL_PROBABILITY = "equal_probability"


class VerdictKind(str, enum.Enum):
    SWITCH = "SWITCH"
    STAY = "STAY"
    INDIFFERENT = "INDIFFERENT"
    HAPPINESS_INCREASES = "HAPPINESS_INCREASES"
    HAPPINESS_INVARIANT = "HAPPINESS_INVARIANT"
    HAPPINESS_DECREASES = "HAPPINESS_DECREASES"
    NOT_WELL_POSED = "NOT_WELL_POSED"


def _validate(labels, chooser, revealed, prior, alpha, variant, roles):
    labels = tuple(labels)
    if len(labels) != 3:
        raise InvalidProblemError(f"exactly three labels are required, got {list(labels)}")
    StateSpace(labels)  # distinctness
    for role, label in zip(roles, (chooser, revealed)):
        if label not in labels:
            raise UnknownLabelError(f"{role} {label!r} is not one of {list(labels)}")
    if chooser == revealed:
        raise InvalidProblemError(f"{roles[0]} and {roles[1]} must differ, both are {chooser!r}")
    alpha = as_scalar(alpha)
    if not ZERO < alpha < ONE:
        raise InvalidAlphaError(f"alpha must lie strictly between 0 and 1, got {alpha}")
    if prior is not None:
        prior = MixedState(StateSpace(labels), tuple(prior)).weights
    try:
        variant = Variant(variant)
    except ValueError:
        raise InvalidProblemError(f"unknown variant {variant!r}") from None
    return labels, prior, alpha, variant


@dataclass(frozen=True)
class MontyHallSpec:
    """You pick ``picked``; the host opens ``opened`` and offers a switch."""

    picked: str = "A1"
    opened: str = "A3"
    prior: tuple[Fraction, ...] | None = None
    alpha: Fraction = HALF
    variant: Variant = Variant.FISHER
    doors: tuple[str, ...] = ("A1", "A2", "A3")

    problem = "monty_hall"

    def __post_init__(self):
        doors, prior, alpha, variant = _validate(
            self.doors, self.picked, self.opened, self.prior, self.alpha, self.variant,
            ("picked door", "opened door"),
        )
        object.__setattr__(self, "doors", doors)
        object.__setattr__(self, "prior", prior)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "variant", variant)

    @property
    def labels(self):
        return self.doors

    @property
    def chooser(self):
        return self.picked

    @property
    def revealed(self):
        return self.opened


@dataclass(frozen=True)
class PrisonersSpec:
    """Prisoner ``asker`` asks; the emperor names ``named_executed``."""

    asker: str = "A1"
    named_executed: str = "A3"
    prior: tuple[Fraction, ...] | None = None
    alpha: Fraction = HALF
    variant: Variant = Variant.FISHER
    prisoners: tuple[str, ...] = ("A1", "A2", "A3")

    problem = "three_prisoners"

    def __post_init__(self):
        prisoners, prior, alpha, variant = _validate(
            self.prisoners, self.asker, self.named_executed, self.prior, self.alpha,
            self.variant, ("asker", "named prisoner"),
        )
        object.__setattr__(self, "prisoners", prisoners)
        object.__setattr__(self, "prior", prior)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "variant", variant)

    @property
    def labels(self):
        return self.prisoners

    @property
    def chooser(self):
        return self.asker

    @property
    def revealed(self):
        return self.named_executed


ProblemSpec = Union[MontyHallSpec, PrisonersSpec]


@dataclass(frozen=True)
class Verdict:
    problem: str
    variant: Variant
    kind: VerdictKind
    states: tuple[str, ...] = ()
    posterior: MixedState | None = None
    prior: MixedState | None = None
    inferred_state: frozenset[str] | None = None
    evidence: Fraction | None = field(default=None)


def utterance(spec: ProblemSpec, label: str) -> str:
    """Outcome meaning "the host opens / the emperor names ``label``"."""
    return str(spec.labels.index(label) + 1)


def build_observable(spec: ProblemSpec) -> Observable:
    """The host's (emperor's) answer as an observable on the three states."""
    labels = spec.labels
    c = labels.index(spec.chooser)
    first, second = [i for i in range(3) if i != c]
    matrix = [[ZERO] * 3 for _ in range(3)]
    for j in range(3):
        if j == c:
            matrix[first][j] = spec.alpha
            matrix[second][j] = ONE - spec.alpha
        else:
            (forced,) = [i for i in range(3) if i not in (c, j)]
            matrix[forced][j] = ONE
    return make_observable(StateSpace(labels), [str(i + 1) for i in range(3)], matrix)


def _other(spec: ProblemSpec) -> str:
    (other,) = [l for l in spec.labels if l not in (spec.chooser, spec.revealed)]
    return other


def _compare(a: Fraction, b: Fraction, less, equal, greater) -> VerdictKind:
    if a < b:
        return less
    if a == b:
        return equal
    return greater


def _require(spec: ProblemSpec, variant: Variant):
    if spec.variant is not variant:
        raise InvalidProblemError(f"spec is for the {spec.variant.value} variant, not {variant.value}")


def fisher_verdict(spec: ProblemSpec) -> Verdict:
    _require(spec, Variant.FISHER)
    if spec.prior is not None:
        raise PriorSuppliedError("the Fisher variant takes no prior")
    obs = build_observable(spec)
    result = fisher_mle(obs, utterance(spec, spec.revealed))
    if isinstance(spec, PrisonersSpec):
        kind = VerdictKind.NOT_WELL_POSED
    elif result.maximizers == {_other(spec)}:
        kind = VerdictKind.SWITCH
    elif result.maximizers == {spec.chooser}:
        kind = VerdictKind.STAY
    else:
        kind = VerdictKind.INDIFFERENT
    return Verdict(
        spec.problem, spec.variant, kind, spec.labels, inferred_state=result.maximizers
    )


def _bayes(spec: ProblemSpec, prior: MixedState) -> Verdict:
    obs = build_observable(spec)
    result = bayes_posterior(obs, prior, utterance(spec, spec.revealed))
    post = result.posterior
    if isinstance(spec, MontyHallSpec):
        kind = _compare(
            post[spec.picked], post[_other(spec)],
            VerdictKind.SWITCH, VerdictKind.INDIFFERENT, VerdictKind.STAY,
        )
    else:
        kind = _compare(
            prior[spec.asker], post[spec.asker],
            VerdictKind.HAPPINESS_INCREASES,
            VerdictKind.HAPPINESS_INVARIANT,
            VerdictKind.HAPPINESS_DECREASES,
        )
    return Verdict(
        spec.problem, spec.variant, kind, spec.labels,
        posterior=post, prior=prior, evidence=result.evidence,
    )


def bayes_verdict(spec: ProblemSpec) -> Verdict:
    _require(spec, Variant.BAYES)
    if spec.prior is None:
        raise MissingPriorError("the Bayes variant needs a prior")
    return _bayes(spec, MixedState(StateSpace(spec.labels), spec.prior))


def equal_probability_verdict(spec: ProblemSpec) -> Verdict:
    """Bayes update with the prior derived from the fair choice of who asks."""
    _require(spec, Variant.EQUAL_PROBABILITY)
    if spec.prior is not None:
        raise PriorSuppliedError("the equal-probability variant derives its own prior")
    nu_e = equal_probability_reduction(cyclic_family(build_observable(spec)))
    return _bayes(spec, nu_e)


_SOLVERS = {
    Variant.FISHER: fisher_verdict,
    Variant.BAYES: bayes_verdict,
    Variant.EQUAL_PROBABILITY: equal_probability_verdict,
}


def solve(spec: ProblemSpec) -> Verdict:
    return _SOLVERS[spec.variant](spec)
