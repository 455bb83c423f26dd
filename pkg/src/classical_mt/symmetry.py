"""Equal-probability reduction for randomly chosen shifted observables.

Given a base observable and a list of bijections ``φ_0 = id, φ_1, ...`` of the
state space, the shifted observable ``O_k`` reads the base effects at
``φ_{k-1}(ω)``.  Picking ``O_k`` with probability ``p_k`` and measuring at a
fixed point ``ω_m`` gives

    P(Ξ | ω_m) = Σ_k p_k [F_k(Ξ)](ω_m) = ⟨F_1(Ξ), Σ_k p_k δ_{φ_{k-1}(ω_m)}⟩.

With the cyclic shift and uniform weights the mixed state on the right does
not depend on ``m``: it is the uniform state, and the randomized measurement
is a statistical measurement of the base observable under that prior.

Custom bijection sets can be supplied, but only the cyclic family is
guaranteed to reduce; other families are checked exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import chain, combinations
from typing import Sequence

from .core import Event, MixedState, Observable, StateSpace
from .errors import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    InvalidStateError,
    NotStateIndependentError,
    NotUniformWeightsError,
    SpaceMismatchError,
)
from .inference import statistical_probability
from .scalar import ONE, ZERO, as_scalar

__all__ = [
    "Bijection",
    "WeightedObservableFamily",
    "cyclic_shift",
    "orbit_observable",
    "cyclic_family",
    "mixture_probability",
    "mixed_state_seen_from",
    "equal_probability_reduction",
    "is_state_independent",
    "reduction_agrees",
]


@dataclass(frozen=True)
class Bijection:
    """Permutation of a state space; ``mapping[i]`` is the image index of point ``i``."""

    space: StateSpace
    mapping: tuple[int, ...]

    def __post_init__(self):
        mapping = tuple(self.mapping)
        if sorted(mapping) != list(range(len(self.space))):
            raise DimensionMismatchError(f"{mapping} is not a permutation of the space")
        object.__setattr__(self, "mapping", mapping)

    def __call__(self, label: str) -> str:
        return self.space.labels[self.mapping[self.space.index(label)]]

    def then(self, other: "Bijection") -> "Bijection":
        """``other ∘ self``."""
        return Bijection(self.space, tuple(other.mapping[i] for i in self.mapping))

    def power(self, k: int) -> "Bijection":
        result = Bijection.identity(self.space)
        for _ in range(k):
            result = result.then(self)
        return result

    @classmethod
    def identity(cls, space: StateSpace) -> "Bijection":
        return cls(space, tuple(range(len(space))))

    @classmethod
    def from_labels(cls, space: StateSpace, images: dict) -> "Bijection":
        return cls(space, tuple(space.index(images[label]) for label in space.labels))


def cyclic_shift(space: StateSpace) -> Bijection:
    """``ω_j -> ω_{j+1}``, with the last point sent back to the first."""
    n = len(space)
    return Bijection(space, tuple((i + 1) % n for i in range(n)))


def _shifted(base: Observable, phi: Bijection) -> Observable:
    idx = [phi.mapping[j] for j in range(len(base.space))]
    return Observable(base.space, base.outcomes, tuple(tuple(row[i] for i in idx) for row in base.matrix))


def orbit_observable(base: Observable, phi: Bijection, k: int) -> Observable:
    """The observable ``O_k`` with ``[F_k(Ξ)](ω) = [F_1(Ξ)](φ^{k-1}(ω))``, ``1 <= k <= n``."""
    if phi.space != base.space:
        raise SpaceMismatchError("bijection and observable live on different spaces")
    n = len(base.space)
    if not 1 <= k <= n:
        raise IndexOutOfRangeError(f"k must lie in 1..{n}, got {k}")
    return _shifted(base, phi.power(k - 1))


@dataclass(frozen=True)
class WeightedObservableFamily:
    """Base observable, the bijections ``φ_0 .. φ_{K-1}`` and selection weights.

    Member ``k`` (1-based) is the base observable read through ``maps[k-1]``.
    """

    base: Observable
    maps: tuple[Bijection, ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        maps = tuple(self.maps)
        weights = tuple(as_scalar(w) for w in self.weights)
        if not maps:
            raise DimensionMismatchError("a family needs at least one member")
        if len(weights) != len(maps):
            raise DimensionMismatchError(f"{len(weights)} weights for {len(maps)} members")
        for phi in maps:
            if phi.space != self.base.space:
                raise SpaceMismatchError("bijection and base observable differ in space")
        if any(w < 0 for w in weights):
            raise InvalidStateError("selection weights must be non-negative")
        if sum(weights, ZERO) != ONE:
            raise InvalidStateError(f"selection weights sum to {sum(weights, ZERO)}, expected 1")
        object.__setattr__(self, "maps", maps)
        object.__setattr__(self, "weights", weights)

    def __len__(self):
        return len(self.maps)

    def member(self, k: int) -> Observable:
        if not 1 <= k <= len(self.maps):
            raise IndexOutOfRangeError(f"k must lie in 1..{len(self.maps)}, got {k}")
        return _shifted(self.base, self.maps[k - 1])


def cyclic_family(base: Observable, weights: Sequence | None = None) -> WeightedObservableFamily:
    """Family generated by the cyclic shift; uniform weights unless given."""
    n = len(base.space)
    phi = cyclic_shift(base.space)
    if weights is None:
        weights = (Fraction(1, n),) * n
    return WeightedObservableFamily(base, tuple(phi.power(k) for k in range(n)), tuple(weights))


def mixture_probability(family: WeightedObservableFamily, point: str, event: Event) -> Fraction:
    """Probability of ``event`` when ``O_k`` is chosen with weight ``p_k`` and measured at ``point``."""
    total = ZERO
    for k, p in enumerate(family.weights, start=1):
        total += p * family.member(k).effect_function(event)[family.base.space.index(point)]
    return total


def mixed_state_seen_from(family: WeightedObservableFamily, point: str) -> MixedState:
    """``Σ_k p_k δ_{φ_{k-1}(point)}``: the prior that the randomized measurement at ``point`` amounts to."""
    space = family.base.space
    weights = [ZERO] * len(space)
    for p, phi in zip(family.weights, family.maps):
        weights[space.index(phi(point))] += p
    return MixedState(space, tuple(weights))


def equal_probability_reduction(family: WeightedObservableFamily) -> MixedState:
    """The prior ``ν_e`` equivalent to the uniformly weighted randomized measurement.

    Requires uniform weights.  The mixed state is computed from every point
    and must agree across all of them.
    """
    n = len(family)
    if any(w != Fraction(1, n) for w in family.weights):
        raise NotUniformWeightsError(f"weights {list(family.weights)} are not all 1/{n}")
    states = {mixed_state_seen_from(family, m) for m in family.base.space.labels}
    if len(states) != 1:
        raise NotStateIndependentError(
            "the bijection set does not act transitively enough: the reduced state depends on the point"
        )
    (nu_e,) = states
    return nu_e


def _all_events(outcomes):
    return chain.from_iterable(combinations(outcomes, r) for r in range(len(outcomes) + 1))


def is_state_independent(family: WeightedObservableFamily, all_events: bool = False) -> bool:
    """Exhaustively check that the mixture probability does not depend on the point.

    By default only singleton events are compared (additivity covers the rest);
    ``all_events=True`` compares every subset of the outcomes.
    """
    outcomes = family.base.outcomes
    events = _all_events(outcomes) if all_events else ((x,) for x in outcomes)
    labels = family.base.space.labels
    for event in events:
        values = {mixture_probability(family, m, event) for m in labels}
        if len(values) > 1:
            return False
    return True


def reduction_agrees(family: WeightedObservableFamily) -> bool:
    """Mixture probability equals the statistical probability under ``ν_e`` for all points and events."""
    nu_e = equal_probability_reduction(family)
    for event in _all_events(family.base.outcomes):
        expected = statistical_probability(family.base, nu_e, event)
        for m in family.base.space.labels:
            if mixture_probability(family, m, event) != expected:
                return False
    return True
