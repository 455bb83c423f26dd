"""Finite commutative measurement algebra.

A state space is a finite ordered set of labelled points.  Functions on the
space are tuples of exact scalars indexed like the labels, mixed states are
probability vectors, and an observable assigns to every outcome a
``[0, 1]``-valued function on the space such that the functions sum to the
constant one at every point.  Every subset of the outcome set is an event;
effects of compound events are sums of singleton effects.

Measurements are one-shot: a :class:`MeasurementSession` yields its outcome
distribution once and refuses every later request.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    ColumnNotNormalizedError,
    DimensionMismatchError,
    DuplicateLabelError,
    EmptySpaceError,
    InvalidStateError,
    NegativeEffectError,
    SessionConsumedError,
    SpaceMismatchError,
    StateUnknownError,
    UnknownLabelError,
    UnknownOutcomeError,
)
from .scalar import ONE, ZERO, as_scalar

__all__ = [
    "StateSpace",
    "MixedState",
    "Observable",
    "KnownPoint",
    "Unknown",
    "UnknownWithPrior",
    "MeasurementSession",
    "make_state_space",
    "point_mass",
    "uniform_state",
    "make_mixed_state",
    "make_observable",
    "identity_observable",
    "effect",
    "new_session",
    "outcome_distribution",
]


@dataclass(frozen=True)
class StateSpace:
    """Finite ordered set of distinct point labels."""

    labels: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        if not labels:
            raise EmptySpaceError("a state space needs at least one point")
        for label in labels:
            if not isinstance(label, str):
                raise TypeError(f"point labels must be strings, got {label!r}")
        index = {}
        for i, label in enumerate(labels):
            if label in index:
                raise DuplicateLabelError(f"duplicate point label {label!r}")
            index[label] = i
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", index)

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, label):
        return label in self._index

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except (KeyError, TypeError):
            raise UnknownLabelError(
                f"{label!r} is not a point of {list(self.labels)}"
            ) from None


def make_state_space(labels: Iterable[str]) -> StateSpace:
    return StateSpace(tuple(labels))


@dataclass(frozen=True)
class MixedState:
    """Probability vector over a :class:`StateSpace`.

    Point masses are the pure states.
    """

    space: StateSpace
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        weights = tuple(as_scalar(w) for w in self.weights)
        if len(weights) != len(self.space):
            raise DimensionMismatchError(
                f"{len(weights)} weights for a space of {len(self.space)} points"
            )
        for label, w in zip(self.space.labels, weights):
            if w < 0:
                raise InvalidStateError(f"negative weight {w} at {label!r}")
        total = sum(weights, ZERO)
        if total != ONE:
            raise InvalidStateError(f"weights sum to {total}, expected 1")
        object.__setattr__(self, "weights", weights)

    def __getitem__(self, label: str) -> Fraction:
        return self.weights[self.space.index(label)]

    def as_dict(self) -> dict[str, Fraction]:
        return dict(zip(self.space.labels, self.weights))

    def pair(self, function: Sequence[Fraction]) -> Fraction:
        """Expectation of a function on the space (the duality pairing)."""
        if len(function) != len(self.space):
            raise DimensionMismatchError("function and state have different lengths")
        return sum((w * f for w, f in zip(self.weights, function)), ZERO)

    @property
    def support(self) -> frozenset[str]:
        return frozenset(l for l, w in zip(self.space.labels, self.weights) if w)

    def is_pure(self) -> bool:
        return len(self.support) == 1


def make_mixed_state(space: StateSpace, weights) -> MixedState:
    """Build a mixed state from a sequence of weights or a ``label -> weight`` map."""
    if isinstance(weights, Mapping):
        unknown = set(weights) - set(space.labels)
        if unknown:
            raise UnknownLabelError(f"unknown labels in weights: {sorted(unknown)}")
        weights = [weights.get(label, 0) for label in space.labels]
    return MixedState(space, tuple(weights))


def point_mass(space: StateSpace, label: str) -> MixedState:
    i = space.index(label)
    return MixedState(space, tuple(ONE if j == i else ZERO for j in range(len(space))))


def uniform_state(space: StateSpace) -> MixedState:
    w = Fraction(1, len(space))
    return MixedState(space, (w,) * len(space))


Event = Union[str, Iterable[str]]


@dataclass(frozen=True)
class Observable:
    """Finitely additive observable on the power set of ``outcomes``.

    ``matrix[i][j]`` is the effect of the singleton ``{outcomes[i]}`` at point
    ``space.labels[j]``.
    """

    space: StateSpace
    outcomes: tuple[str, ...]
    matrix: tuple[tuple[Fraction, ...], ...]
    _events: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        outcomes = tuple(self.outcomes)
        if not outcomes:
            raise EmptySpaceError("an observable needs at least one outcome")
        if len(set(outcomes)) != len(outcomes):
            raise DuplicateLabelError(f"duplicate outcome labels in {list(outcomes)}")
        for x in outcomes:
            if not isinstance(x, str):
                raise TypeError(f"outcome labels must be strings, got {x!r}")
        if len(self.matrix) != len(outcomes):
            raise DimensionMismatchError(
                f"{len(self.matrix)} effect rows for {len(outcomes)} outcomes"
            )
        n = len(self.space)
        rows = []
        for x, row in zip(outcomes, self.matrix):
            row = tuple(as_scalar(v) for v in row)
            if len(row) != n:
                raise DimensionMismatchError(
                    f"effect row for outcome {x!r} has {len(row)} entries, "
                    f"space has {n} points"
                )
            for label, v in zip(self.space.labels, row):
                if v < 0:
                    raise NegativeEffectError(
                        f"effect of {{{x!r}}} at {label!r} is {v} < 0"
                    )
            rows.append(row)
        for j, label in enumerate(self.space.labels):
            total = sum((row[j] for row in rows), ZERO)
            if total != ONE:
                raise ColumnNotNormalizedError(label, total)
        object.__setattr__(self, "outcomes", outcomes)
        object.__setattr__(self, "matrix", tuple(rows))
        object.__setattr__(self, "_events", {})

    def outcome_index(self, outcome: str) -> int:
        try:
            return self.outcomes.index(outcome)
        except ValueError:
            raise UnknownOutcomeError(
                f"{outcome!r} is not an outcome of {list(self.outcomes)}"
            ) from None

    def normalize_event(self, event: Event) -> frozenset[str]:
        """Validate an event; a bare string is read as a single outcome."""
        if isinstance(event, str):
            event = (event,)
        event = frozenset(event)
        for x in event:
            self.outcome_index(x)
        return event

    def effect_function(self, event: Event) -> tuple[Fraction, ...]:
        """The function ``F(event)`` on the space, as a tuple over points."""
        event = self.normalize_event(event)
        cached = self._events.get(event)
        if cached is None:
            rows = [self.matrix[self.outcome_index(x)] for x in event]
            cached = tuple(
                sum((row[j] for row in rows), ZERO) for j in range(len(self.space))
            )
            self._events[event] = cached
        return cached

    def column(self, label: str) -> dict[str, Fraction]:
        """Singleton effects at one point, i.e. the outcome law at that state."""
        j = self.space.index(label)
        return {x: row[j] for x, row in zip(self.outcomes, self.matrix)}


def make_observable(space: StateSpace, outcomes: Sequence[str], matrix) -> Observable:
    """Validate and build an observable from a ``[outcome][point]`` grid."""
    return Observable(space, tuple(outcomes), tuple(tuple(row) for row in matrix))


def identity_observable(space: StateSpace) -> Observable:
    """Outcome ``label`` is certain exactly at the point ``label``."""
    n = len(space)
    matrix = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    return make_observable(space, space.labels, matrix)


def effect(obs: Observable, event: Event, point: str) -> Fraction:
    """``[F(event)](point)``."""
    return obs.effect_function(event)[obs.space.index(point)]


# --- measurement sessions -------------------------------------------------


@dataclass(frozen=True)
class KnownPoint:
    """The state is the point ``label``; ``space`` pins the space it belongs to."""

    label: str
    space: StateSpace | None = None


@dataclass(frozen=True)
class Unknown:
    pass


@dataclass(frozen=True)
class UnknownWithPrior:
    """State unknown, distributed according to ``prior``.

    ``hidden`` optionally names the actual (unobserved) point.  It is
    validated but never influences the outcome distribution.
    """

    prior: MixedState
    hidden: str | None = None


StateSpec = Union[KnownPoint, Unknown, UnknownWithPrior]


class MeasurementSession:
    """A single measurement of ``observable`` for a system in ``state_spec``.

    The session can be executed once.  It is owned by one caller; the
    consume transition is guarded by a lock so a misuse across threads
    still yields at most one result.
    """

    def __init__(self, observable: Observable, state_spec: StateSpec):
        self.observable = observable
        self.state_spec = state_spec
        self._consumed = False
        self._lock = threading.Lock()

    @property
    def consumed(self) -> bool:
        return self._consumed

    def _consume(self):
        with self._lock:
            if self._consumed:
                raise SessionConsumedError("only one measurement is permitted per session")
            self._consumed = True

    def outcome_distribution(self) -> dict[str, Fraction]:
        spec = self.state_spec
        if isinstance(spec, Unknown):
            raise StateUnknownError(
                "state is unknown and no prior is given; the outcome law is undefined"
            )
        self._consume()
        obs = self.observable
        if isinstance(spec, KnownPoint):
            return obs.column(spec.label)
        return {x: spec.prior.pair(row) for x, row in zip(obs.outcomes, obs.matrix)}

    def __repr__(self):
        state = "consumed" if self._consumed else "fresh"
        return f"<MeasurementSession {self.state_spec!r} {state}>"


def new_session(obs: Observable, state_spec: StateSpec) -> MeasurementSession:
    if isinstance(state_spec, KnownPoint):
        if state_spec.space is not None and state_spec.space != obs.space:
            raise SpaceMismatchError("known point belongs to a different state space")
        if state_spec.label not in obs.space:
            raise SpaceMismatchError(
                f"point {state_spec.label!r} is not in the observable's space"
            )
    elif isinstance(state_spec, UnknownWithPrior):
        if state_spec.prior.space != obs.space:
            raise SpaceMismatchError("prior lives on a different state space")
        if state_spec.hidden is not None and state_spec.hidden not in obs.space:
            raise SpaceMismatchError(
                f"hidden point {state_spec.hidden!r} is not in the observable's space"
            )
    elif not isinstance(state_spec, Unknown):
        raise TypeError(f"unsupported state specification {state_spec!r}")
    return MeasurementSession(obs, state_spec)


def outcome_distribution(session: MeasurementSession) -> dict[str, Fraction]:
    """Execute ``session``; a second call raises :class:`SessionConsumedError`."""
    return session.outcome_distribution()
