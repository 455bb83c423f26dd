"""Self-check suite run by ``classical-mt check``.

Each group returns a :class:`GroupResult`.  Random inputs come from a
seeded :class:`random.Random`, so a run is reproducible from its seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable

from .causality import compose, dual_apply, make_causal_family, make_causal_tree
from .core import MixedState, Observable, StateSpace, make_observable
from .inference import bayes_posterior, fisher_mle
from .problems import (
    MontyHallSpec,
    PrisonersSpec,
    Variant,
    VerdictKind,
    build_observable,
    solve,
)
from .scalar import ZERO
from .simulation import SimConfig, compare, simulate
from .symmetry import cyclic_family, is_state_independent, reduction_agrees

Z_LIMIT = 5.0


@dataclass(frozen=True)
class GroupResult:
    name: str
    passed: bool
    detail: str = ""


# --- random inputs --------------------------------------------------------


def random_distribution(rng: random.Random, size: int, max_weight: int = 6) -> list[Fraction]:
    """Random exact probability vector with small denominators."""
    weights = [rng.randint(0, max_weight) for _ in range(size)]
    if not any(weights):
        weights[rng.randrange(size)] = 1
    total = sum(weights)
    return [Fraction(w, total) for w in weights]


def random_observable(rng: random.Random, max_points: int = 5, max_outcomes: int = 5) -> Observable:
    n = rng.randint(1, max_points)
    m = rng.randint(1, max_outcomes)
    columns = [random_distribution(rng, m) for _ in range(n)]
    matrix = [[columns[j][i] for j in range(n)] for i in range(m)]
    return make_observable(
        StateSpace(tuple(f"w{j}" for j in range(n))), [f"x{i}" for i in range(m)], matrix
    )


def random_state(rng: random.Random, space: StateSpace) -> MixedState:
    return MixedState(space, tuple(random_distribution(rng, len(space))))


def random_chain(rng: random.Random, depth: int, max_points: int = 4):
    """Causal family on a chain ``t0 <= t1 <= ... <= t{depth-1}``."""
    spaces = {
        f"t{i}": StateSpace(tuple(f"s{i}_{j}" for j in range(rng.randint(1, max_points))))
        for i in range(depth)
    }
    parent = {f"t{i}": f"t{i - 1}" for i in range(1, depth)}
    ops = {
        (p, c): [random_distribution(rng, len(spaces[c])) for _ in spaces[p].labels]
        for c, p in parent.items()
    }
    return make_causal_family(make_causal_tree(spaces, parent), ops)


def all_events(outcomes) -> Iterable[tuple]:
    for r in range(len(outcomes) + 1):
        yield from combinations(outcomes, r)


# --- groups ---------------------------------------------------------------


def check_observable_axioms(obs: Observable) -> str | None:
    """Return a failure description, or ``None`` when all axioms hold exactly."""
    labels = obs.space.labels
    if obs.effect_function(()) != (ZERO,) * len(labels):
        return "F(empty) != 0"
    if any(v != 1 for v in obs.effect_function(obs.outcomes)):
        return "F(X) != I"
    events = [frozenset(e) for e in all_events(obs.outcomes)]
    for a in events:
        fa = obs.effect_function(a)
        if any(not 0 <= v <= 1 for v in fa):
            return f"effect of {sorted(a)} leaves [0, 1]"
        for b in events:
            fb = obs.effect_function(b)
            if not a & b:
                fab = obs.effect_function(a | b)
                if any(u != v + w for u, v, w in zip(fab, fa, fb)):
                    return f"additivity fails for {sorted(a)}, {sorted(b)}"
            if a <= b and any(v > w for v, w in zip(fa, fb)):
                return f"monotonicity fails for {sorted(a)} <= {sorted(b)}"
    return None


def group_axioms(rng: random.Random, count: int, extra: Iterable[Observable] = ()) -> GroupResult:
    for i in range(count):
        problem = check_observable_axioms(random_observable(rng))
        if problem:
            return GroupResult("axioms", False, f"random observable {i}: {problem}")
    for obs in extra:
        problem = check_observable_axioms(obs)
        if problem:
            return GroupResult("axioms", False, problem)
    return GroupResult("axioms", True, f"{count} random observables")


def check_chain(family) -> str | None:
    nodes = list(family.tree.spaces)
    for t1, t2, t3 in combinations(nodes, 3):
        if compose(family, t1, t2) @ compose(family, t2, t3) != compose(family, t1, t3):
            return f"composition law fails on {t1}, {t2}, {t3}"
    return None


def check_pairing(rng: random.Random, family) -> str | None:
    nodes = list(family.tree.spaces)
    for t1, t2 in combinations(nodes, 2):
        op = compose(family, t1, t2)
        rho = random_state(rng, op.upstream)
        f = [Fraction(rng.randint(-5, 5), rng.randint(1, 5)) for _ in op.downstream.labels]
        if dual_apply(op, rho).pair(f) != rho.pair(op.apply(f)):
            return f"pairing identity fails on {t1} -> {t2}"
    return None


def group_causality(rng: random.Random, count: int) -> GroupResult:
    for i in range(count):
        family = random_chain(rng, rng.randint(1, 4))
        problem = check_chain(family) or check_pairing(rng, family)
        if problem:
            return GroupResult("causality", False, f"chain {i}: {problem}")
    return GroupResult("causality", True, f"{count} random chains")


def group_equal_probability(rng: random.Random, count: int) -> GroupResult:
    o1 = build_observable(MontyHallSpec())
    if not (is_state_independent(cyclic_family(o1)) and reduction_agrees(cyclic_family(o1))):
        return GroupResult("equal_probability", False, "uniform cyclic family over the host observable")
    skewed = cyclic_family(o1, (Fraction(1, 2), Fraction(1, 2), ZERO))
    if is_state_independent(skewed):
        return GroupResult("equal_probability", False, "weights (1/2, 1/2, 0) reported state independent")
    for i in range(count):
        family = cyclic_family(random_observable(rng))
        if not (is_state_independent(family, all_events=True) and reduction_agrees(family)):
            return GroupResult("equal_probability", False, f"random family {i}")
    return GroupResult("equal_probability", True, f"{count} random cyclic families")


def enumerate_posterior(obs: Observable, prior: MixedState, event) -> list[Fraction] | None:
    """Conditional law of the state from the full joint (state, outcome) table."""
    event = set(obs.normalize_event(event))
    joint = {
        (w, x): prior[w] * obs.matrix[i][j]
        for j, w in enumerate(obs.space.labels)
        for i, x in enumerate(obs.outcomes)
    }
    evidence = sum((p for (w, x), p in joint.items() if x in event), ZERO)
    if evidence == 0:
        return None
    return [
        sum((joint[(w, x)] for x in event), ZERO) / evidence for w in obs.space.labels
    ]


def group_bayes_enumeration(rng: random.Random, count: int) -> GroupResult:
    for i in range(count):
        obs = random_observable(rng)
        prior = random_state(rng, obs.space)
        event = [x for x in obs.outcomes if rng.random() < 0.5]
        expected = enumerate_posterior(obs, prior, event)
        if expected is None:
            continue
        got = bayes_posterior(obs, prior, event).posterior.weights
        if list(got) != expected:
            return GroupResult("bayes_enumeration", False, f"random case {i}")
    return GroupResult("bayes_enumeration", True, f"{count} random cases")


PRIOR_GRID = (
    (Fraction(1, 3),) * 3,
    (Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)),
    (Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)),
)
ALPHA_GRID = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))


def group_bayes_simulation(trials: int, seed: int) -> GroupResult:
    worst = 0.0
    for pi, prior in enumerate(PRIOR_GRID):
        for ai, alpha in enumerate(ALPHA_GRID):
            spec = MontyHallSpec(prior=prior, alpha=alpha, variant=Variant.BAYES)
            obs = build_observable(spec)
            report = simulate(SimConfig(prior=prior, alpha=alpha, trials=trials, seed=seed + 9 * pi + ai))
            if report.opened_picked or report.opened_car:
                return GroupResult("bayes_simulation", False, "host opened the picked door or the car")
            for x in obs.outcomes:
                if report.utterance_count(x) == 0:
                    continue
                post = bayes_posterior(obs, MixedState(obs.space, prior), x).posterior
                z = max(abs(v) for v in compare(report, post, x).values())
                worst = max(worst, z)
                if z >= Z_LIMIT:
                    return GroupResult(
                        "bayes_simulation", False,
                        f"prior {prior}, alpha {alpha}, utterance {x}: |z| = {z:.2f}",
                    )
    return GroupResult("bayes_simulation", True, f"max |z| = {worst:.2f} at {trials} trials")


def group_verdicts() -> GroupResult:
    half = Fraction(1, 2)
    third = Fraction(1, 3)
    cases = [
        (solve(MontyHallSpec()), VerdictKind.SWITCH, None),
        (solve(PrisonersSpec()), VerdictKind.NOT_WELL_POSED, None),
        (
            solve(MontyHallSpec(variant=Variant.EQUAL_PROBABILITY)),
            VerdictKind.SWITCH,
            (third, 2 * third, ZERO),
        ),
        (
            solve(PrisonersSpec(variant=Variant.EQUAL_PROBABILITY)),
            VerdictKind.HAPPINESS_INVARIANT,
            (third, 2 * third, ZERO),
        ),
        (
            solve(MontyHallSpec(variant=Variant.BAYES, prior=(half, half / 2, half / 2))),
            VerdictKind.INDIFFERENT,
            (half, half, ZERO),
        ),
    ]
    for verdict, kind, posterior in cases:
        if verdict.kind is not kind:
            return GroupResult("verdicts", False, f"{verdict.problem}: got {verdict.kind.value}")
        if posterior is not None and verdict.posterior.weights != posterior:
            return GroupResult("verdicts", False, f"{verdict.problem}: posterior mismatch")
    if fisher_mle(build_observable(MontyHallSpec()), "3").maximizers != {"A2"}:
        return GroupResult("verdicts", False, "Fisher maximizer is not A2")
    return GroupResult("verdicts", True, f"{len(cases)} verdicts")


def run_all(
    trials: int = 100_000,
    seed: int = 42,
    fixtures: Iterable[tuple[str, Callable[[], Observable]]] = (),
) -> list[GroupResult]:
    """Run every group; ``fixtures`` are ``(name, loader)`` pairs of observables."""
    rng = random.Random(seed)
    results = [group_verdicts()]
    loaded = []
    for name, load in fixtures:
        try:
            loaded.append(load())
        except Exception as exc:  # any failure to load marks the fixture group red
            results.append(GroupResult(f"fixture:{name}", False, str(exc)))
        else:
            results.append(GroupResult(f"fixture:{name}", True))
    results.append(group_axioms(rng, 200, loaded))
    results.append(group_causality(rng, 50))
    results.append(group_equal_probability(rng, 50))
    results.append(group_bayes_enumeration(rng, 200))
    results.append(group_bayes_simulation(trials, seed))
    return results
