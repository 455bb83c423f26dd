import csv
import io
import json
import math
from fractions import Fraction

import pytest

from classical_mt import (
    InvalidAlphaError,
    InvalidStateError,
    MixedState,
    MontyHallSpec,
    NoConditioningEventsError,
    Variant,
    bayes_posterior,
    build_observable,
    make_state_space,
    solve,
    statistical_probability,
)
from classical_mt.simulation import SimConfig, compare, simulate

THIRD = Fraction(1, 3)
H = Fraction(1, 2)
Q = Fraction(1, 4)
DOORS = make_state_space(["A1", "A2", "A3"])

PRIORS = [(THIRD,) * 3, (H, Q, Q), (H, THIRD, Fraction(1, 6))]
ALPHAS = [Q, H, 3 * Q]
MILLION = 10**6


def test_same_seed_same_report():
    cfg = SimConfig(trials=200_000, seed=7)
    assert simulate(cfg) == simulate(cfg)
    assert simulate(SimConfig(trials=200_000, seed=8)).counts != simulate(cfg).counts


def test_worker_count_does_not_matter():
    cfg = SimConfig(trials=300_000, seed=3)
    parallel = SimConfig(trials=300_000, seed=3, workers=2)
    assert simulate(cfg).counts == simulate(parallel).counts


def test_counts_sum_to_trials():
    report = simulate(SimConfig(trials=12_345, seed=1))
    assert report.trials == 12_345


def test_deterministic_column():
    report = simulate(SimConfig(prior=(0, 1, 0), trials=50_000))
    assert report.marginal_frequencies() == {"1": 0.0, "2": 0.0, "3": 1.0}


@pytest.mark.parametrize("picked", [0, 1, 2])
def test_validity_counters(picked):
    report = simulate(SimConfig(trials=100_000, seed=picked, picked=picked))
    assert report.opened_picked == report.opened_car == 0
    assert report.utterance_count(str(picked + 1)) == 0


def test_config_validation():
    with pytest.raises(InvalidStateError):
        SimConfig(prior=(H, H, H))
    with pytest.raises(InvalidAlphaError):
        SimConfig(alpha=1)


def test_calibrated_and_fallacy():
    report = simulate(SimConfig(trials=MILLION, seed=2024))
    right = compare(report, {"A1": THIRD, "A2": 2 * THIRD, "A3": 0}, "3")
    assert all(abs(z) < 5 for z in right.values())
    # stay fallacy: both closed doors at 1/2
    wrong = compare(report, {"A1": H, "A2": H, "A3": 0}, "3")
    assert abs(wrong["A2"]) > 100


def test_no_conditioning_events():
    report = simulate(SimConfig(trials=1000))
    with pytest.raises(NoConditioningEventsError):
        compare(report, {"A1": 1, "A2": 0, "A3": 0}, "1")


def test_zero_sigma_scores():
    report = simulate(SimConfig(trials=1000))
    z = compare(report, {"A1": H, "A2": 0, "A3": H}, "3")
    assert z["A2"] == math.inf
    z = compare(report, {"A1": 0, "A2": 1, "A3": 0}, "3")
    assert z["A3"] == 0.0 and z["A2"] == -math.inf


@pytest.mark.parametrize("prior", PRIORS)
@pytest.mark.parametrize("alpha", ALPHAS)
def test_grid_against_kernel(prior, alpha):
    seed = 100 * PRIORS.index(prior) + ALPHAS.index(alpha)
    report = simulate(SimConfig(prior=prior, alpha=alpha, trials=MILLION, seed=seed))
    obs = build_observable(MontyHallSpec(alpha=alpha))
    rho = MixedState(DOORS, prior)
    n = report.trials
    for x in obs.outcomes:
        p = float(statistical_probability(obs, rho, {x}))
        freq = report.marginal_frequencies()[x]
        if p in (0.0, 1.0):
            assert freq == p
        else:
            assert abs(freq - p) / math.sqrt(p * (1 - p) / n) < 5
        if report.utterance_count(x):
            post = bayes_posterior(obs, rho, {x}).posterior
            assert all(abs(z) < 5 for z in compare(report, post, x).values())


def test_json_and_csv_export():
    report = simulate(SimConfig(trials=10_000, seed=5))
    post = solve(MontyHallSpec(variant=Variant.EQUAL_PROBABILITY)).posterior
    doc = json.loads(json.dumps(report.to_dict({"3": post})))
    assert doc["counts"] == [list(r) for r in report.counts]
    assert doc["validity"] == {"opened_picked": 0, "opened_car": 0}
    assert set(doc["z_scores"]["3"]) == {"A1", "A2", "A3"}
    rows = list(csv.reader(io.StringIO(report.counts_csv())))
    assert rows[0] == ["true_state", "utterance_1", "utterance_2", "utterance_3"]
    assert [int(v) for v in rows[2][1:]] == list(report.counts[1])
