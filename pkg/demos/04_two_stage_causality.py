"""
Measuring after the system has evolved
======================================

A coin sits heads up.  Each step a shaky hand flips it with probability
1/2 if it shows heads and never if it shows tails.  We look at it after
two steps.
"""

from fractions import Fraction

from classical_mt import (
    compose,
    dual_apply,
    identity_observable,
    is_deterministic,
    make_causal_family,
    make_causal_tree,
    make_state_space,
    point_mass,
    pull_back,
    statistical_probability,
)

coin = make_state_space(["heads", "tails"])
half = Fraction(1, 2)
step = [[half, half], [0, 1]]

tree = make_causal_tree({"t0": coin, "t1": coin, "t2": coin}, {"t1": "t0", "t2": "t1"})
family = make_causal_family(tree, {("t0", "t1"): step, ("t1", "t2"): step})

two_steps = compose(family, "t0", "t2")
print("two-step kernel:", [[str(v) for v in row] for row in two_steps.matrix])
print("deterministic?", is_deterministic(two_steps))

# Schrodinger picture: move the state forward, then look
start = point_mass(coin, "heads")
later = dual_apply(two_steps, start)
look = identity_observable(coin)
print("state at t2:", [str(w) for w in later.weights])

# Heisenberg picture: pull the observable back, then look at t0
early_look = pull_back(two_steps, look)
print(
    "P(tails) both ways:",
    statistical_probability(look, later, {"tails"}),
    statistical_probability(early_look, start, {"tails"}),
)
