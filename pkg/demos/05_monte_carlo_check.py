"""
Playing the game a few hundred thousand times
=============================================

The simulator plays the story directly with a pseudo-random generator and
never touches the exact kernel, so it is an independent check.
"""

from classical_mt import MontyHallSpec, Variant, solve
from classical_mt.simulation import SimConfig, compare, simulate

report = simulate(SimConfig(trials=200_000, seed=1))
print("counts [car][opened]:", report.counts)
print("host misbehaved:", report.opened_picked, report.opened_car)

freqs = report.conditional_frequencies("3")
print("car location after door 3 opens:", {k: round(v, 4) for k, v in freqs.items()})

exact = solve(MontyHallSpec(variant=Variant.EQUAL_PROBABILITY)).posterior
print("z against the exact posterior:", compare(report, exact, "3"))
print("z against 'it is 50/50 now':", compare(report, {"A1": 0.5, "A2": 0.5, "A3": 0}, "3"))
