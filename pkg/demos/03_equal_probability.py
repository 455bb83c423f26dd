"""
A fair die instead of a prior
=============================

If the door you pick is decided by a fair die, the three rotated versions
of the host's measurement are mixed with equal weights.  The mixture reads
the same at every state, and that common value is what the uniform prior
would give.
"""

from fractions import Fraction
from itertools import combinations

from classical_mt import (
    MontyHallSpec,
    Variant,
    build_observable,
    cyclic_family,
    equal_probability_reduction,
    is_state_independent,
    mixture_probability,
    solve,
)

host = build_observable(MontyHallSpec())
family = cyclic_family(host)

for r in range(4):
    for event in combinations(host.outcomes, r):
        row = [mixture_probability(family, w, set(event)) for w in host.space]
        print(list(event), [str(v) for v in row])

print("derived prior:", [str(p) for p in equal_probability_reduction(family).weights])

# a loaded die breaks the symmetry
loaded = cyclic_family(host, (Fraction(1, 2), Fraction(1, 2), 0))
print("loaded die state independent?", is_state_independent(loaded))
print("A1:", mixture_probability(loaded, "A1", {"3"}), " A2:", mixture_probability(loaded, "A2", {"3"}))

v = solve(MontyHallSpec(variant=Variant.EQUAL_PROBABILITY))
print(v.kind.value, [str(q) for q in v.posterior.weights])
