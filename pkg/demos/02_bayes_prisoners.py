"""
Three prisoners with a prior
============================

Prisoner A1 asks which of the others will be executed and hears "A3".
Does A1 have reason to be happier?
"""

from fractions import Fraction

from classical_mt import PrisonersSpec, Variant, solve

# Without a prior the question has no answer.
print(solve(PrisonersSpec()).kind.value)

# With one, the answer depends on the prior.
for prior in [
    (Fraction(1, 3),) * 3,
    (Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)),
    (Fraction(1, 4), Fraction(1, 4), Fraction(1, 2)),
]:
    v = solve(PrisonersSpec(prior=prior, variant=Variant.BAYES))
    print(
        [str(p) for p in prior],
        "->",
        [str(q) for q in v.posterior.weights],
        v.kind.value,
    )
