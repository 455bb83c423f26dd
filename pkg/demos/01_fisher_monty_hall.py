"""
Maximum likelihood on the host's answer
=======================================

You pick door A1, the host opens A3.  Which door hides the car?
"""

from classical_mt import MontyHallSpec, build_observable, fisher_mle, solve

# the host's behaviour as an observable: rows are "opens door k",
# columns are "car behind door m"
spec = MontyHallSpec(picked="A1", opened="A3")
host = build_observable(spec)
for outcome, row in zip(host.outcomes, host.matrix):
    print(outcome, [str(v) for v in row])

# "3" was observed; the likelihood of each state is the matching row
result = fisher_mle(host, {"3"})
print("most likely:", sorted(result.maximizers), "with likelihood", result.max_likelihood)

verdict = solve(spec)
print("verdict:", verdict.kind.value)
