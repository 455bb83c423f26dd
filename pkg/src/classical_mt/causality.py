"""Causal families: Markov operators along a finite rooted tree.

Each node ``t`` of the tree carries a state space.  For every parent/child
edge ``(s, t)`` a Markov operator maps functions on the child's space to
functions on the parent's space.  It is stored as a matrix whose rows are
indexed by the parent's points and columns by the child's points, so that
``(Φ f)(ω) = Σ_ω' Φ[ω][ω'] f(ω')``.  Positivity and ``Φ 1 = 1`` mean every
row is a probability vector.

Operators between comparable non-adjacent nodes are never stored; they are
products of edge operators along the tree path.  States travel the other way
through the dual action ``(Φ* ρ)(ω') = Σ_ω ρ(ω) Φ[ω][ω']``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .core import MixedState, Observable, StateSpace
from .errors import (
    DimensionMismatchError,
    InvalidTreeError,
    NotComparableError,
    NotMarkovError,
    SpaceMismatchError,
)
from .scalar import ONE, ZERO, as_scalar

__all__ = [
    "MarkovOperator",
    "CausalTree",
    "CausalFamily",
    "make_markov_operator",
    "identity_operator",
    "make_causal_tree",
    "make_causal_family",
    "compose",
    "dual_apply",
    "is_deterministic",
    "pull_back",
]


def _matmul(a, b):
    cols = list(zip(*b))
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col)), ZERO) for col in cols) for row in a
    )


@dataclass(frozen=True)
class MarkovOperator:
    """Markov operator from functions on ``downstream`` to functions on ``upstream``."""

    upstream: StateSpace
    downstream: StateSpace
    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.matrix) != len(self.upstream):
            raise DimensionMismatchError(
                f"{len(self.matrix)} rows for an upstream space of {len(self.upstream)}"
            )
        rows = []
        for label, row in zip(self.upstream.labels, self.matrix):
            row = tuple(as_scalar(v) for v in row)
            if len(row) != len(self.downstream):
                raise DimensionMismatchError(
                    f"row {label!r} has {len(row)} entries, downstream space has "
                    f"{len(self.downstream)}"
                )
            if any(v < 0 for v in row):
                raise NotMarkovError(f"negative entry in row {label!r}")
            total = sum(row, ZERO)
            if total != ONE:
                raise NotMarkovError(
                    f"row {label!r} sums to {total}; the unit function is not preserved"
                )
            rows.append(row)
        object.__setattr__(self, "matrix", tuple(rows))

    def apply(self, function: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Heisenberg action on a function over the downstream space."""
        if len(function) != len(self.downstream):
            raise DimensionMismatchError("function length does not match downstream space")
        function = [as_scalar(v) for v in function]
        return tuple(sum((p * f for p, f in zip(row, function)), ZERO) for row in self.matrix)

    def __matmul__(self, other: "MarkovOperator") -> "MarkovOperator":
        if self.downstream != other.upstream:
            raise DimensionMismatchError("operators do not chain: spaces differ")
        return MarkovOperator(self.upstream, other.downstream, _matmul(self.matrix, other.matrix))


def make_markov_operator(upstream: StateSpace, downstream: StateSpace, matrix) -> MarkovOperator:
    return MarkovOperator(upstream, downstream, tuple(tuple(row) for row in matrix))


def identity_operator(space: StateSpace) -> MarkovOperator:
    n = len(space)
    return MarkovOperator(
        space, space, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))
    )


@dataclass(frozen=True)
class CausalTree:
    """Finite rooted tree of state spaces, given by a child -> parent map."""

    spaces: Mapping[str, StateSpace]
    parent: Mapping[str, str]
    root: str

    def path_from(self, ancestor: str, node: str) -> list[str] | None:
        """Nodes from ``ancestor`` down to ``node``, or ``None`` if not an ancestor."""
        chain = [node]
        while chain[-1] != ancestor:
            up = self.parent.get(chain[-1])
            if up is None:
                return None
            chain.append(up)
        return chain[::-1]

    def precedes(self, t1: str, t2: str) -> bool:
        """The tree order ``t1 <= t2``."""
        return self.path_from(t1, t2) is not None

    def edges(self) -> list[tuple[str, str]]:
        return [(p, c) for c, p in self.parent.items()]


def make_causal_tree(spaces: Mapping[str, StateSpace], parent: Mapping[str, str]) -> CausalTree:
    spaces = dict(spaces)
    parent = dict(parent)
    if not spaces:
        raise InvalidTreeError("a causal tree needs at least one node")
    for child, par in parent.items():
        if child not in spaces or par not in spaces:
            raise InvalidTreeError(f"edge {par!r} -> {child!r} names an unknown node")
    roots = [t for t in spaces if t not in parent]
    if len(roots) != 1:
        raise InvalidTreeError(f"expected exactly one root, found {roots}")
    root = roots[0]
    for t in spaces:
        seen = set()
        node = t
        while node != root:
            if node in seen:
                raise InvalidTreeError(f"cycle through {node!r}")
            seen.add(node)
            node = parent[node]
    return CausalTree(spaces, parent, root)


@dataclass(frozen=True)
class CausalFamily:
    tree: CausalTree
    edge_ops: Mapping[tuple[str, str], MarkovOperator]

    def operator(self, t1: str, t2: str) -> MarkovOperator:
        return compose(self, t1, t2)


def make_causal_family(tree: CausalTree, edge_ops: Mapping[tuple[str, str], object]) -> CausalFamily:
    """Validate one Markov operator per edge ``(parent, child)``.

    Operators may be given as :class:`MarkovOperator` or as raw matrices.
    """
    edges = set(tree.edges())
    given = set(edge_ops)
    if given != edges:
        missing = sorted(edges - given)
        extra = sorted(given - edges)
        raise InvalidTreeError(f"edge operators mismatch: missing {missing}, extra {extra}")
    ops = {}
    for (par, child), op in edge_ops.items():
        up, down = tree.spaces[par], tree.spaces[child]
        if isinstance(op, MarkovOperator):
            if op.upstream != up or op.downstream != down:
                raise DimensionMismatchError(
                    f"operator on edge {par!r} -> {child!r} has the wrong spaces"
                )
        else:
            op = make_markov_operator(up, down, op)
        ops[(par, child)] = op
    return CausalFamily(tree, ops)


def compose(family: CausalFamily, t1: str, t2: str) -> MarkovOperator:
    """Operator ``Φ_{t1,t2}`` for ``t1 <= t2``: product of the edges on the path."""
    tree = family.tree
    for t in (t1, t2):
        if t not in tree.spaces:
            raise InvalidTreeError(f"unknown node {t!r}")
    path = tree.path_from(t1, t2)
    if path is None:
        raise NotComparableError(f"{t1!r} does not precede {t2!r} in the tree order")
    op = identity_operator(tree.spaces[t1])
    for par, child in zip(path, path[1:]):
        op = op @ family.edge_ops[(par, child)]
    return op


def dual_apply(op: MarkovOperator, state: MixedState) -> MixedState:
    """Push a state on the upstream space forward to the downstream space."""
    if state.space != op.upstream:
        raise DimensionMismatchError("state does not live on the operator's upstream space")
    n = len(op.downstream)
    weights = tuple(
        sum((w * row[j] for w, row in zip(state.weights, op.matrix)), ZERO) for j in range(n)
    )
    return MixedState(op.downstream, weights)


def is_deterministic(op: MarkovOperator) -> bool:
    """True iff the dual sends every point mass to a point mass."""
    return all(sum(1 for v in row if v) == 1 for row in op.matrix)


def pull_back(op: MarkovOperator, obs: Observable) -> Observable:
    """Observable on the upstream space: each effect pulled back through ``op``."""
    if obs.space != op.downstream:
        raise SpaceMismatchError("observable does not live on the operator's downstream space")
    return Observable(op.upstream, obs.outcomes, tuple(op.apply(row) for row in obs.matrix))
