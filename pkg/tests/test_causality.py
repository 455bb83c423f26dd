from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import distributions, rationals, states

from classical_mt import (
    DimensionMismatchError,
    InvalidTreeError,
    NotComparableError,
    NotMarkovError,
    compose,
    dual_apply,
    identity_operator,
    is_deterministic,
    make_causal_family,
    make_causal_tree,
    make_markov_operator,
    make_observable,
    make_state_space,
    point_mass,
    pull_back,
    statistical_probability,
    uniform_state,
)

H = Fraction(1, 2)
SPLIT = [[H, H], [0, 1]]


@pytest.fixture
def pair():
    return make_state_space(["u", "v"])


@pytest.fixture
def chain(pair):
    spaces = {"t0": pair, "t1": pair, "t2": pair}
    tree = make_causal_tree(spaces, {"t1": "t0", "t2": "t1"})
    return make_causal_family(tree, {("t0", "t1"): SPLIT, ("t1", "t2"): SPLIT})


def oracle_product(*matrices):
    """Exact matrix product using numpy object arrays of Fractions."""
    out = np.array(matrices[0], dtype=object)
    for m in matrices[1:]:
        out = out.dot(np.array(m, dtype=object))
    return [[Fraction(v) for v in row] for row in out]


def test_identity_family(pair):
    tree = make_causal_tree({"a": pair, "b": pair}, {"b": "a"})
    family = make_causal_family(tree, {("a", "b"): [[1, 0], [0, 1]]})
    assert compose(family, "a", "b") == identity_operator(pair)


def test_split_operator_is_markov(pair):
    op = make_markov_operator(pair, pair, SPLIT)
    assert op.apply([1, 1]) == (1, 1)


def test_not_markov(pair):
    with pytest.raises(NotMarkovError):
        make_markov_operator(pair, pair, [[1, H], [0, 1]])
    with pytest.raises(NotMarkovError):
        make_markov_operator(pair, pair, [[2, -1], [0, 1]])
    with pytest.raises(DimensionMismatchError):
        make_markov_operator(pair, pair, [[1, 0, 0], [0, 1, 0]])


def test_compose_identity_and_path(chain, pair):
    assert compose(chain, "t1", "t1") == identity_operator(pair)
    expected = oracle_product(SPLIT, SPLIT)
    assert expected == [[Fraction(1, 4), Fraction(3, 4)], [0, 1]]
    assert [list(r) for r in compose(chain, "t0", "t2").matrix] == expected


def test_compose_direction(chain):
    with pytest.raises(NotComparableError):
        compose(chain, "t2", "t0")


def test_siblings_not_comparable(pair):
    tree = make_causal_tree({"r": pair, "a": pair, "b": pair}, {"a": "r", "b": "r"})
    family = make_causal_family(tree, {("r", "a"): SPLIT, ("r", "b"): SPLIT})
    with pytest.raises(NotComparableError):
        compose(family, "a", "b")
    assert tree.precedes("r", "b") and not tree.precedes("a", "b")


def test_tree_validation(pair):
    with pytest.raises(InvalidTreeError):
        make_causal_tree({"a": pair, "b": pair}, {"a": "b", "b": "a"})
    with pytest.raises(InvalidTreeError):
        make_causal_tree({"a": pair, "b": pair}, {})
    tree = make_causal_tree({"a": pair, "b": pair}, {"b": "a"})
    with pytest.raises(InvalidTreeError):
        make_causal_family(tree, {})
    three = make_state_space(["x", "y", "z"])
    tree = make_causal_tree({"a": pair, "b": three}, {"b": "a"})
    with pytest.raises(DimensionMismatchError):
        make_causal_family(tree, {("a", "b"): SPLIT})


def test_dual_apply(pair):
    op = make_markov_operator(pair, pair, SPLIT)
    rho = point_mass(pair, "u")
    assert dual_apply(identity_operator(pair), rho) == rho
    pushed = dual_apply(op, rho)
    assert pushed.weights == (H, H)
    # pairing check for the same example
    f = [Fraction(3), Fraction(-1)]
    assert pushed.pair(f) == rho.pair(op.apply(f))


def test_dual_apply_dimension(pair):
    op = make_markov_operator(pair, pair, SPLIT)
    with pytest.raises(DimensionMismatchError):
        dual_apply(op, uniform_state(make_state_space(["x", "y", "z"])))


def test_is_deterministic(pair):
    three = make_state_space(["x", "y", "z"])
    perm = make_markov_operator(three, three, [[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    assert is_deterministic(perm)
    assert is_deterministic(identity_operator(three))
    assert not is_deterministic(make_markov_operator(pair, pair, SPLIT))
    # deterministic means point masses stay point masses
    for w in three:
        assert dual_apply(perm, point_mass(three, w)).is_pure()


# --- properties -----------------------------------------------------------


@st.composite
def markov_operators(draw, max_points=4):
    up = make_state_space([f"a{i}" for i in range(draw(st.integers(1, max_points)))])
    down = make_state_space([f"b{i}" for i in range(draw(st.integers(1, max_points)))])
    rows = [draw(distributions(len(down))) for _ in up]
    return make_markov_operator(up, down, rows)


@st.composite
def chains(draw, max_depth=4):
    depth = draw(st.integers(1, max_depth))
    spaces = {
        f"t{i}": make_state_space([f"s{i}{j}" for j in range(draw(st.integers(1, 3)))])
        for i in range(depth)
    }
    parent = {f"t{i}": f"t{i-1}" for i in range(1, depth)}
    ops = {
        (p, c): [draw(distributions(len(spaces[c]))) for _ in spaces[p]]
        for c, p in parent.items()
    }
    return make_causal_family(make_causal_tree(spaces, parent), ops)


@given(markov_operators(), st.data())
def test_pairing_identity(op, data):
    rho = data.draw(states(op.upstream))
    f = data.draw(st.lists(rationals, min_size=len(op.downstream), max_size=len(op.downstream)))
    assert dual_apply(op, rho).pair(f) == rho.pair(op.apply(f))


@st.composite
def composable_pairs(draw):
    a = draw(markov_operators())
    far = make_state_space([f"c{i}" for i in range(draw(st.integers(1, 4)))])
    b = make_markov_operator(a.downstream, far, [draw(distributions(len(far))) for _ in a.downstream])
    return a, b


@given(composable_pairs())
def test_markov_closure(pair_of_ops):
    a, b = pair_of_ops
    product = a @ b
    assert all(sum(row) == 1 and min(row) >= 0 for row in product.matrix)
    assert [list(r) for r in product.matrix] == oracle_product(a.matrix, b.matrix)


@settings(max_examples=60)
@given(chains())
def test_chain_rule(family):
    for t1, t2, t3 in combinations(list(family.tree.spaces), 3):
        assert compose(family, t1, t2) @ compose(family, t2, t3) == compose(family, t1, t3)


@given(markov_operators(), st.integers(1, 4), st.data())
def test_heisenberg_schroedinger_agreement(op, m, data):
    cols = [data.draw(distributions(m)) for _ in op.downstream]
    outcomes = [f"x{i}" for i in range(m)]
    obs = make_observable(op.downstream, outcomes, [[c[i] for c in cols] for i in range(m)])
    rho = data.draw(states(op.upstream))
    back = pull_back(op, obs)
    for x in outcomes:
        assert statistical_probability(back, rho, {x}) == statistical_probability(
            obs, dual_apply(op, rho), {x}
        )


@given(markov_operators(), st.data())
def test_dual_preserves_normalization(op, data):
    rho = data.draw(states(op.upstream))
    pushed = dual_apply(op, rho)
    assert pushed.space == op.downstream
    assert sum(pushed.weights) == 1
