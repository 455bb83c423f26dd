import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import DATA, HOST_MATRIX
from strategies import distributions, observables

from classical_mt import (
    ColumnNotNormalizedError,
    InvalidTreeError,
    MontyHallSpec,
    PrisonersSpec,
    Variant,
    make_causal_family,
    make_causal_tree,
    make_state_space,
    solve,
)
from classical_mt.serialize import (
    SchemaError,
    causal_family_from_dict,
    causal_family_to_dict,
    loads,
    observable_from_dict,
    observable_to_dict,
    problem_from_dict,
    problem_to_dict,
    verdict_from_dict,
    verdict_to_dict,
)

H = Fraction(1, 2)
THIRD = Fraction(1, 3)


def roundtrip(doc):
    return loads(json.dumps(doc))


def test_fixture_decimals_are_exact(host):
    obs = observable_from_dict(loads((DATA / "host_observable.json").read_text()))
    assert obs == host
    assert [list(r) for r in obs.matrix] == HOST_MATRIX


def test_decimal_not_rounded_through_float():
    doc = loads('{"space": ["a", "b"], "outcomes": ["x", "y"], "effects": [[0.1, 1], [0.9, 0]]}')
    obs = observable_from_dict(doc)
    assert obs.matrix[0][0] == Fraction(1, 10)


def test_mixed_rational_forms():
    doc = {"space": ["a"], "outcomes": ["x", "y", "z"], "effects": [[[1, 3]], ["1/3"], ["1/3"]]}
    assert observable_from_dict(doc).matrix[0][0] == THIRD


@pytest.mark.parametrize(
    "doc",
    [
        {"space": ["a"], "outcomes": ["x"]},
        {"space": "a", "outcomes": ["x"], "effects": [[1]]},
        {"space": ["a"], "outcomes": ["x"], "effects": [[True]]},
        {"space": ["a"], "outcomes": ["x"], "effects": [["one"]]},
    ],
)
def test_observable_schema_errors(doc):
    with pytest.raises(SchemaError):
        observable_from_dict(doc)


def test_observable_axiom_errors_surface():
    with pytest.raises(ColumnNotNormalizedError):
        observable_from_dict({"space": ["a"], "outcomes": ["x", "y"], "effects": [[H], [H + THIRD]]})


def test_invalid_json():
    with pytest.raises(SchemaError):
        loads("{not json")


@given(observables())
def test_observable_roundtrip(obs):
    assert observable_from_dict(roundtrip(observable_to_dict(obs))) == obs


@given(st.data())
def test_causal_family_roundtrip(data):
    spaces = {t: make_state_space([f"{t}{j}" for j in range(data.draw(st.integers(1, 3)))]) for t in "rab"}
    parent = {"a": "r", "b": "r"}
    ops = {(p, c): [data.draw(distributions(len(spaces[c]))) for _ in spaces[p]] for c, p in parent.items()}
    family = make_causal_family(make_causal_tree(spaces, parent), ops)
    assert causal_family_from_dict(roundtrip(causal_family_to_dict(family))) == family


def test_causal_family_two_parents():
    doc = {
        "nodes": [{"id": "r", "space": ["u"]}, {"id": "a", "space": ["u"]}],
        "edges": [
            {"parent": "r", "child": "a", "matrix": [[1]]},
            {"parent": "a", "child": "a", "matrix": [[1]]},
        ],
    }
    with pytest.raises(SchemaError):
        causal_family_from_dict(doc)
    doc["edges"] = [{"parent": "a", "child": "r", "matrix": [[1]]}, {"parent": "r", "child": "a", "matrix": [[1]]}]
    with pytest.raises(InvalidTreeError):
        causal_family_from_dict(doc)


SPECS = [
    MontyHallSpec(),
    MontyHallSpec(variant=Variant.EQUAL_PROBABILITY),
    MontyHallSpec(prior=(H, Fraction(1, 4), Fraction(1, 4)), variant=Variant.BAYES),
    MontyHallSpec(picked="A2", opened="A1", alpha=Fraction(1, 4), variant=Variant.BAYES, prior=(THIRD,) * 3),
    PrisonersSpec(),
    PrisonersSpec(variant=Variant.EQUAL_PROBABILITY),
    PrisonersSpec(prior=(H, THIRD, Fraction(1, 6)), variant=Variant.BAYES, prisoners=("x", "A1", "A3")),
]


@pytest.mark.parametrize("spec", SPECS)
def test_problem_roundtrip(spec):
    assert problem_from_dict(roundtrip(problem_to_dict(spec))) == spec


@pytest.mark.parametrize("spec", SPECS)
def test_verdict_roundtrip(spec):
    verdict = solve(spec)
    printed = json.dumps(verdict_to_dict(verdict))
    assert verdict_from_dict(loads(printed)) == verdict


def test_prisoners_accept_door_keys():
    doc = {"problem": "three_prisoners", "variant": "fisher", "picked": "A2", "opened": "A1"}
    assert problem_from_dict(doc) == PrisonersSpec(asker="A2", named_executed="A1")


@pytest.mark.parametrize(
    "doc",
    [
        {"problem": "monty_hall"},
        {"problem": "chess", "variant": "fisher"},
        {"problem": "monty_hall", "variant": "fisher", "colour": "red"},
        {"problem": "monty_hall", "variant": "fisher", "asker": "A1"},
        {"problem": "three_prisoners", "variant": "fisher", "asker": "A1", "picked": "A2"},
    ],
)
def test_problem_schema_errors(doc):
    with pytest.raises(SchemaError):
        problem_from_dict(doc)


def test_verdict_json_shape():
    doc = verdict_to_dict(solve(MontyHallSpec(variant=Variant.EQUAL_PROBABILITY)))
    assert doc["kind"] == "SWITCH"
    assert doc["posterior"] == [[1, 3], [2, 3], [0, 1]]
    assert doc["prior"] == [[1, 3], [1, 3], [1, 3]]
