"""JSON wire formats.

Rationals are written as ``[numerator, denominator]`` pairs.  On input the
pair form, strings such as ``"1/3"`` or ``"0.5"`` and plain JSON numbers are
all accepted; JSON numbers are parsed as decimals so ``0.1`` is read as
exactly ``1/10``.

Documents are checked structurally against the JSON schemas below before
the library constructors apply the mathematical checks.
"""

from __future__ import annotations

import json
from decimal import Decimal
from typing import Any

from jsonschema import Draft202012Validator

from .causality import CausalFamily, make_causal_family, make_causal_tree
from .core import MixedState, Observable, StateSpace, make_observable
from .errors import MeasurementError
from .inference import BayesResult, FisherResult
from .problems import MontyHallSpec, PrisonersSpec, Variant, Verdict, VerdictKind
from .scalar import as_scalar, scalar_to_json

__all__ = [
    "SchemaError",
    "loads",
    "OBSERVABLE_SCHEMA",
    "CAUSAL_FAMILY_SCHEMA",
    "PROBLEM_SCHEMA",
    "VERDICT_SCHEMA",
    "observable_to_dict",
    "observable_from_dict",
    "causal_family_to_dict",
    "causal_family_from_dict",
    "problem_from_dict",
    "problem_to_dict",
    "verdict_to_dict",
    "verdict_from_dict",
    "fisher_result_to_dict",
    "bayes_result_to_dict",
]


class SchemaError(MeasurementError):
    """A JSON document does not have the expected structure."""


RATIONAL = {
    "oneOf": [
        {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        {"type": "number"},
        {"type": "string", "pattern": r"^\s*-?[0-9.]+(\s*/\s*[0-9]+)?\s*$"},
    ]
}
LABELS = {"type": "array", "items": {"type": "string"}, "minItems": 1}
RATIONAL_ROW = {"type": "array", "items": RATIONAL}
MATRIX = {"type": "array", "items": RATIONAL_ROW}

OBSERVABLE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["space", "outcomes", "effects"],
    "properties": {"space": LABELS, "outcomes": LABELS, "effects": MATRIX},
}

CAUSAL_FAMILY_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["nodes", "edges"],
    "properties": {
        "nodes": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["id", "space"],
                "properties": {"id": {"type": "string"}, "space": LABELS},
            },
        },
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["parent", "child", "matrix"],
                "properties": {
                    "parent": {"type": "string"},
                    "child": {"type": "string"},
                    "matrix": MATRIX,
                },
            },
        },
    },
}

PROBLEM_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["problem", "variant"],
    "properties": {
        "problem": {"enum": ["monty_hall", "three_prisoners"]},
        "variant": {"enum": [v.value for v in Variant]},
        "labels": {"type": "array", "items": {"type": "string"}, "minItems": 3, "maxItems": 3},
        "picked": {"type": "string"},
        "opened": {"type": "string"},
        "asker": {"type": "string"},
        "named": {"type": "string"},
        "prior": {"oneOf": [{"type": "null"}, {"type": "array", "items": RATIONAL}]},
        "alpha": RATIONAL,
    },
    "additionalProperties": False,
}

_STATE = {
    "oneOf": [{"type": "null"}, {"type": "array", "items": RATIONAL}],
}
VERDICT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["problem", "variant", "kind", "states"],
    "properties": {
        "problem": {"type": "string"},
        "variant": {"enum": [v.value for v in Variant]},
        "kind": {"enum": [k.value for k in VerdictKind]},
        "states": LABELS,
        "posterior": _STATE,
        "prior": _STATE,
        "inferred_state": {"oneOf": [{"type": "null"}, LABELS]},
        "evidence": {"oneOf": [{"type": "null"}, RATIONAL]},
    },
}


def loads(text: str) -> Any:
    """Parse JSON with exact decimals."""
    try:
        return json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc


def _validate(doc, schema, what):
    errors = sorted(Draft202012Validator(schema).iter_errors(doc), key=lambda e: list(e.path))
    if errors:
        details = "; ".join(
            f"{'.'.join(str(p) for p in e.path) or '<root>'}: {e.message}" for e in errors[:10]
        )
        raise SchemaError(f"invalid {what} document: {details}")


def _pairs(values):
    return [scalar_to_json(v) for v in values]


# --- observables ----------------------------------------------------------


def observable_to_dict(obs: Observable) -> dict:
    return {
        "space": list(obs.space.labels),
        "outcomes": list(obs.outcomes),
        "effects": [_pairs(row) for row in obs.matrix],
    }


def observable_from_dict(doc: dict) -> Observable:
    _validate(doc, OBSERVABLE_SCHEMA, "observable")
    space = StateSpace(tuple(doc["space"]))
    matrix = [[as_scalar(v) for v in row] for row in doc["effects"]]
    return make_observable(space, doc["outcomes"], matrix)


# --- causal families ------------------------------------------------------


def causal_family_to_dict(family: CausalFamily) -> dict:
    tree = family.tree
    return {
        "nodes": [{"id": t, "space": list(s.labels)} for t, s in tree.spaces.items()],
        "edges": [
            {"parent": p, "child": c, "matrix": [_pairs(row) for row in op.matrix]}
            for (p, c), op in family.edge_ops.items()
        ],
    }


def causal_family_from_dict(doc: dict) -> CausalFamily:
    _validate(doc, CAUSAL_FAMILY_SCHEMA, "causal family")
    spaces = {}
    for node in doc["nodes"]:
        if node["id"] in spaces:
            raise SchemaError(f"duplicate node id {node['id']!r}")
        spaces[node["id"]] = StateSpace(tuple(node["space"]))
    parent = {}
    ops = {}
    for edge in doc["edges"]:
        if edge["child"] in parent:
            raise SchemaError(f"node {edge['child']!r} has two parents")
        parent[edge["child"]] = edge["parent"]
        ops[(edge["parent"], edge["child"])] = [[as_scalar(v) for v in row] for row in edge["matrix"]]
    return make_causal_family(make_causal_tree(spaces, parent), ops)


# --- problems and verdicts ------------------------------------------------


def problem_from_dict(doc: dict):
    """Build a :class:`MontyHallSpec` or :class:`PrisonersSpec`.

    For the prisoners story ``asker``/``named`` may be written as
    ``picked``/``opened``.
    """
    _validate(doc, PROBLEM_SCHEMA, "problem")
    prior = doc.get("prior")
    kwargs = {"variant": Variant(doc["variant"])}
    if prior is not None:
        kwargs["prior"] = tuple(as_scalar(p) for p in prior)
    if "alpha" in doc:
        kwargs["alpha"] = as_scalar(doc["alpha"])
    if doc["problem"] == "monty_hall":
        for key in ("asker", "named"):
            if key in doc:
                raise SchemaError(f"{key!r} does not apply to monty_hall")
        if "labels" in doc:
            kwargs["doors"] = tuple(doc["labels"])
        return MontyHallSpec(
            picked=doc.get("picked", "A1"), opened=doc.get("opened", "A3"), **kwargs
        )
    if "labels" in doc:
        kwargs["prisoners"] = tuple(doc["labels"])
    if "asker" in doc and "picked" in doc or "named" in doc and "opened" in doc:
        raise SchemaError("give either asker/named or picked/opened, not both")
    return PrisonersSpec(
        asker=doc.get("asker", doc.get("picked", "A1")),
        named_executed=doc.get("named", doc.get("opened", "A3")),
        **kwargs,
    )


def problem_to_dict(spec) -> dict:
    doc = {"problem": spec.problem, "variant": spec.variant.value, "labels": list(spec.labels)}
    if isinstance(spec, MontyHallSpec):
        doc.update(picked=spec.picked, opened=spec.opened)
    else:
        doc.update(asker=spec.asker, named=spec.named_executed)
    doc["prior"] = None if spec.prior is None else _pairs(spec.prior)
    doc["alpha"] = scalar_to_json(spec.alpha)
    return doc


def verdict_to_dict(verdict: Verdict) -> dict:
    return {
        "problem": verdict.problem,
        "variant": verdict.variant.value,
        "kind": verdict.kind.value,
        "states": list(verdict.states),
        "posterior": None if verdict.posterior is None else _pairs(verdict.posterior.weights),
        "prior": None if verdict.prior is None else _pairs(verdict.prior.weights),
        "inferred_state": None
        if verdict.inferred_state is None
        else [l for l in verdict.states if l in verdict.inferred_state],
        "evidence": None if verdict.evidence is None else scalar_to_json(verdict.evidence),
    }


def verdict_from_dict(doc: dict) -> Verdict:
    _validate(doc, VERDICT_SCHEMA, "verdict")
    space = StateSpace(tuple(doc["states"]))

    def state(key):
        weights = doc.get(key)
        return None if weights is None else MixedState(space, tuple(as_scalar(w) for w in weights))

    inferred = doc.get("inferred_state")
    evidence = doc.get("evidence")
    return Verdict(
        problem=doc["problem"],
        variant=Variant(doc["variant"]),
        kind=VerdictKind(doc["kind"]),
        states=space.labels,
        posterior=state("posterior"),
        prior=state("prior"),
        inferred_state=None if inferred is None else frozenset(inferred),
        evidence=None if evidence is None else as_scalar(evidence),
    )


def fisher_result_to_dict(result: FisherResult, space: StateSpace) -> dict:
    return {
        "method": "fisher",
        "maximizers": [l for l in space.labels if l in result.maximizers],
        "max_likelihood": scalar_to_json(result.max_likelihood),
    }


def bayes_result_to_dict(result: BayesResult) -> dict:
    return {
        "method": "bayes",
        "states": list(result.posterior.space.labels),
        "posterior": _pairs(result.posterior.weights),
        "evidence": scalar_to_json(result.evidence),
    }
