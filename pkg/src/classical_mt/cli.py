"""Command-line front end.

Exit codes: 0 success, 1 a ``check`` group failed, 2 invalid input,
3 the input is valid but the inference is degenerate (zero evidence, zero
likelihood everywhere, no conditioning events).
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from pathlib import Path

from . import checks
from .core import MixedState
from .errors import MeasurementError
from .inference import bayes_posterior, fisher_mle
from .problems import MontyHallSpec, PrisonersSpec, Variant, Verdict, build_observable, solve
from .scalar import as_scalar, format_scalar, parse_scalar_list
from .serialize import (
    bayes_result_to_dict,
    fisher_result_to_dict,
    loads,
    observable_from_dict,
    problem_from_dict,
    verdict_to_dict,
)
from .simulation import SimConfig, simulate

log = logging.getLogger("classical_mt")


class UsageError(MeasurementError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_json(source: str):
    text = sys.stdin.read() if source == "-" else Path(source).read_text(encoding="utf-8")
    return loads(text)


_PAIR = re.compile(r"\[\s*(-?\d+),\s*(\d+)\s*\]")


def dumps(doc) -> str:
    """Indented JSON with ``[num, den]`` pairs kept on one line."""
    return _PAIR.sub(r"[\1, \2]", json.dumps(doc, indent=2))


def _emit(doc, fmt: str, text_render=None):
    if fmt == "text" and text_render is not None:
        print(text_render(doc))
    else:
        print(dumps(doc))


def _render_state(labels, weights) -> list[str]:
    return [f"  {label}: {format_scalar(as_scalar(w))}" for label, w in zip(labels, weights)]


def _render_verdict(doc) -> str:
    lines = [f"{doc['problem']} ({doc['variant']}): {doc['kind']}"]
    if doc.get("inferred_state") is not None:
        lines.append(f"inferred state: {', '.join(doc['inferred_state'])}")
    for key in ("prior", "posterior"):
        if doc.get(key) is not None:
            lines.append(f"{key}:")
            lines.extend(_render_state(doc["states"], doc[key]))
    return "\n".join(lines)


def _render_result(doc) -> str:
    if doc["method"] == "fisher":
        return (
            f"maximizers: {', '.join(doc['maximizers'])}\n"
            f"max likelihood: {format_scalar(as_scalar(doc['max_likelihood']))}"
        )
    lines = [f"evidence: {format_scalar(as_scalar(doc['evidence']))}", "posterior:"]
    lines.extend(_render_state(doc["states"], doc["posterior"]))
    return "\n".join(lines)


def _parse_event(text: str, outcomes) -> list[str]:
    if text.strip() in ("*", "all"):
        return list(outcomes)
    return [part.strip() for part in text.split(",") if part.strip()]


# --- subcommands ----------------------------------------------------------


def cmd_solve(args) -> int:
    if args.spec is not None:
        spec = problem_from_dict(_read_json(args.spec))
    else:
        if args.problem is None:
            raise UsageError("--problem is required unless --spec is given")
        kwargs = {"variant": Variant(args.variant)}
        if args.prior is not None:
            kwargs["prior"] = tuple(parse_scalar_list(args.prior))
        if args.alpha is not None:
            kwargs["alpha"] = as_scalar(args.alpha)
        if args.labels is not None:
            labels = tuple(l.strip() for l in args.labels.split(","))
            kwargs["doors" if args.problem == "monty_hall" else "prisoners"] = labels
        chooser = args.chooser or "A1"
        revealed = args.revealed or "A3"
        if args.problem == "monty_hall":
            spec = MontyHallSpec(picked=chooser, opened=revealed, **kwargs)
        else:
            spec = PrisonersSpec(asker=chooser, named_executed=revealed, **kwargs)
    verdict: Verdict = solve(spec)
    _emit(verdict_to_dict(verdict), args.format, _render_verdict)
    return 0


def cmd_fisher(args) -> int:
    obs = observable_from_dict(_read_json(args.observable))
    result = fisher_mle(obs, _parse_event(args.event, obs.outcomes))
    _emit(fisher_result_to_dict(result, obs.space), args.format, _render_result)
    return 0


def cmd_bayes(args) -> int:
    obs = observable_from_dict(_read_json(args.observable))
    prior = MixedState(obs.space, tuple(parse_scalar_list(args.prior)))
    result = bayes_posterior(obs, prior, _parse_event(args.event, obs.outcomes))
    _emit(bayes_result_to_dict(result), args.format, _render_result)
    return 0


def cmd_simulate(args) -> int:
    prior = tuple(parse_scalar_list(args.prior))
    alpha = as_scalar(args.alpha)
    config = SimConfig(
        prior=prior, alpha=alpha, trials=args.trials, seed=args.seed, workers=args.workers
    )
    log.debug("simulating %d trials, seed %d, %d worker(s)", config.trials, config.seed, config.workers)
    report = simulate(config)
    obs = build_observable(MontyHallSpec(prior=prior, alpha=alpha, variant=Variant.BAYES))
    analytic = {}
    for x in obs.outcomes:
        if report.utterance_count(x):
            analytic[x] = bayes_posterior(obs, MixedState(obs.space, prior), x).posterior
    doc = report.to_dict(analytic)
    if args.csv:
        Path(args.csv).write_text(report.counts_csv(), encoding="utf-8")
    print(dumps(doc))
    return 0


def cmd_check(args) -> int:
    fixtures = [
        (path, (lambda p=path: observable_from_dict(_read_json(p)))) for path in args.observable
    ]
    results = checks.run_all(trials=args.trials, seed=args.seed, fixtures=fixtures)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"[{status}] {r.name}" + (f": {r.detail}" if r.detail else ""))
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="classical-mt", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve a Monty Hall or three-prisoners problem")
    p.add_argument("--problem", choices=["monty_hall", "three_prisoners"])
    p.add_argument("--variant", choices=[v.value for v in Variant], default="fisher")
    p.add_argument("--picked", "--asker", dest="chooser")
    p.add_argument("--opened", "--named", dest="revealed")
    p.add_argument("--prior", help="e.g. 1/2,1/4,1/4 or [[1,2],[1,4],[1,4]]")
    p.add_argument("--alpha", help="host's probability of opening the first free door")
    p.add_argument("--labels", help="comma-separated door/prisoner labels")
    p.add_argument("--spec", help="problem JSON file, or - for stdin")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_solve)

    for name, func, helptext in (
        ("fisher", cmd_fisher, "maximum-likelihood states for an observed event"),
        ("bayes", cmd_bayes, "posterior state after an observed event"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--observable", required=True, help="observable JSON file, or -")
        p.add_argument("--event", required=True, help="comma-separated outcomes, or 'all'")
        if name == "bayes":
            p.add_argument("--prior", required=True)
        p.add_argument("--format", choices=["json", "text"], default="json")
        p.set_defaults(func=func)

    p = sub.add_parser("simulate", help="Monte Carlo run of the host story")
    p.add_argument("--prior", default="1/3,1/3,1/3")
    p.add_argument("--alpha", default="1/2")
    p.add_argument("--trials", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--csv", help="write the counts table to this file")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("check", help="run the invariant suite")
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--observable", action="append", default=[], help="extra observable fixture")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(
            level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr
        )
        return args.func(args)
    except MeasurementError as exc:
        print(json.dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}))
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except (OSError, ValueError) as exc:
        print(json.dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}))
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
