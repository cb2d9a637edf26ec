"""Command-line interface.

Usage:
    orlicz-morrey norm seq.json --Phi '{"family":"power","p":1}' --s 1 --phi '{"family":"identity"}'
    orlicz-morrey window-norm seq.json --m 0 --N 3 --Phi spec.json
    orlicz-morrey modular seq.json --m 0 --N 3 --b 2.0 --Phi spec.json
    orlicz-morrey validate spec.json
    orlicz-morrey verify suite.json --seed 7
    orlicz-morrey example geometric --D 2 --p 1

Exit status: 0 success, 1 validation or check failure, 2 input error,
3 solver nonconvergence.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Any

from . import engine, properties
from .errors import ConfigError, DomainError, NonConvergenceError
from .sequences import FiniteSequence, Window, geometric_example
from .weights import WeightSpec, validate_weight
from .young import SYoungSpec, validate_s_young

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_SOLVER = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(source: str) -> Any:
    """Inline JSON (anything starting with '{' or '[') or a path to a JSON file."""
    text = source.strip()
    try:
        if not text.startswith(("{", "[")):
            text = Path(source).read_text()
        return json.loads(text)
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {source}: {exc.msg}") from None


def _young(args: argparse.Namespace) -> SYoungSpec:
    if args.Phi is None:
        raise InputError("--Phi is required")
    return SYoungSpec.from_dict(_load(args.Phi), s=args.s)


def _weight(args: argparse.Namespace) -> WeightSpec:
    if args.phi is None:
        return WeightSpec("identity")
    return WeightSpec.from_dict(_load(args.phi))


def _specs(args: argparse.Namespace) -> tuple[SYoungSpec, WeightSpec]:
    return _young(args).require_admissible(), _weight(args).require_admissible()


def _sequence(path: str) -> FiniteSequence:
    return FiniteSequence.from_dict(_load(path))


def cmd_norm(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    f, wt = _specs(args)
    r = engine.global_norm(_sequence(args.sequence), f, wt, args.tol)
    return r.to_dict(), EXIT_OK


def cmd_window_norm(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    f, wt = _specs(args)
    w = Window(args.m, args.N)
    value = engine.window_norm(_sequence(args.sequence), w, f, wt, args.tol)
    return {"norm": value, "window": w.to_dict()}, EXIT_OK


def cmd_modular(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    f, wt = _specs(args)
    w = Window(args.m, args.N)
    value = engine.modular(_sequence(args.sequence), w, args.b, f, wt)
    return {"modular": value, "window": w.to_dict(), "b": args.b}, EXIT_OK


def _classify(doc: Any) -> tuple[dict | None, dict | None]:
    """Split a spec document into (s-Young part, weight part)."""
    if not isinstance(doc, dict):
        raise InputError("spec document must be a JSON object")
    if "Phi" in doc or "phi" in doc:
        return doc.get("Phi"), doc.get("phi")
    weight_like = "theta" in doc or "c" in doc or doc.get("family") in ("identity", "constant")
    return (None, doc) if weight_like else (doc, None)


def cmd_validate(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    young_doc = weight_doc = None
    if args.spec is not None:
        young_doc, weight_doc = _classify(_load(args.spec))
    if args.Phi is not None:
        young_doc = _load(args.Phi)
    if args.phi is not None:
        weight_doc = _load(args.phi)
    if young_doc is None and weight_doc is None:
        raise InputError("nothing to validate: give a spec file, --Phi or --phi")

    out: dict[str, Any] = {}
    valid = True
    if young_doc is not None:
        f = SYoungSpec.from_dict(young_doc, s=args.s)
        rep = validate_s_young(f)
        out["Phi"] = {"spec": f.to_dict(), **rep.to_dict()}
        valid &= rep.valid
    if weight_doc is not None:
        wt = WeightSpec.from_dict(weight_doc)
        rep = validate_weight(wt, args.n_max)
        out["phi"] = {"spec": wt.to_dict(), "n_max": args.n_max, **rep.to_dict()}
        valid &= rep.valid
    out["valid"] = bool(valid)
    return out, EXIT_OK if valid else EXIT_FAIL


def cmd_verify(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    doc = _load(args.config) if args.config is not None else {}
    if not isinstance(doc, dict):
        raise ConfigError("suite configuration must be an object")
    if args.seed is not None:
        doc["seed"] = args.seed
    if args.trials is not None:
        doc["trials"] = args.trials
    report = properties.run_suite(doc)
    return report.to_dict(), EXIT_OK if report.passed else EXIT_FAIL


def cmd_example(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    if args.name == "counterexample":
        return properties.reproduce_counterexample(args.L if args.L is not None else 80), EXIT_OK
    L = args.L if args.L is not None else 64
    s = args.s if args.s is not None else min(args.p, 1.0)
    f = SYoungSpec("power", s, args.p).require_admissible()
    x = geometric_example(args.D, args.p, L)
    r = engine.global_norm(x, f, WeightSpec("identity"), args.tol)
    closed = engine.geometric_closed_form(args.D, args.p)
    return {
        "name": "geometric",
        "D": args.D,
        "p": args.p,
        "s": s,
        "L": L,
        "truncated_norm": r.value,
        "closed_form": closed,
        "difference": r.value - closed,
        "witness": r.witness.to_dict(),
    }, EXIT_OK


def _positive(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (v > 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--out", help="write the JSON document here instead of stdout")

    specs = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    specs.add_argument("--Phi", help="s-Young spec: JSON file or inline JSON")
    specs.add_argument("--phi", help="weight spec: JSON file or inline JSON (default identity)")
    specs.add_argument("--s", type=float, help="s-convexity exponent; overrides the 's' field of --Phi")

    solver = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    solver.add_argument("--tol", type=_positive, default=engine.DEFAULT_TOL, help="relative bisection tolerance")

    window = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    window.add_argument("--m", type=int, required=True, help="window centre")
    window.add_argument("--N", type=int, required=True, help="window half-width")

    parser = _Parser(prog="orlicz-morrey", description=__doc__.splitlines()[0], allow_abbrev=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("norm", parents=[common, specs, solver], help="global quasi-norm", allow_abbrev=False)
    p.add_argument("sequence", help='sequence file {"offset": int, "values": [...]}')
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("window-norm", parents=[common, specs, solver, window], help="norm on one window", allow_abbrev=False)
    p.add_argument("sequence")
    p.set_defaults(func=cmd_window_norm)

    p = sub.add_parser("modular", parents=[common, specs, window], help="modular at scale b", allow_abbrev=False)
    p.add_argument("sequence")
    p.add_argument("--b", type=_positive, required=True, help="scale")
    p.set_defaults(func=cmd_modular)

    p = sub.add_parser("validate", parents=[common, specs], help="validate s-Young and weight specs", allow_abbrev=False)
    p.add_argument("spec", nargs="?", help="spec file (s-Young, weight, or {\"Phi\": ..., \"phi\": ...})")
    p.add_argument("--n-max", type=int, default=1001, help="largest odd argument for weight checks")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("verify", parents=[common], help="run the property suite", allow_abbrev=False)
    p.add_argument("config", nargs="?", help='suite config {"seed": int, "trials": int, "checks": [...]}')
    p.add_argument("--seed", type=int)
    p.add_argument("--trials", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("example", parents=[common, solver], help="reproduce the worked examples", allow_abbrev=False)
    p.add_argument("name", help="geometric | counterexample")
    p.add_argument("--D", type=float, default=2.0)
    p.add_argument("--p", type=_positive, default=1.0)
    p.add_argument("--s", type=float)
    p.add_argument("--L", type=int)
    p.set_defaults(func=cmd_example)
    return parser


def _emit(doc: dict[str, Any], out: str | None) -> None:
    text = json.dumps(doc, indent=2, allow_nan=False) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "example" and args.name not in ("geometric", "counterexample"):
        print(f"error: unknown example {args.name!r} (expected geometric or counterexample)", file=sys.stderr)
        return EXIT_INPUT
    try:
        doc, status = args.func(args)
    except NonConvergenceError as exc:
        print(f"error: solver did not converge: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except (InputError, DomainError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(doc, args.out)
    return status


if __name__ == "__main__":
    sys.exit(main())
