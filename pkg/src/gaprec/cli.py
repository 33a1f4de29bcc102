"""Command-line front end.

Every subcommand prints one JSON document (or a plain table with
``--format table``). Exit codes: 0 success, 1 invalid input, 2 a
verification check failed, 3 the witness search failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import __version__
from .errors import GapRecError, WitnessNotFound
from .rational import format_rational, format_rationals, parse_int_list, parse_rational_list
from .recurrence import (
    build_recurrence,
    characteristic_polynomial,
    default_degree,
    run_recurrence,
    verify_vanishing,
    weight_vector,
    zero_set,
)
from .semigroup import new_semigroup, reduce_gcd
from .series import expand_G, f_t, sum_f_t
from .walk import (
    RNG_FAMILY,
    WalkConfig,
    exact_visit_probabilities,
    normalize_weights,
    simulate,
)
from .witness import WitnessCertificate, check_certificate, find_witness

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFY = 2
EXIT_NOT_FOUND = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for verification failures
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _decimal(x: float) -> float:
    return float(f"{x:.12g}")


def _semigroup(args):
    gens = parse_int_list(args.gen)
    if getattr(args, "reduce", False):
        gens = reduce_gcd(gens)
    return new_semigroup(gens)


def _weights(S, args):
    raw = parse_rational_list(args.weights) if args.weights else None
    return weight_vector(S, raw)


def _degree(S, args) -> int:
    return default_degree(S) if args.deg is None else args.deg


def cmd_gaps(args) -> tuple[dict, dict, int]:
    S = _semigroup(args)
    return (
        {"generators": list(S.generators)},
        {"gaps": list(S.gaps), "frobenius": S.frobenius},
        EXIT_OK,
    )


def cmd_reduce(args):
    gens = parse_int_list(args.gen)
    return {"generators": gens}, {"generators": reduce_gcd(gens)}, EXIT_OK


def cmd_recurrence(args):
    S = _semigroup(args)
    w = _weights(S, args)
    D = _degree(S, args)
    rec = build_recurrence(S, w)
    seq = run_recurrence(S, w, D)
    result = {
        "order": rec.order,
        "alphas": format_rationals(rec.alphas),
        "characteristic_polynomial": str(characteristic_polynomial(rec)),
        "sequence": format_rationals(seq.values),
        "zeros": zero_set(seq),
    }
    inp = {"generators": list(S.generators), "weights": format_rationals(w), "degree": D}
    return inp, result, EXIT_OK


def cmd_series(args):
    S = _semigroup(args)
    w = _weights(S, args)
    D = _degree(S, args)
    inp = {"generators": list(S.generators), "weights": format_rationals(w), "degree": D}
    result: dict[str, Any] = {
        "expand_G": format_rationals(expand_G(S, w, D).coefficients),
        "sum_f_t": format_rationals(sum_f_t(S, w, D).coefficients),
    }
    if args.power is not None:
        inp["power"] = args.power
        result["f_t"] = format_rationals(f_t(S, w, args.power, D).coefficients)
    return inp, result, EXIT_OK


def cmd_verify(args):
    S = _semigroup(args)
    w = _weights(S, args)
    D = _degree(S, args)
    report = verify_vanishing(S, w, D)
    seq = run_recurrence(S, w, D)
    series = expand_G(S, w, D)
    series_ok = series.coefficients == seq.values
    result = {
        "zero_set": list(report.zero_set),
        "gaps": list(report.gaps),
        "series_matches_recurrence": series_ok,
        "zeros_match_gaps": report.verdict,
    }
    inp = {"generators": list(S.generators), "weights": format_rationals(w), "degree": D}
    code = EXIT_OK if series_ok and report.verdict else EXIT_VERIFY
    return inp, result, code


def cmd_simulate(args):
    S = _semigroup(args)
    w = _weights(S, args)
    p = normalize_weights(w)
    config = WalkConfig(S, p, args.walks, args.max, args.seed)
    est = simulate(config)
    exact = exact_visit_probabilities(S, p, args.max)
    states = []
    for k in range(args.max + 1):
        states.append({
            "k": k,
            "exact": format_rational(exact[k]),
            "hit_count": est.hit_counts[k],
            "estimate": _decimal(est.estimate(k)),
            "standard_error": _decimal(est.standard_error(k)),
        })
    inp = {
        "generators": list(S.generators),
        "probabilities": format_rationals(p),
        "walks": args.walks,
        "max_state": args.max,
        "seed": args.seed,
    }
    return inp, {"states": states}, EXIT_OK


def cmd_witness(args):
    targets = parse_int_list(args.set)
    w = parse_rational_list(args.weights) if args.weights else None
    inp = {"order": args.order, "target_set": targets}
    try:
        cert = find_witness(args.order, targets, weights=w)
    except WitnessNotFound as exc:
        result = {
            "found": False,
            "reason": exc.reason,
            "candidates": list(exc.candidates),
            "note": "search failure only; not a proof that no such recurrence exists",
        }
        return inp, result, EXIT_NOT_FOUND
    return inp, {"found": True, "certificate": cert.to_json()}, EXIT_OK


def _load_certificate(doc: Any) -> WitnessCertificate:
    if isinstance(doc, dict) and "result" in doc:
        doc = doc["result"]
    if isinstance(doc, dict) and "certificate" in doc:
        doc = doc["certificate"]
    if not isinstance(doc, dict):
        raise GapRecError("input is not a certificate document")
    try:
        return WitnessCertificate.from_json(doc)
    except (KeyError, TypeError) as exc:
        raise GapRecError(f"malformed certificate: {exc}") from exc


def cmd_certify(args):
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GapRecError(f"invalid JSON: {exc}") from exc
    cert = _load_certificate(doc)
    problems = check_certificate(cert)
    result = {"valid": not problems, "problems": problems}
    return {"file": args.file}, result, EXIT_OK if not problems else EXIT_VERIFY


def _add_semigroup_args(p: argparse.ArgumentParser, weights: bool = True, degree: bool = True) -> None:
    p.add_argument("--gen", required=True, help="comma-separated generators, e.g. 3,5")
    if weights:
        p.add_argument("--weights", help="comma-separated positive rationals (default all ones)")
    if degree:
        p.add_argument("--deg", type=int, help="truncation degree (default frobenius + 2*a_N)")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")

    parser = _Parser(prog="gaprec", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gaps", parents=[common], help="gap set and Frobenius number")
    _add_semigroup_args(p, weights=False, degree=False)
    p.add_argument("--reduce", action="store_true", help="divide generators by their gcd first")
    p.set_defaults(func=cmd_gaps)

    p = sub.add_parser("reduce", parents=[common], help="divide generators by their gcd")
    p.add_argument("--gen", required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("recurrence", parents=[common], help="recurrence coefficients and solution")
    _add_semigroup_args(p)
    p.set_defaults(func=cmd_recurrence)

    p = sub.add_parser("series", parents=[common], help="power-series expansion of 1/(1-F_1)")
    _add_semigroup_args(p)
    p.add_argument("--power", type=int, help="also emit F_1^t for this t")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", parents=[common], help="cross-check recurrence, series and gaps")
    _add_semigroup_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", parents=[common], help="Monte Carlo visit frequencies")
    _add_semigroup_args(p, degree=False)
    p.add_argument("--walks", type=int, required=True)
    p.add_argument("--max", type=int, required=True, help="largest state tracked")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("witness", parents=[common], help="search a recurrence of given order vanishing on a set")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--set", required=True, help="comma-separated target points")
    p.add_argument("--weights", help="weights for the witness generators")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("certify", parents=[common], help="re-verify a witness certificate")
    p.add_argument("file", nargs="?", default="-", help="certificate JSON (default stdin)")
    p.set_defaults(func=cmd_certify)
    return parser


def _metadata(args) -> dict[str, Any]:
    meta: dict[str, Any] = {"version": __version__}
    if args.command == "simulate":
        meta["rng"] = RNG_FAMILY
        meta["seed"] = args.seed
    return meta


def _table(doc: dict[str, Any]) -> str:
    lines = [f"command: {doc['command']}"]

    def render(prefix: str, value: Any) -> None:
        if isinstance(value, dict):
            for k, v in value.items():
                render(f"{prefix}{k}.", v)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            keys = list(value[0])
            lines.append(prefix.rstrip(".") + ":")
            lines.append("  " + "\t".join(keys))
            for row in value:
                lines.append("  " + "\t".join(str(row[k]) for k in keys))
        else:
            if isinstance(value, list):
                value = " ".join(map(str, value)) if value else "-"
            lines.append(f"{prefix.rstrip('.')}: {value}")

    render("", doc["input"])
    render("", doc["result"])
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        inp, result, code = args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    except (GapRecError, ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    doc = {
        "command": args.command,
        "input": inp,
        "result": result,
        "metadata": _metadata(args),
    }
    if args.format == "table":
        out = _table(doc)
    else:
        out = json.dumps(doc, ensure_ascii=False)
    sys.stdout.write(out + "\n")
    sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
