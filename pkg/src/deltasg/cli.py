"""Command-line front end.

Every subcommand emits one result document, as human-readable text (default)
or canonical JSON (``--format json``: sorted keys, plain decimal integers).
Exit codes: 0 success, 2 invalid input, 3 method unsupported for the input
class, 4 internal verification failure (oracle mismatch or a broken runtime
self-check).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from typing import Any

from . import __version__
from .betti import OneBettiForm, ThreeBettiForm, TwoBettiForm, nabla_graph_connected
from .errors import (
    DeltaSGError,
    InputError,
    InternalInvariantError,
    UnsupportedInput,
)
from .euclid import (
    _structure,
    delta_set_fast,
    delta_set_nonsymmetric,
    euclid_set,
    witness,
)
from .oracle import default_bound, delta_set_bruteforce, verify
from .semigroup import (
    Generators,
    contains,
    delta_of_element,
    factorizations,
    frobenius_number,
    is_symmetric,
    length_set,
    validate_generators,
)

SCHEMA_VERSION = "1"

EXPERIMENTAL_WARNING = (
    "non-symmetric semigroup: the fast path uses the EXPERIMENTAL distance "
    "seeding; cross-check with --method both or --method oracle"
)


def _form_payload(form) -> dict[str, Any]:
    if isinstance(form, OneBettiForm):
        return {"kind": "OneBetti", "s1": form.s1, "s2": form.s2, "s3": form.s3}
    if isinstance(form, TwoBettiForm):
        return {
            "kind": "TwoBetti",
            "a": form.a,
            "m1": form.m1,
            "m2": form.m2,
            "b": form.b,
            "c": form.c,
            "order": list(form.order),
        }
    assert isinstance(form, ThreeBettiForm)
    return {"kind": "ThreeBetti"}


def _structure_payload(S: Generators) -> tuple[dict[str, Any], Any]:
    B, form, basis = _structure(S)
    payload: dict[str, Any] = {
        "betti_elements": list(B.elements),
        "betti_multipliers": [B.c1, B.c2, B.c3],
        "structure": _form_payload(form),
    }
    if basis is not None:
        payload["basis"] = {
            "v1": list(basis.v1),
            "v2": list(basis.v2),
            "delta1": basis.delta1,
            "delta2": basis.delta2,
            "sigma": basis.sigma,
            "gcd": basis.g,
        }
    return payload, basis


def cmd_info(args) -> tuple[dict[str, Any], list[str], int]:
    S = validate_generators((args.n1, args.n2, args.n3))
    payload, _ = _structure_payload(S)
    B_elems = payload["betti_elements"]
    result = {
        "generators": {"input": list(S.original), "sorted": list(S.triple)},
        "frobenius": frobenius_number(S),
        "symmetric": is_symmetric(S),
        "betti": {
            "elements": B_elems,
            "multipliers": payload["betti_multipliers"],
            "factorizations": {
                str(b): [list(z) for z in factorizations(S, b)] for b in B_elems
            },
        },
        "structure": payload["structure"],
    }
    if "basis" in payload:
        result["basis"] = payload["basis"]
    return result, [], 0


def cmd_delta(args) -> tuple[dict[str, Any], list[str], int]:
    S = validate_generators((args.n1, args.n2, args.n3))
    warnings: list[str] = []
    _, form, basis = _structure(S)
    if args.method == "fast":
        if basis is None:
            warnings.append(EXPERIMENTAL_WARNING)
            delta = delta_set_nonsymmetric(S)
            method = "nonsymmetric-experimental"
        else:
            delta = delta_set_fast(S)
            method = "fast"
        result = {
            "delta": list(delta),
            "method": method,
            "structure": _form_payload(form),
        }
        return result, warnings, 0
    if args.method == "oracle":
        bound = args.bound if args.bound is not None else default_bound(S)
        delta = delta_set_bruteforce(S, bound)
        result = {
            "delta": list(delta),
            "method": "oracle",
            "bound": bound,
            "note": "observed distances only; distances may exist beyond the bound",
        }
        return result, warnings, 0
    # --method both
    report = verify(S, bound=args.bound)
    if report.fast_method == "nonsymmetric-experimental":
        warnings.append(EXPERIMENTAL_WARNING)
    result = {
        "delta": list(report.fast),
        "method": "both",
        "verify": _report_payload(report),
    }
    return result, warnings, 4 if report.verdict == "Mismatch" else 0


def cmd_element(args) -> tuple[dict[str, Any], list[str], int]:
    S = validate_generators((args.n1, args.n2, args.n3))
    s = args.s
    if s < 0 or not contains(S, s):
        return {"s": s, "in_semigroup": False, "factorizations": []}, [], 0
    result = {
        "s": s,
        "in_semigroup": True,
        "factorizations": [list(z) for z in factorizations(S, s)],
        "lengths": length_set(S, s),
        "delta": list(delta_of_element(S, s)),
        "nabla_connected": nabla_graph_connected(S, s),
    }
    return result, [], 0


def cmd_euclid(args) -> tuple[dict[str, Any], list[str], int]:
    E = euclid_set(args.d1, args.d2)
    result = {
        "delta1": E.delta1,
        "delta2": E.delta2,
        "gcd": E.g,
        "chain": list(E.chain),
        "levels": [list(level) for level in E.levels],
        "union": list(E.values),
    }
    return result, [], 0


_WITNESS_ENUM_LIMIT = 10_000_000


def cmd_witness(args) -> tuple[dict[str, Any], list[str], int]:
    S = validate_generators((args.n1, args.n2, args.n3))
    _, _, basis = _structure(S)
    if basis is None:
        raise UnsupportedInput(
            "witness construction needs a symmetric semigroup; "
            "use `delta ... --method oracle` for non-symmetric inputs"
        )
    w = witness(S, basis, args.d)
    verified = False
    candidates = (w.s // S.n2 + 1) * (w.s // S.n3 + 1)
    if candidates <= _WITNESS_ENUM_LIMIT:
        lengths = sorted({z.length for z in factorizations(S, w.s)})
        lo, hi = w.z_prime.length, w.z.length
        verified = (
            lo in lengths
            and hi in lengths
            and not any(lo < l < hi for l in lengths)
        )
        if not verified:
            raise InternalInvariantError(
                f"witness for {args.d} is not an adjacent pair of {w.s}"
            )
    result = {
        "d": args.d,
        "s": w.s,
        "z": list(w.z),
        "z_prime": list(w.z_prime),
        "vector": list(w.vector),
        "coefficients": list(w.coefficients),
        "verified": verified,
    }
    return result, [], 0


def _report_payload(report) -> dict[str, Any]:
    return {
        "bound": report.bound,
        "observed": list(report.observed),
        "fast": list(report.fast),
        "missing": list(report.missing),
        "extra": list(report.extra),
        "verdict": report.verdict,
        "fast_method": report.fast_method,
    }


def cmd_verify(args) -> tuple[dict[str, Any], list[str], int]:
    S = validate_generators((args.n1, args.n2, args.n3))
    report = verify(S, bound=args.bound)
    warnings = []
    if report.fast_method == "nonsymmetric-experimental":
        warnings.append(EXPERIMENTAL_WARNING)
    code = 4 if report.verdict == "Mismatch" else 0
    return _report_payload(report), warnings, code


def _emit_text(value: Any, key: str | None = None, indent: int = 0) -> None:
    pad = "  " * indent
    label = f"{key}: " if key is not None else ""
    if isinstance(value, dict):
        if key is not None:
            print(f"{pad}{key}:")
        for k, v in value.items():
            _emit_text(v, k, indent + (key is not None))
    elif isinstance(value, list) and value and isinstance(value[0], (dict, list)):
        print(f"{pad}{key}:")
        for v in value:
            _emit_text(v, None, indent + 1)
    elif isinstance(value, list):
        print(f"{pad}{label}{' '.join(str(v) for v in value)}")
    else:
        print(f"{pad}{label}{value}")


def _output(command: str, inputs: dict[str, Any], result: dict[str, Any],
            warnings: list[str], fmt: str) -> None:
    document = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "input": inputs,
        "result": result,
        "warnings": warnings,
    }
    if fmt == "json":
        print(json.dumps(document, sort_keys=True, separators=(",", ":")))
    else:
        for w in warnings:
            print(f"warning: {w}")
        _emit_text(result)


def _add_generator_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("n1", type=int)
    p.add_argument("n2", type=int)
    p.add_argument("n3", type=int)


def _add_format_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deltasg",
        description=(
            "Delta sets of embedding-dimension-3 numerical semigroups: "
            "structure, fast computation, witnesses, and brute-force checks."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="generators, Frobenius number, symmetry, "
                                    "Betti elements, structural form")
    _add_generator_args(p)
    _add_format_arg(p)
    p.set_defaults(fn=cmd_info)

    p = sub.add_parser("delta", help="Delta set of the semigroup")
    _add_generator_args(p)
    p.add_argument("--method", choices=("fast", "oracle", "both"), default="fast")
    p.add_argument("--bound", type=int, default=None,
                   help="oracle scan bound (default: heuristic)")
    _add_format_arg(p)
    p.set_defaults(fn=cmd_delta)

    p = sub.add_parser("element", help="factorizations, lengths, distances, "
                                       "and graph connectivity of one element")
    _add_generator_args(p)
    p.add_argument("s", type=int)
    _add_format_arg(p)
    p.set_defaults(fn=cmd_element)

    p = sub.add_parser("euclid", help="remainder chain and level decomposition "
                                      "of a distance pair")
    p.add_argument("d1", type=int)
    p.add_argument("d2", type=int)
    _add_format_arg(p)
    p.set_defaults(fn=cmd_euclid)

    p = sub.add_parser("witness", help="element realizing a distance as an "
                                       "adjacent length gap")
    _add_generator_args(p)
    p.add_argument("d", type=int)
    _add_format_arg(p)
    p.set_defaults(fn=cmd_witness)

    p = sub.add_parser("verify", help="differential test: oracle vs fast path")
    _add_generator_args(p)
    p.add_argument("--bound", type=int, default=None)
    _add_format_arg(p)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    inputs = {
        k: v
        for k, v in vars(args).items()
        if k not in ("fn", "format", "command") and v is not None
    }
    try:
        result, warnings, code = args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UnsupportedInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InternalInvariantError as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return 4
    except DeltaSGError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _output(args.command, inputs, result, warnings, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
