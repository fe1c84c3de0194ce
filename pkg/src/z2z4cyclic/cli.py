"""Command-line front end.

One verb per invocation: info, dual, matrix, enumerate, gray, verify,
search.  Codes come either from a spec file (--spec, in the key=value
format of parse_spec_text) or from the six inline flags --alpha --beta
--b --ell --f --h.  Every verb renders text by default and JSON with
--json, carrying the same data either way.

Exit codes: 0 success, 1 verification failure, 2 usage or data error,
3 enumeration above the configured cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import analysis
from .code import (
    ENUM_CAP,
    _row_word,
    cardinality,
    codeword_matrix,
    format_codeword,
    gray_map,
    parse_spec_text,
    spanning_set,
    validate_spec,
)
from .dual import dual_degrees, dual_generators
from .errors import InvalidParameter, ParseError, TooLarge, Z2Z4Error
from .gf2poly import BinPoly
from .z4poly import QuatPoly

_VERBS = ("info", "dual", "matrix", "enumerate", "gray", "verify", "search")


@dataclass(frozen=True)
class Command:
    """One parsed invocation."""

    verb: str
    spec_source: str | dict | None
    output_format: str = "text"
    cap: int = ENUM_CAP
    seed: int = 0
    alpha_max: int = 0
    beta_set: tuple[int, ...] = ()
    predicate: str = ""


def parse_poly(s: str, modulus: int):
    """Parse a polynomial in human or coefficient-list form over Z2 or Z4."""
    if modulus == 2:
        return BinPoly.parse(s)
    if modulus == 4:
        return QuatPoly.parse(s)
    raise InvalidParameter("modulus must be 2 or 4")


def _load_spec(source):
    if isinstance(source, str):
        return parse_spec_text(Path(source).read_text())
    if isinstance(source, dict):
        try:
            alpha, beta = int(source["alpha"]), int(source["beta"])
        except ValueError:
            raise ParseError("alpha and beta must be integers") from None
        return validate_spec(
            alpha,
            beta,
            parse_poly(source["b"], 2),
            parse_poly(source["ell"], 2),
            parse_poly(source["f"], 4),
            parse_poly(source["h"], 4),
        )
    raise ParseError("no spec given: use --spec FILE or all of --alpha/--beta/--b/--ell/--f/--h")


def _render(data: dict, text: str, as_json: bool) -> str:
    return json.dumps(data, indent=2) if as_json else text


def _run_info(spec, cmd: Command) -> tuple[int, str]:
    report = analysis.code_report(spec, cmd.cap)
    text = "\n".join(
        [
            analysis.report_line(spec, report),
            f"type {report.type}",
            f"|C| = {cardinality(spec)}",
        ]
    )
    return 0, _render(analysis.report_dict(spec, report), text, cmd.output_format == "json")


def _run_dual(spec, cmd: Command) -> tuple[int, str]:
    d = dual_generators(spec)
    dd = dual_degrees(spec)
    dtype = f"({spec.alpha},{spec.beta};{dd.gamma_bar},{dd.delta_bar};{dd.kappa_bar})"
    data = {
        "b_bar": str(d.b_bar),
        "ell_bar": str(d.ell_bar),
        "f_bar": str(d.f_bar),
        "h_bar": str(d.h_bar),
        "g_bar": str(d.g_bar),
        "mu1": None if d.mu1 is None else str(d.mu1),
        "mu2": None if d.mu2 is None else str(d.mu2),
        "rho": None if d.rho is None else str(d.rho),
        "dual_type": dtype,
    }
    lines = [f"{k} = {v}" for k, v in data.items() if k != "dual_type" and v is not None]
    lines.append(f"dual type {dtype}")
    return 0, _render(data, "\n".join(lines), cmd.output_format == "json")


def _run_matrix(spec, cmd: Command) -> tuple[int, str]:
    words = spanning_set(spec)
    labeled: dict[str, list[str]] = {"S1": [], "S2": [], "S3": []}
    counts = (spec.alpha - spec.b.degree, spec.g.degree, spec.h.degree)
    names = ("S1", "S2", "S3")
    i = 0
    lines = []
    for name, count in zip(names, counts):
        for shift in range(int(count)):
            rendered = format_codeword(words[i])
            labeled[name].append(rendered)
            lines.append(f"{name}[{shift}] {rendered}")
            i += 1
    return 0, _render(labeled, "\n".join(lines) if lines else "(empty spanning set)",
                      cmd.output_format == "json")


def _run_enumerate(spec, cmd: Command) -> tuple[int, str]:
    mat = codeword_matrix(spec, cmd.cap)
    rendered = [format_codeword(_row_word(row, spec.alpha)) for row in mat]
    data = {"cardinality": len(rendered), "codewords": rendered}
    text = "\n".join([f"|C| = {len(rendered)}"] + rendered)
    return 0, _render(data, text, cmd.output_format == "json")


def _run_gray(spec, cmd: Command) -> tuple[int, str]:
    mat = codeword_matrix(spec, cmd.cap)
    words = [_row_word(row, spec.alpha) for row in mat]
    images = [gray_map(w) for w in words]
    data = {
        "codewords": [format_codeword(w) for w in words],
        "gray_images": [list(img) for img in images],
    }
    text = "\n".join(
        f"{format_codeword(w)}  ->  {' '.join(str(bit) for bit in img)}"
        for w, img in zip(words, images)
    )
    return 0, _render(data, text, cmd.output_format == "json")


def _run_verify(spec, cmd: Command) -> tuple[int, str]:
    results = analysis.verify_code(spec, seed=cmd.seed, cap=cmd.cap)
    ok = all(r.ok for r in results)
    lines = [f"{'ok  ' if r.ok else 'FAIL'} {r.name}: {r.detail}" for r in results]
    lines.append(
        f"all {len(results)} checks passed"
        if ok
        else f"{sum(not r.ok for r in results)} of {len(results)} checks FAILED"
    )
    data = {
        "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results],
        "passed": ok,
    }
    return (0 if ok else 1), _render(data, "\n".join(lines), cmd.output_format == "json")


def _run_search(cmd: Command) -> tuple[int, str]:
    found = analysis.search_codes(cmd.alpha_max, cmd.beta_set, cmd.predicate, cmd.cap)
    lines = [analysis.report_line(s, r) for s, r in found]
    lines.append(f"{len(found)} codes matched {cmd.predicate}")
    data = {
        "predicate": cmd.predicate,
        "matches": [analysis.report_dict(s, r) for s, r in found],
    }
    return 0, _render(data, "\n".join(lines), cmd.output_format == "json")


def run(cmd: Command) -> tuple[int, str]:
    """Execute one command; returns (exit status, rendered output)."""
    if cmd.verb not in _VERBS:
        raise InvalidParameter(f"unknown verb {cmd.verb!r}")
    if cmd.verb == "search":
        return _run_search(cmd)
    spec = _load_spec(cmd.spec_source)
    handler = {
        "info": _run_info,
        "dual": _run_dual,
        "matrix": _run_matrix,
        "enumerate": _run_enumerate,
        "gray": _run_gray,
        "verify": _run_verify,
    }[cmd.verb]
    return handler(spec, cmd)


def _add_spec_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--spec", metavar="FILE", help="spec file in key=value form")
    for key, desc in (
        ("alpha", "binary block length"),
        ("beta", "quaternary block length (odd)"),
        ("b", "binary generator b"),
        ("ell", "binary generator ell"),
        ("f", "quaternary generator f"),
        ("h", "quaternary generator h"),
    ):
        sub.add_argument(f"--{key}", help=f"inline spec: {desc}")


def _add_common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--json", action="store_true", help="emit JSON instead of text")
    sub.add_argument("--cap", type=int, default=ENUM_CAP, help="enumeration cap")
    sub.add_argument("--seed", type=int, default=0, help="seed for sampled checks")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="z2z4cyclic",
        description="Construct, analyze, and dualize additive cyclic codes on Z2^a x Z4^b.",
    )
    subs = parser.add_subparsers(dest="verb", required=True)
    for verb, desc in (
        ("info", "type, cardinality, distance, and classification flags"),
        ("dual", "closed-form dual generator tuple and dual type"),
        ("matrix", "spanning-set rows labeled S1/S2/S3 with shift indices"),
        ("enumerate", "list every codeword"),
        ("gray", "list codewords with their Gray images"),
        ("verify", "run the oracle and invariant suite; nonzero exit on failure"),
        ("search", "scan all small codes for a predicate"),
    ):
        sub = subs.add_parser(verb, help=desc)
        if verb == "search":
            sub.add_argument("--alpha-max", type=int, required=True, help="largest alpha")
            sub.add_argument(
                "--beta-set", required=True, help="comma-separated odd beta values"
            )
            sub.add_argument(
                "--predicate",
                required=True,
                choices=("self_dual", "mdss", "separable"),
                help="classification filter",
            )
        else:
            _add_spec_flags(sub)
        _add_common_flags(sub)
    return parser


def _command_from_args(args: argparse.Namespace) -> Command:
    if args.verb == "search":
        try:
            beta_set = tuple(int(tok) for tok in args.beta_set.split(",") if tok.strip())
        except ValueError:
            raise ParseError("--beta-set must be comma-separated integers") from None
        if not beta_set:
            raise ParseError("--beta-set must name at least one value")
        return Command(
            verb=args.verb,
            spec_source=None,
            output_format="json" if args.json else "text",
            cap=args.cap,
            seed=args.seed,
            alpha_max=args.alpha_max,
            beta_set=beta_set,
            predicate=args.predicate,
        )
    inline_keys = ("alpha", "beta", "b", "ell", "f", "h")
    inline = {k: getattr(args, k) for k in inline_keys if getattr(args, k) is not None}
    if args.spec and inline:
        raise ParseError("give either --spec or the inline flags, not both")
    if args.spec:
        source: str | dict = args.spec
    elif len(inline) == len(inline_keys):
        source = inline
    elif inline:
        missing = sorted(set(inline_keys) - set(inline))
        raise ParseError(f"inline spec is missing: {', '.join(missing)}")
    else:
        raise ParseError(
            "no spec given: use --spec FILE or all of --alpha/--beta/--b/--ell/--f/--h"
        )
    return Command(
        verb=args.verb,
        spec_source=source,
        output_format="json" if args.json else "text",
        cap=args.cap,
        seed=args.seed,
    )


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        cmd = _command_from_args(args)
        status, output = run(cmd)
    except TooLarge as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Z2Z4Error as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if output:
        print(output)
    return status


if __name__ == "__main__":
    sys.exit(main())
