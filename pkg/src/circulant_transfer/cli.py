"""Command-line client: a thin argparse layer over the service handlers.

Exit codes: 0 success / positive decision, 1 negative decision, 2 invalid
input (bad flags, non-integral symbol, order over the cap, unwritable
destination), 3 internal cross-check mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .schemas import CheckResponse, DivisorSign, InspectResponse, SpecSource
from .service import (
    VerifyMismatchError,
    check_transfer,
    export_graph,
    inspect_spec,
    run_census,
    spectrum_report,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INVALID = 2
EXIT_MISMATCH = 3


@dataclass(frozen=True)
class CliConfig:
    output_format: str = "table"
    tolerance: float = 1e-9
    enumeration_cap: int = 1024

    def __post_init__(self) -> None:
        if self.output_format not in ("json", "table"):
            raise ValueError(f"output must be json or table, got {self.output_format!r}")
        if not 0 < self.tolerance <= 1e-3:
            raise ValueError(f"tolerance must lie in (0, 1e-3], got {self.tolerance}")
        if self.enumeration_cap < 4:
            raise ValueError(f"cap must be at least 4, got {self.enumeration_cap}")


def _parse_divisor(text: str) -> tuple[int, int]:
    try:
        d_text, sign_text = text.split(":", 1)
        d = int(d_text)
        sign = int(sign_text)
        if sign not in (1, -1):
            raise ValueError
        return d, sign
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected d:+1 or d:-1, got {text!r}"
        ) from None


def _add_source_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--spec-json", metavar="FILE", help="spec or symbol JSON file")
    parser.add_argument("--n", type=int, help="graph order")
    parser.add_argument(
        "--divisor",
        action="append",
        type=_parse_divisor,
        metavar="D:SIGN",
        help="divisor with orientation sign, written d:+1 or d:-1 (repeatable)",
    )
    parser.add_argument(
        "--symbol",
        action="append",
        type=int,
        metavar="K",
        help="raw symbol element (repeatable); classified instead of built",
    )


def _source_from_args(args: argparse.Namespace) -> SpecSource:
    if args.spec_json:
        data = json.loads(Path(args.spec_json).read_text())
        if "divisors" in data:
            return SpecSource(
                n=data["n"],
                divisors=[DivisorSign(**e) for e in data["divisors"]],
            )
        if "symbol" in data:
            return SpecSource(n=data["n"], symbol=data["symbol"])
        raise ValueError("spec JSON needs a 'divisors' or a 'symbol' key")
    if args.n is None:
        raise ValueError("give --n (with --divisor / --symbol) or --spec-json")
    if args.symbol is not None and args.divisor:
        raise ValueError("give either --divisor or --symbol, not both")
    if args.symbol is not None:
        return SpecSource(n=args.n, symbol=args.symbol)
    divisors = [DivisorSign(d=d, sign=s) for d, s in args.divisor or []]
    return SpecSource(n=args.n, divisors=divisors)


def _emit_json(model) -> None:
    print(model.model_dump_json(indent=2))


def _inspect_table(rep: InspectResponse) -> None:
    print(f"n: {rep.n}")
    print(f"integral: {'yes' if rep.integral else 'no'}")
    print("symbol:", " ".join(str(k) for k in rep.symbol) if rep.symbol else "(empty)")
    print("d  sign  level")
    level_of = {d: i for i, ds in rep.partition.items() for d in ds}
    for entry in rep.divisors:
        print(f"{entry.d}  {entry.sign:+d}    {level_of[entry.d]}")


def _check_table(rep: CheckResponse) -> None:
    print(f"n: {rep.n}")
    print(f"mode: {rep.mode}")
    print(f"decision: {'positive' if rep.decision else 'negative'}")
    print(f"D2: {rep.d2}  D3: {rep.d3}")
    fmt = lambda vals: " ".join("inf" if v is None else str(v) for v in vals)
    print(f"valuations k=1: {fmt(rep.valuation_step1)}")
    print(f"valuations k=2: {fmt(rep.valuation_step2)}")
    for cert in rep.certificates:
        print(
            f"offset {cert.a - cert.b}: t' = {cert.p}/{cert.q} "
            f"(t = {cert.t:.12g}), phase = {cert.phase_re:+.9f}{cert.phase_im:+.9f}i, "
            f"fidelity = {cert.fidelity:.12f}"
        )


def _cmd_inspect(args: argparse.Namespace, cfg: CliConfig) -> int:
    rep = inspect_spec(_source_from_args(args))
    if cfg.output_format == "json":
        _emit_json(rep)
    else:
        _inspect_table(rep)
    return EXIT_OK


def _cmd_spectrum(args: argparse.Namespace, cfg: CliConfig) -> int:
    rep = spectrum_report(_source_from_args(args), verify=args.verify)
    if cfg.output_format == "json":
        _emit_json(rep)
    else:
        print("j  mu_j")
        for j, mu in enumerate(rep.eigenvalues):
            print(f"{j}  {mu}")
        if rep.verified:
            print("verified: closed form matches the direct sums")
    return EXIT_OK


def _cmd_check(args: argparse.Namespace, cfg: CliConfig) -> int:
    rep = check_transfer(_source_from_args(args), mode=args.mode, tolerance=cfg.tolerance)
    if cfg.output_format == "json":
        _emit_json(rep)
    else:
        _check_table(rep)
    return EXIT_OK if rep.decision else EXIT_NEGATIVE


def _cmd_census(args: argparse.Namespace, cfg: CliConfig) -> int:
    rep = run_census(args.n, args.kind, cap=cfg.enumeration_cap)
    if cfg.output_format == "json":
        _emit_json(rep)
    else:
        print(f"n: {rep.n}  kind: {rep.kind}")
        print(f"formula count:    {rep.formula_count}")
        print(f"enumerated count: {rep.enumerated_count}")
        if args.list:
            for spec in rep.specs:
                signs = " ".join(f"{e.d}:{e.sign:+d}" for e in spec.divisors)
                print(f"  {signs if signs else '(empty)'}")
    if rep.formula_count != rep.enumerated_count:
        print(
            f"error: formula count {rep.formula_count} != "
            f"enumerated count {rep.enumerated_count}",
            file=sys.stderr,
        )
        return EXIT_MISMATCH
    return EXIT_OK


def _cmd_export(args: argparse.Namespace, cfg: CliConfig) -> int:
    rep = export_graph(_source_from_args(args), fmt=args.format)
    if args.out:
        Path(args.out).write_text(rep.content)
    else:
        sys.stdout.write(rep.content)
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace, cfg: CliConfig) -> int:
    import uvicorn

    uvicorn.run("circulant_transfer.api:app", host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circulant-transfer",
        description="Integral oriented circulant graphs: spectra, state transfer, census.",
    )
    parser.add_argument("--output", choices=("json", "table"), default="table")
    parser.add_argument("--tolerance", type=float, default=1e-9)
    parser.add_argument("--cap", type=int, default=1024, help="enumeration cap")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inspect", help="report symbol, divisor levels, integrality")
    _add_source_args(p)
    p.set_defaults(handler=_cmd_inspect)

    p = sub.add_parser("spectrum", help="print the integer spectrum")
    _add_source_args(p)
    p.add_argument("--verify", action="store_true", help="cross-check against direct sums")
    p.set_defaults(handler=_cmd_spectrum)

    p = sub.add_parser("check", help="decide transfer and print certificates")
    _add_source_args(p)
    p.add_argument("--mode", choices=("pst", "mst", "ust"), default="pst")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("census", help="enumerate transfer graphs of one order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=("pst", "mst"), required=True)
    p.add_argument("--list", action="store_true", help="also print the members")
    p.set_defaults(handler=_cmd_census)

    p = sub.add_parser("export", help="write the graph as dot, csv or symbol JSON")
    _add_source_args(p)
    p.add_argument("--format", choices=("dot", "csv", "json"), default="dot")
    p.add_argument("--out", metavar="FILE", help="destination (stdout when absent)")
    p.set_defaults(handler=_cmd_export)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(handler=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the reason
        return int(exc.code or 0)
    try:
        cfg = CliConfig(args.output, args.tolerance, args.cap)
        return args.handler(args, cfg)
    except VerifyMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
