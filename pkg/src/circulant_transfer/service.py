"""Handlers shared by the HTTP API and the command-line client.

Each handler turns a request model into a response model; bad input raises
ValueError (or its NotIntegralError subclass) and internal cross-check
failures raise VerifyMismatchError.
"""

from __future__ import annotations

import json
import math

from .census import enumerate_graphs
from .circulant import (
    GraphSpec,
    SymbolSet,
    build_symbol,
    classify_symbol,
    d_partition,
    hermitian_adjacency,
)
from .schemas import (
    CensusResponse,
    CertificateModel,
    CheckResponse,
    DivisorSign,
    ExportResponse,
    GraphSpecModel,
    InspectResponse,
    SpecSource,
    SpectrumResponse,
)
from .spectrum import eigenvalues_closed, eigenvalues_direct
from .transfer import (
    TransferCertificate,
    ValuationProfile,
    certify,
    has_mst,
    has_pst,
    has_ust,
    pst_pair_offsets,
    valuation_profile,
)


class VerifyMismatchError(RuntimeError):
    """The closed-form and direct spectra disagreed (an internal bug)."""


def resolve_spec(src: SpecSource) -> GraphSpec:
    """Build the canonical spec from either source form."""
    if src.divisors is not None and src.symbol is not None:
        raise ValueError("give either divisors or a symbol, not both")
    if src.symbol is not None:
        return classify_symbol(src.n, src.symbol)
    signs = {entry.d: entry.sign for entry in src.divisors or []}
    return GraphSpec.from_signs(src.n, signs)


def spec_model(spec: GraphSpec) -> GraphSpecModel:
    return GraphSpecModel(
        n=spec.n,
        divisors=[DivisorSign(d=d, sign=s) for d, s in spec.divisor_signs],
    )


def inspect_spec(src: SpecSource) -> InspectResponse:
    spec = resolve_spec(src)
    symbol = build_symbol(spec)
    part = d_partition(spec)
    return InspectResponse(
        n=spec.n,
        integral=True,
        divisors=spec_model(spec).divisors,
        symbol=symbol.ordered(),
        partition={i: sorted(ds) for i, ds in sorted(part.classes.items())},
    )


def spectrum_report(src: SpecSource, verify: bool = False) -> SpectrumResponse:
    spec = resolve_spec(src)
    spectrum = eigenvalues_closed(spec)
    verified = None
    if verify:
        direct = eigenvalues_direct(build_symbol(spec))
        if direct.values != spectrum.values:
            raise VerifyMismatchError(
                f"closed spectrum {spectrum.values} disagrees with "
                f"direct spectrum {direct.values}"
            )
        verified = True
    return SpectrumResponse(n=spec.n, eigenvalues=list(spectrum.values), verified=verified)


def _certificate_model(cert: TransferCertificate) -> CertificateModel:
    return CertificateModel(**cert.to_json())


def _profile_entries(profile: ValuationProfile) -> list[int | None]:
    return [None if math.isinf(v) else int(v) for v in profile.values]


def check_transfer(
    src: SpecSource, mode: str = "pst", tolerance: float = 1e-9
) -> CheckResponse:
    spec = resolve_spec(src)
    n = spec.n
    part = d_partition(spec)
    spectrum = eigenvalues_closed(spec)
    if mode == "pst":
        decision = has_pst(spec)
        offsets = [n // 2] if decision else []
    elif mode == "mst":
        decision = has_mst(spec)
        offsets = sorted(pst_pair_offsets(spec)) if decision else []
    elif mode == "ust":
        decision = has_ust(spec) if n >= 2 else False
        offsets = []
    else:
        raise ValueError(f"mode must be pst, mst or ust, got {mode!r}")
    certificates = []
    for o in offsets:
        cert = certify(spec, o, 0, tol=tolerance)
        if cert is not None:
            certificates.append(_certificate_model(cert))
    return CheckResponse(
        n=n,
        mode=mode,
        decision=decision,
        divisor_criterion=decision if mode != "ust" else False,
        d2=sorted(part.level(2)),
        d3=sorted(part.level(3)),
        valuation_step1=_profile_entries(valuation_profile(spectrum, 1)),
        valuation_step2=_profile_entries(valuation_profile(spectrum, 2)),
        offsets=offsets,
        certificates=certificates,
    )


def run_census(n: int, kind: str, cap: int = 1024) -> CensusResponse:
    record = enumerate_graphs(n, kind, cap)
    return CensusResponse(
        n=record.n,
        kind=record.kind,
        formula_count=record.formula_count,
        enumerated_count=record.enumerated_count,
        specs=[spec_model(s) for s in record.specs],
    )


def _render_dot(symbol: SymbolSet) -> str:
    adj = hermitian_adjacency(symbol)
    lines = ["digraph circulant {"]
    for u in range(symbol.n):
        lines.append(f"  {u};")
    for u in range(symbol.n):
        for v in range(symbol.n):
            if adj.arc_indicator[u, v] == 1:
                lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _render_csv(symbol: SymbolSet) -> str:
    adj = hermitian_adjacency(symbol)
    rows = (",".join(str(int(x)) for x in row) for row in adj.arc_indicator)
    return "\n".join(rows) + "\n"


def export_graph(src: SpecSource, fmt: str = "dot") -> ExportResponse:
    spec = resolve_spec(src)
    symbol = build_symbol(spec)
    if fmt == "dot":
        content = _render_dot(symbol)
    elif fmt == "csv":
        content = _render_csv(symbol)
    elif fmt == "json":
        content = json.dumps(symbol.to_json(), indent=2) + "\n"
    else:
        raise ValueError(f"format must be dot, csv or json, got {fmt!r}")
    return ExportResponse(format=fmt, content=content)
