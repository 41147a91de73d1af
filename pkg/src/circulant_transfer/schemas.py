"""Pydantic request/response models shared by the HTTP service and the CLI."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class DivisorSign(BaseModel):
    d: int
    sign: Literal[1, -1]


class GraphSpecModel(BaseModel):
    n: int
    divisors: list[DivisorSign] = []


class SpecSource(BaseModel):
    """A graph given either by its divisor/sign encoding or by a raw symbol."""

    n: int = Field(ge=1)
    divisors: list[DivisorSign] | None = None
    symbol: list[int] | None = None


class InspectResponse(BaseModel):
    n: int
    integral: bool
    divisors: list[DivisorSign]
    symbol: list[int]
    #: divisors grouped by the 2-adic valuation of n/d (levels 2 .. v2(n))
    partition: dict[int, list[int]]


class SpectrumRequest(SpecSource):
    verify: bool = False


class SpectrumResponse(BaseModel):
    n: int
    eigenvalues: list[int]
    #: set when the direct-sum cross-check ran
    verified: bool | None = None


class CheckRequest(SpecSource):
    mode: Literal["pst", "mst", "ust"] = "pst"
    tolerance: float = Field(default=1e-9, gt=0, le=1e-3)


class CertificateModel(BaseModel):
    a: int
    b: int
    p: int
    q: int
    t: float
    phase_re: float
    phase_im: float
    fidelity: float
    criterion: str


class CheckResponse(BaseModel):
    n: int
    mode: Literal["pst", "mst", "ust"]
    decision: bool
    divisor_criterion: bool
    d2: list[int]
    d3: list[int]
    #: 2-adic valuations of cyclic eigenvalue differences; null marks a zero
    #: difference
    valuation_step1: list[int | None]
    valuation_step2: list[int | None]
    offsets: list[int]
    certificates: list[CertificateModel]


class CensusRequest(BaseModel):
    n: int = Field(ge=1)
    kind: Literal["pst", "mst"]
    cap: int = Field(default=1024, ge=4)


class CensusResponse(BaseModel):
    n: int
    kind: Literal["pst", "mst"]
    formula_count: int
    enumerated_count: int
    specs: list[GraphSpecModel]


class ExportRequest(SpecSource):
    format: Literal["dot", "csv", "json"] = "dot"


class ExportResponse(BaseModel):
    format: Literal["dot", "csv", "json"]
    content: str
