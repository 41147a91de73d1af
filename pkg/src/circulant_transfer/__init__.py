"""Integral oriented circulant graphs: exact spectra, perfect and multiple
state transfer with verified certificates, and census counts."""

__version__ = "0.1.0"

from .census import (
    MST,
    PST,
    CensusRecord,
    all_integral_specs,
    count_mst_formula,
    count_pst_formula,
    enumerate_graphs,
)
from .circulant import (
    DivisorPartition,
    GraphSpec,
    HermitianAdjacency,
    SymbolSet,
    build_symbol,
    classify_symbol,
    d_partition,
    hermitian_adjacency,
)
from .numtheory import (
    NotIntegralError,
    ResidueClass,
    divisor_count,
    divisors,
    euler_phi,
    gn_set,
    gnr_set,
    mobius,
    ramanujan_sum,
    sine_sum_closed,
    sine_sum_direct,
    two_adic_valuation,
)
from .spectrum import (
    Spectrum,
    eigenvalues_closed,
    eigenvalues_direct,
    sine_spectrum,
    transition_entry,
)
from .transfer import (
    RationalTime,
    TransferCertificate,
    ValuationProfile,
    certify,
    has_mst,
    has_pst,
    has_ust,
    k_step_condition,
    pst_pair_offsets,
    solve_transfer_time,
    valuation_profile,
)

__all__ = [
    "CensusRecord",
    "DivisorPartition",
    "GraphSpec",
    "HermitianAdjacency",
    "MST",
    "NotIntegralError",
    "PST",
    "RationalTime",
    "ResidueClass",
    "Spectrum",
    "SymbolSet",
    "TransferCertificate",
    "ValuationProfile",
    "all_integral_specs",
    "build_symbol",
    "certify",
    "classify_symbol",
    "count_mst_formula",
    "count_pst_formula",
    "d_partition",
    "divisor_count",
    "divisors",
    "eigenvalues_closed",
    "eigenvalues_direct",
    "enumerate_graphs",
    "euler_phi",
    "gn_set",
    "gnr_set",
    "has_mst",
    "has_pst",
    "has_ust",
    "hermitian_adjacency",
    "k_step_condition",
    "mobius",
    "pst_pair_offsets",
    "ramanujan_sum",
    "sine_spectrum",
    "sine_sum_closed",
    "sine_sum_direct",
    "solve_transfer_time",
    "transition_entry",
    "two_adic_valuation",
    "valuation_profile",
]
