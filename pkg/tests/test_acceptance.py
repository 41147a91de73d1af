"""Acceptance battery.

Each test prints one PASS/FAIL line (run with ``pytest -s`` to see them all);
a FAIL line is always followed by the pytest failure detail.
"""

import itertools
import math
import random
from contextlib import contextmanager
from fractions import Fraction

import numpy as np
import pytest

from circulant_transfer import (
    GraphSpec,
    SymbolSet,
    all_integral_specs,
    build_symbol,
    certify,
    count_mst_formula,
    count_pst_formula,
    eigenvalues_closed,
    eigenvalues_direct,
    enumerate_graphs,
    has_mst,
    has_pst,
    has_ust,
    hermitian_adjacency,
    sine_spectrum,
    sine_sum_closed,
    sine_sum_direct,
    solve_transfer_time,
    transition_entry,
    valuation_profile,
)


@contextmanager
def criterion(label: str):
    try:
        yield
    except BaseException:
        print(f"[acceptance] {label}: FAIL")
        raise
    print(f"[acceptance] {label}: PASS")


def test_criterion_1_sine_sum_oracle_equivalence():
    with criterion("1 sine-sum closed form == direct sums, n <= 256"):
        for n in range(4, 260, 4):
            for q in range(1, n + 1):
                assert sine_sum_closed(n, q) == sine_sum_direct(n, q, 1), (n, q)


def test_criterion_2_spectrum_triple_agreement():
    with criterion("2 closed == direct == dense eigensolver over censuses"):
        for n in (4, 8, 12, 16, 20, 24, 32, 48):
            for spec in all_integral_specs(n):
                symbol = build_symbol(spec)
                closed = eigenvalues_closed(spec)
                direct = eigenvalues_direct(symbol)
                assert closed.values == direct.values, spec
                dense = np.linalg.eigvalsh(hermitian_adjacency(symbol).to_complex())
                assert np.allclose(sorted(closed.values), dense, atol=1e-6), spec


def test_criterion_3_pst_characterization():
    with criterion("3 PST: divisor == valuation == solver+fidelity"):
        for n in (4, 8, 12, 16, 24, 32):
            for spec in all_integral_specs(n):
                divisor = has_pst(spec)
                spectrum = eigenvalues_closed(spec)
                valuation = valuation_profile(spectrum, 1).is_constant()
                cert = certify(spec, n // 2, 0)
                solver = cert is not None and cert.fidelity >= 1 - 1e-9
                assert divisor == valuation == solver, spec


def test_criterion_4_mst_characterization():
    with criterion("4 MST: divisor == paired valuation == three certificates"):
        for n in (8, 16, 24, 32):
            for spec in all_integral_specs(n):
                divisor = has_mst(spec)
                spectrum = eigenvalues_closed(spec)
                valuation = (
                    valuation_profile(spectrum, 1).is_constant(1)
                    and valuation_profile(spectrum, 2).is_constant(2)
                )
                certs = [
                    certify(spec, o, 0) for o in (n // 4, n // 2, 3 * n // 4)
                ]
                solver = all(c is not None and c.fidelity >= 1 - 1e-9 for c in certs)
                assert divisor == valuation == solver, spec


def test_criterion_5_concrete_certificates():
    with criterion("5 concrete certificates on the order-4 and order-8 graphs"):
        cert = certify(GraphSpec.from_signs(4, {1: 1}), 2, 0)
        assert cert.time.fraction == Fraction(1, 4)  # t = pi/2
        assert abs(cert.phase - 1) < 1e-12
        assert cert.fidelity > 1 - 1e-12

        spec = GraphSpec.from_signs(8, {1: 1, 2: -1})
        spectrum = eigenvalues_closed(spec)
        half = certify(spec, 4, 0)
        assert half.time.radians == pytest.approx(math.pi / 2, abs=1e-12)
        assert half.fidelity >= 1 - 1e-9
        quarter = certify(spec, 2, 0)
        assert quarter.time.radians == pytest.approx(3 * math.pi / 4, abs=1e-12)
        assert quarter.fidelity >= 1 - 1e-9
        # at t = 3pi/4 the offset-6 pair also transfers, in the direction
        # into the base vertex; the outgoing direction has its own earlier
        # time t = pi/4 (the congruence shift is 3/4, not 1/4)
        assert abs(transition_entry(spectrum, 0, 6, 3 * math.pi / 4)) >= 1 - 1e-9
        three_quarter = certify(spec, 6, 0)
        assert three_quarter.time.radians == pytest.approx(math.pi / 4, abs=1e-12)
        assert three_quarter.fidelity >= 1 - 1e-9


def test_criterion_6_counting_corollaries():
    with criterion("6 closed-form counts == enumeration"):
        for n in (4, 8, 12, 16, 20, 24, 32, 40, 48, 64):
            pst = enumerate_graphs(n, "pst")
            assert pst.enumerated_count == count_pst_formula(n), n
            mst = enumerate_graphs(n, "mst")
            assert mst.enumerated_count == count_mst_formula(n), n
        assert [count_pst_formula(n) for n in (4, 8, 16)] == [2, 6, 18]
        assert [count_mst_formula(n) for n in (8, 16)] == [4, 12]


def _oriented_symbols(n):
    """All nonempty oriented symbols of order n: pick at most one element
    from every pair {k, n - k}."""
    pairs = [(k, n - k) for k in range(1, (n + 1) // 2) if k != n - k]
    for choice in itertools.product(*[(None, low, high) for low, high in pairs]):
        elems = [k for k in choice if k is not None]
        if elems:
            yield SymbolSet.of(n, elems)


def test_criterion_7_negative_controls():
    with criterion("7 negative controls: order 6, stray offsets, no UST"):
        # (a) every nonempty oriented symbol on 6 vertices is non-integral
        symbols = list(_oriented_symbols(6))
        assert len(symbols) == 8
        for symbol in symbols:
            worst = max(abs(x - round(x)) for x in sine_spectrum(symbol))
            assert worst > 1e-3, symbol
        # (b) order-8 census: no transfer time at offsets outside {2, 4, 6}
        for spec in all_integral_specs(8):
            spectrum = eigenvalues_closed(spec)
            for o in (1, 3, 5, 7):
                assert solve_transfer_time(spectrum, o, 0) is None, (spec, o)
        # (c) no universal transfer anywhere in the order-8 census
        for spec in all_integral_specs(8):
            assert has_ust(spec) is False


def test_criterion_8_unitarity_and_periodicity():
    with criterion("8 unitarity and 2pi-periodicity over 1000 random probes"):
        rng = random.Random(20260809)
        pool = [
            spec
            for n in (4, 8, 12, 16, 20, 24, 32)
            for spec in all_integral_specs(n)
        ]
        spectra = {spec: eigenvalues_closed(spec) for spec in pool}
        for _ in range(1000):
            spec = rng.choice(pool)
            spectrum = spectra[spec]
            n = spec.n
            a = rng.randrange(n)
            t = rng.uniform(0.0, 4.0 * math.pi)
            row_norm = sum(
                abs(transition_entry(spectrum, a, b, t)) ** 2 for b in range(n)
            )
            assert abs(row_norm - 1) < 1e-9, (spec, a, t)
            b = rng.randrange(n)
            drift = transition_entry(spectrum, a, b, t + 2 * math.pi) - \
                transition_entry(spectrum, a, b, t)
            assert abs(drift) < 1e-9, (spec, a, b, t)
