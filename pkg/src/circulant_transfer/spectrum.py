"""Spectra of integral oriented circulant graphs and transition amplitudes
of the continuous-time quantum walk exp(i t H)."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Mapping

from .circulant import GraphSpec, SymbolSet
from .numtheory import INTEGRALITY_TOL, NotIntegralError, sine_sum_closed

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Spectrum:
    """Integer eigenvalues indexed by Fourier index j = 0 .. n-1."""

    n: int
    values: tuple[int, ...]

    def to_json(self) -> dict:
        return {"n": self.n, "eigenvalues": list(self.values)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "Spectrum":
        return cls(obj["n"], tuple(obj["eigenvalues"]))


def sine_spectrum(symbol: SymbolSet) -> list[float]:
    """Eigenvalues -sum_k 2 sin(2 pi j k / n) as raw floats, no rounding.

    Integral symbols give values within machine noise of integers;
    anything else is a graph with an irrational spectrum.
    """
    n = symbol.n
    return [
        -sum(2.0 * math.sin(TWO_PI * ((j * k) % n) / n) for k in symbol.elements)
        for j in range(n)
    ]


def eigenvalues_direct(symbol: SymbolSet) -> Spectrum:
    """Round the trigonometric eigenvalue sums to the integer spectrum.

    Raises NotIntegralError when any value strays from an integer by more
    than INTEGRALITY_TOL, i.e. when the input graph is not integral.
    """
    values: list[int] = []
    for j, x in enumerate(sine_spectrum(symbol)):
        v = round(x)
        if abs(x - v) > INTEGRALITY_TOL:
            raise NotIntegralError(
                f"eigenvalue at index {j} is {x}, not an integer: "
                "the graph is not integral"
            )
        values.append(v)
    return Spectrum(symbol.n, tuple(values))


def eigenvalues_closed(spec: GraphSpec) -> Spectrum:
    """Exact integer spectrum via the closed sine-sum formula.

    mu_j is the signed sum of sine_sum_closed(n/d, j) over the spec's
    divisors; j = 0 (the all-ones eigenvector) is pinned to 0.
    """
    n = spec.n
    values = [0] * n
    for j in range(1, n):
        values[j] = sum(s * sine_sum_closed(n // d, j) for d, s in spec.divisor_signs)
    return Spectrum(n, tuple(values))


def transition_entry(spectrum: Spectrum, a: int, b: int, t: float) -> complex:
    """Amplitude (1/n) sum_r exp(i (mu_r t + 2 pi r (a - b) / n)).

    Summed sequentially in index order r = 0 .. n-1 so results are
    bit-for-bit reproducible.
    """
    n = spectrum.n
    if not (0 <= a < n and 0 <= b < n):
        raise ValueError(f"vertices must lie in [0, {n - 1}], got ({a}, {b})")
    acc = 0j
    for r, mu in enumerate(spectrum.values):
        acc += cmath.exp(1j * (mu * t + TWO_PI * r * (a - b) / n))
    return acc / n
