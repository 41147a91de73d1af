"""Oriented circulant graphs with integer spectra.

The (n, divisor-signs) encoding, the symbol set it expands to, the inverse
classification of raw symbols, and the Hermitian adjacency matrix in
integer arc-indicator form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Mapping

import numpy as np

from .numtheory import NotIntegralError, gnr_set, two_adic_valuation


@dataclass(frozen=True)
class GraphSpec:
    """Order n plus a sign per divisor of n/4 choosing its orientation class.

    ``divisor_signs`` is a tuple of (d, sign) pairs, strictly increasing in d,
    with sign +1 or -1. The empty tuple is the empty graph and is allowed for
    every order; a nonempty tuple forces 4 | n.
    """

    n: int
    divisor_signs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"order must be positive, got {self.n}")
        if not self.divisor_signs:
            return
        if self.n % 4:
            raise ValueError(f"nonempty spec needs 4 | n, got n = {self.n}")
        prev = 0
        for d, s in self.divisor_signs:
            if d <= prev:
                raise ValueError("divisors must be strictly increasing")
            if s not in (1, -1):
                raise ValueError(f"sign for divisor {d} must be +1 or -1, got {s}")
            if (self.n // 4) % d:
                raise ValueError(f"divisor {d} does not divide n/4 = {self.n // 4}")
            prev = d

    @classmethod
    def from_signs(cls, n: int, signs: Mapping[int, int]) -> "GraphSpec":
        return cls(n, tuple(sorted((int(d), int(s)) for d, s in dict(signs).items())))

    @property
    def divisors(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.divisor_signs)

    def sign(self, d: int) -> int:
        for dd, s in self.divisor_signs:
            if dd == d:
                return s
        raise KeyError(d)

    def signs(self) -> dict[int, int]:
        return dict(self.divisor_signs)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "divisors": [{"d": d, "sign": s} for d, s in self.divisor_signs],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "GraphSpec":
        return cls.from_signs(obj["n"], {e["d"]: e["sign"] for e in obj["divisors"]})


@dataclass(frozen=True)
class SymbolSet:
    """Connection set of an oriented circulant graph.

    Elements live in [1, n-1] and no element appears together with its
    negation mod n (so n/2 can never be a member).
    """

    n: int
    elements: frozenset[int]

    def __post_init__(self) -> None:
        for k in self.elements:
            if not 1 <= k <= self.n - 1:
                raise ValueError(f"symbol element {k} outside [1, {self.n - 1}]")
            if (self.n - k) % self.n in self.elements:
                raise ValueError(
                    f"not oriented: both {k} and {self.n - k} are in the symbol"
                )

    @classmethod
    def of(cls, n: int, elements: Iterable[int]) -> "SymbolSet":
        return cls(n, frozenset(int(k) for k in elements))

    def ordered(self) -> list[int]:
        return sorted(self.elements)

    def to_json(self) -> dict:
        return {"n": self.n, "symbol": self.ordered()}

    @classmethod
    def from_json(cls, obj: Mapping) -> "SymbolSet":
        return cls.of(obj["n"], obj["symbol"])


@dataclass(frozen=True)
class DivisorPartition:
    """Spec divisors grouped by the 2-adic valuation of n/d.

    Levels run from 2 up to the valuation of n; levels with no divisors map
    to the empty set.
    """

    n: int
    classes: dict[int, frozenset[int]] = field(default_factory=dict)

    def level(self, i: int) -> frozenset[int]:
        return self.classes.get(i, frozenset())


@dataclass(frozen=True)
class HermitianAdjacency:
    """Arc-indicator form of the Hermitian adjacency matrix.

    Entry +1 stands for the complex value i (an arc u -> v), -1 for -i.
    """

    n: int
    arc_indicator: np.ndarray

    def to_complex(self) -> np.ndarray:
        return self.arc_indicator * 1j


def build_symbol(spec: GraphSpec) -> SymbolSet:
    """Union of the chosen orientation class of every divisor in the spec."""
    elems: set[int] = set()
    for d, s in spec.divisor_signs:
        elems.update(gnr_set(spec.n, d, 1 if s == 1 else 3))
    return SymbolSet(spec.n, frozenset(elems))


def classify_symbol(n: int, symbol: Iterable[int]) -> GraphSpec:
    """Decompose a raw symbol into orientation classes, or reject it.

    Walks the elements in increasing order. Each unclaimed element k pins a
    divisor d = gcd(k, n) and a residue r = (k/d) mod 4, and the whole class
    gnr_set(n, d, r) must then be present; the decomposition is unique
    because the classes partition [1, n-1] by gcd. Raises ValueError for a
    non-oriented symbol and NotIntegralError when no decomposition exists
    (such a graph has irrational eigenvalues).
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    elems = sorted({int(k) for k in symbol})
    eset = set(elems)
    for k in elems:
        if not 1 <= k <= n - 1:
            raise ValueError(f"symbol element {k} outside [1, {n - 1}]")
        if (n - k) % n in eset:
            raise ValueError(f"not oriented: both {k} and {n - k} are in the symbol")
    if not elems:
        return GraphSpec(n)
    if n % 4:
        raise NotIntegralError(
            f"not integral: nonempty symbol with n = {n} not divisible by 4"
        )
    signs: dict[int, int] = {}
    unclaimed = set(elems)
    for k in elems:
        if k not in unclaimed:
            continue
        d = gcd(k, n)
        r = (k // d) % 4
        if r not in (1, 3) or (n // 4) % d:
            raise NotIntegralError(
                f"not integral: element {k} belongs to no orientation class"
            )
        cls = set(gnr_set(n, d, r))
        if d in signs or not cls <= unclaimed:
            raise NotIntegralError(
                f"not integral: element {k} demands the whole class "
                f"{sorted(cls)}, which is not contained in the symbol"
            )
        unclaimed -= cls
        signs[d] = 1 if r == 1 else -1
    return GraphSpec.from_signs(n, signs)


def hermitian_adjacency(symbol: SymbolSet) -> HermitianAdjacency:
    """Circulant arc-indicator matrix: +1 at (u, v) iff (v - u) mod n is in
    the symbol, -1 at the reversed positions, 0 elsewhere."""
    n = symbol.n
    pattern = np.zeros(n, dtype=np.int64)
    for k in symbol.elements:
        pattern[k] = 1
        pattern[n - k] = -1
    offsets = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    return HermitianAdjacency(n, pattern[offsets])


def d_partition(spec: GraphSpec) -> DivisorPartition:
    """Group the spec's divisors d by two_adic_valuation(n/d)."""
    top = two_adic_valuation(spec.n)
    groups: dict[int, set[int]] = {i: set() for i in range(2, top + 1)}
    for d in spec.divisors:
        groups[two_adic_valuation(spec.n // d)].add(d)
    return DivisorPartition(spec.n, {i: frozenset(s) for i, s in groups.items()})
