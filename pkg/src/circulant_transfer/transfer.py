"""Perfect and multiple state transfer on integral oriented circulant graphs.

Three independent routes to the same answer: the divisor criterion on the
spec, the constant-valuation test on the spectrum, and an exact rational
solver for the transfer time whose output is verified against the numeric
transition amplitude before a certificate is issued.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .circulant import GraphSpec, d_partition
from .numtheory import two_adic_valuation
from .spectrum import Spectrum, eigenvalues_closed, transition_entry

#: certificates require fidelity >= 1 - FIDELITY_TOL
FIDELITY_TOL = 1e-9

CRITERION_DIVISOR = "divisor-criterion"
CRITERION_VALUATION = "valuation-test"
CRITERION_EXACT_SEARCH = "exact-search"

#: valuation marker for a zero eigenvalue difference
INFINITE = math.inf


@dataclass(frozen=True)
class RationalTime:
    """A transfer time t = 2 pi p / q, reduced and folded into one period."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.q < 1 or not 0 <= self.p < self.q:
            raise ValueError(f"need 0 <= p < q with q >= 1, got {self.p}/{self.q}")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"{self.p}/{self.q} is not reduced")

    @classmethod
    def from_fraction(cls, value: Fraction) -> "RationalTime":
        return cls(value.numerator, value.denominator)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    @property
    def radians(self) -> float:
        return 2.0 * math.pi * self.p / self.q


@dataclass(frozen=True)
class TransferCertificate:
    """A verified transfer claim: vertex pair, exact time, phase, fidelity."""

    a: int
    b: int
    time: RationalTime
    phase: complex
    fidelity: float
    criterion: str = CRITERION_EXACT_SEARCH

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "p": self.time.p,
            "q": self.time.q,
            "t": self.time.radians,
            "phase_re": self.phase.real,
            "phase_im": self.phase.imag,
            "fidelity": self.fidelity,
            "criterion": self.criterion,
        }


@dataclass(frozen=True)
class ValuationProfile:
    """2-adic valuations of the cyclic k-step eigenvalue differences.

    A zero difference carries the INFINITE marker and a profile containing
    it is never constant.
    """

    k: int
    values: tuple[float, ...]

    def is_constant(self, m: int | None = None) -> bool:
        """All entries equal one finite value (equal to m when given)."""
        if not self.values or self.values[0] == INFINITE:
            return False
        first = self.values[0]
        if any(v != first for v in self.values):
            return False
        return m is None or first == m


def valuation_profile(spectrum: Spectrum, k: int) -> ValuationProfile:
    """Profile of two_adic_valuation(mu_{j+k} - mu_j) over all j, indices mod n."""
    if k not in (1, 2):
        raise ValueError(f"step size must be 1 or 2, got {k}")
    n, mu = spectrum.n, spectrum.values
    vals: list[float] = []
    for j in range(n):
        d = mu[(j + k) % n] - mu[j]
        vals.append(INFINITE if d == 0 else two_adic_valuation(abs(d)))
    return ValuationProfile(k, tuple(vals))


def has_pst(spec: GraphSpec) -> bool:
    """Divisor criterion for antipodal transfer: the level-2 divisor class
    is exactly {n/4}. When true, transfer holds between b and b + n/2 for
    every base vertex b."""
    if spec.n % 4:
        return False
    return d_partition(spec).level(2) == frozenset({spec.n // 4})


def has_mst(spec: GraphSpec) -> bool:
    """Divisor criterion for transfer among the quarter coset
    {b, b+n/4, b+n/2, b+3n/4}: level 2 is {n/4} and level 3 is {n/8}."""
    if spec.n % 8:
        return False
    part = d_partition(spec)
    return part.level(2) == frozenset({spec.n // 4}) and part.level(3) == frozenset(
        {spec.n // 8}
    )


def has_ust(spec: GraphSpec) -> bool:
    """Transfer between every pair of vertices never happens: pairs with
    transfer sit at quarter-multiples of n, at most four vertices deep."""
    if spec.n < 2:
        raise ValueError(f"need at least two vertices, got n = {spec.n}")
    return False


def pst_pair_offsets(spec: GraphSpec) -> frozenset[int]:
    """Offsets o such that transfer holds between b and b + o for all b."""
    n = spec.n
    if has_mst(spec):
        return frozenset({n // 4, n // 2, 3 * n // 4})
    if has_pst(spec):
        return frozenset({n // 2})
    return frozenset()


def _holds(p: int, q: int, n: int, diffs: list[int], shift: int) -> bool:
    # (p/q) * diff + shift/n in Z, tested in exact integer arithmetic
    qn = q * n
    return all((p * d * n + shift * q) % qn == 0 for d in diffs)


def solve_transfer_time(spectrum: Spectrum, a: int, b: int) -> RationalTime | None:
    """Minimal t' = p/q in (0, 1) with t'(mu_{j+1} - mu_j) + (a-b)/n an
    integer for every cyclic j, or None when no such time exists.

    Searches reduced fractions with q <= 4n. Two exact prunes keep the scan
    cheap without changing its outcome: a zero difference would force
    (a-b)/n itself to be an integer, impossible for distinct vertices, so
    the search is empty; and p*delta*v = q*(integer) with gcd(p, q) = 1
    forces q | v*g, where v is the reduced denominator of (a-b)/n and g the
    gcd of the differences.
    """
    n, mu = spectrum.n, spectrum.values
    if not (0 <= a < n and 0 <= b < n):
        raise ValueError(f"vertices must lie in [0, {n - 1}], got ({a}, {b})")
    if a == b:
        raise ValueError("vertices must be distinct")
    diffs = [mu[(j + 1) % n] - mu[j] for j in range(n)]
    if any(d == 0 for d in diffs):
        return None
    g = 0
    for d in diffs:
        g = gcd(g, d)
    v = n // gcd(a - b, n)
    best: Fraction | None = None
    for q in range(1, 4 * n + 1):
        if (v * g) % q:
            continue
        for p in range(1, q):
            if gcd(p, q) != 1:
                continue
            if _holds(p, q, n, diffs, a - b):
                cand = Fraction(p, q)
                if best is None or cand < best:
                    best = cand
    return None if best is None else RationalTime.from_fraction(best)


def k_step_condition(
    spectrum: Spectrum, a: int, b: int, t_prime: RationalTime, k: int
) -> bool:
    """Whether t' clears the k-step congruence
    t'(mu_{j+k} - mu_j) + k(a-b)/n in Z for all j.

    Implied by the k = 1 condition; the converse fails, so only k = 1
    decides transfer.
    """
    n, mu = spectrum.n, spectrum.values
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in [1, {n}], got {k}")
    diffs = [mu[(j + k) % n] - mu[j] for j in range(n)]
    return _holds(t_prime.p, t_prime.q, n, diffs, k * (a - b))


def certify(
    spec: GraphSpec, a: int, b: int, tol: float = FIDELITY_TOL
) -> TransferCertificate | None:
    """Solve for the transfer time from a to b and confirm it numerically.

    Returns None when the solver finds no time. A solved time whose
    transition amplitude falls below 1 - tol is an internal inconsistency
    (the congruence system guarantees unit fidelity) and raises
    RuntimeError rather than issuing a bogus certificate.
    """
    if a == b:
        raise ValueError("vertices must be distinct")
    spectrum = eigenvalues_closed(spec)
    time = solve_transfer_time(spectrum, a, b)
    if time is None:
        return None
    value = transition_entry(spectrum, a, b, time.radians)
    fidelity = abs(value)
    if fidelity < 1.0 - tol:
        raise RuntimeError(
            f"solver found t' = {time.fraction} for ({a}, {b}) "
            f"but the transition amplitude has magnitude {fidelity}"
        )
    return TransferCertificate(a, b, time, value, fidelity, CRITERION_EXACT_SEARCH)
