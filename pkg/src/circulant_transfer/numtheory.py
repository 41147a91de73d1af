"""Exact integer arithmetic behind circulant spectra.

2-adic valuations, divisor lists, residue classes split by gcd and by a
mod-4 orientation residue, Ramanujan's cosine sum, and its sine analogue
in both direct (trigonometric) and closed (multiplicative) form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cache
from math import gcd

#: |x - round(x)| above this means a value that must be an integer is not.
INTEGRALITY_TOL = 1e-6


class NotIntegralError(ValueError):
    """A quantity that must be an integer failed its integrality check."""


@dataclass(frozen=True)
class ResidueClass:
    """A strictly increasing tuple of residues in [1, modulus - 1]."""

    modulus: int
    elements: tuple[int, ...]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, k: int) -> bool:
        return k in self.elements

    def as_set(self) -> frozenset[int]:
        return frozenset(self.elements)


def two_adic_valuation(n: int) -> int:
    """Exponent of the highest power of 2 dividing n; 0 for odd n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return (n & -n).bit_length() - 1


def divisors(n: int) -> list[int]:
    """All positive divisors of n in increasing order."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    small: list[int] = []
    large: list[int] = []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def divisor_count(n: int) -> int:
    """Number of positive divisors of n."""
    return len(divisors(n))


@cache
def _factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization as ((p, exponent), ...) by trial division."""
    out: list[tuple[int, int]] = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@cache
def euler_phi(n: int) -> int:
    """Count of integers in [1, n] coprime to n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    result = n
    for p, _ in _factorize(n):
        result -= result // p
    return result


@cache
def mobius(n: int) -> int:
    """Moebius function: 0 on squareful n, else (-1)**(number of prime factors)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    fac = _factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def gn_set(n: int, d: int) -> ResidueClass:
    """Residues k in [1, n-1] with gcd(k, n) = d."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if d < 1 or n % d:
        raise ValueError(f"{d} does not divide {n}")
    return ResidueClass(n, tuple(k for k in range(1, n) if gcd(k, n) == d))


def gnr_set(n: int, d: int, r: int) -> ResidueClass:
    """The orientation class d * {k : k = r (mod 4), gcd(k, n/d) = 1}.

    The two classes r = 1 and r = 3 partition gn_set(n, d) whenever n/d is
    a multiple of 4; each is the negation of the other mod n.
    """
    if r not in (1, 3):
        raise ValueError(f"r must be 1 or 3, got {r}")
    if n % 4:
        raise ValueError(f"n must be a multiple of 4, got {n}")
    if d < 1 or (n // 4) % d:
        raise ValueError(f"{d} does not divide {n}/4")
    nd = n // d
    return ResidueClass(
        n, tuple(d * k for k in range(1, nd + 1) if k % 4 == r and gcd(k, nd) == 1)
    )


@cache
def ramanujan_sum(n: int, q: int) -> int:
    """Sum of cos(2*pi*a*q/n) over the units a mod n, as an exact integer.

    Evaluated multiplicatively as mobius(n/g) * phi(n) / phi(n/g) with
    g = gcd(n, q); the floating cosine sum serves only as a test oracle.
    """
    if n < 1 or q < 1:
        raise ValueError(f"n and q must be positive, got ({n}, {q})")
    f = n // gcd(n, q)
    mu = mobius(f)
    return 0 if mu == 0 else mu * (euler_phi(n) // euler_phi(f))


def sine_sum_direct(n: int, q: int, sign: int = 1) -> int:
    """-2 * sum of sin(2*pi*a*q/n) over an orientation class of n.

    sign = +1 sums over gnr_set(n, 1, 1), sign = -1 over gnr_set(n, 1, 3);
    the two values are negatives of each other. The sum is provably an
    integer for these classes, so a residue beyond INTEGRALITY_TOL is
    reported as a bug rather than rounded away.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if q < 1:
        raise ValueError(f"q must be positive, got {q}")
    cls = gnr_set(n, 1, 1 if sign == 1 else 3)
    # reduce a*q mod n before taking sin: keeps the argument in [0, 2*pi)
    total = -sum(2.0 * math.sin(2.0 * math.pi * ((a * q) % n) / n) for a in cls)
    nearest = round(total)
    if abs(total - nearest) > INTEGRALITY_TOL:
        raise NotIntegralError(
            f"sine sum for (n={n}, q={q}) evaluated to non-integer {total}"
        )
    return nearest


def sine_sum_closed(n: int, q: int) -> int:
    """Closed form of sine_sum_direct(n, q, +1) in exact integer arithmetic.

    Write n = 2**t * m with m odd and t >= 2. The sum vanishes unless
    q = 2**(t-2) * q' for an odd integer q', in which case it equals

        (-1)**((m-1)//2) * (-1)**((q'+1)//2) * 2**(t-1) * ramanujan_sum(m, q')
    """
    if q < 1:
        raise ValueError(f"q must be positive, got {q}")
    if n < 4 or n % 4:
        raise ValueError(f"n must be a multiple of 4, got {n}")
    t = two_adic_valuation(n)
    m = n >> t
    step = 1 << (t - 2)
    if q % step:
        return 0
    qp = q // step
    if qp % 2 == 0:
        return 0
    negative = ((m - 1) // 2 + (qp + 1) // 2) % 2
    magnitude = (1 << (t - 1)) * ramanujan_sum(m, qp)
    return -magnitude if negative else magnitude
