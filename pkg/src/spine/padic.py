"""p-adic valuations and norms of rationals."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import as_fraction
from .errors import DomainError


def is_prime(p: int) -> bool:
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise DomainError(f"{p} is not a prime")


def _multiplicity(p: int, n: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def nu_p(p: int, r) -> int | float:
    """Exponent of p in r; ``math.inf`` for r = 0."""
    _require_prime(p)
    r = as_fraction(r)
    if r == 0:
        return math.inf
    return _multiplicity(p, abs(r.numerator)) - _multiplicity(p, r.denominator)


def abs_p(p: int, r) -> Fraction:
    """|r|_p = p^(-nu_p(r)), with |0|_p = 0."""
    v = nu_p(p, r)
    if v == math.inf:
        return Fraction(0)
    return Fraction(1, p**v) if v >= 0 else Fraction(p ** (-v))


@dataclass(frozen=True)
class PAdicWitness:
    p: int
    r: Fraction
    valuation: int
    norm: Fraction

    @property
    def unit_part(self) -> Fraction:
        """r / p^valuation; numerator and denominator are prime to p."""
        return self.r / Fraction(self.p) ** self.valuation


def padic_witness(p: int, r) -> PAdicWitness:
    r = as_fraction(r)
    if r == 0:
        raise DomainError("the valuation of 0 is infinite; no witness")
    return PAdicWitness(p, r, nu_p(p, r), abs_p(p, r))


def q_distinctness_witness(p: int, q: int, n_max: int) -> list[tuple[int, Fraction, Fraction]]:
    """Rows (n, |r_n|_p, |r_n|_q) for r_n = p^n / q^n, 1 <= n <= n_max.

    The p-adic column tends to 0 while the q-adic column is unbounded, so the
    sequence separates the p-adic and q-adic topologies on Q.
    """
    _require_prime(p)
    _require_prime(q)
    if p == q:
        raise DomainError("the witness needs two distinct primes")
    if n_max < 1:
        raise DomainError("n_max must be at least 1")
    rows = []
    for n in range(1, n_max + 1):
        r = Fraction(p**n, q**n)
        rows.append((n, abs_p(p, r), abs_p(q, r)))
    return rows
