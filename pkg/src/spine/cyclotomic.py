"""Exact arithmetic in cyclotomic fields.

Character values e^{2 pi i q} with rational q, and rational combinations of
them, are elements of some Q(zeta_N).  A :class:`Cyclotomic` stores such a
number in the power basis 1, zeta_N, ..., zeta_N^{phi(N)-1}, reduced modulo
the N-th cyclotomic polynomial, with integer numerators over one common
denominator.  At a fixed N that representation is unique, so equality is a
tuple comparison after lifting both operands to a common order.

:meth:`Cyclotomic.canonical` additionally descends to the smallest field
Q(zeta_d) containing the value, which gives an order-independent normal form
used for hashing and serialization.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Union

Rational = Union[int, Fraction]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    return tuple(d for d in range(1, n + 1) if n % d == 0)


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    out = n
    for p in prime_factors(n):
        out -= out // p
    return out


def _divide_monic(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            quot[k - dd] = c
            for j, dj in enumerate(den):
                num[k - dd + j] -= c * dj
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        poly = _divide_monic(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _reduce(dense: list[int], n: int) -> list[int]:
    """Fold exponents mod n, then reduce mod Phi_n."""
    res = [0] * n
    for k, c in enumerate(dense):
        if c:
            res[k % n] += c
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    for k in range(n - 1, deg - 1, -1):
        c = res[k]
        if c:
            res[k] = 0
            base = k - deg
            for j in range(deg):
                if phi[j]:
                    res[base + j] -= c * phi[j]
    return res[:deg]


def _kernel(n: int, d: int) -> list[int]:
    return [a for a in range(2, n) if gcd(a, n) == 1 and (a - 1) % d == 0]


@lru_cache(maxsize=None)
def _subfield_solver(n: int, d: int):
    """Pivot columns and inverse block expressing Q(zeta_d) inside Q(zeta_n)."""
    step = n // d
    rows = []
    for j in range(totient(d)):
        dense = [0] * n
        dense[j * step] = 1
        rows.append([Fraction(c) for c in _reduce(dense, n)])
    m = len(rows)
    width = len(rows[0])
    # Gauss-Jordan on [B^T | I] columnwise: find m independent columns of B.
    pivots: list[int] = []
    basis: list[list[Fraction]] = []
    for col in range(width):
        v = [rows[i][col] for i in range(m)]
        trial = basis + [v]
        if _rank(trial) == len(trial):
            basis = trial
            pivots.append(col)
            if len(pivots) == m:
                break
    square = [[rows[i][c] for c in pivots] for i in range(m)]
    return tuple(pivots), _inverse(square)


def _rank(vectors: list[list[Fraction]]) -> int:
    mat = [list(v) for v in vectors]
    rank = 0
    cols = len(mat[0]) if mat else 0
    for col in range(cols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for r in range(rank + 1, len(mat)):
            f = mat[r][col] / mat[rank][col]
            if f:
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def _inverse(square: list[list[Fraction]]) -> list[list[Fraction]]:
    m = len(square)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(m)] for i, row in enumerate(square)]
    for col in range(m):
        piv = next(r for r in range(col, m) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(m):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[m:] for row in aug]


class Cyclotomic:
    """An exact element of a cyclotomic field.

    Immutable.  Build values with :meth:`rational`, :meth:`root_of_unity`,
    :meth:`gaussian` or :meth:`from_phases`; combine them with the usual
    arithmetic operators.
    """

    __slots__ = ("order", "nums", "den", "_canon")

    def __init__(self, order: int, nums: Iterable[int], den: int = 1):
        nums = tuple(nums)
        if len(nums) != totient(order):
            raise ValueError("coefficient vector does not match the field degree")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den, nums = -den, tuple(-c for c in nums)
        g = den
        for c in nums:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            den //= g
            nums = tuple(c // g for c in nums)
        if not any(nums):
            den = 1
        self.order = order
        self.nums = nums
        self.den = den
        self._canon = None

    # construction -------------------------------------------------------

    @classmethod
    def rational(cls, q: Rational) -> "Cyclotomic":
        q = as_fraction(q)
        return cls(1, (q.numerator,), q.denominator)

    @classmethod
    def zero(cls) -> "Cyclotomic":
        return cls(1, (0,), 1)

    @classmethod
    def one(cls) -> "Cyclotomic":
        return cls(1, (1,), 1)

    @classmethod
    def root_of_unity(cls, phase: Rational) -> "Cyclotomic":
        """e^{2 pi i phase}."""
        return cls.from_phases([(phase, 1)])

    @classmethod
    def gaussian(cls, re: Rational, im: Rational) -> "Cyclotomic":
        return cls.from_phases([(0, re), (Fraction(1, 4), im)])

    @classmethod
    def from_phases(cls, terms: Iterable[tuple]) -> "Cyclotomic":
        """Sum of ``weight * e^{2 pi i phase}`` over ``(phase, weight)`` pairs.

        Weights may be rationals or Cyclotomic values.  The whole sum is
        reduced once, at the least common order.
        """
        items = []
        n = 1
        den = 1
        for phase, weight in terms:
            phase = as_fraction(phase) % 1
            if not isinstance(weight, Cyclotomic):
                weight = cls.rational(weight)
            if weight.is_zero():
                continue
            items.append((phase, weight))
            n = lcm(n, lcm(phase.denominator, weight.order))
            den = lcm(den, weight.den)
        if not items:
            return cls.zero()
        dense = [0] * n
        for phase, weight in items:
            shift = phase.numerator * (n // phase.denominator)
            step = n // weight.order
            scale = den // weight.den
            for k, c in enumerate(weight.nums):
                if c:
                    dense[(shift + k * step) % n] += c * scale
        return cls(n, _reduce(dense, n), den)

    # representation helpers ---------------------------------------------

    def _at(self, n: int) -> tuple[int, ...]:
        if n == self.order:
            return self.nums
        step = n // self.order
        dense = [0] * n
        for k, c in enumerate(self.nums):
            if c:
                dense[k * step] = c
        return tuple(_reduce(dense, n))

    def _coerce(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Cyclotomic.rational(other)
        return NotImplemented

    # predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    def gaussian_parts(self) -> tuple[Fraction, Fraction] | None:
        """(re, im) when the value lies in Q(i), else None."""
        c = self.canonical()
        if c.order == 1:
            return Fraction(c.nums[0], c.den), Fraction(0)
        if c.order == 4:
            return Fraction(c.nums[0], c.den), Fraction(c.nums[1], c.den)
        return None

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = lcm(self.order, other.order)
        den = lcm(self.den, other.den)
        sa, sb = den // self.den, den // other.den
        a, b = self._at(n), other._at(n)
        return Cyclotomic(n, [x * sa + y * sb for x, y in zip(a, b)], den)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, [-c for c in self.nums], self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.order == 1:
            return Cyclotomic(self.order, [c * other.nums[0] for c in self.nums], self.den * other.den)
        if self.order == 1:
            return Cyclotomic(other.order, [c * self.nums[0] for c in other.nums], self.den * other.den)
        n = lcm(self.order, other.order)
        a, b = self._at(n), other._at(n)
        dense = [0] * (len(a) + len(b))
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        dense[i + j] += x * y
        return Cyclotomic(n, _reduce(dense, n), self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Cyclotomic):
            if not other.is_rational():
                return NotImplemented
            other = other.rational_value()
        q = as_fraction(other)
        if q == 0:
            raise ZeroDivisionError("division by zero")
        return Cyclotomic(self.order, [c * q.denominator for c in self.nums], self.den * q.numerator)

    def conjugate(self) -> "Cyclotomic":
        n = self.order
        dense = [0] * n
        for k, c in enumerate(self.nums):
            if c:
                dense[(-k) % n] += c
        return Cyclotomic(n, _reduce(dense, n), self.den)

    def abs_squared(self) -> "Cyclotomic":
        return self * self.conjugate()

    def galois(self, a: int) -> "Cyclotomic":
        """Image under zeta_N -> zeta_N^a (a coprime to the order)."""
        n = self.order
        if gcd(a, n) != 1:
            raise ValueError("automorphism exponent must be a unit")
        dense = [0] * n
        for k, c in enumerate(self.nums):
            if c:
                dense[(a * k) % n] += c
        return Cyclotomic(n, _reduce(dense, n), self.den)

    # comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = lcm(self.order, other.order)
        a, b = self._at(n), other._at(n)
        return all(x * other.den == y * self.den for x, y in zip(a, b))

    def __hash__(self) -> int:
        c = self.canonical()
        if c.order == 1:
            return hash(Fraction(c.nums[0], c.den))
        return hash((c.order, c.nums, c.den))

    # normal form ----------------------------------------------------------

    def canonical(self) -> "Cyclotomic":
        """The same value written over its smallest cyclotomic field."""
        if self._canon is not None:
            return self._canon
        cur = self
        changed = True
        while changed and cur.order > 1:
            changed = False
            n = cur.order
            for p in prime_factors(n):
                d = n // p
                if d % 4 == 2:
                    d //= 2
                if all(cur.galois(a).nums == cur.nums for a in _kernel(n, d)):
                    cur = cur._descend(d)
                    changed = True
                    break
        self._canon = cur
        return cur

    def _descend(self, d: int) -> "Cyclotomic":
        pivots, inv = _subfield_solver(self.order, d)
        x = [Fraction(self.nums[c]) for c in pivots]
        coeffs = [sum(x[i] * inv[i][j] for i in range(len(x))) for j in range(len(inv[0]))]
        den = 1
        for c in coeffs:
            den = lcm(den, c.denominator)
        return Cyclotomic(d, [int(c * den) for c in coeffs], den * self.den)

    def phase_terms(self) -> list[tuple[Fraction, Fraction]]:
        """Canonical ``(phase, weight)`` list: weights on the reduced power basis."""
        c = self.canonical()
        return [
            (Fraction(k, c.order), Fraction(v, c.den))
            for k, v in enumerate(c.nums)
            if v
        ]

    # output ---------------------------------------------------------------

    def to_complex(self) -> complex:
        n = self.order
        total = 0j
        for k, c in enumerate(self.nums):
            if c:
                total += c * cmath.exp(2j * cmath.pi * k / n)
        return total / self.den

    def __complex__(self) -> complex:
        return self.to_complex()

    def __str__(self) -> str:
        parts = self.gaussian_parts()
        if parts is not None:
            re, im = parts
            if im == 0:
                return str(re)
            if re == 0:
                return f"{_imag(im)}"
            sign = "-" if im < 0 else "+"
            return f"{re}{sign}{_imag(abs(im))}"
        out = []
        for phase, w in self.phase_terms():
            term = f"e({phase})" if phase else ""
            if term and abs(w) == 1:
                body = term
            elif term:
                body = f"{abs(w)}*{term}"
            else:
                body = str(abs(w))
            if not out:
                out.append(("-" if w < 0 else "") + body)
            else:
                out.append((" - " if w < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"Cyclotomic({self})"


def _imag(q: Fraction) -> str:
    if q == 1:
        return "i"
    if q == -1:
        return "-i"
    return f"{q}i"
