"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored as coefficient vectors in the power basis
1, zeta, ..., zeta^(phi(n)-1), reduced modulo the n-th cyclotomic
polynomial.  Equality is coefficient-wise on this canonical form, so it is
decidable and exact.  Division rationalizes by the product of all
nontrivial Galois conjugates of the denominator (whose product with the
denominator is the rational field norm).

Conductors stay small here (3, 7, 21), so the dense representation is the
simple and fast choice.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, constant term first.

    Computed as (x^n - 1) divided by the product of Phi_d over proper
    divisors d of n; all divisions are exact over Z.
    """
    if n < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _exact_polydiv(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _exact_polydiv(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[len(den) - 1 + i]
        q, r = divmod(c, den[-1])
        if r:
            raise ArithmeticError("non-exact polynomial division")
        out[i] = q
        for j, dc in enumerate(den):
            num[i + j] -= q * dc
    if any(num):
        raise ArithmeticError("nonzero remainder in cyclotomic division")
    return out


def _reduce(coeffs, n: int) -> tuple[Fraction, ...]:
    """Reduce a coefficient list (any length) modulo Phi_n."""
    ph = cyclotomic_polynomial(n)
    d = len(ph) - 1
    cs = [Fraction(c) for c in coeffs]
    for i in range(len(cs) - 1, d - 1, -1):
        c = cs[i]
        if c == 0:
            continue
        cs[i] = Fraction(0)
        for j in range(d):
            cs[i - d + j] -= c * ph[j]
    cs += [Fraction(0)] * (d - len(cs))
    return tuple(cs[:d])


class Cyclotomic:
    """An element of Q(zeta_n) in reduced power-basis form."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs):
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "coeffs", _reduce(coeffs, int(n)))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Cyclotomic":
        return cls(n, ())

    @classmethod
    def one(cls, n: int) -> "Cyclotomic":
        return cls(n, (1,))

    @classmethod
    def rational(cls, n: int, value) -> "Cyclotomic":
        return cls(n, (Fraction(value),))

    # -- predicates and coercion -------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def is_integer_value(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    def lift_to(self, m: int) -> "Cyclotomic":
        """Image under Q(zeta_n) -> Q(zeta_m), zeta_n = zeta_m^(m/n); needs n | m."""
        if m % self.n:
            raise ValueError(f"{self.n} does not divide {m}")
        step = m // self.n
        out = [Fraction(0)] * m
        for i, c in enumerate(self.coeffs):
            out[i * step] += c
        return Cyclotomic(m, out)

    def _coerce(self, other) -> "Cyclotomic | None":
        if isinstance(other, Cyclotomic):
            if other.n != self.n:
                raise ValueError(
                    f"conductor mismatch: {self.n} vs {other.n}; lift explicitly"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.rational(self.n, other)
        return None

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.n, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.n, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = [Fraction(0)] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    out[i + j] += a * b
        return Cyclotomic(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        acc = Cyclotomic.one(self.n)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def galois(self, k: int) -> "Cyclotomic":
        """Apply the automorphism zeta -> zeta^k; k must be coprime to n."""
        if gcd(k, self.n) != 1:
            raise ValueError(f"{k} is not coprime to {self.n}")
        out = [Fraction(0)] * self.n
        for i, c in enumerate(self.coeffs):
            out[(i * k) % self.n] += c
        return Cyclotomic(self.n, out)

    def conjugate(self) -> "Cyclotomic":
        return self.galois(self.n - 1)

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in cyclotomic field")
        prod = Cyclotomic.one(self.n)
        for k in range(2, self.n):
            if gcd(k, self.n) == 1:
                prod = prod * self.galois(k)
        norm = (self * prod).as_rational()
        return Cyclotomic(self.n, [c / norm for c in prod.coeffs])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    # -- comparison / display ------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            power = f"z{self.n}" if i == 1 else f"z{self.n}^{i}"
            if not terms:
                sign = "-" if c < 0 else ""
                terms.append(f"{sign}{mag}{power}")
            else:
                sign = "- " if c < 0 else "+ "
                terms.append(f"{sign}{mag}{power}")
        return " ".join(terms) if terms else "0"

    def __repr__(self):
        return f"Cyclotomic({self.n}, {self})"


def root_of_unity(n: int, k: int) -> Cyclotomic:
    """zeta_n^k in reduced power-basis form (k taken mod n)."""
    k %= n
    return Cyclotomic(n, [0] * k + [1])


def exact_divide(numerator: Cyclotomic, denominator: Cyclotomic) -> Cyclotomic:
    return numerator / denominator
