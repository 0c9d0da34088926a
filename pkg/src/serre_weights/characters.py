"""Tame characters of inertia, recorded by their exponents.

A niveau 1 character is a power of the fundamental character omega, of
order p - 1.  A niveau 2 character is a power of omega_{sigma_1}, of order
p^2 - 1, with the convention omega_{sigma_2} = omega_{sigma_1}^p.  Only
restrictions to inertia are modelled, so no unramified data is stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldParams:
    """The local data (p, e) of a totally ramified extension of Q_p."""

    p: int
    e: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p) or self.p < 3:
            raise ValueError(f"p must be an odd prime, got {self.p!r}")
        if not isinstance(self.e, int) or self.e < 1:
            raise ValueError(f"e must be a positive integer, got {self.e!r}")

    @property
    def q1(self) -> int:
        return self.p - 1

    @property
    def q2(self) -> int:
        return self.p * self.p - 1

    @property
    def e1(self) -> int:
        return (self.p - 1) * self.e

    @property
    def e2(self) -> int:
        return (self.p * self.p - 1) * self.e


@dataclass(frozen=True, order=True)
class Niveau1Char:
    """omega^exp, with exp reduced modulo p - 1."""

    exp: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "exp", self.exp % (self.p - 1))

    def __mul__(self, other: Niveau1Char) -> Niveau1Char:
        if other.p != self.p:
            raise ValueError("characters for different primes")
        return Niveau1Char(self.exp + other.exp, self.p)

    def __pow__(self, k: int) -> Niveau1Char:
        return Niveau1Char(self.exp * k, self.p)

    def to_niveau2(self) -> Niveau2Char:
        return Niveau2Char(self.exp * (self.p + 1), self.p)

    def __str__(self):
        return f"omega^{self.exp}"


@dataclass(frozen=True, order=True)
class Niveau2Char:
    """omega_{sigma_1}^exp, with exp reduced modulo p^2 - 1."""

    exp: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "exp", self.exp % (self.p * self.p - 1))

    def __mul__(self, other: Niveau2Char) -> Niveau2Char:
        if other.p != self.p:
            raise ValueError("characters for different primes")
        return Niveau2Char(self.exp + other.exp, self.p)

    def __pow__(self, k: int) -> Niveau2Char:
        return Niveau2Char(self.exp * k, self.p)

    @cached_property
    def is_frobenius_fixed(self) -> bool:
        return (self.p * self.exp - self.exp) % (self.p * self.p - 1) == 0

    def __str__(self):
        return f"omega_s1^{self.exp}"


def n2_from_pair(a: int, b: int, params: FieldParams) -> Niveau2Char:
    """omega_{sigma_1}^a * omega_{sigma_2}^b as a single exponent a + p*b."""
    return Niveau2Char(a + params.p * b, params.p)


def restrict_to_niveau1(c: Niveau2Char, params: FieldParams) -> Niveau1Char | None:
    """Return t with c = omega^t, or None if c is genuinely of niveau 2.

    Uses omega = omega_2^{p+1}; since p + 1 divides p^2 - 1, c is a power
    of omega exactly when p + 1 divides its exponent.
    """
    p = params.p
    exp = c.exp % params.q2
    if exp % (p + 1):
        return None
    return Niveau1Char(exp // (p + 1), p)


def frobenius_conjugate(c: Niveau2Char, params: FieldParams) -> Niveau2Char:
    return Niveau2Char(params.p * c.exp, params.p)


def cyclotomic_exponent(params: FieldParams) -> Niveau1Char:
    """The mod p cyclotomic character on inertia, omega^e."""
    return Niveau1Char(params.e, params.p)
