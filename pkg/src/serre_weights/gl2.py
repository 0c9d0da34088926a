"""Serre weights and the mod p reductions of tame inertial types.

sigma_{m,n} = det^m (x) Sym^n F^2 with 0 <= m < p - 1 and 0 <= n <= p - 1.
Types are recorded by Teichmuller exponents.  Principal series and scalar
types are sums of two powers of omega~; a cuspidal type is chi + chi^p for a
character chi of F_{p^2}^x with chi != chi^p.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .characters import FieldParams


@dataclass(frozen=True, order=True)
class SerreWeight:
    m: int
    n: int

    def dim(self) -> int:
        return self.n + 1

    def as_list(self) -> list[int]:
        return [self.m, self.n]

    def __str__(self):
        return f"sigma_{{{self.m},{self.n}}}"


def weight(m: int, n: int, params: FieldParams) -> SerreWeight:
    """Build sigma_{m,n}, reducing m modulo p - 1 and checking n."""
    if not 0 <= n <= params.p - 1:
        raise ValueError(f"n = {n} outside [0, {params.p - 1}]")
    return SerreWeight(m % params.q1, n)


def all_weights(params: FieldParams) -> list[SerreWeight]:
    return [SerreWeight(m, n) for m in range(params.q1) for n in range(params.p)]


def check_weight(w: SerreWeight, params: FieldParams) -> None:
    if not (0 <= w.m < params.q1 and 0 <= w.n <= params.p - 1):
        raise ValueError(f"{w} is not a weight for p = {params.p}")


@dataclass(frozen=True)
class PrincipalSeries:
    m1: int
    m2: int


@dataclass(frozen=True)
class Scalar:
    m: int


@dataclass(frozen=True)
class Cuspidal:
    """chi + chi^p, stored as the smaller of the two conjugate exponents."""

    exponent: int

    @classmethod
    def from_exponent(cls, E: int, params: FieldParams) -> Cuspidal:
        E %= params.q2
        if E % (params.p + 1) == 0:
            raise ValueError(f"exponent {E} is Frobenius-fixed: chi = chi^p")
        return cls(min(E, params.p * E % params.q2))

    @classmethod
    def from_ij(cls, i: int, j: int, params: FieldParams) -> Cuspidal:
        if not 1 <= i <= params.p:
            raise ValueError(f"cuspidal parameter i = {i} outside [1, {params.p}]")
        return cls.from_exponent(i + (params.p + 1) * j, params)

    def ij(self, params: FieldParams) -> tuple[int, int]:
        """Coordinates (i, j) with exponent = i + (p + 1) j, 1 <= i <= p."""
        p = params.p
        i = self.exponent % (p + 1)
        j = (self.exponent - i) // (p + 1) % params.q1
        return i, j


InertialType = Union[PrincipalSeries, Scalar, Cuspidal]


def principal_series(m1: int, m2: int, params: FieldParams) -> PrincipalSeries:
    m1, m2 = m1 % params.q1, m2 % params.q1
    if m1 == m2:
        raise ValueError("principal series needs distinct characters")
    return PrincipalSeries(m1, m2)


def brace(m: int, params: FieldParams) -> int:
    """The representative of m in the open interval (0, p - 1)."""
    r = m % params.q1
    if r == 0:
        raise ValueError("brace is undefined for m = 0 mod p - 1")
    return r


def type_dimension(t: InertialType, params: FieldParams) -> int:
    """Dimension of the characteristic zero GL_2(F_p)-representation."""
    if isinstance(t, Scalar):
        return 1
    if isinstance(t, PrincipalSeries):
        return params.p + 1
    if isinstance(t, Cuspidal):
        return params.p - 1
    raise TypeError(f"not an inertial type: {t!r}")


def jh_factors(t: InertialType, params: FieldParams) -> tuple[SerreWeight, ...]:
    """Jordan-Holder factors of the reduction of the type's representation."""
    p, q1 = params.p, params.q1
    if isinstance(t, Scalar):
        return (SerreWeight(t.m % q1, 0),)
    if isinstance(t, PrincipalSeries):
        m1, m2 = t.m1 % q1, t.m2 % q1
        if m1 == m2:
            raise ValueError("principal series needs distinct characters")
        return tuple(sorted([
            SerreWeight(m2, brace(m1 - m2, params)),
            SerreWeight(m1, brace(m2 - m1, params)),
        ]))
    if isinstance(t, Cuspidal):
        i, j = t.ij(params)
        if i in (1, p):
            # both degenerate ends collapse to the same single factor
            return (SerreWeight((1 + j) % q1, p - 2),)
        return tuple(sorted([
            SerreWeight((1 + j) % q1, i - 2),
            SerreWeight((i + j) % q1, p - 1 - i),
        ]))
    raise TypeError(f"not an inertial type: {t!r}")


def companion(w: SerreWeight, params: FieldParams) -> SerreWeight:
    """sigma_{m,n} -> sigma_{m+n, p-1-n}."""
    return SerreWeight((w.m + w.n) % params.q1, params.p - 1 - w.n)


def induction_ses(n: int, params: FieldParams) -> tuple[SerreWeight, SerreWeight]:
    """(sub, quotient) of 0 -> sigma_{0,n} -> Ind(delta^n) -> sigma_{n,p-1-n} -> 0."""
    if not 0 <= n <= params.p - 1:
        raise ValueError(f"n = {n} outside [0, {params.p - 1}]")
    return SerreWeight(0, n), SerreWeight(n % params.q1, params.p - 1 - n)


def bt_type_for_pair(m: int, n: int, params: FieldParams) -> InertialType:
    """The type omega~^{m+n} + omega~^m attached to sigma_{m,n}.

    n = 0 and n = p - 1 both give the scalar type omega~^m + omega~^m.
    """
    if not 0 <= n <= params.p - 1:
        raise ValueError(f"n = {n} outside [0, {params.p - 1}]")
    q1 = params.q1
    if n % q1 == 0:
        return Scalar(m % q1)
    return PrincipalSeries((m + n) % q1, m % q1)


def all_types(params: FieldParams) -> list[InertialType]:
    """All types, listing principal series in both orderings."""
    q1 = params.q1
    out: list[InertialType] = [Scalar(m) for m in range(q1)]
    out += [PrincipalSeries(a, b) for a in range(q1) for b in range(q1) if a != b]
    seen = set()
    for E in range(params.q2):
        if E % (params.p + 1):
            t = Cuspidal.from_exponent(E, params)
            if t not in seen:
                seen.add(t)
                out.append(t)
    return out
