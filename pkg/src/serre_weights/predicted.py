"""The predicted weight set W?(rho) of a semisimple tame inertial datum."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Union

from .characters import (
    FieldParams,
    Niveau1Char,
    Niveau2Char,
    restrict_to_niveau1,
)
from .gl2 import SerreWeight


@dataclass(frozen=True)
class ReducibleSplit:
    """omega^a + omega^b on inertia (an unordered pair)."""

    a: int
    b: int


@dataclass(frozen=True)
class Irreducible:
    """omega_{sigma_1}^c + omega_{sigma_2}^c on inertia, with c != pc."""

    c: int


ResidualInertial = Union[ReducibleSplit, Irreducible]


def normalize(rho: ResidualInertial, params: FieldParams) -> ResidualInertial:
    """Reduce exponents and pick a canonical representative.

    Raises ValueError for Frobenius-fixed irreducible data.
    """
    if isinstance(rho, ReducibleSplit):
        a, b = sorted((rho.a % params.q1, rho.b % params.q1))
        return ReducibleSplit(a, b)
    if isinstance(rho, Irreducible):
        c = rho.c % params.q2
        if Niveau2Char(c, params.p).is_frobenius_fixed:
            raise ValueError(f"Frobenius-fixed exponent {c}: not irreducible")
        return Irreducible(min(c, params.p * c % params.q2))
    raise TypeError(f"not an inertial datum: {rho!r}")


def twist(rho: ResidualInertial, t: int, params: FieldParams) -> ResidualInertial:
    """rho (x) omega^t."""
    if isinstance(rho, ReducibleSplit):
        return normalize(ReducibleSplit(rho.a + t, rho.b + t), params)
    return normalize(Irreducible(rho.c + t * (params.p + 1)), params)


def inertial_classes(params: FieldParams) -> list[ResidualInertial]:
    """Representatives of all semisimple tame data up to twist by omega.

    Reducible data {a, b} are classified by a - b up to sign, irreducible
    data by c mod p + 1 up to sign (conjugation acts as c -> -c there).
    """
    p = params.p
    out: list[ResidualInertial] = []
    out += [ReducibleSplit(0, d) for d in range((p - 1) // 2 + 1)]
    out += [Irreducible(c) for c in range(1, (p + 1) // 2 + 1)]
    return out


@dataclass
class WeightSet:
    """A set of weights, each with the x values in [1, e] witnessing it."""

    witnesses: dict[SerreWeight, tuple[int, ...]] = field(default_factory=dict)

    @property
    def weights(self) -> frozenset[SerreWeight]:
        return frozenset(self.witnesses)

    def __contains__(self, w) -> bool:
        return w in self.witnesses

    def __iter__(self) -> Iterator[SerreWeight]:
        return iter(sorted(self.witnesses))

    def __len__(self) -> int:
        return len(self.witnesses)

    def __eq__(self, other) -> bool:
        if isinstance(other, WeightSet):
            return self.weights == other.weights
        return self.weights == frozenset(other)

    def sorted(self) -> list[SerreWeight]:
        return sorted(self.witnesses)

    def to_json(self) -> list:
        return [{"weight": w.as_list(), "witnesses": list(self.witnesses[w])}
                for w in self.sorted()]


def _add(found: dict[SerreWeight, set[int]], m: int, n: int, x: int) -> None:
    found.setdefault(SerreWeight(m, n), set()).add(x)


def w_question(rho: ResidualInertial, params: FieldParams) -> WeightSet:
    """Compute W?(rho) by solving the defining congruences for (m, n).

    Reducible {a, b}: for each x and each ordering, m = b - e + x and
    n = a - m - x (mod p - 1), where n = 0 also yields n = p - 1.
    Irreducible c: for each n and x, (p + 1) m must equal
    T - n - x - p (e - x) mod p^2 - 1 for T in {c, pc}.
    The result is cached; treat it as read-only.
    """
    return _w_question(normalize(rho, params), params)


@lru_cache(maxsize=4096)
def _w_question(rho: ResidualInertial, params: FieldParams) -> WeightSet:
    p, e, q1, q2 = params.p, params.e, params.q1, params.q2
    found: dict[SerreWeight, set[int]] = {}
    if isinstance(rho, ReducibleSplit):
        for x in range(1, e + 1):
            for first, second in ((rho.a, rho.b), (rho.b, rho.a)):
                m = (second - e + x) % q1
                n = (first - m - x) % q1
                _add(found, m, n, x)
                if n == 0:
                    _add(found, m, p - 1, x)
    else:
        targets = {rho.c % q2, p * rho.c % q2}
        for x in range(1, e + 1):
            for n in range(p):
                for T in targets:
                    D = (T - n - x - p * (e - x)) % q2
                    if D % (p + 1) == 0:
                        _add(found, D // (p + 1) % q1, n, x)
    return WeightSet({w: tuple(sorted(xs)) for w, xs in sorted(found.items())})


def det_exponent(w: SerreWeight, params: FieldParams) -> Niveau1Char:
    """Determinant on inertia forced by modularity of weight w: omega^{2m+n+e}."""
    return Niveau1Char(2 * w.m + w.n + params.e, params.p)


def det_of_inertial(rho: ResidualInertial, params: FieldParams) -> Niveau1Char:
    rho = normalize(rho, params)
    if isinstance(rho, ReducibleSplit):
        return Niveau1Char(rho.a + rho.b, params.p)
    chi = restrict_to_niveau1(Niveau2Char(rho.c * (1 + params.p), params.p), params)
    assert chi is not None
    return chi

