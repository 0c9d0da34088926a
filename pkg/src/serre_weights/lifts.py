"""Local potentially Barsotti-Tate lifts of tame type, by construction.

A lift is recorded only through data visible on inertia: for reducible
rho the two crystalline characters (Hodge-Tate multiset and tame twist),
for irreducible rho the index j of the module M_j.  Unramified twists
are never modelled.  The catalogue lists known constructions; an empty
non-ordinary list does not mean no non-ordinary lift exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .breuil import reduction_of_mj
from .characters import FieldParams, Niveau1Char
from .gl2 import SerreWeight
from .predicted import Irreducible, ReducibleSplit, ResidualInertial, normalize, w_question


class LiftError(ValueError):
    pass


@dataclass(frozen=True)
class CrysCharDescriptor:
    """epsilon_A twisted by omega~^twist; A is a sorted tuple of 0/1 weights."""

    A: tuple[int, ...]
    twist: int

    def ones(self) -> int:
        return sum(self.A)

    def to_json(self) -> dict:
        return {"A": list(self.A), "twist": self.twist}


def crys_char(ones: int, e: int, twist: int, params: FieldParams) -> CrysCharDescriptor:
    if not 0 <= ones <= e:
        raise LiftError(f"{ones} Hodge-Tate weights equal to 1 out of {e}")
    return CrysCharDescriptor(tuple([0] * (e - ones) + [1] * ones), twist % params.q1)


def reduce_crystalline_char(d: CrysCharDescriptor, params: FieldParams) -> Niveau1Char:
    if len(d.A) != params.e or any(a not in (0, 1) for a in d.A):
        raise LiftError(f"invalid Hodge-Tate multiset {d.A} for e = {params.e}")
    return Niveau1Char(sum(d.A) + d.twist, params.p)


@dataclass(frozen=True)
class Niveau1:
    A: CrysCharDescriptor
    B: CrysCharDescriptor


@dataclass(frozen=True)
class Niveau2:
    j: int


@dataclass(frozen=True)
class LiftDescriptor:
    type_pair: tuple[int, int]
    ordinary: bool
    construction: Union[Niveau1, Niveau2]
    witness: int
    name: str

    def to_json(self) -> dict:
        c = self.construction
        if isinstance(c, Niveau1):
            cons = {"kind": "niveau1", "A": c.A.to_json(), "B": c.B.to_json()}
        else:
            cons = {"kind": "niveau2", "j": c.j}
        return {
            "type": list(self.type_pair),
            "ordinary": self.ordinary,
            "witness": self.witness,
            "name": self.name,
            "construction": cons,
        }


def _witnesses(rho: ResidualInertial, m: int, n: int, params: FieldParams) -> tuple[int, ...]:
    w = SerreWeight(m % params.q1, n)
    ws = w_question(rho, params)
    if w not in ws:
        raise LiftError(f"{w} is not a predicted weight")
    return ws.witnesses[w]


def niveau1_lifts(rho: ResidualInertial, m: int, n: int, params: FieldParams) -> list[LiftDescriptor]:
    """Lifts of type omega~^{m+n} + omega~^m from pairs of crystalline characters."""
    if not isinstance(rho, ReducibleSplit):
        raise LiftError("niveau 1 lifts need a split reducible datum")
    rho = normalize(rho, params)
    p, e = params.p, params.e
    m %= params.q1
    type_pair = ((m + n) % params.q1, m)
    out = []

    def emit(a_ones, a_twist, b_twist, x, name):
        A = crys_char(a_ones, e, a_twist, params)
        B = crys_char(e - a_ones, e, b_twist, params)
        red = sorted((reduce_crystalline_char(A, params).exp, reduce_crystalline_char(B, params).exp))
        if red != [rho.a, rho.b]:
            raise LiftError(f"{name} lift reduces to {red}, expected {[rho.a, rho.b]}")
        ordinary = a_ones in (0, e)
        out.append(LiftDescriptor(type_pair, ordinary, Niveau1(A, B), x, name))

    for x in _witnesses(rho, m, n, params):
        emit(x, m + n, m, x, "standard")
        if x != e:
            continue
        if e > p - 1:
            emit(x - (p - 1), m + n, m, x, "alternate-i")
        elif n + e > p - 1 and n != p - 1:
            emit(n + e - (p - 1), m, m + n, x, "alternate-ii")
    return out


def niveau2_lift(rho: ResidualInertial, m: int, n: int, x: int, params: FieldParams) -> LiftDescriptor:
    """The twist by omega~^m of the lift attached to M_j, j = n + (p-1)(e-x)."""
    if not isinstance(rho, Irreducible):
        raise LiftError("niveau 2 lifts need an irreducible datum")
    rho = normalize(rho, params)
    p, e, q2 = params.p, params.e, params.q2
    m %= params.q1
    if x not in _witnesses(rho, m, n, params):
        raise LiftError(f"x = {x} is not a witness for sigma_{{{m},{n}}}")
    j = n + (p - 1) * (e - x)
    assert 0 <= j <= params.e1
    shift = m * (p + 1)
    got = {(c.exp + shift) % q2 for c in reduction_of_mj(j, params)}
    want = {rho.c, p * rho.c % q2}
    if got != want:
        raise LiftError(f"reduction of M_{j} twisted by omega^{m} is {sorted(got)}, expected {sorted(want)}")
    return LiftDescriptor(((m + n) % params.q1, m), False, Niveau2(j), x, "strongly-divisible")


def lift_catalogue(rho: ResidualInertial, w: SerreWeight, params: FieldParams) -> list[LiftDescriptor]:
    """Every constructed lift of type omega~^{m+n} + omega~^m, in enumeration order."""
    if isinstance(rho, ReducibleSplit):
        return niveau1_lifts(rho, w.m, w.n, params)
    return [niveau2_lift(rho, w.m, w.n, x, params) for x in _witnesses(rho, w.m, w.n, params)]


def has_non_ordinary(lifts: list[LiftDescriptor]) -> bool:
    return any(not d.ordinary for d in lifts)
