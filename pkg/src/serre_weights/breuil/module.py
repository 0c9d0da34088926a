"""Breuil modules with k_E-coefficients and tame descent data, mod p.

The base ring is (k_2 (x) k_E)[u]/u^{e'p} with k_2 = k_E = F_{p^2} and
e' = (p^2 - 1) e.  Through the idempotents e_{sigma_1}, e_{sigma_2} it
splits as a product of two copies of k_E[u]/u^{e'p}; an element is a pair
of polynomials and a module element is a pair of coordinate vectors.

In these coordinates
  * a (x) 1 acts as (a, a^p) and 1 (x) b as (b, b);
  * phi (the p-th power map, k_E-linear) swaps the two components and
    sends u to u^p;
  * the fixed inertia generator g0, with omega_2(g0) = zeta, fixes k_2 and
    sends u to (zeta (x) 1) u, i.e. scales u^k by zeta^k in the first
    component and by zeta^{pk} in the second.

A module is presented by a free basis, generators of Fil^1, the values of
phi_1 on those generators, and the images of the basis under g0-hat.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from ..characters import FieldParams
from .field import CoeffField, coeff_field
from .ring import SmithForm, TruncRing, smith_form, viszero

# An element of the module: (first component vector, second component vector).
Elem = tuple


def ring_for(params: FieldParams) -> TruncRing:
    return TruncRing(coeff_field(params.p), params.e2 * params.p)


@dataclass
class BreuilModule:
    params: FieldParams
    rank: int
    fil: list  # list[Elem], generators of Fil^1
    phi1: list  # list[Elem], phi_1 of each Fil^1 generator
    descent: list  # list[Elem], g0-hat of each basis vector
    label: str = ""
    R: TruncRing = field(init=False, repr=False)

    def __post_init__(self):
        self.R = ring_for(self.params)
        if len(self.fil) != len(self.phi1):
            raise ValueError("one phi_1 value is needed per Fil^1 generator")
        if len(self.descent) != self.rank:
            raise ValueError("one descent image is needed per basis vector")

    @property
    def F(self) -> CoeffField:
        return self.R.F

    @property
    def e_prime(self) -> int:
        return self.params.e2

    # elements -----------------------------------------------------------

    def zero(self) -> Elem:
        d = self.rank
        return (tuple({} for _ in range(d)), tuple({} for _ in range(d)))

    def basis(self, i: int) -> Elem:
        v = tuple(self.R.const(1) if k == i else {} for k in range(self.rank))
        return (v, v)

    def add(self, x: Elem, y: Elem) -> Elem:
        R = self.R
        return tuple(tuple(R.add(a, b) for a, b in zip(xc, yc)) for xc, yc in zip(x, y))

    def smul(self, s: tuple, x: Elem) -> Elem:
        """Multiply by a ring element s = (s1, s2)."""
        R = self.R
        return tuple(tuple(R.mul(sc, a) for a in xc) for sc, xc in zip(s, x))

    def is_zero(self, x: Elem) -> bool:
        return viszero(x[0]) and viszero(x[1])

    def equal(self, x: Elem, y: Elem) -> bool:
        return x[0] == y[0] and x[1] == y[1]

    # the ring maps ---------------------------------------------------------

    def phi_ring(self, s: tuple) -> tuple:
        R, p = self.R, self.params.p
        return (R.frob_u(s[1], p), R.frob_u(s[0], p))

    def g0_ring(self, s: tuple) -> tuple:
        R, p = self.R, self.params.p
        return (R.twist_u(s[0], 1), R.twist_u(s[1], p))

    # structure maps -----------------------------------------------------------

    def g0(self, x: Elem) -> Elem:
        """Semilinear extension of g0-hat from the basis."""
        out = self.zero()
        for i in range(self.rank):
            coeff = (x[0][i], x[1][i])
            if not coeff[0] and not coeff[1]:
                continue
            out = self.add(out, self.smul(self.g0_ring(coeff), self.descent[i]))
        return out

    @cached_property
    def _fil_smith(self) -> tuple[SmithForm, SmithForm]:
        return tuple(smith_form(self.R, [f[c] for f in self.fil], self.rank) for c in (0, 1))

    def in_fil(self, x: Elem) -> bool:
        return all(self._fil_smith[c].contains(x[c]) for c in (0, 1))

    def phi1_of(self, x: Elem) -> Elem:
        """phi_1 of an element of Fil^1 via its coordinates on the generators.

        Coordinates in one component feed the other component of the image,
        because phi swaps the idempotents.
        """
        R, p = self.R, self.params.p
        out = [list({} for _ in range(self.rank)) for _ in (0, 1)]
        for c in (0, 1):
            coords = self._fil_smith[c].coordinates(x[c])
            if coords is None:
                raise ValueError(f"element is not in Fil^1 of {self.label or 'module'}")
            target = 1 - c
            for a, img in zip(coords, self.phi1):
                if not a:
                    continue
                fa = R.frob_u(a, p)
                for i in range(self.rank):
                    out[target][i] = R.add(out[target][i], R.mul(fa, img[target][i]))
        return (tuple(out[0]), tuple(out[1]))

    def g0_power(self, k: int, x: Elem) -> Elem:
        for _ in range(k):
            x = self.g0(x)
        return x

    # presentation ----------------------------------------------------------------

    def fmt(self, x: Elem) -> str:
        parts = []
        for c, name in ((0, "e_s1"), (1, "e_s2")):
            for i, a in enumerate(x[c]):
                if a == {0: 1}:
                    parts.append(f"{name}*g{i + 1}")
                elif a:
                    parts.append(f"{name}*({self.R.fmt(a)})*g{i + 1}")
        return " + ".join(parts) if parts else "0"


def check_breuil_axioms(M: BreuilModule) -> list[str]:
    """Verify the module axioms by exact computation; return the violations."""
    R, p = M.R, M.params.p
    out: list[str] = []
    for f in list(M.fil) + list(M.phi1) + list(M.descent):
        for comp in f:
            if len(comp) != M.rank:
                return ["element of wrong rank in presentation"]
            for a in comp:
                if a and max(a) >= R.N:
                    return ["polynomial degree exceeds truncation"]

    # u^{e'} M is contained in Fil^1
    ue = (R.monomial(M.e_prime), R.monomial(M.e_prime))
    for i in range(M.rank):
        if not M.in_fil(M.smul(ue, M.basis(i))):
            out.append(f"u^{M.e_prime} g{i + 1} is not in Fil^1")

    # phi_1 is well defined: relations among generators map to zero
    for c in (0, 1):
        target = 1 - c
        for syz in M._fil_smith[c].syzygies():
            img = [{} for _ in range(M.rank)]
            for a, val in zip(syz, M.phi1):
                if a:
                    fa = R.frob_u(a, p)
                    img = [R.add(s, R.mul(fa, b)) for s, b in zip(img, val[target])]
            if not viszero(img):
                out.append("phi_1 is not well defined on Fil^1 (a relation has nonzero image)")
                break

    # image of phi_1 generates M
    for c in (0, 1):
        span = smith_form(R, [val[c] for val in M.phi1], M.rank)
        if not span.is_everything():
            out.append("image of phi_1 does not generate M")
            break

    # descent data preserves Fil^1 and commutes with phi_1
    for k, f in enumerate(M.fil):
        gf = M.g0(f)
        if not M.in_fil(gf):
            out.append(f"g0-hat does not preserve Fil^1 (generator {k + 1})")
            continue
        if not M.equal(M.phi1_of(gf), M.g0(M.phi1[k])):
            out.append(f"g0-hat does not commute with phi_1 (generator {k + 1})")

    # cocycle: g0-hat has order dividing p^2 - 1
    for i in range(M.rank):
        if not M.equal(M.g0_power(M.params.q2, M.basis(i)), M.basis(i)):
            out.append(f"g0-hat^(p^2-1) is not the identity on g{i + 1}")
    return out


@dataclass
class BreuilHom:
    """A (k_2 (x) k_E)[u]-linear map given by the images of the source basis."""

    source: BreuilModule
    target: BreuilModule
    images: list  # list[Elem] in the target

    def __call__(self, x: Elem) -> Elem:
        T = self.target
        out = T.zero()
        for i in range(self.source.rank):
            coeff = (x[0][i], x[1][i])
            if coeff[0] or coeff[1]:
                out = T.add(out, T.smul(coeff, self.images[i]))
        return out


def check_hom(h: BreuilHom) -> list[str]:
    """Check a morphism on the Fil^1 generators and on the basis."""
    S, T = h.source, h.target
    out = []
    for k, f in enumerate(S.fil):
        hf = h(f)
        if not T.in_fil(hf):
            out.append(f"image of Fil^1 generator {k + 1} is not in Fil^1")
            continue
        if not T.equal(T.phi1_of(hf), h(S.phi1[k])):
            out.append(f"map does not commute with phi_1 on generator {k + 1}")
    for i in range(S.rank):
        if not T.equal(h(S.g0(S.basis(i))), T.g0(h(S.basis(i)))):
            out.append(f"map does not commute with descent data on g{i + 1}")
    return out


def descent_eigenvalue(M: BreuilModule, x: Elem) -> int | None:
    """The scalar lambda in k_E^x with g0-hat(x) = (1 (x) lambda) x, if any."""
    gx = M.g0(x)
    lam = None
    F = M.F
    for c in (0, 1):
        for a, b in zip(x[c], gx[c]):
            if set(a) != set(b):
                return None
            for k, coeff in a.items():
                ratio = F.mul(b[k], F.inv(coeff))
                if lam is None:
                    lam = ratio
                elif ratio != lam:
                    return None
    return lam
