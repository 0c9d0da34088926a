"""Rank one Breuil modules and the rank two family Mbar_j, with generic fibres.

Generic fibres are read off from explicit morphisms out of the rank one
modules M(chi) (Fil^1 = M, phi_1(v) = v, g-hat(v) = (1 (x) chi(g)) v), whose
generic fibre is chi.  The character chi is not supplied: it is recovered
as the eigenvalue of g0-hat on the image of v, and the morphism is then
checked in full.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..characters import FieldParams, Niveau1Char, Niveau2Char, restrict_to_niveau1
from .field import coeff_field
from .module import (
    BreuilHom,
    BreuilModule,
    Elem,
    check_breuil_axioms,
    check_hom,
    descent_eigenvalue,
)


class BreuilError(ValueError):
    pass


def _elem(d: int, first: dict[int, dict], second: dict[int, dict]) -> Elem:
    """Build an element from {basis index: poly} maps for each idempotent."""
    return (tuple(first.get(i, {}) for i in range(d)),
            tuple(second.get(i, {}) for i in range(d)))


# rank one -------------------------------------------------------------------


@dataclass(frozen=True)
class RankOneBreuil:
    """Fil^1 = u^r M, phi_1(u^r w) = w, g-hat(w) = (eta(g)^kappa (x) 1) w."""

    kappa: int
    r: int


def validate_rank_one(kappa: int, r: int, params: FieldParams) -> bool:
    if not 0 <= kappa < params.q2:
        raise BreuilError(f"kappa = {kappa} outside [0, {params.q2})")
    if not 0 <= r <= params.e2:
        raise BreuilError(f"r = {r} outside [0, {params.e2}]")
    return (kappa - params.p * (kappa + r)) % params.q2 == 0


def allowed_kappas(n: int, params: FieldParams) -> list[int]:
    """Descent exponents compatible with descent data omega_s1^{n+1-p} + conjugate."""
    p, q2 = params.p, params.q2
    if not 0 <= n <= p - 1:
        raise BreuilError(f"n = {n} outside [0, {p - 1}]")
    return sorted({(n + 1 - p) % q2, p * (n + 1 - p) % q2})


def rank_one_module(kappa: int, r: int, params: FieldParams) -> BreuilModule:
    F = coeff_field(params.p)
    ur = {r: 1}
    return BreuilModule(
        params, 1,
        fil=[_elem(1, {0: ur}, {0: ur})],
        phi1=[_elem(1, {0: {0: 1}}, {0: {0: 1}})],
        descent=[_elem(1, {0: {0: F.zeta_pow(kappa)}}, {0: {0: F.zeta_pow(params.p * kappa)}})],
        label=f"M(kappa={kappa}, r={r})",
    )


def character_module(lam: int, params: FieldParams, unit: int = 1) -> BreuilModule:
    """M(chi, c): Fil^1 = M, phi_1(v) = c v, g0-hat(v) = (1 (x) lam) v."""
    one = {0: 1}
    return BreuilModule(
        params, 1,
        fil=[_elem(1, {0: one}, {0: one})],
        phi1=[_elem(1, {0: {0: unit}}, {0: {0: unit}})],
        descent=[_elem(1, {0: {0: lam}}, {0: {0: lam}})],
        label="M(chi)",
    )


def _character_from_image(target: BreuilModule, image: Elem) -> tuple[Niveau2Char | None, list[str]]:
    """Recover chi from the image of v and verify the resulting morphism."""
    params = target.params
    lam = descent_eigenvalue(target, image)
    if lam is None or lam == 0:
        return None, ["image of v is not an eigenvector of the descent data"]
    source = character_module(lam, params)
    problems = check_hom(BreuilHom(source, target, [image]))
    return Niveau2Char(target.F.log[lam], params.p), problems


def generic_fibre_rank_one(M: RankOneBreuil, params: FieldParams) -> Niveau2Char:
    """Generic fibre on inertia of the rank one module, via v -> u^{pr/(p-1)} w."""
    if not validate_rank_one(M.kappa, M.r, params):
        raise BreuilError(f"congruence r = (p-1) kappa mod p^2-1 fails for kappa={M.kappa}, r={M.r}")
    p = params.p
    s = p * M.r // (p - 1)
    target = rank_one_module(M.kappa, M.r, params)
    image = _elem(1, {0: {s: 1}}, {0: {s: 1}})
    chi, problems = _character_from_image(target, image)
    if chi is None or problems:
        raise BreuilError("comparison map fails: " + "; ".join(problems))
    if not kernel_genericity([s], params):
        raise BreuilError("kernel of the comparison map contains a free submodule")
    return chi


def necessary_subchars(m: int, n: int, params: FieldParams) -> set[Niveau1Char]:
    """Possible subcharacters psi_1 on inertia for weight sigma_{m,n}, n < p - 1.

    Runs over both admissible descent exponents and every filtration jump
    r = r0 + y (p^2 - 1) <= e_2, computing each generic fibre through the
    comparison map, then twists back by omega^m.
    """
    p, q2 = params.p, params.q2
    if not 0 <= n < p - 1:
        raise BreuilError("necessary_subchars needs 0 <= n < p - 1")
    out = set()
    for kappa in allowed_kappas(n, params):
        r0 = (p - 1) * kappa % q2
        for y in range(params.e):
            r = r0 + y * q2
            if r > params.e2 or not validate_rank_one(kappa, r, params):
                continue
            chi = generic_fibre_rank_one(RankOneBreuil(kappa, r), params)
            t = restrict_to_niveau1(chi, params)
            assert t is not None
            out.add(Niveau1Char(t.exp + m, p))
    return out


# the family Mbar_j ----------------------------------------------------------


@dataclass
class MbarJ:
    j: int
    J: int
    n: int
    module: BreuilModule


def build_mbar_j(j: int, params: FieldParams) -> MbarJ:
    """Fil^1 = <u^J g1, u^{e2-J} g2>, phi_1(u^J g1) = g2, phi_1(u^{e2-J} g2) = g1,
    g0-hat(g1) = g1, g0-hat(g2) = omega^n(g0) g2 with J = (p+1) j."""
    if not 0 <= j <= params.e1:
        raise BreuilError(f"j = {j} outside [0, {params.e1}]")
    p, e2 = params.p, params.e2
    J = (p + 1) * j
    n = j % (p - 1)
    w = coeff_field(p).zeta_pow((p + 1) * n)
    one = {0: 1}
    M = BreuilModule(
        params, 2,
        fil=[_elem(2, {0: {J: 1}}, {0: {J: 1}}),
             _elem(2, {1: {e2 - J: 1}}, {1: {e2 - J: 1}})],
        phi1=[_elem(2, {1: one}, {1: one}),
              _elem(2, {0: one}, {0: one})],
        descent=[_elem(2, {0: one}, {0: one}),
                 _elem(2, {1: {0: w}}, {1: {0: w}})],
        label=f"Mbar_{j}",
    )
    return MbarJ(j, J, n, M)


def mbar_hom_exponents(j: int, params: FieldParams) -> tuple[int, int]:
    """u-exponents p(j+e) on g1 and p(pe-j) on g2 of the maps from rank one."""
    p, e = params.p, params.e
    return p * (j + e), p * (p * e - j)


def hom_from_rank_one(Mb: MbarJ, alpha: int, params: FieldParams):
    """The map v -> u^{p(j+e)} e_alpha g1 + u^{p(pe-j)} e_beta g2.

    Returns (chi, image, compatible), where chi is the character forced on
    the source by the descent data.
    """
    if alpha not in (1, 2):
        raise BreuilError("alpha must be 1 or 2")
    a_exp, b_exp = mbar_hom_exponents(Mb.j, params)
    comp = {1: {}, 2: {}}
    comp[alpha][0] = {a_exp: 1}
    comp[3 - alpha][1] = {b_exp: 1}
    image = _elem(2, comp[1], comp[2])
    chi, problems = _character_from_image(Mb.module, image)
    return chi, image, chi is not None and not problems


def kernel_genericity(exponents, params: FieldParams) -> bool:
    """No free k_2[u]/u^{e_2 p}-submodule in the kernel: all exponents < p e_2."""
    bound = params.p * params.e2
    return all(k < bound for k in exponents)


@lru_cache(maxsize=None)
def reduction_of_mj(j: int, params: FieldParams) -> tuple[Niveau2Char, Niveau2Char]:
    """(omega_s1^{j+e}, omega_s2^{j+e}) computed from the two rank one maps."""
    Mb = build_mbar_j(j, params)
    problems = check_breuil_axioms(Mb.module)
    if problems:
        raise BreuilError(f"Mbar_{j} fails the axioms: " + "; ".join(problems))
    if not kernel_genericity(mbar_hom_exponents(j, params), params):
        raise BreuilError(f"kernel genericity fails for j = {j}")
    chars = []
    for alpha in (2, 1):
        chi, _, ok = hom_from_rank_one(Mb, alpha, params)
        if not ok:
            raise BreuilError(f"map with alpha = {alpha} is not compatible for j = {j}")
        chars.append(chi)
    return chars[0], chars[1]
