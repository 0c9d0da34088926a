import pytest
from hypothesis import given, settings, strategies as st

from serre_weights.breuil import (
    BreuilError,
    BreuilModule,
    RankOneBreuil,
    allowed_kappas,
    build_mbar_j,
    character_module,
    check_breuil_axioms,
    coeff_field,
    generic_fibre_rank_one,
    hom_from_rank_one,
    kernel_genericity,
    necessary_subchars,
    reduction_of_mj,
    validate_rank_one,
)
from serre_weights.breuil.families import _character_from_image, _elem, mbar_hom_exponents
from serre_weights.breuil.ring import TruncRing, smith_form, vadd, vsmul, vzero
from serre_weights.characters import FieldParams

# -- the coefficient field ---------------------------------------------------


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_field_structure(p):
    F = coeff_field(p)
    a, b = F.poly
    assert all((t * t + a * t + b) % p for t in range(p))
    assert sorted(F.exp) == list(range(1, p * p))
    for x in range(p * p):
        assert F.frobenius(F.frobenius(x)) == x
        assert (F.frobenius(x) == x) == (x < p)
        if x:
            assert F.mul(x, F.inv(x)) == 1
    assert F.zeta == F.exp[1]


@given(st.sampled_from([3, 5, 7]), st.data())
def test_field_axioms(p, data):
    F = coeff_field(p)
    x, y, z = (data.draw(st.integers(0, p * p - 1)) for _ in range(3))
    assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))
    assert F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z))
    assert F.frobenius(F.mul(x, y)) == F.mul(F.frobenius(x), F.frobenius(y))
    assert F.frobenius(F.add(x, y)) == F.add(F.frobenius(x), F.frobenius(y))
    assert F.sub(F.add(x, y), y) == x


def test_smallest_polynomial_is_canonical():
    assert coeff_field(3).poly == (0, 1)
    assert coeff_field(5).poly == (0, 2)


# -- truncated polynomials and Smith forms -----------------------------------

R = TruncRing(coeff_field(3), 12)
polys = st.dictionaries(st.integers(0, 11), st.integers(1, 8), max_size=5)


@given(polys, polys, polys)
def test_ring_laws(f, g, h):
    assert R.mul(f, g) == R.mul(g, f)
    assert R.mul(R.mul(f, g), h) == R.mul(f, R.mul(g, h))
    assert R.mul(f, R.add(g, h)) == R.add(R.mul(f, g), R.mul(f, h))
    assert R.frob_u(R.mul(f, g), 3) == R.mul(R.frob_u(f, 3), R.frob_u(g, 3))


@given(polys)
def test_inverse_unit(f):
    f = dict(f)
    f[0] = 1
    assert R.mul(f, R.inverse_unit(f)) == {0: 1}


@settings(max_examples=150)
@given(st.lists(st.tuples(polys, polys), min_size=1, max_size=3), st.lists(polys, min_size=3, max_size=3), st.tuples(polys, polys))
def test_smith_coordinates(rows, coeffs, other):
    sf = smith_form(R, rows, 2)
    x = vzero(2)
    for c, r in zip(coeffs, rows):
        x = vadd(R, x, vsmul(R, c, r))
    for target in (x, other):
        cs = sf.coordinates(target)
        if target is x:
            assert cs is not None
        if cs is not None:
            back = vzero(2)
            for c, r in zip(cs, rows):
                back = vadd(R, back, vsmul(R, c, r))
            assert back == target
    for syz in sf.syzygies():
        acc = vzero(2)
        for c, r in zip(syz, rows):
            acc = vadd(R, acc, vsmul(R, c, r))
        assert acc == vzero(2)


def test_smith_membership_by_valuation():
    sf = smith_form(R, [({3: 1}, {}), ({}, {5: 2})], 2)
    assert sf.contains(({4: 1}, {7: 1}))
    assert not sf.contains(({2: 1}, {}))
    assert not sf.is_everything()
    assert smith_form(R, [({0: 1}, {}), ({1: 1}, {0: 1})], 2).is_everything()


# -- rank one -----------------------------------------------------------------

P51 = FieldParams(5, 1)


@pytest.mark.parametrize("kappa,r,want", [(0, 0, True), (21, 12, True), (1, 1, False)])
def test_validate_rank_one(kappa, r, want):
    assert validate_rank_one(kappa, r, P51) is want


@pytest.mark.parametrize("kappa,r", [(-1, 0), (24, 0), (0, 25)])
def test_validate_rank_one_range(kappa, r):
    with pytest.raises(BreuilError):
        validate_rank_one(kappa, r, P51)


def test_allowed_kappas():
    assert set(allowed_kappas(1, P51)) == {21, 9}
    assert set(allowed_kappas(1, FieldParams(3, 1))) == {7, 5}
    assert allowed_kappas(4, P51) == [0]


def test_generic_fibre_examples():
    assert generic_fibre_rank_one(RankOneBreuil(0, 0), P51).exp == 0
    assert generic_fibre_rank_one(RankOneBreuil(21, 12), P51).exp == 12
    assert generic_fibre_rank_one(RankOneBreuil(9, 12), P51).exp == 0
    with pytest.raises(BreuilError, match="congruence"):
        generic_fibre_rank_one(RankOneBreuil(1, 1), P51)


@pytest.mark.parametrize("p,e", [(3, 1), (3, 2), (5, 1), (5, 2)])
def test_generic_fibre_formula(p, e):
    P = FieldParams(p, e)
    for kappa in range(P.q2):
        for r in range(P.e2 + 1):
            if validate_rank_one(kappa, r, P):
                chi = generic_fibre_rank_one(RankOneBreuil(kappa, r), P)
                assert chi.exp == (kappa + p * r // (p - 1)) % P.q2
                if r == 0:
                    assert chi.exp == kappa


def test_necessary_subchars_examples():
    exps = lambda s: {c.exp for c in s}
    assert exps(necessary_subchars(0, 1, P51)) == {2, 0}
    assert exps(necessary_subchars(1, 1, P51)) == {3, 1}
    assert exps(necessary_subchars(0, 1, FieldParams(3, 2))) == {0, 1}
    with pytest.raises(BreuilError):
        necessary_subchars(0, 4, P51)


@pytest.mark.parametrize("p,e", [(3, 1), (3, 3), (5, 2), (7, 1)])
def test_necessary_subchars_equal_prediction(p, e):
    P = FieldParams(p, e)
    for m in range(p - 1):
        for n in range(p - 1):
            want = {(m + n + x) % (p - 1) for x in range(1, e + 1)} | {(m + e - x) % (p - 1) for x in range(1, e + 1)}
            assert {c.exp for c in necessary_subchars(m, n, P)} == want


# -- modules and axioms ---------------------------------------------------------


def test_mbar_examples():
    Mb = build_mbar_j(0, FieldParams(3, 1))
    assert (Mb.J, Mb.n) == (0, 0)
    assert Mb.module.fil[1] == _elem(2, {1: {8: 1}}, {1: {8: 1}})
    assert all(d == _elem(2, {i: {0: 1}}, {i: {0: 1}}) for i, d in enumerate(Mb.module.descent))
    Mb = build_mbar_j(3, FieldParams(3, 2))
    assert (Mb.J, Mb.n, Mb.module.params.e2) == (12, 1, 16)
    Mb = build_mbar_j(2, FieldParams(3, 1))
    assert Mb.J == 8 and Mb.module.fil[1] == _elem(2, {1: {0: 1}}, {1: {0: 1}})
    with pytest.raises(BreuilError):
        build_mbar_j(3, FieldParams(3, 1))


@pytest.mark.parametrize("p,e", [(3, 1), (3, 2), (5, 1), (7, 1)])
def test_mbar_axioms(p, e):
    P = FieldParams(p, e)
    for j in range(P.e1 + 1):
        assert check_breuil_axioms(build_mbar_j(j, P).module) == []


def test_phi_image_not_generating():
    P = FieldParams(3, 1)
    one = _elem(1, {0: {0: 1}}, {0: {0: 1}})
    M = BreuilModule(P, 1, fil=[one], phi1=[_elem(1, {0: {1: 1}}, {0: {1: 1}})], descent=[one])
    assert any("does not generate" in v for v in check_breuil_axioms(M))


def test_filtration_too_small():
    P = FieldParams(3, 1)
    one = _elem(1, {0: {0: 1}}, {0: {0: 1}})
    M = BreuilModule(P, 1, fil=[_elem(1, {0: {9: 1}}, {0: {9: 1}})], phi1=[one], descent=[one])
    assert any("is not in Fil^1" in v for v in check_breuil_axioms(M))


def test_descent_not_commuting_with_phi():
    P = FieldParams(3, 1)
    F = coeff_field(3)
    one = _elem(1, {0: {0: 1}}, {0: {0: 1}})
    skew = _elem(1, {0: {0: F.zeta}}, {0: {0: 1}})
    M = BreuilModule(P, 1, fil=[one], phi1=[one], descent=[skew])
    assert any("does not commute" in v for v in check_breuil_axioms(M))


@pytest.mark.parametrize("p,e", [(3, 1), (5, 2)])
def test_character_modules_pass(p, e):
    P = FieldParams(p, e)
    F = coeff_field(p)
    for k in range(P.q2):
        assert check_breuil_axioms(character_module(F.zeta_pow(k), P)) == []


def test_hom_examples():
    P = FieldParams(3, 2)
    chi, image, ok = hom_from_rank_one(build_mbar_j(1, P), 1, P)
    assert ok and chi.exp == 3 * 3 % 8
    P = FieldParams(3, 1)
    chi, image, ok = hom_from_rank_one(build_mbar_j(0, P), 1, P)
    assert ok and chi.exp == 3
    assert image == _elem(2, {0: {3: 1}}, {1: {9: 1}})
    chi, _, ok = hom_from_rank_one(build_mbar_j(2, P), 2, P)
    assert ok and chi.exp == 3


def test_wrong_map_is_rejected():
    P = FieldParams(3, 2)
    Mb = build_mbar_j(1, P)
    a, b = mbar_hom_exponents(1, P)
    image = _elem(2, {0: {a + 8: 1}}, {1: {b: 1}})
    chi, problems = _character_from_image(Mb.module, image)
    assert chi is None or problems


def test_kernel_genericity():
    P = FieldParams(3, 2)
    assert kernel_genericity([0], P)
    assert not kernel_genericity([P.p * P.e2], P)
    assert all(kernel_genericity(mbar_hom_exponents(j, P), P) for j in range(P.e1 + 1))


def test_reduction_examples():
    assert [c.exp for c in reduction_of_mj(1, FieldParams(3, 2))] == [3, 1]
    assert [c.exp for c in reduction_of_mj(0, FieldParams(3, 1))] == [1, 3]
    # j = 3 = n + (p-1)(e-x) with n = 1, x = 1
    got = [c.exp for c in reduction_of_mj(3, FieldParams(3, 2))]
    assert got[0] == (1 + 1) + 3 * (2 - 1)


@pytest.mark.parametrize("p,e", [(3, 1), (3, 2), (5, 1), (5, 2)])
def test_reduction_formula(p, e):
    P = FieldParams(p, e)
    for j in range(P.e1 + 1):
        got = [c.exp for c in reduction_of_mj(j, P)]
        assert got == [(j + e) % P.q2, p * (j + e) % P.q2]
