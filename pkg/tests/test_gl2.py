import pytest
from hypothesis import given, strategies as st

from oracles import companion as companion_oracle
from oracles import odd_primes
from serre_weights.characters import FieldParams
from serre_weights.gl2 import (
    Cuspidal,
    PrincipalSeries,
    Scalar,
    SerreWeight,
    all_types,
    all_weights,
    brace,
    bt_type_for_pair,
    companion,
    induction_ses,
    jh_factors,
    type_dimension,
)

P5 = FieldParams(5, 1)
S = SerreWeight


@pytest.mark.parametrize("m,want", [(2, 2), (-2, 2), (6, 2)])
def test_brace(m, want):
    assert brace(m, P5) == want


def test_brace_rejects_zero():
    with pytest.raises(ValueError):
        brace(4, P5)


def test_jh_examples():
    assert jh_factors(Scalar(2), P5) == (S(2, 0),)
    assert set(jh_factors(PrincipalSeries(3, 1), P5)) == {S(1, 2), S(3, 2)}
    assert jh_factors(Cuspidal.from_ij(5, 0, P5), P5) == (S(1, 3),)


def test_cuspidal_canonical_and_fixed():
    assert Cuspidal.from_exponent(2, FieldParams(3, 1)) == Cuspidal.from_exponent(6, FieldParams(3, 1))
    with pytest.raises(ValueError):
        Cuspidal.from_exponent(4, FieldParams(3, 1))


@pytest.mark.parametrize("w,want", [(S(0, 1), S(1, 3)), (S(3, 0), S(3, 4)), (S(1, 3), S(0, 1))])
def test_companion(w, want):
    assert companion(w, P5) == want


@pytest.mark.parametrize("n,want", [(0, (S(0, 0), S(0, 4))), (1, (S(0, 1), S(1, 3))), (3, (S(0, 3), S(3, 1)))])
def test_induction_ses(n, want):
    assert induction_ses(n, P5) == want


@pytest.mark.parametrize("m,n,want", [(0, 1, PrincipalSeries(1, 0)), (2, 0, Scalar(2)), (0, 4, Scalar(0))])
def test_bt_type(m, n, want):
    assert bt_type_for_pair(m, n, P5) == want


@pytest.mark.parametrize("p", odd_primes(13))
def test_companion_involution_all(p):
    P = FieldParams(p, 1)
    for w in all_weights(P):
        assert companion(companion(w, P), P) == w
        assert (companion(w, P).m, companion(w, P).n) == companion_oracle(w.m, w.n, p)


@pytest.mark.parametrize("p", odd_primes(13))
def test_dimension_bookkeeping(p):
    P = FieldParams(p, 1)
    for t in all_types(P):
        fs = jh_factors(t, P)
        total = sum(f.dim() for f in fs)
        if isinstance(t, Cuspidal) and t.ij(P)[0] in (1, p):
            assert fs == (S((1 + t.ij(P)[1]) % (p - 1), p - 2),)
        else:
            assert total == type_dimension(t, P)


@pytest.mark.parametrize("p", odd_primes(13))
def test_bt_type_factors_are_weight_and_companion(p):
    P = FieldParams(p, 1)
    for m in range(p - 1):
        for n in range(1, p - 1):
            assert set(jh_factors(bt_type_for_pair(m, n, P), P)) == {S(m, n), companion(S(m, n), P)}


def test_cuspidal_conjugate_coordinates_agree():
    # (i, j) from E and from pE give the same factors
    for p in odd_primes(11):
        P = FieldParams(p, 1)
        for E in range(P.q2):
            if E % (p + 1):
                a, b = Cuspidal(E), Cuspidal(p * E % P.q2)
                assert jh_factors(a, P) == jh_factors(b, P)


def test_types_distinct():
    P = FieldParams(7, 1)
    ts = all_types(P)
    assert len(ts) == len(set(ts))
    # 6 scalars, 30 ordered principal series, (48 - 6) / 2 cuspidal
    assert len(ts) == 6 + 30 + 21


@given(st.sampled_from(odd_primes(31)), st.integers(1, 10**5))
def test_brace_sum(p, m):
    P = FieldParams(p, 1)
    if m % (p - 1):
        assert brace(m, P) + brace(-m, P) == p - 1
