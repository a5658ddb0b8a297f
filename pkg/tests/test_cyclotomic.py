import pytest
from hypothesis import given, strategies as st

from bentcodes.cyclotomic import CycloInt, cyc_arith, gauss_sum, match_unit_multiple, zeta_pow
from bentcodes.errors import NotPrime, PrimeMismatch

PRIMES = [3, 5, 7, 11]


def cyclo(p):
    return st.lists(st.integers(-20, 20), min_size=p - 1, max_size=p - 1).map(lambda c: CycloInt(p, tuple(c)))


def test_vanishing_sum_of_roots():
    total = zeta_pow(3, 0) + zeta_pow(3, 1) + zeta_pow(3, 2)
    assert total.is_zero()


def test_zeta_powers():
    assert zeta_pow(3, 0) == CycloInt.integer(3, 1)
    assert zeta_pow(3, 3) == CycloInt.integer(3, 1)
    assert zeta_pow(3, 2) == CycloInt(3, (-1, -1))
    assert zeta_pow(3, 1).conj() == zeta_pow(3, 2)


def test_gauss_sums():
    g3 = gauss_sum(3)
    assert g3 == CycloInt(3, (1, 2))
    assert g3 * g3 == CycloInt.integer(3, -3)
    assert (gauss_sum(5) * gauss_sum(5)).as_integer() == 5
    assert (gauss_sum(7) * gauss_sum(7)).as_integer() == -7
    with pytest.raises(NotPrime):
        gauss_sum(9)


def test_match_unit_multiple():
    five = CycloInt.integer(3, 5)
    assert match_unit_multiple(zeta_pow(3, 2).scale(5), five) == 2
    assert match_unit_multiple(zeta_pow(3, 2).scale(5) + 1, five) is None
    g = gauss_sum(3)
    assert match_unit_multiple(g * zeta_pow(3, 1), g) == 1


def test_prime_mismatch():
    with pytest.raises(PrimeMismatch):
        CycloInt.integer(3, 1) + CycloInt.integer(5, 1)


@pytest.mark.parametrize("p", PRIMES)
@given(data=st.data())
def test_ring_laws(p, data):
    a, b, c = (data.draw(cyclo(p)) for _ in range(3))
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a * b).conj() == a.conj() * b.conj()
    assert a - a == CycloInt.integer(p, 0)
    assert cyc_arith("scale", a, 3) == a + a + a


@pytest.mark.parametrize("p", PRIMES)
@given(k=st.integers(-50, 50))
def test_zeta_has_order_p(p, k):
    assert zeta_pow(p, k) == zeta_pow(p, k + p)
    assert zeta_pow(p, k) * zeta_pow(p, -k) == CycloInt.integer(p, 1)
