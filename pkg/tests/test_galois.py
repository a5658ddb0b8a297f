import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bentcodes.errors import FieldMismatch, NotPrime, Reducible
from bentcodes.galois import (
    arith,
    embed,
    field_make,
    multiplicative_order,
    prime_field,
    quad_character,
    space_make,
    tables,
    tower,
    trace_rel,
    trace_table,
)

SMALL_FIELDS = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1)]


def test_prime_field_uses_modulus_x():
    F = field_make(3, 1)
    assert F.modulus == (0, 1)
    assert F.primitive == (2,)


def test_primitive_search_skips_non_generator():
    F = field_make(3, 2, (1, 0, 1))
    two = F.elem((2, 0))
    assert multiplicative_order(two) == 2
    assert multiplicative_order(F.elem(F.primitive)) == 8


def test_gf8_primitive_is_x():
    F = field_make(2, 3, (1, 1, 0, 1))
    assert F.primitive == (0, 1, 0)


def test_schoolbook_product_in_gf9():
    # (x+1)(x+2) = x^2 + 3x + 2 = x^2 + 2 and x^2 = -1, so the product is 1
    F = field_make(3, 2, (1, 0, 1))
    x = F.elem((0, 1))
    assert ((x + 1) * (x + 2)).coeffs == (1, 0)


def test_bad_inputs():
    with pytest.raises(NotPrime):
        field_make(4, 1)
    with pytest.raises(Reducible):
        field_make(3, 2, (2, 0, 1))  # x^2 - 1
    with pytest.raises(FieldMismatch):
        tower(field_make(3, 2), field_make(3, 3))


@pytest.mark.parametrize("p,n", SMALL_FIELDS)
def test_group_axioms_exhaustive(p, n):
    F = field_make(p, n)
    els = list(F.elements())
    assert len({x.coeffs for x in els}) == p**n
    for x in els:
        assert (x ** (p**n)) == x
        assert x + (-x) == F.zero
        if not x.is_zero():
            assert x * x.inv() == F.one
    assert F.zero.inv() == F.zero


@pytest.mark.parametrize("p,n", SMALL_FIELDS)
def test_tables_agree_with_scalar_arithmetic(p, n):
    F = field_make(p, n)
    T = tables(F)
    els = list(F.elements())
    for x, y in itertools.islice(itertools.product(els, els), 400):
        assert T.mul(x.index, y.index) == (x * y).index
        assert T.add(x.index, y.index) == (x + y).index


@given(st.sampled_from([(3, 2), (5, 2), (3, 3), (7, 1)]), st.data())
def test_quad_character_is_multiplicative(pn, data):
    F = field_make(*pn)
    a = F.from_index(data.draw(st.integers(1, F.q - 1)))
    b = F.from_index(data.draw(st.integers(1, F.q - 1)))
    assert quad_character(a * b) == quad_character(a) * quad_character(b)


def test_quad_character_small_values():
    F = field_make(3, 1)
    assert quad_character(F.zero) == 0
    assert quad_character(F.one) == 1
    assert quad_character(F.scalar(2)) == -1


def test_trace_examples():
    F3 = prime_field(3)
    F9 = field_make(3, 2, (1, 0, 1))
    tm = tower(F3, F9)
    x = F9.elem((0, 1))
    assert trace_rel(tm, F9.zero).is_zero()
    assert trace_rel(tm, F9.one).coeffs == (2,)  # n mod p = 2
    frob_sum = x + x**3
    assert trace_rel(tm, x).coeffs[0] == frob_sum.coeffs[0] and frob_sum.coeffs[1] == 0


@pytest.mark.parametrize("p,t,n", [(2, 1, 4), (2, 2, 4), (3, 1, 2), (3, 2, 4), (5, 1, 2)])
def test_trace_is_balanced_and_linear(p, t, n):
    sub, sup = field_make(p, t), field_make(p, n)
    tm = tower(sub, sup)
    tr = trace_table(tm)
    assert (np.bincount(tr, minlength=sub.q) == p ** (n - t)).all()
    T, Ts = tables(sup), tables(sub)
    emb = [embed(tm, a).index for a in sub.elements()]
    for a in range(sub.q):
        for x in range(0, sup.q, max(1, sup.q // 20)):
            assert tr[T.mul(emb[a], x)] == Ts.mul(a, tr[x])


def test_embedding_is_a_homomorphism():
    sub, sup = field_make(3, 2), field_make(3, 4)
    tm = tower(sub, sup)
    for a in sub.elements():
        for b in sub.elements():
            assert embed(tm, a) * embed(tm, b) == embed(tm, a * b)
        assert trace_rel(tm, embed(tm, a)) == a * 2  # (n/t) a with n/t = 2
    assert embed(tm, sub.zero).is_zero()


def test_arith_dispatch():
    F = field_make(5, 2)
    w = F.gen
    assert arith("mul", arith("inv", w), w) == F.one
    assert arith("pow", w, 24) == F.one
    assert arith("frobenius", w) == w**5


def test_space_enumeration():
    S = space_make(3, (2, 1))
    pts = list(S.points())
    assert len(pts) == S.size == 27
    assert [S.index_of(pt) for pt in pts] == list(range(27))
    neg = S.negation()
    assert (neg[neg] == np.arange(27)).all()
