import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bentcodes.catalog import build, preset
from bentcodes.errors import ZeroComponent
from bentcodes.galois import absolute_trace, field_make, prime_field, space_make, tables, tower, trace_table
from bentcodes.spectral import (
    PAryFn,
    QuarticUnit,
    VecFn,
    bent_analyze,
    component,
    verify_condition,
    walsh,
    walsh_naive,
)

PLUS = QuarticUnit(1, False)
MINUS = QuarticUnit(-1, False)


def tr_square_gf9() -> PAryFn:
    F9 = field_make(3, 2)
    tr = trace_table(tower(prime_field(3), F9))
    x = np.arange(9)
    return PAryFn(space_make(3, (2,)), tr[tables(F9).mul(x, x)])


def test_zero_function_spectrum():
    S = space_make(3, (1, 1))
    W = walsh(PAryFn(S, np.zeros(S.size, dtype=np.int64)))
    assert W.value(0).as_integer() == 9
    assert all(W.value(a).is_zero() for a in range(1, 9))


def test_linear_function_is_a_delta():
    S = space_make(3, (1, 1))
    b = (1, 2)
    vals = np.array([(b[0] * (i // 3) + b[1] * (i % 3)) % 3 for i in range(9)])
    W = walsh(PAryFn(S, vals))
    hit = S.index_of([S.fields[0].scalar(b[0]), S.fields[1].scalar(b[1])])
    for a in range(9):
        v = W.value(a)
        assert (v.as_integer() == 9) if a == hit else v.is_zero()


def test_tr_square_on_gf9_is_weakly_regular_bent():
    f = tr_square_gf9()
    W = walsh(f)
    assert all(int(n[0]) == 9 and not n[1:].any() for n in W.norms())
    assert np.array_equal(W.coeffs, walsh_naive(f).coeffs)
    cert = bent_analyze(f, W)
    assert cert.is_bent and cert.is_weakly_regular
    assert cert.eps == PLUS
    back = bent_analyze(cert.dual).dual
    assert np.array_equal(back.values, f.values[f.domain.negation()])


def test_constant_is_not_bent():
    S = space_make(5, (2,))
    assert not bent_analyze(PAryFn(S, np.full(S.size, 3))).is_bent


@settings(max_examples=25)
@given(st.sampled_from([(2, (3,)), (2, (1, 1, 1, 1)), (3, (2,)), (3, (1, 2)), (5, (1,)), (7, (1,))]), st.data())
def test_fast_transform_matches_naive_and_parseval(shape, data):
    p, parts = shape
    S = space_make(p, parts)
    vals = data.draw(st.lists(st.integers(0, p - 1), min_size=S.size, max_size=S.size))
    f = PAryFn(S, np.array(vals))
    W = walsh(f)
    assert W.parseval_ok()
    assert np.array_equal(W.coeffs, walsh_naive(f).coeffs)


def test_component_of_example1_is_absolute_trace_of_square():
    F, _ = build(preset("example1"))
    f1 = component(F, 1)
    K = F.domain.fields[0]
    for idx in range(0, F.domain.size, F.domain.size // 10):
        x = K.from_index(idx)
        assert f1.values[idx] == absolute_trace(x * x)
    with pytest.raises(ZeroComponent):
        component(F, 0)


def test_component_of_zero_map():
    S = space_make(3, (2,))
    Z = VecFn(S, field_make(3, 2), np.zeros(S.size, dtype=np.int64))
    assert not component(Z, 4).values.any()


def test_verify_condition_examples():
    F, _ = build(preset("example1"))
    rep = verify_condition(F, "II", 1)
    assert rep.holds and rep.eps_or_theta == MINUS and (2, 2) in rep.exponent_pairs

    F, _ = build(preset("example4"))
    rep = verify_condition(F, "III", 1)
    assert rep.holds and rep.eps_or_theta == PLUS and (2, 2) in rep.exponent_pairs

    F, _ = build(preset("table2-row1"))
    rep = verify_condition(F, "I", 1)
    assert rep.holds and rep.eps_or_theta == PLUS


def test_failing_condition_is_reported():
    F, _ = build(preset("example4"))
    rep = verify_condition(F, "I", 1)
    assert not rep.holds and rep.failed_clause


def test_quartic_units():
    i = QuarticUnit(1, True)
    assert i * i == MINUS and i**4 == PLUS and i.inverse() * i == PLUS
    assert QuarticUnit.parse(str(-i)) == -i
