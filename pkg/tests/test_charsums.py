import pytest
from hypothesis import given, settings, strategies as st

from bentcodes import charsums as cs
from bentcodes.cyclotomic import CycloInt, gauss_sum
from bentcodes.errors import ParamViolation, ZeroLeadingCoeff

ODD_FIELDS = [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 2), (11, 1), (13, 1)]


def test_prop7_values():
    assert cs.prop7(3, 1, 0).is_zero()
    assert cs.prop7(3, 1, 1) == gauss_sum(3)  # zeta - zeta^2 = 1 + 2 zeta
    assert cs.prop7(3, 2, 1) == CycloInt.integer(3, 3)


def test_prop8_values():
    assert cs.prop8(3, 1, 1, 0, 0) == 2
    assert cs.prop8(3, 1, 1, 0, 1) == -1
    assert cs.prop8(5, 1, 2, 0, 0) == -4
    with pytest.raises(ZeroLeadingCoeff):
        cs.prop8(3, 1, 0, 1, 1)
    with pytest.raises(ParamViolation):
        cs.prop8(2, 2, 1, 0, 0)


def test_prop9_values():
    assert cs.prop9(2, 2, 3, 1, 1, 1).as_integer() == 1
    assert cs.prop9(2, 2, 3, 1, 1, "w^1").as_integer() == -1
    assert cs.prop9(3, 2, 2, 1, 1, 1) == cs.prop9(3, 2, 2, 1, 1, 1, "brute_force")


def test_prop10_values():
    assert cs.prop10(9).as_tuple() == (1, 2, 2, 2)
    assert cs.prop10(3).as_tuple() == (0, 1, 0, 0)
    assert cs.prop10(7).as_tuple() == (1, 2, 1, 1)


def test_lemma8_values():
    assert cs.lemma8_X(3, 2, 2, 1, 1).is_zero()  # i odd, b even
    # i even, b even, beta = 0: each z in H_2 contributes its two square roots
    assert cs.lemma8_X(3, 2, 2, 0, 0).as_integer() == 8
    assert cs.lemma8_X(3, 2, 2, 0, 0, "brute_force").as_integer() == 8
    for beta in range(4):
        assert cs.lemma8_X(2, 2, 3, 1, beta) == cs.lemma8_X(2, 2, 3, 1, beta, "brute_force")


def test_lemma9_values():
    assert cs.lemma9_T(5, 2, 6, 1, 1, 0, 0, 1) == 0
    assert cs.lemma9_T(5, 2, 6, 1, 1, 0, 1, 1) == 4
    with pytest.raises(ParamViolation):
        cs.lemma9_T(5, 2, 4, 1, 1, 1, 1, 1)  # 4 does not divide 5 + 1


@settings(max_examples=40)
@given(st.sampled_from(ODD_FIELDS), st.data())
def test_prop7_and_prop8_match_oracle(pm, data):
    p, m = pm
    q = p**m
    a = data.draw(st.integers(0, q - 1))
    assert cs.prop7(p, m, a) == cs.prop7(p, m, a, "brute_force")
    a2 = data.draw(st.integers(1, q - 1))
    a1, a0 = data.draw(st.integers(0, q - 1)), data.draw(st.integers(0, q - 1))
    assert cs.prop8(p, m, a2, a1, a0) == cs.prop8(p, m, a2, a1, a0, "brute_force")


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13, 25, 27, 49, 81, 125])
def test_prop10_matches_oracle(q):
    assert cs.prop10(q) == cs.prop10(q, "brute_force")
    assert sum(cs.prop10(q).as_tuple()) == q - 2


@settings(max_examples=40)
@given(st.sampled_from([(3, 2), (5, 2), (7, 2), (2, 4), (3, 4), (2, 2)]), st.data())
def test_lemma9_matches_oracle(pm, data):
    p, m = pm
    q = p**m
    half = m // 2
    choices = [
        (b, j) for j in range(1, half + 1) if half % j == 0
        for b in range(2, p**j + 2)
        if (p**j + 1) % b == 0 and all((p**i + 1) % b for i in range(1, j))
    ]
    b, j = data.draw(st.sampled_from(choices))
    fs, be = data.draw(st.integers(0, q - 1)), data.draw(st.integers(0, q - 1))
    ga = data.draw(st.integers(1, q - 1))
    args = (p, m, b, j, half // j, fs, be, ga)
    assert cs.lemma9_T(*args) == cs.lemma9_T(*args, mode="brute_force")


def test_sum_query_round_trip():
    q = cs.SumQuery("P9", 3, 2, b=2, j=1, jp=1, a=1)
    assert cs.SumQuery(**q.to_dict()) == q
    assert cs.value_to_json(cs.evaluate(q)) == 1
    with pytest.raises(ParamViolation):
        cs.evaluate(cs.SumQuery("P9", 3, 2))
