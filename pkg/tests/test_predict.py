import functools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bentcodes.catalog import SWEEP, build, preset
from bentcodes.codes import linear_form_values, parse_subset, weight_distribution
from bentcodes.errors import BentCodesError
from bentcodes.galois import field_make, tables
from bentcodes.predict import (
    MAX_WEIGHTS,
    THEOREM_IDS,
    TheoremSelector,
    count_N,
    count_N_I,
    count_N_III,
    selectors_for,
    value_dist,
    weights_thm,
)
from bentcodes.spectral import QuarticUnit, codomain_degree, dual_for_exponent, verify_condition

PLUS, MINUS = QuarticUnit(1, False), QuarticUnit(-1, False)


def test_value_dist_condition_ii():
    vd = value_dist("II", 3, 2, 8, MINUS)
    assert vd[0] == 657
    assert all(vd[i] == 738 for i in range(1, 9))


def test_value_dist_condition_iii_matches_example4():
    F, ex = build(preset("example4"))
    vd = value_dist("III", 3, 2, 6, ex.unit)
    assert vd[0] == 3**4
    # theta (-1)^{m-1} eps^m with eps^2 = -1 for p = 3 is +1, so |D_i| = 81 + 9 eta(-i)
    T = tables(field_make(3, 2))
    for i in range(1, 9):
        assert vd[i] == 81 + 9 * int(T.eta(T.neg(i)))
    assert np.array_equal(np.bincount(F.values, minlength=9), [vd[i] for i in range(9)])


def test_count_condition_i_generic_case():
    # F*(alpha) and F(0) outside I: the |I| correction only appears when beta = 0
    p, m, n, t = 2, 2, 6, 1
    kw = dict(I_size=2, fstar_in_I=False, f0_in_I=False)
    assert count_N_I(p, m, n, t, PLUS, beta_zero=False, **kw) == p ** (n - m - t) * 2
    assert count_N_I(p, m, n, t, PLUS, beta_zero=True, **kw) == p ** (n - m - t) * 2 - p ** (n // 2 - m) * 2


def test_count_condition_iii_zero_dual_value():
    _, ex = build(SWEEP["eq13-p3-t1-m1-n5"])
    for beta in range(3):
        assert count_N_III(3, 1, 5, 1, ex.unit, ex.l, a=0, fstar=0, beta=beta) == 3 ** (5 - 1 - 1)


@functools.lru_cache(maxsize=None)
def example1_with_dual():
    F, ex = build(preset("example1"))
    return F, ex, dual_for_exponent(F, verify_condition(F, "II", 1), ex.d)


@settings(max_examples=60)
@given(st.data())
def test_count_condition_ii_matches_direct_count(data):
    F, ex, Fs = example1_with_dual()
    alpha = data.draw(st.integers(1, F.domain.size - 1))
    beta = data.draw(st.integers(0, 2))
    a = data.draw(st.integers(0, 8))
    on = linear_form_values(F.domain, 1, alpha) == (-beta) % 3
    direct = int(np.count_nonzero((F.values == a) & on))
    closed = count_N("II", p=3, m=2, n=8, t=1, eps=ex.unit, l=ex.l, a=a, fstar=int(Fs.values[alpha]), beta=beta)
    assert closed == direct


PRINTED_CASES = [
    ("example1", "zero", "T3i", "1 + 1312z^414 + 5904z^432 + 11808z^441 + 656z^486 + 2z^657"),
    ("example1", "coset:b=2", "T4", "1 + 3608z^1944 + 5904z^1953 + 7216z^1980 + 2952z^1998 + 2z^2952"),
    ("example4", "zero", "T6i", "1 + 360z^48 + 576z^51 + 240z^54 + 720z^57 + 288z^60 + 2z^81"),
]


@pytest.mark.parametrize("name,subset,thm,printed", PRINTED_CASES)
def test_theorem_predictions_match_printed(name, subset, thm, printed):
    spec = preset(name)
    F, ex = build(spec)
    I = parse_subset(subset)
    sels = {s.id: s for s in selectors_for(ex.condition, spec.p, spec.t, codomain_degree(F.codomain),
                                            F.domain.n, ex.unit, ex.l, I)}
    assert str(weights_thm(sels[thm])) == printed


@pytest.mark.parametrize("name", ["eq3-p3-t1-m1-n2", "eq8-p5-t1-m1-n4", "eq13-p3-t1-m1-n5", "eq14-p5-t1-m1-s3"])
def test_predictions_match_enumeration(name):
    spec = SWEEP[name]
    F, ex = build(spec)
    m = codomain_degree(F.codomain)
    seen = 0
    for text in ("zero", "first:1", "single:1", "squares", "nonsquares", "coset:b=2"):
        I = parse_subset(text)
        try:
            size = I.resolve(F.codomain).size
            sels = selectors_for(ex.condition, spec.p, spec.t, m, F.domain.n, ex.unit, ex.l, I,
                                 f0=int(F.values[0]), I_size=size)
        except BentCodesError:
            continue
        if not sels:
            continue
        wd = weight_distribution(F, I, spec.t)
        for sel in sels:
            pred = weights_thm(sel)
            assert pred.same_as(wd), (text, sel.id)
            assert len(pred.nonzero_weights) <= MAX_WEIGHTS[sel.id]
            seen += 1
    assert seen > 0


@given(st.sampled_from(THEOREM_IDS))
def test_selector_round_trip(thm):
    sel = TheoremSelector(thm, 3, 1, 2, 8, MINUS, 2, 1, b=2, j=1, jp=1, eta_neg_a=1, eta_gamma=1)
    assert TheoremSelector.from_dict(sel.to_dict()) == sel


def test_selector_hypotheses_checked():
    with pytest.raises(BentCodesError):
        weights_thm(TheoremSelector("T3i", 3, 1, 2, 7, MINUS, 2))  # n odd
