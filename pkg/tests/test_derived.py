import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bentcodes.catalog import FamilySpec, build, preset
from bentcodes.codes import LinearCode, build_code, gram_fq, parse_subset
from bentcodes.derived import (
    classify,
    hamming_max_d,
    is_lcd,
    lcd_extend,
    lcd_params,
    load_best_known,
    quantum_classify,
    quantum_hamming_max_d,
    steane_from_code,
    steane_quantum,
)
from bentcodes.errors import NotSelfOrthogonal, SteaneDimensionGap


def eq3(p, t, m, n1):
    return build(FamilySpec("EQ3", p, t, m, n1=n1, coeffs={"alpha": 1}))[0]


def test_lcd_from_gf9_instance():
    F = eq3(3, 2, 1, 2)
    lcd, dual = lcd_params(build_code(F, [1], 2))
    assert (lcd.n, lcd.k) == (27, 3)
    assert (dual.n, dual.k, dual.d, dual.q) == (27, 24, 3, 9)


def test_lcd_from_gf8_instance():
    F = eq3(2, 3, 2, 3)
    _, dual = lcd_params(build_code(F, [1], 3))
    assert (dual.n, dual.k, dual.d, dual.q) == (17, 14, 3, 8)


def test_extension_gram_is_identity():
    F, _ = build(preset("example4"))
    ext = lcd_extend(build_code(F, parse_subset("zero"), 1))
    k = ext.generator.shape[0]
    assert np.array_equal(gram_fq(ext.generator, ext.field), np.eye(k, dtype=np.int64))
    assert is_lcd(ext)


def test_lcd_needs_self_orthogonal_input():
    with pytest.raises(NotSelfOrthogonal):
        lcd_extend(LinearCode(3, 1, np.array([[1, 0, 0]])))


def test_steane_examples():
    qp = steane_quantum(eq3(2, 3, 2, 3), [1], 3)
    assert str(qp) == "[[14, 10, 3]]_8" and qp.bound_verdict == "hamming_optimal"
    qp = steane_quantum(eq3(2, 2, 3, 4), [1, 2, 3, 4, 5], 2)
    assert str(qp) == "[[150, 144, 3]]_4" and qp.bound_verdict == "hamming_optimal"


def test_steane_dimension_gap():
    # the ternary repetition code of length 3 is self-orthogonal but has dimension 1
    with pytest.raises(SteaneDimensionGap):
        steane_from_code(LinearCode(3, 1, np.array([[1, 1, 1]])))


@pytest.mark.parametrize("q", range(2, 26))
def test_repetition_dual_contributes_three(q):
    assert math.ceil((q + 1) * 2 / q) == 3


def test_hamming_bounds():
    assert hamming_max_d(657, 648, 3) == 4
    assert classify(657, 648, 3, 3) == "hamming_almost_optimal"
    assert classify(72, 68, 4, 9) == "hamming_optimal"
    assert hamming_max_d(5, 5, 3) == 1
    assert quantum_hamming_max_d(14, 10, 8) == 3
    assert quantum_classify(150, 144, 3, 4) == "hamming_optimal"
    assert quantum_hamming_max_d(9, 9, 5) == 1


@given(st.integers(2, 60), st.integers(1, 60), st.sampled_from([2, 3, 4, 5, 7, 8, 9]))
def test_hamming_bound_is_tight_at_its_radius(n, k, q):
    k = min(k, n)
    d = hamming_max_d(n, k, q)
    r = (d - 1) // 2
    ball = sum(math.comb(n, i) * (q - 1) ** i for i in range(r + 1))
    assert ball <= q ** (n - k)
    assert d <= n - k + 1


def test_best_known_upgrade(tmp_path):
    path = tmp_path / "best.csv"
    path.write_text("q,n,k,d_best\n3,657,648,3\n")
    table = load_best_known(path)
    assert classify(657, 648, 3, 3, table) == "best_known"
    assert classify(657, 648, 2, 3, table) == "below"
