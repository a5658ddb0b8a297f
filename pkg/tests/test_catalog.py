import numpy as np
import pytest
from hypothesis import given, strategies as st

from bentcodes.catalog import PRESETS, SWEEP, FamilySpec, balanced_default, build, preset, validate
from bentcodes.errors import BentCodesError, ParamViolation
from bentcodes.spectral import QuarticUnit, codomain_size


def test_balanced_default_fibers():
    B = balanced_default(3, 2, 2)
    assert (np.bincount(B.values, minlength=4) == 2).all()
    assert B.values[0] == 0
    assert (np.bincount(balanced_default(2, 1, 3).values, minlength=3) == 3).all()


def test_example1_metadata():
    F, ex = build(preset("example1"))
    assert F.domain.size == 3**8
    assert (ex.condition, ex.unit, ex.l, ex.d) == ("II", QuarticUnit(-1, False), 2, 2)


def test_example4_metadata():
    _, ex = build(preset("example4"))
    assert (ex.condition, ex.unit, ex.l, ex.d) == ("III", QuarticUnit(1, False), 2, 2)


def test_eq3_default_instance():
    F, ex = build(FamilySpec("EQ3", 2, 1, 2, n1=3, coeffs={"alpha": 1}))
    assert F.domain.size == 64
    assert (ex.condition, ex.unit) == ("I", QuarticUnit(1, False))


def test_unknown_preset():
    with pytest.raises(ParamViolation):
        preset("example99")


@pytest.mark.parametrize(
    "bad",
    [
        FamilySpec("EQ8", 3, 1, 2, n=7, coeffs={"alpha": 1}),  # m must divide n/2
        FamilySpec("EQ13", 2, 1, 1, n=5, coeffs={"alpha": 1}),  # odd characteristic only
        FamilySpec("EQ99", 3, 1, 1, n=4),
    ],
)
def test_invalid_specs_rejected(bad):
    with pytest.raises(BentCodesError):
        validate(bad)


def test_table2_presets_cover_all_rows():
    rows = [k for k in PRESETS if k.startswith("table2-row")]
    assert len(rows) == 34


@given(st.sampled_from(sorted(PRESETS)))
def test_spec_json_round_trip(name):
    spec = PRESETS[name]
    assert FamilySpec.from_json(spec.to_json()) == spec


@pytest.mark.parametrize("name", sorted(SWEEP))
def test_sweep_instances_build(name):
    F, ex = build(SWEEP[name])
    assert F.domain.size <= 3**8
    assert F.values.max() < codomain_size(F.codomain)
    assert ex.condition in ("I", "II", "III")
