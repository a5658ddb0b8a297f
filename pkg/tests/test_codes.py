import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bentcodes.catalog import SWEEP, build, preset
from bentcodes.codes import (
    LinearCode,
    SubsetSpec,
    WeightDist,
    build_code,
    code_weight_distribution,
    defining_set,
    dual_distance_upto,
    is_self_orthogonal,
    parse_subset,
    weight_distribution,
)
from bentcodes.errors import FullSubset, ParamViolation
from bentcodes.spectral import codomain_size


@pytest.fixture(scope="module")
def ex1():
    return build(preset("example1"))[0]


@pytest.fixture(scope="module")
def ex4():
    return build(preset("example4"))[0]


def test_defining_set_sizes(ex1, ex4):
    assert defining_set(ex1, parse_subset("zero")).size == 657
    assert defining_set(ex1, parse_subset("single:w^3")).size == 738
    assert defining_set(ex4, parse_subset("zero")).size == 3 ** (6 - 2)


def test_code_shapes(ex4):
    code = build_code(ex4, parse_subset("zero"), 1)
    assert (code.length, code.dimension, code.q) == (81, 7, 3)
    F5 = build(preset("example5"))[0]
    code5 = build_code(F5, parse_subset("single:w^1"), 2)
    assert (code5.length, code5.dimension, code5.q) == (72, 4, 9)


def test_full_subset_is_rejected(ex4):
    with pytest.raises(FullSubset):
        build_code(ex4, list(range(codomain_size(ex4.codomain))), 1)


def test_example_enumerators(ex1, ex4):
    assert str(weight_distribution(ex4, parse_subset("zero"), 1)) == (
        "1 + 360z^48 + 576z^51 + 240z^54 + 720z^57 + 288z^60 + 2z^81"
    )
    assert str(weight_distribution(ex1, parse_subset("zero"), 1)) == (
        "1 + 1312z^414 + 5904z^432 + 11808z^441 + 656z^486 + 2z^657"
    )
    F2 = build(preset("example2"))[0]
    assert str(weight_distribution(F2, parse_subset("single:1"), 2)) == (
        "1 + 27224z^648 + 11152z^657 + 20664z^666 + 8z^738"
    )


def test_self_orthogonality(ex4):
    assert is_self_orthogonal(build_code(ex4, parse_subset("zero"), 1))
    assert not is_self_orthogonal(LinearCode(3, 1, np.array([[1, 0, 0]])))
    F6 = build(preset("example6"))[0]
    assert is_self_orthogonal(build_code(F6, parse_subset("coset:b=4"), 2))


def test_dual_distances(ex1):
    assert dual_distance_upto(build_code(ex1, parse_subset("zero"), 1), 3) == (3, True)
    F5 = build(preset("example5"))[0]
    assert dual_distance_upto(build_code(F5, parse_subset("single:w^1"), 2), 4) == (4, True)
    dup = LinearCode(3, 1, np.array([[1, 1, 0, 1], [0, 0, 1, 2]]))
    assert dual_distance_upto(dup, 3) == (2, True)


def test_dual_distance_cap_reports_lower_bound(ex1):
    assert dual_distance_upto(build_code(ex1, parse_subset("zero"), 1), 2) == (3, False)
    with pytest.raises(ParamViolation):
        dual_distance_upto(build_code(ex1, parse_subset("zero"), 1), 1)


@settings(max_examples=15)
@given(st.sampled_from(["eq3-p2-t1-m2-n3", "eq3-p3-t1-m1-n2", "eq8-p3-t1-m1-n4", "eq15-p5-t1-m1"]), st.data())
def test_enumeration_matches_brute_force(name, data):
    spec = SWEEP[name]
    F, _ = build(spec)
    size = codomain_size(F.codomain)
    I = sorted(data.draw(st.sets(st.integers(0, size - 1), min_size=1, max_size=size - 1)))
    code = build_code(F, I, spec.t)
    fast = weight_distribution(F, I, spec.t)
    assert fast == weight_distribution(F, I, spec.t, use_orbits=False)
    assert fast.pairs == code_weight_distribution(code).pairs
    assert fast.total == code.q**code.dimension


def test_parallel_enumeration_is_identical(ex4):
    I = parse_subset("nonsquares")
    assert weight_distribution(ex4, I, 1, workers=3) == weight_distribution(ex4, I, 1)


@pytest.mark.parametrize(
    "text",
    ["zero", "single:w^3", "squares", "nonsquares", "coset:b=4,gamma=w", "explicit:1,2,5", "first:3"],
)
def test_subset_parsing_round_trip(text):
    spec = parse_subset(text)
    assert SubsetSpec.from_dict(spec.to_dict()) == spec


def test_subset_errors(ex4):
    with pytest.raises(ParamViolation):
        parse_subset("bogus")
    with pytest.raises(ParamViolation):
        parse_subset("coset:b=5").resolve(ex4.codomain)


def test_weight_dist_helpers():
    wd = WeightDist.from_counts({57: 2, 0: 1, 48: 3})
    assert wd.pairs == ((0, 1), (48, 3), (57, 2))
    assert wd.min_distance == 48 and wd.total == 6
