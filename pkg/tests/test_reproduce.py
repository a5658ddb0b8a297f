import pytest

from bentcodes.errors import ParamViolation
from bentcodes.reproduce import (
    ACCEPTANCE,
    ARTIFACTS,
    EXAMPLES,
    TABLE2,
    artifact_names,
    parse_enumerator,
    parse_params,
    reproduce,
    run_sweep,
    table2_row,
)


def test_parse_enumerator():
    assert parse_enumerator("1 + 360z^48 + 2z^81") == {0: 1, 48: 360, 81: 2}
    assert parse_enumerator("1 + z^5") == {0: 1, 5: 1}
    with pytest.raises(ParamViolation):
        parse_enumerator("1 + 3x^2")


def test_parse_params():
    assert parse_params("[14, 7, 4]_2") == (14, 7, 4, 2)
    assert parse_params("[[150, 144, 3]]_4") == (150, 144, 3, 4)


def test_printed_enumerators_are_consistent():
    for cases in EXAMPLES.values():
        for case in cases:
            wd = parse_enumerator(case.enumerator)
            n, k, d, q = parse_params(case.code)
            assert sum(wd.values()) == q**k
            assert min(w for w in wd if w) == d and max(wd) == n


def test_registry():
    assert set(ACCEPTANCE) == set(range(1, 11))
    assert all(part in ARTIFACTS for parts in ACCEPTANCE.values() for part in parts)
    assert "acceptance7" in artifact_names()
    with pytest.raises(ParamViolation):
        reproduce("table99")


@pytest.mark.parametrize("row", range(1, len(TABLE2) + 1))
def test_table2_rows(row):
    claim = table2_row(row)
    assert claim.ok, claim.detail


@pytest.mark.parametrize("artifact", ["table15", "table16", "table17", "example5"])
def test_small_artifacts(artifact):
    res = reproduce(artifact)
    assert res.ok, [c for c in res.claims if not c.ok]


def test_single_sweep_instance():
    res = run_sweep(["eq13-p3-t1-m1-n5"])
    assert res.ok and len(res.claims) > 5
