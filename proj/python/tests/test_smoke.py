import json

import pytest

import supell


@pytest.fixture(scope="module")
def ds():
    return supell.load_embedded()


def test_row_counts(ds):
    counts = {g: len(ds.rows(g)) for g in ds.genera()}
    assert counts == {3: 5, 4: 9, 5: 20, 6: 36, 7: 27, 8: 22, 9: 50, 10: 55}
    assert len(ds) == 224


def test_signature_arithmetic():
    assert supell.quotient_genus(5, 4, supell.Signature("2^8")) == 0
    assert supell.moduli_dimension(0, 8) == 5
    assert supell.is_odd_signature(supell.Signature("2^5,4^2"))
    assert str(supell.Signature("2, 5, 5, 10")) == "2,5^2,10"
    with pytest.raises(ValueError):
        supell.quotient_genus(9, 30, supell.Signature("3,10^2"))


def test_repair():
    out = supell.complete_signature(10, 42, supell.Signature("2,4,21"))
    assert out.status == "corrected"
    assert out.repaired == supell.Signature("2,21,42")
    errata = supell.load_embedded().signature_errata()
    assert set(errata) == {(5, 5), (6, 11), (9, 8), (9, 9), (9, 11), (9, 12), (9, 13),
                           (10, 8), (10, 9), (10, 12), (10, 13), (10, 14)}
    assert errata[(9, 9)].ambiguous


def test_levels():
    assert supell.enumerate_levels(5) == [(2, 12), (3, 7), (6, 4), (11, 3)]
    assert supell.superelliptic_genus(11, 3) == 5


def test_classification(ds):
    assert supell.possibly_not_definable(ds, 5) == {1, 2, 6}
    v = supell.classify(ds, ds.find(5, 8))
    assert v["verdict"] == "definable" and v["reason"] == "unique_subgroup"
    assert supell.classify(ds, ds.find(5, 1))["verdict"] == "possibly_not_definable"
    assert supell.expected_blue(10) == {2, 3, 16, 17, 19, 20, 23}


def test_verify(ds):
    rep = supell.verify(ds)
    assert rep["exit_code"] == 0
    assert rep["rows_checked"] == 224
    assert supell.verify(ds, genus=9, strict=True)["exit_code"] == 1


def test_json_round_trip(ds):
    text = ds.to_json()
    assert json.loads(text)["schema"] == "v1"
    assert supell.from_json(text) == ds
    with pytest.raises(supell.SchemaError):
        supell.from_json('{"schema": "v1", "records": [{"genus": 5, "nr": 3}]}')


def test_record_fields(ds):
    r = ds.find(10, 55)
    assert (r.n, r.order, r.group, r.equation) == (3, 180, "A_5×C_3", "x(x^10+11x^5-1)")
    assert ds.find(3, 99) is None
    assert ds.export_csv(7).count("\n") == 28
