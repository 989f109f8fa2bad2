import json

import pytest

from seqlab.errors import DepthError
from seqlab.experiment import (
    OBSERVATION_CATALOG,
    ExperimentSpec,
    catalog_spec,
    load_sequence,
    not_realizable_primes,
    realizable_star_primes,
    render_report,
    run_experiment,
)


def test_load_builtins():
    assert load_sequence("e", depth=4).values == (1, 5, 61, 1385)
    assert load_sequence("t", depth=6).values == (1, 1, 1, 1, 1, 691)
    assert load_sequence("b", depth=4).values == (12, 120, 252, 240)
    assert load_sequence("d", depth=3).values == (6, 30, 42)


def test_load_fixture_with_scale():
    seq = load_sequence("A054783", scale=5)
    assert seq.values[:4] == (5, 15, 170, 4935)
    assert seq.label.startswith("5x")


def test_load_local_path(tmp_path):
    p = tmp_path / "seq.txt"
    p.write_text("1 1\n2 2\n3 4\n")
    assert load_sequence(str(p)).values == (1, 2, 4)


def test_run_experiment_depth_guard():
    with pytest.raises(DepthError):
        run_experiment(ExperimentSpec(source="A010122", depth=100))


def test_local_witness_e61():
    doc = run_experiment(
        ExperimentSpec(source="e", depth=20, primes=(61,), local_checks=("dold", "sign"))
    )
    row = doc["local"][0]
    assert row["status"] == "not-realizable"
    # earliest witness overall is the sign failure at 6; the Dold witness is 9
    assert row["witness"] == {"check": "sign", "n": 6, "value": -60}
    doc = run_experiment(ExperimentSpec(source="e", depth=20, primes=(61,),
                                        local_checks=("dold",)))
    assert doc["local"][0]["witness"] == {"check": "dold", "n": 9, "value": -60}
    assert "not nilpotently realizable" in doc["annotations"][0]


def test_json_round_trip_and_determinism():
    spec = catalog_spec("A000032")
    doc = run_experiment(spec)
    text = render_report(doc, "json")
    assert json.loads(text) == doc
    assert render_report(run_experiment(catalog_spec("A000032")), "json") == text


def test_csv_row_count_is_primes_scanned():
    doc = run_experiment(ExperimentSpec(source="e", depth=30, prime_limit=30))
    out = render_report(doc, "csv")
    rows = out.strip().splitlines()
    assert len(rows) - 1 == len(doc["local"])  # header + one row per prime


def test_table_format_mentions_witness():
    doc = run_experiment(ExperimentSpec(source="e", depth=20, primes=(61,)))
    table = render_report(doc, "table")
    assert "not realizable at:" in table
    assert "61" in table


def test_all_formats_carry_global_checks():
    doc = run_experiment(ExperimentSpec(source="e", depth=10, include_local=False))
    for fmt in ("table", "json", "csv"):
        out = render_report(doc, fmt)
        assert "dold" in out


def test_magical_section():
    doc = run_experiment(
        ExperimentSpec(source="A000032", depth=30, include_local=False,
                       include_magical=True, max_shift=1)
    )
    mag = doc["magical"]
    assert mag["all_pass"] is False
    assert mag["entries"][0]["status"] == "pass"
    assert mag["entries"][1]["witness"]["n"] == 2


def test_catalog_specs_complete():
    assert set(OBSERVATION_CATALOG) == {
        "A000032", "A002895", "A005259", "A005258",
        "A005725", "A054783", "A053175", "A001850",
    }
    spec = catalog_spec("A054783")
    assert spec.scale == 5
    assert spec.local_checks == ("dold",)
    with pytest.raises(ValueError):
        catalog_spec("A000001")


def test_catalog_lucas_partition():
    doc = run_experiment(catalog_spec("A000032"))
    assert not_realizable_primes(doc) == [2, 3, 7, 23, 43, 47, 67, 107]
    stars = realizable_star_primes(doc)
    for q in (5, 11, 13, 17, 19, 29, 31):
        assert q in stars
