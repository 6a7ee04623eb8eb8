"""Configuration validation and the check-suite machinery."""

import json

import pytest

from wplrec.verify import (
    ConfigError,
    adjunction_suite,
    lemma_suite,
    make_config,
    run_suite,
    run_sweep,
    theorem_suite,
)

LEMMA_ITEM_IDS = [
    "restrict.free_value",
    "restrict.simple_value",
    "restrict.interval_value",
    "left.free_value",
    "left.simple_value",
    "right.free_value",
    "right.simple_value",
    "functors.twist_compat",
    "restrict.cm_preserved",
    "left.cm_preserved",
    "right.cm_preserved",
]


def test_make_config_defaults():
    cfg = make_config((2, 3, 5), 2)
    doc = cfg.to_doc()
    assert doc["weights"] == [2, 3, 5]
    assert doc["reduce"] == 2
    assert doc["field"] == "rational"
    assert doc["window"] == [-3, 6]
    assert doc["samples"] == "rich"
    assert len(doc["lambda"]) == 3


def test_make_config_collects_every_violation():
    with pytest.raises(ConfigError) as exc:
        make_config(("x", 3), 0, field="gf:nope", h_min=2, h_max=-2,
                    samples="bogus")
    names = {d["name"] for d in exc.value.diagnostics}
    assert {"bad-weights", "unknown-field", "empty-window", "bad-samples"} <= names


def test_make_config_reduce_out_of_range():
    with pytest.raises(ConfigError) as exc:
        make_config((2, 3, 5), 6)
    assert [d["name"] for d in exc.value.diagnostics] == ["reduce-out-of-range"]
    with pytest.raises(ConfigError):
        make_config((2, 3, 5), 0)


def test_make_config_duplicate_lambda_rejected():
    with pytest.raises(ConfigError) as exc:
        make_config((2, 3, 5), 2, lam="[1:0],[1:0],[0:1]")
    assert [d["name"] for d in exc.value.diagnostics] == ["bad-lambda"]


def test_make_config_field_too_small_for_points():
    # gf:2 hosts exactly 3 projective points, enough for 3 weights but not 4
    make_config((2, 3, 5), 2, field="gf:2")
    with pytest.raises(ConfigError) as exc:
        make_config((2, 2, 2, 2), 1, field="gf:2")
    assert [d["name"] for d in exc.value.diagnostics] == ["bad-lambda"]


def test_check_report_shape():
    cfg = make_config((2, 2, 2), 1, samples="reduced")
    rep = run_suite(cfg, "lemma-items")
    assert set(rep) == {"config", "suite", "checks", "summary"}
    for check in rep["checks"]:
        assert set(check) == {"id", "anchor", "params", "status", "witness"}
        assert check["status"] in ("pass", "fail", "skip")


def test_lemma_items_subset():
    cfg = make_config((2, 2, 2), 1, samples="reduced")
    items = lemma_suite(cfg, items_only=True)
    assert [c.check_id for c in items] == LEMMA_ITEM_IDS
    full = lemma_suite(cfg)
    assert [c.check_id for c in full[:len(items)]] == LEMMA_ITEM_IDS
    assert len(full) > len(items)


def test_small_config_lemmas_all_pass():
    cfg = make_config((2, 2, 2), 1, samples="reduced")
    rep = run_suite(cfg, "lemmas")
    assert rep["summary"]["fail"] == 0
    assert rep["summary"]["skip"] == 0
    assert rep["summary"]["pass"] == len(rep["checks"])


def test_degenerate_config_gets_identity_check():
    cfg = make_config((2, 2, 2), 2, samples="reduced")
    ids = [c.check_id for c in lemma_suite(cfg)]
    assert "functors.degenerate_identity" in ids
    cfg = make_config((2, 2, 2), 1, samples="reduced")
    assert "functors.degenerate_identity" not in [c.check_id for c in lemma_suite(cfg)]


def test_adjunction_suite_passes():
    cfg = make_config((2, 2, 2), 1, samples="reduced")
    checks = adjunction_suite(cfg)
    assert checks and all(c.status == "pass" for c in checks)


def test_theorem_suite_skips_outside_length_three():
    cfg = make_config((2, 3), 1, samples="reduced")
    checks = theorem_suite(cfg)
    assert checks[0].check_id == "recollement.scope"
    assert checks[0].witness["reason"] == "out-of-scope"
    assert all(c.status == "skip" for c in checks)


def test_undersized_window_skips_not_fails():
    cfg = make_config((2, 3, 5), 2, h_min=0, h_max=1, samples="reduced")
    rep = run_suite(cfg, "lemmas")
    assert rep["summary"]["fail"] == 0
    assert rep["summary"]["skip"] > 0
    for check in rep["checks"]:
        if check["status"] == "skip":
            assert check["witness"]["reason"] == "insufficient-window"


def test_reports_are_deterministic():
    a = run_suite(make_config((2, 3, 5), 2, samples="reduced"), "lemma-items")
    b = run_suite(make_config((2, 3, 5), 2, samples="reduced"), "lemma-items")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_seed_changes_witnesses_not_verdicts():
    a = run_suite(make_config((2, 3, 5), 2, samples="reduced", seed=0), "lemma-items")
    b = run_suite(make_config((2, 3, 5), 2, samples="reduced", seed=7), "lemma-items")
    assert [c["status"] for c in a["checks"]] == [c["status"] for c in b["checks"]]


def test_run_suite_rejects_unknown_suite():
    cfg = make_config((2, 2, 2), 1, samples="reduced")
    with pytest.raises(ValueError):
        run_suite(cfg, "everything")


def test_tiny_sweep_aggregates():
    rep = run_sweep(max_weight=1, extra=())
    assert rep["config_count"] == 1
    totals = {"pass": 0, "fail": 0, "skip": 0}
    for sub in rep["configs"]:
        for k in totals:
            totals[k] += sub["summary"][k]
    assert totals == rep["summary"]
    assert rep["summary"]["fail"] == 0
