"""Command-line driver: flag parsing, report formats, exit codes."""

import json

import pytest

from wplrec.cli import (
    OUT_DIR_ENV,
    RunConfig,
    SweepConfig,
    main,
    parse_config,
)
from wplrec.verify import ConfigError

FAST = ["--weights", "2,2,2", "--reduce", "1", "--samples", "reduced",
        "--suite", "lemmas"]


def test_parse_run_defaults():
    cfg = parse_config(["run"])
    assert isinstance(cfg, RunConfig)
    assert cfg.suite == "all" and cfg.fmt == "text" and cfg.out is None
    doc = cfg.verify.to_doc()
    assert doc["weights"] == [2, 3, 5] and doc["reduce"] == 2


def test_parse_sweep_defaults():
    cfg = parse_config(["sweep"])
    assert isinstance(cfg, SweepConfig)
    assert cfg.suite == "lemma-items"
    assert cfg.max_weight == 4
    assert cfg.extra == ((2, 3, 5),)


def test_parse_sweep_extra_none():
    cfg = parse_config(["sweep", "--extra", "none"])
    assert cfg.extra == ()
    cfg = parse_config(["sweep", "--extra", "2,3,5;3,3,4"])
    assert cfg.extra == ((2, 3, 5), (3, 3, 4))


def test_small_finite_field_accepted():
    # gf:2 has exactly 3 projective points, just enough for 3 weights
    cfg = parse_config(["run", "--field", "gf:2"])
    assert cfg.verify.to_doc()["field"] == "gf:2"


def test_reduce_out_of_range_exits_2(capsys):
    rc = main(["run", "--weights", "2,3,5", "--reduce", "9"])
    assert rc == 2
    err = capsys.readouterr().err
    assert "error[reduce-out-of-range]" in err


def test_bad_field_descriptor_exits_2(capsys):
    rc = main(["run", "--field", "gf:nope"])
    assert rc == 2
    err = capsys.readouterr().err
    assert "error[unknown-field]" in err and "gf:nope" in err


def test_every_violation_reported(capsys):
    rc = main(["run", "--weights", "a,b", "--field", "gf:nope",
               "--hmin", "5", "--hmax", "1"])
    assert rc == 2
    err = capsys.readouterr().err
    for name in ("bad-weights", "unknown-field", "empty-window"):
        assert f"error[{name}]" in err


def test_clean_run_exits_0(capsys):
    rc = main(["run"] + FAST)
    assert rc == 0
    out = capsys.readouterr().out
    assert "0 fail" in out


def test_text_and_json_carry_same_checks(capsys):
    assert main(["run"] + FAST) == 0
    text = capsys.readouterr().out
    assert main(["run"] + FAST + ["--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    for check in report["checks"]:
        assert f"{check['status']:<4}  {check['id']}" in text
    counted = f"{len(report['checks'])} checks"
    assert counted in text


def test_out_relative_resolves_in_env_dir(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv(OUT_DIR_ENV, str(tmp_path))
    rc = main(["run"] + FAST + ["--format", "json", "--out", "rep/r.json"])
    assert rc == 0
    assert capsys.readouterr().out == ""
    report = json.loads((tmp_path / "rep" / "r.json").read_text())
    assert report["summary"]["fail"] == 0


def test_out_absolute_ignores_env_dir(tmp_path, monkeypatch):
    monkeypatch.setenv(OUT_DIR_ENV, str(tmp_path / "unused"))
    target = tmp_path / "direct.txt"
    rc = main(["run"] + FAST + ["--out", str(target)])
    assert rc == 0
    assert "checks:" in target.read_text()
    assert not (tmp_path / "unused").exists()


def test_unwritable_out_exits_2(tmp_path, capsys):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    rc = main(["run"] + FAST + ["--out", str(blocker / "r.json")])
    assert rc == 2
    assert "error[io]" in capsys.readouterr().err


def test_config_file_defaults_and_flag_override(tmp_path):
    cfile = tmp_path / "c.json"
    cfile.write_text(json.dumps({
        "weights": "2,2,2",
        "reduce": 1,
        "samples": "reduced",
        "format": "json",
        "lambda": "auto",
    }))
    cfg = parse_config(["run", "--config", str(cfile)])
    assert cfg.fmt == "json"
    assert cfg.verify.to_doc()["weights"] == [2, 2, 2]
    # explicit flags beat file values
    cfg = parse_config(["run", "--config", str(cfile), "--format", "text",
                        "--weights", "2,3,5", "--reduce", "2"])
    assert cfg.fmt == "text"
    assert cfg.verify.to_doc()["weights"] == [2, 3, 5]


def test_config_file_errors_are_named():
    with pytest.raises(ConfigError) as exc:
        parse_config(["run", "--config", "/no/such/file.json"])
    assert exc.value.diagnostics[0]["name"] == "bad-config-file"


def test_sweep_main_aggregates(capsys):
    rc = main(["sweep", "--max-weight", "1", "--extra", "none"])
    assert rc == 0
    out = capsys.readouterr().out
    assert out.startswith("sweep:")
    assert "total:" in out and "0 fail" in out


def test_sweep_json_report(capsys):
    rc = main(["sweep", "--max-weight", "1", "--extra", "none",
               "--format", "json"])
    assert rc == 0
    report = json.loads(capsys.readouterr().out)
    assert report["config_count"] == 1
    assert report["summary"]["fail"] == 0
