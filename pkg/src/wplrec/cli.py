"""Command-line driver: configuration parsing, suite selection, reports.

Two subcommands: "run" verifies one configuration, "sweep" iterates every
weight triple up to a bound and every reduced last weight, aggregating a
single report. Reports are deterministic for a fixed configuration and
seed; JSON is dumped with sorted keys and no timestamps, and the text
format mirrors the same check set line for line.

Exit status is 0 exactly when no check failed. Configuration problems
exit 2, listing every violated constraint as a named diagnostic.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .verify import SUITES, ConfigError, VerifyConfig, make_config, run_suite, run_sweep

__all__ = ["RunConfig", "SweepConfig", "parse_config", "main"]

OUT_DIR_ENV = "WPLREC_OUT_DIR"

_SWEEP_SUITES = SUITES + ("lemma-items",)


@dataclass(frozen=True)
class RunConfig:
    verify: VerifyConfig
    suite: str
    fmt: str
    out: str | None


@dataclass(frozen=True)
class SweepConfig:
    suite: str
    max_weight: int
    extra: tuple[tuple[int, ...], ...]
    field: str
    h_min: int
    h_max: int
    seed: int
    fmt: str
    out: str | None


def _split_ints(text: str) -> list[int]:
    return [int(x) for x in str(text).split(",") if x.strip() != ""]


def _parse_triples(text: str) -> tuple[tuple[int, ...], ...]:
    """Semicolon-separated weight tuples, e.g. "2,3,5;3,3,4"; "none" for
    no extras."""
    if text in ("", "none"):
        return ()
    return tuple(tuple(_split_ints(part)) for part in text.split(";"))


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="wplrec",
        description="Verify restriction and induction functor claims over "
                    "weighted projective line coordinate algebras by exact "
                    "degreewise linear algebra.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="verify one configuration")
    run.add_argument("--config", metavar="FILE",
                     help="JSON file of defaults; explicit flags override")
    run.add_argument("--weights", default="2,3,5",
                     help="comma-separated positive integers (default 2,3,5)")
    run.add_argument("--reduce", default="2",
                     help="reduced last weight r' (default 2)")
    run.add_argument("--lambda", dest="lam", default="auto",
                     help="auto or projective points [a:b],[a:b],... "
                          "(default auto)")
    run.add_argument("--field", default="rational",
                     help="rational or gf:P (default rational)")
    run.add_argument("--hmin", default="-3", help="window bottom (default -3)")
    run.add_argument("--hmax", default="6", help="window top (default 6)")
    run.add_argument("--suite", default="all", choices=SUITES)
    run.add_argument("--samples", default="rich", choices=("rich", "reduced"))
    run.add_argument("--seed", default="0")
    run.add_argument("--format", dest="fmt", default="text",
                     choices=("text", "json"))
    run.add_argument("--out", default=None,
                     help=f"report path; relative paths resolve inside "
                          f"${OUT_DIR_ENV} when set, default stdout")

    sw = sub.add_parser(
        "sweep",
        help="verify every weight triple up to a bound and every r'",
    )
    sw.add_argument("--config", metavar="FILE",
                    help="JSON file of defaults; explicit flags override")
    sw.add_argument("--max-weight", dest="max_weight", type=int, default=4)
    sw.add_argument("--extra", default="2,3,5",
                    help="extra weight triples, semicolon separated; none "
                         "to disable (default 2,3,5)")
    sw.add_argument("--suite", default="lemma-items", choices=_SWEEP_SUITES)
    sw.add_argument("--field", default="rational")
    sw.add_argument("--hmin", default="-3")
    sw.add_argument("--hmax", default="6")
    sw.add_argument("--seed", default="0")
    sw.add_argument("--format", dest="fmt", default="text",
                    choices=("text", "json"))
    sw.add_argument("--out", default=None)
    return ap, (run, sw)


def parse_config(argv=None):
    """Parse flags (and the optional config file) into a RunConfig or
    SweepConfig, raising ConfigError with every violated constraint."""
    ap, subparsers = _build_parser()
    # scan for --config first so file values become overridable defaults
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if known.config:
        try:
            with open(known.config) as fh:
                file_defaults = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError([{"name": "bad-config-file",
                                "message": f"{known.config}: {exc}"}])
        if not isinstance(file_defaults, dict):
            raise ConfigError([{"name": "bad-config-file",
                                "message": f"{known.config}: expected an object"}])
        if "lambda" in file_defaults:
            file_defaults["lam"] = file_defaults.pop("lambda")
        if "format" in file_defaults:
            file_defaults["fmt"] = file_defaults.pop("format")
        for sp in subparsers:
            dests = {a.dest for a in sp._actions}
            sp.set_defaults(**{k: v for k, v in file_defaults.items()
                               if k in dests})
    args = ap.parse_args(argv)

    if args.command == "sweep":
        diags = []
        try:
            extra = _parse_triples(args.extra)
        except ValueError:
            diags.append({"name": "bad-extra",
                          "message": f"extra triples {args.extra!r} are not "
                                     f"comma/semicolon separated integers"})
            extra = ()
        if args.max_weight < 1:
            diags.append({"name": "bad-max-weight",
                          "message": f"max weight {args.max_weight} must be "
                                     f"positive"})
        # validate the shared numeric flags through a probe configuration
        try:
            make_config([2, 3, 5], 2, field=args.field, h_min=args.hmin,
                        h_max=args.hmax, seed=args.seed, samples="reduced")
        except ConfigError as exc:
            diags.extend(exc.diagnostics)
        if diags:
            raise ConfigError(diags)
        return SweepConfig(
            suite=args.suite,
            max_weight=args.max_weight,
            extra=extra,
            field=args.field,
            h_min=int(args.hmin),
            h_max=int(args.hmax),
            seed=int(args.seed),
            fmt=args.fmt,
            out=args.out,
        )

    diags = []
    weights = None
    try:
        weights = _split_ints(args.weights)
    except ValueError:
        diags.append({
            "name": "bad-weights",
            "message": f"weights {args.weights!r} are not comma-separated "
                       f"integers",
        })
    try:
        # a probe sequence when the real one did not parse, so the other
        # flags still get validated in the same pass
        cfg = make_config(weights if weights is not None else [2, 3, 5],
                          args.reduce, field=args.field, lam=args.lam,
                          h_min=args.hmin, h_max=args.hmax, seed=args.seed,
                          samples=args.samples)
    except ConfigError as exc:
        diags.extend(exc.diagnostics)
    if diags:
        raise ConfigError(diags)
    return RunConfig(verify=cfg, suite=args.suite, fmt=args.fmt, out=args.out)


# ---------------------------------------------------------------------------
# rendering


def _config_line(doc: dict) -> str:
    return ("weights ({w}) reduce {r} lambda {lam} field {f} "
            "window [{a},{b}] seed {s} samples {m}").format(
        w=",".join(str(x) for x in doc["weights"]),
        r=doc["reduce"],
        lam=",".join(doc["lambda"]),
        f=doc["field"],
        a=doc["window"][0],
        b=doc["window"][1],
        s=doc["seed"],
        m=doc["samples"],
    )


def format_text(report: dict) -> str:
    """Human-readable table carrying the same check ids and statuses as
    the JSON document."""
    lines = [f"configuration: {_config_line(report['config'])}",
             f"suite: {report['suite']}", ""]
    checks = report["checks"]
    width = max((len(c["id"]) for c in checks), default=0)
    for c in checks:
        lines.append(f"{c['status']:<4}  {c['id']:<{width}}  {c['anchor']}")
        if c["status"] == "skip":
            lines.append(f"{'':<6}{'':<{width}}  skipped: "
                         f"{c['witness'].get('detail', c['witness'].get('reason'))}")
    s = report["summary"]
    lines.append("")
    lines.append(f"{len(checks)} checks: {s['pass']} pass, {s['fail']} fail, "
                 f"{s['skip']} skip")
    return "\n".join(lines) + "\n"


def format_sweep_text(report: dict) -> str:
    lines = [
        f"sweep: suite {report['suite']}, weights up to "
        f"{report['max_weight']}, {report['config_count']} configurations",
        "",
    ]
    for rep in report["configs"]:
        doc = rep["config"]
        s = rep["summary"]
        head = "({w}) r'={r}".format(
            w=",".join(str(x) for x in doc["weights"]), r=doc["reduce"])
        lines.append(f"{head:<16} {s['pass']} pass, {s['fail']} fail, "
                     f"{s['skip']} skip")
        for c in rep["checks"]:
            if c["status"] != "pass":
                lines.append(f"    {c['status']}  {c['id']}")
    t = report["summary"]
    lines.append("")
    lines.append(f"total: {t['pass']} pass, {t['fail']} fail, {t['skip']} skip")
    return "\n".join(lines) + "\n"


def _write_report(payload: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(payload)
        return
    path = out
    if not os.path.isabs(path):
        base = os.environ.get(OUT_DIR_ENV)
        if base:
            path = os.path.join(base, path)
    try:
        parent = os.path.dirname(path)
        if parent:
            os.makedirs(parent, exist_ok=True)
        with open(path, "w") as fh:
            fh.write(payload)
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc}") from exc


def main(argv=None) -> int:
    try:
        cfg = parse_config(argv)
    except ConfigError as exc:
        for d in exc.diagnostics:
            print(f"error[{d['name']}]: {d['message']}", file=sys.stderr)
        return 2

    if isinstance(cfg, SweepConfig):
        report = run_sweep(suite=cfg.suite, max_weight=cfg.max_weight,
                           extra=cfg.extra, field=cfg.field, h_min=cfg.h_min,
                           h_max=cfg.h_max, seed=cfg.seed)
        text = format_sweep_text(report)
    else:
        report = run_suite(cfg.verify, cfg.suite)
        text = format_text(report)

    if cfg.fmt == "json":
        payload = json.dumps(report, sort_keys=True, indent=2) + "\n"
    else:
        payload = text
    try:
        _write_report(payload, cfg.out)
    except OSError as exc:
        print(f"error[io]: {exc}", file=sys.stderr)
        return 2
    return 0 if report["summary"]["fail"] == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
