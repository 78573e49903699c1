"""Command-line entry point: ``run``, ``audit`` and ``validate``.

Options come from flags, then from an optional ``--config`` file of flat
``key = value`` lines (``#`` starts a comment), then from built-in defaults.
Relative output paths are resolved under ``$DRIVEN_ENTANGLEMENT_OUTDIR`` when
that variable is set.

Exit status: 0 success, 1 bad arguments or failed validation, 2 audit found a
discrepancy.
"""

from __future__ import annotations

import argparse
import csv
import math
import os
import sys
from pathlib import Path

from .analysis import BACKENDS, DEFAULT_THRESHOLD, NegativityTrace, TimeGrid, detect_events, sweep
from .closed_forms import audit_analytic
from .dynamics import SCENARIO_NAMES, make_scenario
from .errors import EntanglementError
from .states import OneParam, QutritPure, TwoParam, XState, validate_density

OUTDIR_ENV = "DRIVEN_ENTANGLEMENT_OUTDIR"
EXIT_OK, EXIT_BAD, EXIT_DISCREPANCY = 0, 1, 2

FAMILIES = ("x-state", "one-param", "two-param", "qutrit-pure")
DEFAULT_FAMILY = {
    "qubit-qubit": "x-state",
    "qubit-qutrit/drive-qubit": "one-param",
    "qubit-qutrit/drive-qutrit": "one-param",
    "qutrit-qutrit": "qutrit-pure",
}

DEFAULTS = {
    "scenario": "qubit-qubit",
    "family": None,
    "c11": -1.0,
    "c22": -1.0,
    "c33": -1.0,
    "P": 0.0,
    "alpha": 0.0,
    "beta": 0.0,
    "gamma": 1.0,
    "a1": 1 / math.sqrt(3),
    "a2": 1 / math.sqrt(3),
    "a3": None,
    "g": 1.0,
    "g1": 1.0,
    "g2": 1.0,
    "tmin": 0.0,
    "tmax": 2 * math.pi,
    "steps": 1000,
    "backend": "numeric",
    "threshold": DEFAULT_THRESHOLD,
    "out": "trace.csv",
    "events": None,
    "report": "audit_report.txt",
    "corrected": False,
}
FLOAT_KEYS = {"c11", "c22", "c33", "P", "alpha", "beta", "gamma", "a1", "a2", "a3", "g", "g1", "g2", "tmin", "tmax", "threshold"}


class BadArguments(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_BAD, f"{self.prog}: error: {message}\n")


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--config", help="flat 'key = value' file; flags override it")
    p.add_argument("--scenario", help=f"one of: {', '.join(SCENARIO_NAMES)}")
    p.add_argument("--family", help=f"one of: {', '.join(FAMILIES)} (default depends on scenario)")
    g = p.add_argument_group("state parameters")
    for name in ("c11", "c22", "c33"):
        g.add_argument(f"--{name}", type=float, help="X-state correlation in [-1, 1] (default -1)")
    g.add_argument("--P", type=float, help="one-parameter family weight in [0, 0.5] (default 0)")
    g.add_argument("--alpha", type=float, help="two-parameter family; 2 alpha + 3 beta + gamma = 1")
    g.add_argument("--beta", type=float)
    g.add_argument("--gamma", type=float)
    g.add_argument("--a1", type=float, help="qutrit Schmidt coefficient (default 1/sqrt(3))")
    g.add_argument("--a2", type=float)
    g.add_argument("--a3", type=float, help="default sqrt(1 - a1^2 - a2^2)")
    d = p.add_argument_group("drive and grid")
    d.add_argument("--g", type=float, help="qubit coupling (default 1)")
    d.add_argument("--g1", type=float, help="qutrit 1<->2 coupling (default 1)")
    d.add_argument("--g2", type=float, help="qutrit 0<->2 coupling (default 1)")
    d.add_argument("--tmin", type=float, help="grid start, units of 1/g (default 0)")
    d.add_argument("--tmax", type=float, help="grid end (default 2 pi)")
    d.add_argument("--steps", type=int, help="number of samples, endpoints included (default 1000)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="driven-entanglement", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    run = sub.add_parser("run", help="sweep negativity over a time grid; write CSV and events report")
    _add_common(run)
    run.add_argument("--backend", choices=BACKENDS)
    run.add_argument("--threshold", type=float, help=f"death threshold (default {DEFAULT_THRESHOLD})")
    run.add_argument("--out", help="trace CSV path (default trace.csv)")
    run.add_argument("--events", help="events report path (default <out stem>.events.txt)")

    audit = sub.add_parser("audit", help="compare a printed closed-form listing with the numeric channel")
    _add_common(audit)
    audit.add_argument("--corrected", action="store_true", default=None, help="audit the corrected closed form")
    audit.add_argument("--report", help="report path (default audit_report.txt)")

    validate = sub.add_parser("validate", help="build the initial state and check it")
    _add_common(validate)
    return parser


def read_config(path: str) -> dict:
    out = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise BadArguments(f"{path}:{lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key == "p":
            key = "P"
        if key not in DEFAULTS:
            raise BadArguments(f"{path}:{lineno}: unknown key {key!r}")
        out[key] = value
    return out


def _coerce(key, value):
    if value is None or not isinstance(value, str):
        return value
    try:
        if key in FLOAT_KEYS:
            return float(value)
        if key == "steps":
            return int(value)
        if key == "corrected":
            return value.lower() in ("1", "true", "yes", "on")
    except ValueError:
        raise BadArguments(f"{key}: cannot parse {value!r}") from None
    return value


def resolve(args: argparse.Namespace) -> dict:
    """Merge flags over config file over defaults."""
    config = read_config(args.config) if getattr(args, "config", None) else {}
    merged = {}
    for key, default in DEFAULTS.items():
        flag = getattr(args, key, None)
        if flag is not None:
            merged[key] = flag
        elif key in config:
            merged[key] = _coerce(key, config[key])
        else:
            merged[key] = default
    if merged["scenario"] not in SCENARIO_NAMES:
        raise BadArguments(f"unknown scenario {merged['scenario']!r}; choose from {', '.join(SCENARIO_NAMES)}")
    if merged["family"] is None:
        merged["family"] = DEFAULT_FAMILY[merged["scenario"]]
    if merged["family"] not in FAMILIES:
        raise BadArguments(f"unknown family {merged['family']!r}; choose from {', '.join(FAMILIES)}")
    if merged["backend"] not in BACKENDS:
        raise BadArguments(f"unknown backend {merged['backend']!r}")
    return merged


def family_from(cfg: dict):
    name = cfg["family"]
    if name == "x-state":
        return XState(cfg["c11"], cfg["c22"], cfg["c33"])
    if name == "one-param":
        return OneParam(cfg["P"])
    if name == "two-param":
        return TwoParam(cfg["alpha"], cfg["beta"], cfg["gamma"])
    a1, a2, a3 = cfg["a1"], cfg["a2"], cfg["a3"]
    if a3 is None:
        rest = 1 - a1 * a1 - a2 * a2
        if rest < -1e-12:
            raise BadArguments(f"a1^2 + a2^2 = {1 - rest:.12g} exceeds 1; no real a3 normalizes the state")
        a3 = math.sqrt(max(rest, 0.0))
    return QutritPure(a1, a2, a3)


def scenario_from(cfg: dict):
    return make_scenario(cfg["scenario"], family_from(cfg), g=cfg["g"], g1=cfg["g1"], g2=cfg["g2"])


def grid_from(cfg: dict) -> TimeGrid:
    return TimeGrid(cfg["tmin"], cfg["tmax"], cfg["steps"])


def output_path(path: str) -> Path:
    p = Path(path)
    outdir = os.environ.get(OUTDIR_ENV)
    if outdir and not p.is_absolute():
        p = Path(outdir) / p
    p.parent.mkdir(parents=True, exist_ok=True)
    return p


def write_trace_csv(trace: NegativityTrace, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["tau", "negativity"])
        for t, n in zip(trace.taus, trace.values):
            w.writerow([f"{t:.17g}", f"{n:.17g}"])


def read_trace_csv(path, scenario: str = "") -> NegativityTrace:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if rows[0] != ["tau", "negativity"]:
        raise ValueError(f"{path}: unexpected header {rows[0]}")
    taus = [float(r[0]) for r in rows[1:]]
    values = [float(r[1]) for r in rows[1:]]
    return NegativityTrace(scenario, taus, values)


def cmd_run(cfg: dict) -> int:
    scenario = scenario_from(cfg)
    trace = sweep(scenario, grid_from(cfg), cfg["backend"])
    events = detect_events(trace, cfg["threshold"])
    out = output_path(cfg["out"])
    write_trace_csv(trace, out)
    events_path = output_path(cfg["events"] or str(Path(cfg["out"]).with_suffix("")) + ".events.txt")
    events_path.write_text(f"# {scenario.describe()} backend={cfg['backend']}\n" + events.format())
    onset = events.first_death_onset
    print(f"{scenario.describe()}: {len(trace)} samples -> {out}")
    print(f"first death onset: {'none' if onset is None else f'{onset:.6g}'}; events -> {events_path}")
    return EXIT_OK


def cmd_audit(cfg: dict) -> int:
    scenario = scenario_from(cfg)
    report = audit_analytic(scenario, grid_from(cfg), corrected=bool(cfg["corrected"]))
    path = output_path(cfg["report"])
    path.write_text(report.format())
    if report.agrees:
        print(f"closed form agrees with the channel (max error {float(report.max_error.max()):.3e}); report -> {path}")
        return EXIT_OK
    names = ", ".join(c.name for c in report.flagged[:10])
    print(f"discrepancy: {len(report.flagged)} flagged entries ({names}); report -> {path}")
    for d in report.duplicates:
        print(f"duplicate label: {d}")
    return EXIT_DISCREPANCY


def cmd_validate(cfg: dict) -> int:
    rho = family_from(cfg).state()
    report = validate_density(rho)
    print(report)
    return EXIT_OK if report.ok else EXIT_BAD


COMMANDS = {"run": cmd_run, "audit": cmd_audit, "validate": cmd_validate}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve(args)
        return COMMANDS[args.command](cfg)
    except (BadArguments, EntanglementError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD


if __name__ == "__main__":
    sys.exit(main())
