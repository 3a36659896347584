"""Command line interface, bundled knot table and the regression runner.

    lagfill classify|genus|homfly|front|ruling|fill|verify|table [options] INPUT

INPUT is a file holding a PD code or braid, an inline PD code or braid, or
the name of a record in the bundled table.  Exit status is 0 on success,
1 on unreadable input and 2 when the diagram is not of a kind the command
handles (no layout, no filling, and so on).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from importlib import resources
from pathlib import Path
from typing import Sequence

from .diagram import (
    DiagramError,
    OrientedDiagram,
    Positivity,
    canonical_genus,
    classify,
    diagram_from_text,
    genus_estimate,
    is_alternating,
    seifert_decompose,
    signature,
)
from .filling import CertificateError, CobordismCertificate, FillingError, generate_filling, verify_certificate
from .homflypt import DEFAULT_BUDGET, homfly, max_deg_v, mfw_tb_bound
from .legendrian import RULING_CROSSING_CAP, FrontDiagram, FrontError, find_ruling, front_from_mondrian, rot, tb
from .mondrian import Mode, MondrianError, to_mondrian

COMMANDS = ("classify", "genus", "homfly", "front", "ruling", "fill", "verify", "table")
MODES = {"auto": None, "positive": Mode.POSITIVE, "p1": Mode.P1, "p2": Mode.P2}
NOT_REPRODUCIBLE = (
    "note: only 'Yes' rows with a bundled positive or P2 diagram are reproduced; "
    "'No' rows are expectations only (non-fillability is not certified), so the "
    "full fillability table is not independently reproducible here"
)


class InputError(ValueError):
    """Input that cannot be read or parsed."""


class UnsupportedError(ValueError):
    """Well-formed input outside what a command handles."""


# ---------------------------------------------------------------------------
# Configuration


@dataclass(frozen=True)
class RunConfig:
    """Options shared by the commands, resolved once from the command line."""

    mode: str = "auto"
    budget: int = DEFAULT_BUDGET
    jobs: int = 1
    ruling_cap: int = RULING_CROSSING_CAP
    layout_limit: int = 200_000

    def __post_init__(self):
        if self.mode not in MODES:
            raise InputError(f"unknown mode {self.mode!r}")
        if self.budget < 0 or self.jobs < 1 or self.ruling_cap < 0 or self.layout_limit < 1:
            raise InputError("budget, ruling cap and layout limit must be non-negative, jobs at least 1")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        return cls(args.mode, args.budget, args.jobs, args.ruling_cap, args.layout_limit)


# ---------------------------------------------------------------------------
# Bundled data


@dataclass(frozen=True)
class ExpectationRecord:
    name: str
    presentation: str | None
    expected: dict
    sources: tuple[str, ...]

    @property
    def knot(self) -> str:
        return str(self.expected.get("knot", self.name))


def data_dir() -> Path:
    """Directory of bundled data, overridden by ``LAGFILL_DATA``."""
    env = os.environ.get("LAGFILL_DATA")
    if env:
        return Path(env)
    return Path(str(resources.files("lagfill") / "data"))


def _value(text: str):
    try:
        return int(text)
    except ValueError:
        return text


def parse_table(text: str) -> list[ExpectationRecord]:
    out = []
    for n, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split("|")]
        if len(parts) != 4:
            raise InputError(f"table line {n}: expected 4 '|'-separated fields, got {len(parts)}")
        name, pres, fields, tags = parts
        expected = {}
        for item in fields.split():
            key, eq, val = item.partition("=")
            if not eq:
                raise InputError(f"table line {n}: bad field {item!r}")
            expected[key] = _value(val)
        sources = tuple(t for t in tags.split(",") if t)
        if not sources:
            raise InputError(f"table line {n}: a source tag is required")
        out.append(ExpectationRecord(name, None if pres == "-" else pres, expected, sources))
    return out


def load_table(path: Path | None = None) -> list[ExpectationRecord]:
    path = path or data_dir() / "knots.txt"
    try:
        return parse_table(path.read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def read_input(arg: str) -> tuple[str, OrientedDiagram, dict]:
    """Name, diagram and any bundled expectations for a command argument."""
    path = Path(arg)
    expected: dict = {}
    if path.is_file():
        name, text = path.stem, path.read_text()
    elif (data_dir() / arg).is_file():
        name, text = Path(arg).stem, (data_dir() / arg).read_text()
    elif "(" in arg or arg.lstrip().lower().startswith(("braid", "pd:")):
        name, text = "input", arg
    else:
        try:
            records = {r.name: r for r in load_table()}
        except InputError:
            records = {}
        rec = records.get(arg)
        if rec is None or rec.presentation is None:
            raise InputError(f"{arg!r} is not a file, a PD code, a braid or a bundled diagram")
        name, text, expected = rec.name, rec.presentation, dict(rec.expected)
    try:
        return name, diagram_from_text(text), expected
    except DiagramError as exc:
        raise InputError(f"diagram: {exc}") from None


# ---------------------------------------------------------------------------
# Reports


@dataclass
class InvariantReport:
    name: str
    classification: str
    c: int
    c_minus: int
    s: int
    w: int
    g3_diagram: int | None
    twice_g3_estimate: int | None
    sigma: int | None
    homfly: str | None
    max_deg_v: int | None
    mfw_tb_bound: int | None
    mode: str | None = None
    front: str | None = None
    tb: int | None = None
    rot: int | None = None
    ruling_found: bool | None = None
    filling_genus: int | None = None
    filling_euler: int | None = None
    chantraine: bool | None = None
    expected: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    errors: list = field(default_factory=list)

    def to_json(self) -> dict:
        return asdict(self)

    def verdict(self) -> str:
        vals = set(self.checks.values())
        if "fail" in vals:
            return "fail"
        if "pass" in vals:
            return "pass"
        return "skipped"


def _check(computed, expected) -> str:
    if expected is None or computed is None:
        return "untested"
    return "pass" if computed == expected else "fail"


def build_report(
    name: str,
    d: OrientedDiagram,
    expected: dict | None = None,
    mode: str = "auto",
    budget: int = DEFAULT_BUDGET,
    fill: bool = True,
) -> InvariantReport:
    """Run every stage that applies to ``d`` and compare with ``expected``."""
    expected = dict(expected or {})
    cls = classify(d)
    knot = d.n_components == 1
    g3d = canonical_genus(d)[0] if knot else None
    est = genus_estimate(d, cls) if knot else None
    sig = signature(d) if knot else None
    P = homfly(d, budget=budget)
    rep = InvariantReport(
        name, cls.kind.value, d.c, d.c_minus, seifert_decompose(d).s, d.writhe,
        g3d, est, sig, str(P), max_deg_v(P), mfw_tb_bound(P), expected=expected,
    )
    if knot and cls.kind is not Positivity.OTHER:
        try:
            m = to_mondrian(d, cls, MODES[mode])
            f = front_from_mondrian(m)
        except MondrianError as exc:
            rep.errors.append(f"mondrian: {exc}")
        else:
            rep.mode, rep.front, rep.tb, rep.rot = m.mode.value, str(f), tb(f), rot(f)
            rep.ruling_found = find_ruling(f) is not None
            if fill and m.mode is not Mode.P1:
                try:
                    rep_f = verify_certificate(generate_filling(f), require_knot=True)
                except (FillingError, CertificateError) as exc:
                    rep.errors.append(f"filling: {exc}")
                else:
                    rep.filling_genus, rep.filling_euler = rep_f.genus, rep_f.euler
                    rep.chantraine = rep_f.chantraine
    _fill_checks(rep, d)
    return rep


def _fill_checks(rep: InvariantReport, d: OrientedDiagram) -> None:
    e = rep.expected
    ck = rep.checks
    ck["g3"] = _check(None if rep.twice_g3_estimate is None else rep.twice_g3_estimate // 2, e.get("g3"))
    ck["sigma"] = _check(rep.sigma, e.get("sigma"))
    ck["maxdegv"] = _check(rep.max_deg_v, e.get("maxdegv"))
    filled = rep.filling_genus is not None and rep.chantraine
    ck["g4"] = _check(rep.filling_genus if filled else None, e.get("g4"))
    # 2 tau = s = TB + 1 = 2 g4 for fillable knots
    ck["tau"] = _check((rep.tb + 1) // 2 if filled else None, e.get("tau"))
    ck["s"] = _check(rep.tb + 1 if filled else None, e.get("s"))
    if rep.tb is not None and rep.mode != Mode.P1.value:
        ck["mfw_sharp"] = "pass" if rep.tb + 1 == -rep.max_deg_v else "fail"
    if rep.tb is not None and rep.mode == Mode.P1.value and rep.g3_diagram is not None:
        ck["p1_tb"] = "pass" if rep.tb == 2 * rep.g3_diagram - 2 else "fail"
    if rep.tb is not None:
        ck["mfw"] = "pass" if rep.tb + abs(rep.rot) <= rep.mfw_tb_bound else "fail"
    if rep.ruling_found is not None and rep.mode != Mode.P1.value:
        ck["ruling"] = "pass" if rep.ruling_found else "fail"
    if rep.chantraine is not None:
        ck["chantraine"] = "pass" if rep.chantraine else "fail"
    if rep.tb is not None and rep.sigma is not None and is_alternating(d) and rep.classification == "Positive":
        ck["alternating_tb"] = "pass" if -rep.c_minus - rep.sigma - 1 == rep.tb else "fail"
    lf = e.get("table1_LF")
    if lf is None:
        pass
    elif lf == "No":
        ck["LF"] = "expectation-only: non-fillability not certified"
    elif filled:
        ck["LF"] = "pass"
    else:
        ck["LF"] = "untested"


# ---------------------------------------------------------------------------
# Commands


def _emit(obj, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


def cmd_classify(args) -> int:
    name, d, _ = read_input(args.input)
    cls = classify(d)
    obj = {"name": name, "classification": cls.kind.value, "negative": cls.negative,
           "circles": cls.circles, "partners": list(cls.partners)}
    _emit(obj, args.json, cls.kind.value)
    return 0


def cmd_genus(args) -> int:
    name, d, _ = read_input(args.input)
    if d.n_components != 1:
        raise UnsupportedError("genus is reported for knots only")
    cls = classify(d)
    g3d, chi = canonical_genus(d)
    est = genus_estimate(d, cls)
    obj = {"name": name, "c": d.c, "c_minus": d.c_minus, "s": seifert_decompose(d).s,
           "w": d.writhe, "g3_diagram": g3d, "twice_g3_estimate": est, "sigma": signature(d)}
    text = "\n".join(f"{k}: {v}" for k, v in obj.items())
    _emit(obj, args.json, text)
    return 0


def cmd_homfly(args) -> int:
    name, d, _ = read_input(args.input)
    P = homfly(d, budget=args.config.budget)
    obj = {"name": name, "homfly": P.to_json(), "text": str(P), "max_deg_v": max_deg_v(P),
           "mfw_tb_bound": mfw_tb_bound(P)}
    _emit(obj, args.json, f"{P}\nmax_deg_v: {max_deg_v(P)}\nmfw_tb_bound: {mfw_tb_bound(P)}")
    return 0


def _front(args) -> tuple[str, FrontDiagram, object]:
    name, d, _ = read_input(args.input)
    try:
        m = to_mondrian(d, mode=MODES[args.config.mode], limit=args.config.layout_limit)
    except MondrianError as exc:
        raise UnsupportedError(f"mondrian: {exc}") from None
    return name, front_from_mondrian(m), m


def cmd_front(args) -> int:
    name, f, m = _front(args)
    obj = {"name": name, "mode": m.mode.value, "events": f.to_json(), "text": str(f),
           "tb": tb(f), "rot": rot(f)}
    if args.dump_mondrian:
        obj["mondrian"] = m.to_json()
    text = f"{f}\n{json.dumps(f.to_json())}\ntb: {tb(f)}\nrot: {rot(f)}"
    if args.dump_mondrian:
        text += "\n" + m.dumps()
    _emit(obj, args.json, text)
    return 0


def cmd_ruling(args) -> int:
    name, f, m = _front(args)
    r = find_ruling(f, cap=args.config.ruling_cap)
    obj = {"name": name, "mode": m.mode.value, "found": r is not None,
           "switches": sorted(r.switches) if r else None}
    text = "no 2-graded normal ruling" if r is None else f"switches at events {sorted(r.switches)}"
    _emit(obj, args.json, text)
    return 0 if r is not None else 2


def cmd_fill(args) -> int:
    name, f, m = _front(args)
    if m.mode is Mode.P1:
        raise UnsupportedError("fillings are generated in positive and P2 modes only")
    try:
        cert = generate_filling(f, "positive" if m.mode is Mode.POSITIVE else "p2")
        rep = verify_certificate(cert)
    except (FillingError, CertificateError) as exc:
        raise UnsupportedError(f"filling: {exc}") from None
    print(cert.dumps())
    print(f"euler {rep.euler}, genus {rep.genus}, tb {rep.tb_final}, chantraine {rep.chantraine}",
          file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    try:
        cert = CobordismCertificate.loads(Path(args.input).read_text())
    except (OSError, ValueError, KeyError, TypeError, FrontError) as exc:
        raise InputError(f"certificate: {exc}") from None
    try:
        rep = verify_certificate(cert)
    except CertificateError as exc:
        _emit({"ok": False, "step": exc.step, "reason": exc.reason}, args.json, f"rejected: {exc}")
        return 2
    _emit({"ok": True, **rep.to_json()}, args.json,
          f"ok: euler {rep.euler}, genus {rep.genus}, tb {rep.tb_final}, chantraine {rep.chantraine}")
    return 0


def _table_row(job: tuple[ExpectationRecord, str, int]) -> InvariantReport | str:
    rec, mode, budget = job
    if rec.presentation is None:
        return "skipped: no bundled diagram"
    d = diagram_from_text(rec.presentation)
    if d.c > budget:
        return f"skipped: {d.c} crossings exceed the budget"
    return build_report(rec.name, d, rec.expected, mode, budget)


def run_table(records: Sequence[ExpectationRecord], mode: str = "auto",
              budget: int = DEFAULT_BUDGET, jobs: int = 1) -> list[InvariantReport | str]:
    """Reports in record order, computed in ``jobs`` worker processes."""
    work = [(r, mode, budget) for r in records]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(_table_row, work))
    return [_table_row(w) for w in work]


def cmd_table(args) -> int:
    path = None if args.input in (None, "-") else Path(args.input)
    records = load_table(path)
    cfg = args.config
    results = run_table(records, cfg.mode, cfg.budget, cfg.jobs)
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    rows = []
    for rec, res in zip(records, results):
        if isinstance(res, str):
            verdict, checks = "skipped", {}
            lf = rec.expected.get("table1_LF")
            if lf == "No":
                checks = {"LF": "expectation-only: non-fillability not certified"}
        else:
            verdict, checks = res.verdict(), res.checks
        counts[verdict] += 1
        rows.append({"name": rec.name, "verdict": verdict, "checks": checks,
                     "report": res.to_json() if not isinstance(res, str) else res})
    if args.json:
        print(json.dumps({"rows": rows, "summary": counts, "note": NOT_REPRODUCIBLE}, sort_keys=True))
    else:
        for row in rows:
            detail = ", ".join(f"{k}={v}" for k, v in sorted(row["checks"].items()) if v != "untested")
            print(f"{row['name']:<12} {row['verdict']:<8} {detail}")
        print(f"summary: {counts['pass']} pass, {counts['fail']} fail, {counts['skipped']} skipped")
        print(NOT_REPRODUCIBLE)
    return 0 if counts["fail"] == 0 else 2


HANDLERS = {
    "classify": cmd_classify, "genus": cmd_genus, "homfly": cmd_homfly, "front": cmd_front,
    "ruling": cmd_ruling, "fill": cmd_fill, "verify": cmd_verify, "table": cmd_table,
}


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lagfill", description="Positivity, fronts and Lagrangian fillings of knots.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("input", nargs="?", help="PD/braid file, inline code, bundled name; table file for 'table'")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    ap.add_argument("--mode", choices=sorted(MODES), default="auto")
    ap.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="largest crossing count for HOMFLYPT")
    ap.add_argument("--dump-mondrian", action="store_true", help="also print the Mondrian layout (front)")
    ap.add_argument("--jobs", type=int, default=1, help="worker processes for 'table'")
    ap.add_argument("--ruling-cap", type=int, default=RULING_CROSSING_CAP,
                    help="largest crossing count for the ruling search")
    ap.add_argument("--layout-limit", type=int, default=200_000, help="sweep states for the layout search")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = make_parser().parse_intermixed_args(argv)
    if args.input is None and args.command != "table":
        print(f"lagfill {args.command}: an input is required", file=sys.stderr)
        return 1
    try:
        args.config = RunConfig.from_args(args)
        return HANDLERS[args.command](args)
    except InputError as exc:
        print(f"lagfill {args.command}: input error: {exc}", file=sys.stderr)
        return 1
    except (UnsupportedError, DiagramError, FrontError) as exc:
        print(f"lagfill {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
