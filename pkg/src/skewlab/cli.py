"""Command-line front door: run a config file or the built-in catalog.

Exit codes: 0 all good, 1 some Fails / VIOLATION (inverted by expect=fails),
2 config, capacity or budget error.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import endomorphism as endo
from . import harness
from .config import ConfigDocument, Task, parse_config
from .errors import BudgetExceeded, CapacityError, ConfigError, SkewLabError
from .properties import Bounds, Status, decide

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


@dataclass
class Row:
    task: str
    name: str
    status: str
    bounds: str = "-"
    witness: str = ""
    note: str = ""

    def machine(self) -> str:
        return "\t".join(["RESULT", self.task, self.name, self.status, self.bounds or "-", self.witness or "-"])

    def human(self) -> str:
        s = f"{self.task:<34} {self.name:<26} {self.status}"
        if self.bounds and self.bounds != "-":
            s += f"  ({self.bounds})"
        if self.witness:
            s += f"\n    witness: {self.witness}"
        if self.note:
            s += f"\n    note: {self.note}"
        return s


def _bounds_for(doc_bounds: Bounds, task: Task, seed, budget) -> Bounds:
    b = dataclasses.replace(doc_bounds, **task.overrides)
    if seed is not None:
        b = dataclasses.replace(b, seed=seed)
    if budget is not None:
        b = dataclasses.replace(b, budget=budget)
    return b


def _run_task(doc: ConfigDocument, task: Task, bounds: Bounds) -> tuple:
    """Rows and exit code for one task."""
    rows = []
    bad = False
    try:
        if task.kind == "check":
            ring = doc.rings[task.ring]
            sigma = doc.endos.get(task.endo) if task.endo else None
            for prop in task.names:
                v = decide(prop, ring, sigma, bounds)
                rows.append(Row(task.label, prop, str(v.status), v.bounds_text(), v.witness_text))
                bad |= (v.status is Status.FAILS) != task.expect_fail
        elif task.kind == "verify":
            ring = doc.rings[task.ring]
            sigma = doc.endos[task.endo] if task.endo else endo.identity(ring)
            entry = harness.CatalogEntry(f"{task.ring}/{sigma.label}", ring, sigma)
            violated = False
            for tid in task.names:
                r = harness.verify_theorem(tid, entry, bounds)
                rows.append(Row(task.label, tid, r.status, r.bounds_text(), r.witness, r.notes))
                violated |= r.status == harness.VIOLATION
            bad = violated != task.expect_fail
        else:
            hits = harness.search_counterexamples(list(task.holds), task.fails, task.max_order, bounds)
            for h in hits:
                rows.append(Row(f"search ring={h.ring.expr} endo={h.sigma.label}", task.fails,
                                str(h.fails.status), h.fails.bounds_text(), h.fails.witness_text))
            if not hits:
                rows.append(Row(task.label, task.fails, "NotFound"))
            bad = (not hits) != task.expect_fail
    except (BudgetExceeded, CapacityError) as exc:
        rows.append(Row(task.label, ",".join(task.names), "ERROR", "-", f"line {task.line}: {exc}"))
        return rows, EXIT_ERROR
    return rows, EXIT_FAIL if bad else EXIT_OK


def run(doc: ConfigDocument, *, seed=None, budget=None, parallel: bool = False) -> tuple:
    """Execute all tasks; rows come back in declaration order."""
    jobs = [(t, _bounds_for(doc.bounds, t, seed, budget)) for t in doc.tasks]
    if parallel and len(jobs) > 1:
        with ThreadPoolExecutor() as pool:
            results = list(pool.map(lambda j: _run_task(doc, *j), jobs))
    else:
        results = [_run_task(doc, *j) for j in jobs]
    rows = [r for rs, _ in results for r in rs]
    return rows, max((code for _, code in results), default=EXIT_OK)


def run_catalog(bounds: Bounds, parallel: bool = False) -> tuple:
    """Every theorem over every catalog entry, ordered by (entry, theorem)."""
    entries = harness.load_catalog(bounds)

    def one(entry):
        out = []
        for tid in harness.THEOREM_IDS:
            r = harness.verify_theorem(tid, entry, bounds)
            out.append(Row(f"catalog {entry.name}", tid, r.status, r.bounds_text(), r.witness, r.notes))
        return out

    if parallel:
        with ThreadPoolExecutor() as pool:
            groups = list(pool.map(one, entries))
    else:
        groups = [one(e) for e in entries]
    rows = [r for g in groups for r in g]
    code = EXIT_FAIL if any(r.status == harness.VIOLATION for r in rows) else EXIT_OK
    return rows, code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skewlab", description="Finite-ring skew power series lab.")
    p.add_argument("config", nargs="?", help="config file path")
    p.add_argument("--format", choices=("human", "machine"), default="human")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--catalog", action="store_true", help="run the built-in catalog against all theorems")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if not args.config and not args.catalog:
        print("error: give a config file or --catalog", file=sys.stderr)
        return EXIT_ERROR
    if (args.seed is not None and args.seed < 0) or (args.budget is not None and args.budget <= 0):
        print("error: --seed must be >= 0 and --budget > 0", file=sys.stderr)
        return EXIT_ERROR
    rows, code = [], EXIT_OK
    try:
        if args.config:
            try:
                with open(args.config, encoding="utf-8") as fh:
                    doc = parse_config(fh.read())
            except OSError as exc:
                raise ConfigError(f"cannot read {args.config}: {exc.strerror}") from exc
            rows, code = run(doc, seed=args.seed, budget=args.budget, parallel=args.parallel)
        if args.catalog:
            b = Bounds()
            if args.seed is not None:
                b = dataclasses.replace(b, seed=args.seed)
            if args.budget is not None:
                b = dataclasses.replace(b, budget=args.budget)
            crow, ccode = run_catalog(b, args.parallel)
            rows += crow
            code = max(code, ccode)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except SkewLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    for r in rows:
        print(r.machine() if args.format == "machine" else r.human())
    return code


if __name__ == "__main__":
    sys.exit(main())
