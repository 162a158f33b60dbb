"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line with its pinned tolerance; the lines are
echoed in the terminal summary (see conftest.py) and printed inline with -s.
"""

import dataclasses
import subprocess
import sys
import time

import numpy as np
import pytest

from skewlab import endomorphism as en
from skewlab import harness
from skewlab import rings as rg
from skewlab import structure as st
from skewlab.properties import Status, Verdict, decide, replay
from skewlab.skew import SkewPoly, TruncSeries, shadow

from conftest import ACCEPTANCE_LINES
from oracles import (MatrixModel, PolyModel, ProductModel, RingOracle, ZnModel, all_right_annihilators,
                     axiom_failures, poly_mul)

# pinned tolerances, seconds
LIMIT_AXIOMS = 10.0
LIMIT_WINDOW = 30.0
LIMIT_CATALOG = 120.0
LIMIT_SEPARATIONS = 60.0
LIMIT_CAVEAT = 5.0
LIMIT_ORACLES = 30.0
SERIES_PAIRS = 10_000
SEED = 0

CATALOG_MODELS = {
    "Z2-identity": ZnModel(2), "Z3-identity": ZnModel(3), "Z4-identity": ZnModel(4), "Z6-identity": ZnModel(6),
    "GF4-frobenius": PolyModel(2, "t", [1, 1, 1]),
    "Z2xZ2-swap": ProductModel(2, 2), "Z2xZ2-identity": ProductModel(2, 2),
    "dual-const": PolyModel(2, "t", [0, 0, 1]),
    "M2Z2-identity": MatrixModel(2, 2), "T2Z2-identity": MatrixModel(2, 2),
    "Z2x-eval0": PolyModel(2, "x", cap=2),
}


def record(n, ok, text, tolerance):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {text} [tolerance: {tolerance}]"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


@pytest.fixture(scope="module")
def catalog():
    return harness.load_catalog()


@pytest.fixture(scope="module")
def catalog_runs():
    """Two independent --catalog runs in fresh processes, with wall times."""
    out = []
    for _ in range(2):
        t0 = time.perf_counter()
        proc = subprocess.run([sys.executable, "-m", "skewlab", "--catalog", "--format=machine", f"--seed={SEED}"],
                              capture_output=True, text=True, check=False)
        out.append((proc, time.perf_counter() - t0))
    return out


def test_criterion_1_axioms(catalog):
    t0 = time.perf_counter()
    checked, bad = [], []
    for e in catalog:
        if e.ring.order > 16:
            continue
        fails = axiom_failures(RingOracle(e.ring, CATALOG_MODELS[e.name]))
        checked.append(e.name)
        if fails:
            bad.append((e.name, fails[:3]))
    dt = time.perf_counter() - t0
    ok = not bad and len(checked) == len(catalog) and dt < LIMIT_AXIOMS
    record(1, ok, f"{len(checked)} catalog rings pass triple-loop axioms, {bad or 'no failures'}, {dt:.1f}s",
           f"runtime < {LIMIT_AXIOMS:.0f}s, zero failures")
    assert ok, bad


def test_criterion_2_window_example():
    t0 = time.perf_counter()
    w = rg.make_bounded_poly(rg.make_zn(2), 2)
    s = en.eval_at_zero(w)
    skew = decide("sigma_skew_sps_armendariz", w, s)
    sps = decide("sigma_sps_armendariz", w, s)
    ref = Verdict("sigma_sps_armendariz", Status.FAILS, w.name, s.label,
                  {"p": (0, w.encode((0, 1, 0))), "q": (w.encode((0, 1, 0)),), "i": 1, "j": 0})
    # oracle: (x y)(x) by direct convolution with sigma(x) = 0, then a_1 b_0 = x^2
    x = [0, 1]
    prod_zero = poly_mul(x, [0], 2) == []  # x * sigma(x)
    a1b0 = poly_mul(x, x, 2)
    dt = time.perf_counter() - t0
    ok = (skew.status is Status.BOUNDED and skew.bounds.get("D") == 2 and "skipped" not in skew.bounds
          and sps.status is Status.FAILS and replay(sps, w, s)
          and replay(ref, w, s) and prod_zero and a1b0 == [0, 0, 1] and dt < LIMIT_WINDOW)
    record(2, ok, f"skew={skew.status}({skew.bounds_text()}), sps={sps.status} [{sps.witness_text}], "
                  f"reference p=xy q=x replays={replay(ref, w, s)}, {dt:.1f}s",
           f"runtime < {LIMIT_WINDOW:.0f}s, D=2 exact")
    assert ok


def test_criterion_3_theorem_suite(catalog_runs):
    proc, dt = catalog_runs[0]
    rows = [line.split("\t") for line in proc.stdout.splitlines() if line.startswith("RESULT\t")]
    status = {(r[1].removeprefix("catalog "), r[2]): r[3] for r in rows}
    violations = [k for k, v in status.items() if v == harness.VIOLATION]
    expected_rows = 11 * len(harness.THEOREM_IDS)
    bounds_ok = all("D=2" in r[4] and "N=3" in r[4] for r in rows)
    anchors = (status.get(("GF4-frobenius", "T-BAER")) == harness.CONFIRMED
               and status.get(("Z2-identity", "T-BAER")) == harness.CONFIRMED
               and status.get(("Z4-identity", "T-BAER")) == harness.NOT_MET)
    ok = not violations and len(rows) == expected_rows and bounds_ok and anchors and dt < LIMIT_CATALOG
    record(3, ok, f"{len(rows)} rows, VIOLATION rows={violations or 'none'}, anchors ok={anchors}, {dt:.1f}s",
           f"runtime < {LIMIT_CATALOG:.0f}s, zero VIOLATION rows at D=2 N=3")
    assert len(rows) == expected_rows and bounds_ok and anchors and dt < LIMIT_CATALOG
    assert not violations, f"VIOLATION rows: {violations}"


def test_criterion_4_separations():
    t0 = time.perf_counter()
    wanted = [
        ("reduced-not-right-sigma-reversible", "Product(Zn(2), Zn(2))", "swap"),
        ("right-sigma-reversible-not-C_sigma", 'PolyQuot(Zn(2), "t^2")', "const_term"),
        ("baer-not-reversible", "Mat(2, Zn(2))", "identity"),
        ("reduced-not-sigma-rigid", "Product(Zn(2), Zn(2))", "swap"),
    ]
    found = harness.separation_witnesses([w[0] for w in wanted])
    got = []
    for name, expr, label in wanted:
        hit = next((h for h in found[name] if h.ring.expr == expr and h.sigma.label == label), None)
        good = hit is not None and replay(hit.fails, hit.ring, hit.sigma)
        got.append(good)
        if hit is not None:
            print(f"  {name}: {hit}")
    dt = time.perf_counter() - t0
    ok = all(got) and dt < LIMIT_SEPARATIONS
    record(4, ok, f"{sum(got)}/4 separations found on the named pairs and replayed, {dt:.1f}s",
           f"runtime < {LIMIT_SEPARATIONS:.0f}s")
    assert ok


def test_criterion_5_truncation_caveat():
    t0 = time.perf_counter()
    rep = harness.truncation_caveat_check()
    dt = time.perf_counter() - t0
    ok = rep.passed and dt < LIMIT_CAVEAT
    record(5, ok, f"baer(Z2)={rep.baer_z2.status}, baer(Z2[t]/(t^2))={rep.baer_truncated.status}, "
                  f"T-BAER(Z2)={rep.t_baer_z2.status}, {dt:.1f}s", f"runtime < {LIMIT_CAVEAT:.0f}s")
    assert ok


def test_criterion_6_oracle_equivalences(oracle_rings, catalog):
    t0 = time.perf_counter()
    lattice_bad = []
    lattices = 0
    for label, o in oracle_rings:
        if o.ring.order <= 8:
            got = {frozenset(I.elements) for I in st.annihilator_lattice(o.ring)}
            lattices += 1
            if got != all_right_annihilators(o):
                lattice_bad.append(label)

    rng = np.random.default_rng(SEED)
    series_bad = 0
    for k in range(SERIES_PAIRS):
        e = catalog[k % len(catalog)]
        s = shadow(e.sigma) or e.sigma
        P = SkewPoly(s, rng.integers(0, e.ring.order, rng.integers(1, 4)).tolist())
        Q = SkewPoly(s, rng.integers(0, e.ring.order, rng.integers(1, 4)).tolist())
        N = int(rng.integers(1, 5))
        if TruncSeries.from_poly(P, N) * TruncSeries.from_poly(Q, N) != TruncSeries.from_poly(P * Q, N):
            series_bad += 1

    pairs = (("sigma_reversible_right", "reversible"), ("sigma_reversible_left", "reversible"),
             ("sigma_symmetric_right", "symmetric"), ("sigma_symmetric_left", "symmetric"),
             ("sigma_rigid", "reduced"), ("sigma_skew_sps_armendariz", "armendariz"),
             ("sigma_sps_armendariz", "armendariz"))
    ident_bad = []
    for e in catalog:
        ident = en.identity(e.ring)
        for twisted, classical in pairs:
            if decide(twisted, e.ring, ident).ok != decide(classical, e.ring).ok:
                ident_bad.append((e.name, twisted))
    dt = time.perf_counter() - t0
    ok = not lattice_bad and not series_bad and not ident_bad and dt < LIMIT_ORACLES
    record(6, ok, f"lattices {lattices - len(lattice_bad)}/{lattices}, series mismatches {series_bad}/{SERIES_PAIRS}, "
                  f"identity disagreements {ident_bad or 0}, {dt:.1f}s",
           f"runtime < {LIMIT_ORACLES:.0f}s, exact equality, {SERIES_PAIRS} pairs seed {SEED}")
    assert ok


def test_criterion_7_determinism(catalog_runs):
    (a, _), (b, _) = catalog_runs
    ok = a.stdout == b.stdout and a.stdout.count("\n") > 0
    record(7, ok, f"two --catalog --seed={SEED} runs, {a.stdout.count(chr(10))} lines each, identical={ok}",
           "byte-identical")
    assert ok


def test_reference_witness_encoding():
    """Guard for criterion 2: the reference witness really is p = x y, q = x."""
    w = rg.make_bounded_poly(rg.make_zn(2), 2)
    x = w.encode((0, 1, 0))
    assert w.format(x) == "x"
    v = dataclasses.replace(Verdict("sigma_sps_armendariz", Status.FAILS, w.name, "eval0", {}),
                            witness={"p": (0, x), "q": (x,), "i": 1, "j": 0})
    assert replay(v, w, en.eval_at_zero(w))
