"""Theorem checks over a catalog of (ring, endomorphism) pairs, plus search.

Each theorem is run as hypotheses -> conclusion.  Hypotheses are decided
with the property deciders; conclusions about R[[x; sigma]] are checked on
skew polynomials of degree <= D (or series truncated mod x^N), following
the coefficient-by-coefficient mechanism of the corresponding argument.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from . import endomorphism as endo
from . import rings as rg
from .rings import Element
from . import properties, structure
from .errors import (BudgetExceeded, CapacityError, CatalogError, ConstructionError, DegreeOverflow,
                     NotAnEndomorphism)
from .properties import SIGMA_FREE, Bounds, Status, Verdict, _poly_rows, decide, zero_product_matrix
from .skew import (BatchArith, SkewPoly, TruncSeries, coefficient_rows, format_skew, is_idempotent_trunc,
                   scalar_mul, shadow)

THEOREM_IDS = ("T2.3", "L2.4", "P2.5", "L2.6", "T2.7", "L3.1", "L3.2", "T-BAER", "T-PP", "COR-RIGID")

CONFIRMED = "Confirmed"
NOT_MET = "HypothesisNotMet"
VIOLATION = "VIOLATION"

# subsets / generator families examined per annihilator clause
FAMILY_CAP = 20_000


@dataclass
class CatalogEntry:
    name: str
    ring: rg.Ring
    sigma: endo.Endomorphism
    expected: dict = field(default_factory=dict)
    note: str = ""


@dataclass
class TheoremReport:
    theorem: str
    entry: str
    status: str
    hypotheses: dict = field(default_factory=dict)
    conclusions: dict = field(default_factory=dict)
    bounds: dict = field(default_factory=dict)
    witness: str = ""
    notes: str = ""
    evidence: dict | None = None

    def bounds_text(self) -> str:
        return ",".join(f"{k}={v}" for k, v in self.bounds.items()) or "-"

    def __str__(self):
        s = f"{self.theorem} on {self.entry}: {self.status}"
        if self.witness:
            s += f"  [{self.witness}]"
        return s


def _met(v: Verdict) -> bool:
    return v.status in (Status.HOLDS, Status.BOUNDED)


# ---------------------------------------------------------------- catalog

def _catalog_specs():
    Z2 = rg.make_zn(2)
    Z22 = rg.make_product(Z2, Z2)
    dual = rg.make_poly_quotient(Z2, "t^2")
    gf4 = rg.make_galois_field(2, 2)
    window = rg.make_bounded_poly(Z2, 2)
    H, F, B = Status.HOLDS, Status.FAILS, Status.BOUNDED
    yield ("Z2-identity", Z2, endo.identity(Z2), {"reduced": H, "baer": H, "sigma_rigid": H}, "field")
    for n, exp in ((3, {"reduced": H}),
                   (4, {"reduced": F, "reversible": H, "baer": F}),
                   (6, {"reduced": H, "baer": H})):
        r = rg.make_zn(n)
        yield (f"Z{n}-identity", r, endo.identity(r), exp, "")
    yield ("GF4-frobenius", gf4, endo.frobenius(gf4, 2), {"sigma_rigid": H, "reduced": H},
           "field with its Frobenius automorphism")
    yield ("Z2xZ2-swap", Z22, endo.swap(Z22),
           {"reduced": H, "sigma_reversible_right": F, "sigma_rigid": F},
           "reduced but neither right sigma-reversible nor sigma-rigid")
    yield ("Z2xZ2-identity", Z22, endo.identity(Z22), {"reduced": H, "sigma_reversible_right": H}, "")
    yield ("dual-const", dual, endo.constant_term(dual),
           {"sigma_reversible_right": H, "c_sigma": F, "sigma_unital": H},
           "finite analog of the eval-at-zero example: sigma not injective")
    M2 = rg.make_matrix(2, Z2)
    yield ("M2Z2-identity", M2, endo.identity(M2), {"baer": H, "reversible": F},
           "Baer but not reversible")
    T2 = rg.make_upper_triangular(2, Z2)
    yield ("T2Z2-identity", T2, endo.identity(T2), {"reversible": F, "abelian": F}, "")
    yield ("Z2x-eval0", window, endo.eval_at_zero(window),
           {"sigma_sps_armendariz": F, "sigma_skew_sps_armendariz": B, "c_sigma": F,
            "sigma_reversible_right": B, "sigma_unital": Status.HOLDS},
           "Z_2[x] with f(x) -> f(0), degree window 2")


def load_catalog(bounds: Bounds | None = None, verify: bool = True) -> list:
    """Build the catalog; every expected-profile claim is re-derived."""
    bounds = bounds or Bounds()
    out = []
    for name, ring, sigma, expected, note in _catalog_specs():
        entry = CatalogEntry(name, ring, sigma, expected, note)
        if verify:
            for prop, want in expected.items():
                got = decide(prop, ring, sigma, bounds).status
                if got is not want:
                    raise CatalogError(f"{name}: {prop} expected {want}, decided {got}")
        out.append(entry)
    return out


def catalog_entry(name: str, bounds: Bounds | None = None) -> CatalogEntry:
    for e in load_catalog(bounds, verify=False):
        if e.name == name:
            return e
    raise KeyError(name)


# ---------------------------------------------------------------- theorems

class _Run:
    def __init__(self, theorem, entry, bounds):
        self.theorem, self.entry, self.bounds = theorem, entry, bounds
        self.ring, self.sigma = entry.ring, entry.sigma
        self.hyp: dict = {}
        self.con: dict = {}
        self.extra_bounds: dict = {}
        self.witness = ""
        self.evidence = None
        self.notes = []
        if self.sigma.is_identity:
            self.notes.append("sigma=identity baseline")

    def d(self, prop) -> Verdict:
        return decide(prop, self.ring, self.sigma, self.bounds)

    def hypothesis(self, prop) -> bool:
        v = self.d(prop)
        self.hyp[prop] = str(v.status)
        return _met(v)

    def conclude(self, label, ok: bool, witness: str = "", evidence: dict | None = None) -> bool:
        self.con[label] = "ok" if ok else "FAILED"
        if not ok and not self.witness:
            self.witness = f"{label}: {witness}" if witness else label
            self.evidence = evidence
        return ok

    def conclude_verdicts(self, label, ok: bool, verdicts) -> bool:
        """Conclusion comparing decider verdicts; evidence is the failing one."""
        failing = next((v for v in verdicts if v.status is Status.FAILS), None)
        wit = failing.witness_text if failing else ""
        ev = {"kind": "verdict", "verdict": failing} if failing else None
        return self.conclude(label, ok, wit, ev)

    def report(self, status=None) -> TheoremReport:
        if status is None:
            status = CONFIRMED if all(v == "ok" for v in self.con.values()) else VIOLATION
        b = {"D": self.bounds.D, "N": self.bounds.N}
        b.update(self.extra_bounds)
        return TheoremReport(self.theorem, self.entry.name, status, self.hyp, self.con, b,
                             self.witness, "; ".join(self.notes),
                             self.evidence if status == VIOLATION else None)


def _t23(run: _Run):
    sps, skew, cs = (run.d(p) for p in ("sigma_sps_armendariz", "sigma_skew_sps_armendariz", "c_sigma"))
    run.hyp = {"sigma_sps_armendariz": str(sps.status), "sigma_skew_sps_armendariz": str(skew.status),
               "c_sigma": str(cs.status)}
    lhs, rhs = _met(sps), _met(skew) and _met(cs)
    run.conclude_verdicts("sps <=> (skew and C_sigma)", lhs == rhs, (sps, skew, cs))
    return run.report()


def _l24(run: _Run):
    if not run.hypothesis("sigma_sps_armendariz"):
        return run.report(NOT_MET)
    v = run.d("series_triple_vanishing")
    run.conclude_verdicts("fgh=0 => a_i b_j c_k=0", _met(v), (v,))
    return run.report()


def _p25(run: _Run):
    if not run.hypothesis("sigma_sps_armendariz"):
        return run.report(NOT_MET)
    for base, series in (("reversible", "series_reversible"), ("symmetric", "series_symmetric")):
        vb, vs = run.d(base), run.d(series)
        run.conclude_verdicts(f"{base}(R) <=> {base}(R[[x;s]])", _met(vb) == _met(vs), (vs, vb))
    return run.report()


def _l26(run: _Run):
    if not run.hypothesis("c_sigma"):
        return run.report(NOT_MET)
    for base, twisted in (("reversible", "sigma_reversible"), ("symmetric", "sigma_symmetric")):
        vb, vt = run.d(base), run.d(twisted)
        run.conclude_verdicts(f"{base} <=> {twisted}", _met(vb) == _met(vt), (vt, vb))
    return run.report()


def _t27(run: _Run):
    if not run.hypothesis("sigma_sps_armendariz"):
        return run.report(NOT_MET)
    chain_testable = _met(run.d("c_sigma"))
    if not chain_testable:
        run.notes.append("C_sigma fails: (3)=>(1) untestable, compared (1),(2),(4) only")
    for kind in ("reversible", "symmetric"):
        labels = [kind, f"sigma_{kind}", f"sigma_{kind}_right", f"series_{kind}"]
        vs = [run.d(p) for p in labels]
        if not chain_testable:
            vs = [vs[0], vs[1], vs[3]]
        truth = [_met(v) for v in vs]
        run.conclude_verdicts(f"{kind}: (1)<=>(2)<=>(3)<=>(4)", len(set(truth)) == 1, vs)
    return run.report()


def _l31(run: _Run):
    if not (run.hypothesis("sigma_reversible_right") & run.hypothesis("sigma_unital")):
        return run.report(NOT_MET)
    ring, s = run.ring, run.sigma
    ids = structure.idempotent_indices(ring)
    moved = [e for e in ids if s.images[e] != e]
    run.conclude("sigma(e)=e for idempotents", not moved,
                 f"e={ring.format(moved[0])}" if moved else "",
                 {"kind": "moved_idempotent", "e": moved[0]} if moved else None)
    v = decide("abelian", ring, s, run.bounds)
    run.conclude_verdicts("R abelian", _met(v), (v,))
    return run.report()


def _idempotent_series(run: _Run, N: int):
    """Rows of all series mod x^N with f*f = f, and the count skipped for overflow."""
    ring = run.ring
    count = ring.order ** N
    if count > run.bounds.budget:
        raise BudgetExceeded(f"{count} series of length {N} exceed budget {run.bounds.budget}")
    S = coefficient_rows(ring.order, N)
    arith = BatchArith(run.sigma, N)
    sq, bad = arith.convolve(S, S, limit=N)
    idem = ~bad & (sq == S).all(axis=1)
    return S, np.flatnonzero(idem), int(bad.sum())


def _l32(run: _Run):
    if not (run.hypothesis("sigma_reversible_right") & run.hypothesis("sigma_unital")):
        return run.report(NOT_MET)
    ring = run.ring
    expected = structure.idempotent_indices(ring)
    for N in range(2, run.bounds.N + 1):
        S, idem, skipped = _idempotent_series(run, N)
        if skipped:
            run.extra_bounds[f"skipped_N{N}"] = skipped
        # a constant series e has row index e
        got = idem.tolist()
        extra = sorted(set(got) - set(expected))
        missing = sorted(set(expected) - set(got))
        wit, ev = "", None
        if extra:
            f = tuple(S[extra[0]].tolist())
            wit = f"non-constant idempotent {format_skew(ring, f)}"
            ev = {"kind": "idempotent_series", "f": f, "N": N}
        elif missing:
            wit = f"constant {ring.format(missing[0])} not idempotent mod x^{N}"
        run.conclude(f"idempotents mod x^{N} = idempotents(R)", not extra and not missing, wit, ev)
    # idempotent constants are central among truncated series
    N = run.bounds.N
    S = coefficient_rows(ring.order, N)
    arith = BatchArith(run.sigma, N)
    for e in expected:
        E = np.zeros((1, N), dtype=np.int64)
        E[0, 0] = e
        ef, b1 = arith.convolve(E, S, limit=N)
        fe, b2 = arith.convolve(S, E, limit=N)
        known = ~(b1 | b2)
        diff = np.flatnonzero(known & (ef != fe).any(axis=1))
        if len(diff):
            f = tuple(S[diff[0]].tolist())
            run.conclude(f"R[[x;s]] abelian mod x^{N}", False, f"e={ring.format(e)} f={format_skew(ring, f)}",
                         {"kind": "noncentral_idempotent", "e": e, "f": f, "N": N})
            break
    else:
        run.conclude(f"R[[x;s]] abelian mod x^{N}", True)
    return run.report()


def _family(M: int, sizes, cap: int, seed: int):
    """Subsets (as index tuples) of range(M): all singletons, then larger sizes
    exhaustively while under ``cap``, else a seeded sample."""
    fams = [(p,) for p in range(M)]
    sampled = False
    for k in sorted(set(sizes) - {1}):
        total = math.comb(M, k)
        room = cap - len(fams)
        if room <= 0:
            break
        if total <= room:
            fams.extend(itertools.combinations(range(M), k))
        else:
            sampled = True
            rng = np.random.default_rng(seed + k)
            seen = set()
            while len(seen) < room:
                seen.add(tuple(sorted(rng.choice(M, size=k, replace=False).tolist())))
            fams.extend(sorted(seen))
    return fams, sampled


class _SeriesAnnihilator:
    """Shared machinery for the Baer / quasi-Baer / p.p. transfer checks."""

    def __init__(self, run: _Run):
        self.run = run
        self.ring, self.sigma = run.ring, run.sigma
        D = run.bounds.D
        self.P = _poly_rows(self.ring.order, D)
        self.M = len(self.P)
        if self.M * self.M > run.bounds.budget:
            raise BudgetExceeded(f"{self.M ** 2} polynomial pairs exceed budget {run.bounds.budget}")
        # fixed[e][q] : q = e q (left scalar multiple)
        self._fixed = {}
        self._ann_cache = {}
        self.mul = BatchArith(self.sigma, 1).mul

    def fixed(self, e: int) -> tuple:
        if e not in self._fixed:
            eq = self.mul[e][self.P]
            unknown = (eq < 0).any(axis=1)
            self._fixed[e] = ((eq == self.P).all(axis=1), unknown)
        return self._fixed[e]

    def idempotent_for(self, coeff_mask: np.ndarray, quasi: bool):
        """e with r_R(A*) = eR, A* = coefficient set (or right ideal it generates).

        r_R(A* R) is read off as {c : (d r) c = 0}; sums of the d r need no
        separate treatment.  Coefficients may lie in the shadow of a window.
        """
        key = (coeff_mask.tobytes(), quasi)
        if key not in self._ann_cache:
            n = self.ring.order
            gens = np.flatnonzero(coeff_mask)
            if quasi:
                dr = self.mul[gens, :n].ravel()
                if (dr < 0).any():
                    raise CapacityError(f"{self.ring.name}: coefficient products leave the exact shadow")
                gens = np.unique(dr)
            ann = (self.mul[gens, :n] == 0).all(axis=0)
            self._ann_cache[key] = structure.generating_idempotent(self.ring, ann, "right")
        return self._ann_cache[key]

    def coeff_mask(self, rows) -> np.ndarray:
        mask = np.zeros(len(self.mul), dtype=bool)
        mask[np.asarray(rows).ravel()] = True
        return mask

    def fmt(self, row) -> str:
        return format_skew(self.ring, list(row))

    def check(self, label, fams, ann_of, coeffs_of, quasi: bool, K: int = 1) -> bool:
        run = self.run
        for fam in fams:
            ann, unknown = ann_of(fam)
            e = self.idempotent_for(coeffs_of(fam), quasi)
            desc = "A={" + ", ".join(self.fmt(self.P[p]) for p in fam) + "}"
            ev = {"kind": "annihilator", "A": [tuple(self.P[p].tolist()) for p in fam], "quasi": quasi, "K": K}
            if e is None:
                return run.conclude(label, False, f"{desc}: r_R(A*) has no idempotent generator", ev)
            ev["e"] = e
            if self.sigma.images[e] != e:
                return run.conclude(label, False, f"{desc}: sigma moves e={self.ring.format(e)}", ev)
            fixed, unk2 = self.fixed(e)
            known = ~(unknown | unk2)
            bad = np.flatnonzero(known & (ann != fixed))
            if len(bad):
                q = int(bad[0])
                side = "Aq=0 but q!=eq" if ann[q] else "q=eq but Aq!=0"
                ev["q"] = tuple(self.P[q].tolist())
                return run.conclude(label, False,
                                    f"{desc} q={self.fmt(self.P[q])} e={self.ring.format(e)}: {side}", ev)
        return run.conclude(label, True)


def _t_baer(run: _Run):
    ok_r = run.hypothesis("sigma_reversible_right")
    ok_u = run.hypothesis("sigma_unital")
    baer = run.hypothesis("baer")
    qbaer = run.hypothesis("quasi_baer")
    if not (ok_r and ok_u) or not (baer or qbaer):
        return run.report(NOT_MET)
    sa = _SeriesAnnihilator(run)
    Z, U = zero_product_matrix(run.sigma, run.bounds.D)
    P = sa.P
    if baer:
        fams, sampled = _family(sa.M, (2,), FAMILY_CAP, run.bounds.seed)
        run.extra_bounds["baer_families"] = len(fams)
        if sampled:
            run.extra_bounds["baer_sampled_seed"] = run.bounds.seed

        def ann_of(fam):
            return Z[list(fam)].all(axis=0), U[list(fam)].any(axis=0)

        sa.check("Baer: r(A) = e R[[x;s]]", fams, ann_of, lambda fam: sa.coeff_mask(P[list(fam)]), quasi=False)
    if qbaer:
        _quasi_clause(run, sa)
    if baer and not qbaer:
        run.notes.append("Baer but quasi-Baer decider disagrees")
    return run.report()


def _quasi_clause(run: _Run, sa: _SeriesAnnihilator):
    """A = right ideal of R[[x;s]] generated by a polynomial family.

    q annihilates A iff p c x^k q = 0 for all generators p, c in R and k in
    the orbit range of sigma (sigma^k determines the product pattern).
    """
    ring, sigma, P, D = run.ring, run.sigma, sa.P, run.bounds.D
    pre, period = sigma.orbit_shape()
    K = max(pre + period, 1)
    n = ring.order
    arith = BatchArith(sigma, D + K + 1)
    mul = arith.mul
    # test polynomials p * c * x^k: coefficient i+k is a_i sigma^i(c)
    width = D + K
    ann = np.ones((sa.M, sa.M), dtype=bool)
    unk = np.zeros((sa.M, sa.M), dtype=bool)
    coeffs = np.zeros((sa.M, len(mul)), dtype=bool)
    for pi in range(sa.M):
        p = P[pi]
        T = np.zeros((n * K, width), dtype=np.int64)
        tbad = np.zeros(n * K, dtype=bool)
        for ci in range(n):
            for k in range(K):
                for i in range(D + 1):
                    v = mul[p[i], arith.spow(i)[ci]]
                    if v < 0:
                        tbad[ci * K + k] = True
                        v = 0
                    T[ci * K + k, i + k] = v
                    coeffs[pi, v] = True
        for t in range(n * K):
            C, bad = arith.convolve(T[t:t + 1], P)
            ann[pi] &= ~bad & (C == 0).all(axis=1)
            unk[pi] |= bad | tbad[t]
    fams, sampled = _family(sa.M, (2, 3), FAMILY_CAP, run.bounds.seed)
    run.extra_bounds["quasi_families"] = len(fams)
    run.extra_bounds["orbit_K"] = K
    if sampled:
        run.extra_bounds["quasi_sampled_seed"] = run.bounds.seed

    def ann_of(fam):
        return ann[list(fam)].all(axis=0), unk[list(fam)].any(axis=0)

    sa.check("quasi-Baer: r(A) = e R[[x;s]]", fams, ann_of, lambda fam: coeffs[list(fam)].any(axis=0),
             quasi=True, K=K)


def _t_pp(run: _Run):
    if not (run.hypothesis("sigma_reversible_right") & run.hypothesis("sigma_unital")):
        return run.report(NOT_MET)
    ring = run.ring
    P = _poly_rows(ring.order, run.bounds.D)
    mul = BatchArith(run.sigma, 1).mul
    checked = 0
    for a in range(ring.order):
        ann = structure.annihilator_mask(ring, [a], "right")
        e = structure.generating_idempotent(ring, ann, "right")
        if e is None:
            continue
        checked += 1
        aq = mul[a][P]
        eq = mul[e][P]
        unknown = (aq < 0).any(axis=1) | (eq < 0).any(axis=1)
        lhs = (aq == 0).all(axis=1)
        rhs = (eq == P).all(axis=1)
        bad = np.flatnonzero(~unknown & (lhs != rhs))
        if len(bad):
            q = tuple(P[bad[0]].tolist())
            run.conclude("a q = 0 <=> q = e q", False,
                         f"a={ring.format(a)} e={ring.format(e)} q={format_skew(ring, q)}",
                         {"kind": "annihilator", "A": [(a,)], "quasi": False, "K": 1, "e": e, "q": q})
            break
    else:
        run.conclude("a q = 0 <=> q = e q", True)
    run.extra_bounds["pp_elements"] = checked
    if not _met(run.d("pp_right")):
        run.notes.append("R is not right p.p.; the series ring cannot be p.p. either")
    return run.report()


def _cor_rigid(run: _Run):
    if not run.hypothesis("sigma_rigid"):
        return run.report(NOT_MET)
    for prop in ("sigma_reversible_right", "sigma_unital", "reduced"):
        v = run.d(prop)
        run.conclude_verdicts(f"rigid => {prop}", _met(v), (v,))
    tb = verify_theorem("T-BAER", run.entry, run.bounds)
    if tb.status != NOT_MET:
        run.conclude("T-BAER transfer", tb.status == CONFIRMED, tb.witness, tb.evidence)
    return run.report()


_THEOREMS = {
    "T2.3": _t23, "L2.4": _l24, "P2.5": _p25, "L2.6": _l26, "T2.7": _t27,
    "L3.1": _l31, "L3.2": _l32, "T-BAER": _t_baer, "T-PP": _t_pp, "COR-RIGID": _cor_rigid,
}


def verify_theorem(theorem_id: str, entry: CatalogEntry, bounds: Bounds | None = None) -> TheoremReport:
    if theorem_id not in _THEOREMS:
        raise KeyError(f"unknown theorem {theorem_id!r}")
    return _THEOREMS[theorem_id](_Run(theorem_id, entry, bounds or Bounds()))


def verify_all(entries=None, theorems=THEOREM_IDS, bounds: Bounds | None = None) -> list:
    bounds = bounds or Bounds()
    entries = entries if entries is not None else load_catalog(bounds)
    return [verify_theorem(t, e, bounds) for e in entries for t in theorems]


# ---------------------------------------------------------------- replay

def _replay_annihilator(ev: dict, ring, sigma) -> bool:
    """Re-derive an annihilator-correspondence failure with SkewPoly arithmetic."""
    wide = shadow(sigma)
    xr, xs = (wide.ring, wide) if wide is not None else (ring, sigma)
    window = [Element(xr, i) for i in range(ring.order)]
    A = [SkewPoly(xs, p) for p in ev["A"]]
    if ev["quasi"]:
        # p * c * x^k over c, k generate the same annihilator as the right ideal pR[[x;s]]
        tests = [p * SkewPoly.monomial(xs, c, k) for p in A for c in window for k in range(ev["K"])]
        star = {(Element(xr, d) * c).index for t in tests for d in t.coeffs for c in window}
    else:
        tests = A
        star = {d for p in A for d in p.coeffs}
    ann = {c.index for c in window if all(properties._is_zero(Element(xr, d), c) for d in star)}
    e = ev.get("e")
    if e is None:
        return not properties._some_idempotent_generates(ring, ann, "right")
    el = Element(xr, e)
    eR = {p.index for c in window if (p := properties._prod(el, c)) is not None}
    if el * el != el or eR != ann:
        return False
    if sigma.images[e] != e:
        return True
    q = SkewPoly(xs, ev["q"])
    lhs = all((t * q).is_zero() for t in tests)
    rhs = scalar_mul(el, q) == q
    return lhs != rhs


def replay_report(report: TheoremReport, entry: CatalogEntry) -> bool:
    """True iff the evidence of a VIOLATION re-checks with element arithmetic."""
    ev = report.evidence
    if report.status != VIOLATION or ev is None:
        return False
    ring, sigma = entry.ring, entry.sigma
    try:
        kind = ev["kind"]
        if kind == "verdict":
            return properties.replay(ev["verdict"], ring, sigma)
        if kind == "annihilator":
            return _replay_annihilator(ev, ring, sigma)
        if kind == "moved_idempotent":
            e = Element(ring, ev["e"])
            return e * e == e and sigma(e) != e
        if kind == "idempotent_series":
            f = TruncSeries(sigma, ev["N"], ev["f"])
            return any(f.coeffs[1:]) and is_idempotent_trunc(f)[0]
        if kind == "noncentral_idempotent":
            e = TruncSeries(sigma, ev["N"], [ev["e"]])
            f = TruncSeries(sigma, ev["N"], ev["f"])
            return e * f != f * e
    except DegreeOverflow:
        return False
    raise ValueError(f"unknown evidence kind {ev.get('kind')!r}")


# ---------------------------------------------------------------- negative control

@dataclass
class CaveatReport:
    baer_z2: Verdict
    baer_truncated: Verdict
    t_baer_z2: TheoremReport

    @property
    def passed(self) -> bool:
        return (self.baer_z2.status is Status.HOLDS
                and self.baer_truncated.status is Status.FAILS
                and self.t_baer_z2.status == CONFIRMED)

    def __str__(self):
        return "\n".join([str(self.baer_z2), str(self.baer_truncated), str(self.t_baer_z2),
                          f"caveat check {'passed' if self.passed else 'FAILED'}"])


def truncation_caveat_check(bounds: Bounds | None = None) -> CaveatReport:
    """Z_2[t]/(t^2) is Z_2[[t]] truncated at N=2; it is not Baer though Z_2 is.

    The transfer theorem concerns full series and is exercised through the
    annihilator mechanism (T-BAER), never by deciding Baer on a truncation.
    """
    bounds = bounds or Bounds()
    Z2 = rg.make_zn(2)
    trunc = rg.make_poly_quotient(Z2, "t^2")
    entry = CatalogEntry("Z2-identity", Z2, endo.identity(Z2))
    return CaveatReport(decide("baer", Z2, None, bounds), decide("baer", trunc, None, bounds),
                        verify_theorem("T-BAER", entry, bounds))


# ---------------------------------------------------------------- search

@dataclass
class SearchHit:
    ring: rg.Ring
    sigma: endo.Endomorphism
    holds: list
    fails: Verdict

    def __str__(self):
        return f"{self.ring.expr} / {self.sigma.label}: {self.fails.property} fails, {self.fails.witness_text}"


def search_rings(max_order: int = 8) -> list:
    """The enumerable ring family, ascending by order, deterministic."""
    out = []

    def add(build):
        try:
            r = build()
        except (ConstructionError, CapacityError):
            return
        if r.order <= max_order and r not in out:
            out.append(r)

    for n in range(2, min(max_order, 16) + 1):
        add(lambda n=n: rg.make_zn(n))
    for p, k in ((2, 2), (2, 3), (3, 2), (2, 4)):
        add(lambda p=p, k=k: rg.make_galois_field(p, k))
    for p, k in ((2, 2), (2, 3), (3, 2), (2, 4)):
        if p ** k <= max_order:
            add(lambda p=p, k=k: rg.make_poly_quotient(rg.make_zn(p), f"t^{k}"))
    small = [rg.make_zn(2), rg.make_zn(3), rg.make_zn(4), rg.make_galois_field(2, 2),
             rg.make_poly_quotient(rg.make_zn(2), "t^2")]
    for i, a in enumerate(small):
        for b in small[i:]:
            if a.order * b.order <= max_order:
                add(lambda a=a, b=b: rg.make_product(a, b))
    for k, base in ((2, rg.make_zn(2)), (2, rg.make_zn(3))):
        if base.order ** 3 <= max_order:
            add(lambda k=k, base=base: rg.make_upper_triangular(k, base))
    if max_order >= 16:
        add(lambda: rg.make_matrix(2, rg.make_zn(2)))
    if max_order >= 256:
        add(lambda: rg.make_group_algebra(rg.make_zn(2), "Q8"))
    out.sort(key=lambda r: r.order)
    return out


def search_endomorphisms(ring: rg.Ring, table_max_order: int = 4) -> list:
    """Built-in endomorphisms first, then explicit tables (small rings only)."""
    found = []

    def add(build):
        try:
            s = build()
        except (ConstructionError, NotAnEndomorphism, CapacityError):
            return
        if s not in found:
            found.append(s)

    add(lambda: endo.identity(ring))
    add(lambda: endo.eval_at_zero(ring) if ring.graded else endo.constant_term(ring))
    add(lambda: endo.swap(ring))
    for q in (2, 3):
        add(lambda q=q: endo.frobenius(ring, q))
    if ring.order <= table_max_order:
        for s in endo.all_endomorphisms(ring, table_max_order):
            if s not in found:
                found.append(s)
    return found


def search_counterexamples(holds, fails: str, max_order: int = 8, bounds: Bounds | None = None,
                           rings=None) -> list:
    """All (R, sigma) in the family where every ``holds`` property is met and
    ``fails`` fails, with the failing witness."""
    bounds = bounds or Bounds()
    if isinstance(holds, str):
        holds = [holds]
    sigma_free = all(p in SIGMA_FREE for p in [*holds, fails])
    hits = []
    for ring in (rings if rings is not None else search_rings(max_order)):
        sigmas = [endo.identity(ring)] if sigma_free else search_endomorphisms(ring)
        for sigma in sigmas:
            try:
                pv = [decide(p, ring, sigma, bounds) for p in holds]
                if not all(_met(v) for v in pv):
                    continue
                qv = decide(fails, ring, sigma, bounds)
            except (BudgetExceeded, CapacityError):
                continue
            if qv.status is Status.FAILS:
                hits.append(SearchHit(ring, sigma, pv, qv))
    return hits


SEPARATIONS = {
    # name: (holds, fails, max_order)
    "reduced-not-right-sigma-reversible": (["reduced"], "sigma_reversible_right", 4),
    "right-sigma-reversible-not-C_sigma": (["sigma_reversible_right", "sigma_unital"], "c_sigma", 4),
    "baer-not-reversible": (["baer"], "reversible", 16),
    "reduced-not-sigma-rigid": (["reduced"], "sigma_rigid", 4),
    "symmetric-not-reduced": (["symmetric"], "reduced", 4),
    "reversible-not-symmetric": (["reversible"], "symmetric", 256),
    "right-sigma-reversible-not-sigma-rigid": (["sigma_reversible_right"], "sigma_rigid", 4),
    "C_sigma-not-right-sigma-reversible": (["c_sigma"], "sigma_reversible_right", 16),
}


def separation_witnesses(names=None, bounds: Bounds | None = None) -> dict:
    out = {}
    for name, (holds, fails, max_order) in SEPARATIONS.items():
        if names is not None and name not in names:
            continue
        out[name] = search_counterexamples(holds, fails, max_order, bounds)
    return out
