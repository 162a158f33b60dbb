"""Deciders for ring properties, with replayable witnesses.

Element-level properties are decided exhaustively from the operation
tables.  Properties quantifying over power series are decided on skew
polynomials of degree <= D and reported as ``VerifiedUpToBound``: a
polynomial counterexample is a series counterexample, so ``Fails`` stays
exact.

Every ``Fails`` verdict carries a witness dict of ring indices.  ``replay``
re-checks the witness with plain Element arithmetic, independent of the
vectorised search path.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

import numpy as np

from . import structure
from .endomorphism import Endomorphism, identity
from .errors import BudgetExceeded, DegenerateRing, DegreeOverflow
from .rings import Element, Ring
from .skew import BatchArith, SkewPoly, coefficient_rows, format_skew, shadow


class Status(str, Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    BOUNDED = "VerifiedUpToBound"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Bounds:
    D: int = 2
    N: int = 3
    budget: int = 20_000_000
    sample: int = 0
    seed: int = 0


@dataclass
class Verdict:
    property: str
    status: Status
    ring: str
    endo: str
    witness: dict | None = None
    witness_text: str = ""
    bounds: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status is not Status.FAILS

    def bounds_text(self) -> str:
        return ",".join(f"{k}={v}" for k, v in self.bounds.items()) or "-"

    def __str__(self):
        s = f"{self.property}[{self.ring}, {self.endo}]: {self.status}"
        if self.bounds:
            s += f" ({self.bounds_text()})"
        if self.witness_text:
            s += f"; witness {self.witness_text}"
        return s


PROPERTY_IDS = (
    "reduced", "reversible", "symmetric", "semiprime", "abelian",
    "sigma_reversible_right", "sigma_reversible_left", "sigma_reversible",
    "sigma_symmetric_right", "sigma_symmetric_left", "sigma_symmetric",
    "sigma_rigid", "c_sigma", "sigma_compatible",
    "baer", "quasi_baer", "pp_right", "pp_left",
    "armendariz", "sigma_skew_sps_armendariz", "sigma_sps_armendariz",
)
# auxiliary ids used by the theorem harness and search goals
EXTRA_IDS = ("sigma_unital", "series_reversible", "series_symmetric", "series_triple_vanishing")

SIGMA_FREE = {"reduced", "reversible", "symmetric", "semiprime", "abelian",
              "baer", "quasi_baer", "pp_right", "pp_left", "armendariz"}


def _fmt_w(ring: Ring, w: dict) -> str:
    parts = []
    for k, v in w.items():
        if k in ("p", "q", "f", "g", "h"):
            parts.append(f"{k}={format_skew(ring, v)}")
        elif k in ("ideal", "annihilator", "right_ideal", "subset"):
            parts.append(f"{k}={structure.format_set(ring, v)}")
        elif k in ("i", "j", "k", "side", "direction"):
            parts.append(f"{k}={v}")
        else:
            parts.append(f"{k}={ring.format(v)}")
    return " ".join(parts)


class _Ctx:
    def __init__(self, prop, ring, sigma, bounds):
        self.prop, self.ring, self.sigma, self.bounds = prop, ring, sigma, bounds
        self.skipped = 0
        # xm / xs: multiplication and sigma on the exact shadow of a graded
        # window when one exists; window indices embed unchanged
        wide = shadow(sigma)
        self.xm = (wide or sigma).ring.tables.mul
        self.n = n = ring.order
        self.m = self.xm[:n, :n]
        self.s = np.array(sigma.images)

    def fails(self, **w) -> Verdict:
        text = _fmt_w(self.ring, w)
        if self.prop == "baer":
            text = f"ideal {structure.format_set(self.ring, w['ideal'])} = r({structure.format_set(self.ring, w['subset'])})"
        return Verdict(self.prop, Status.FAILS, self.ring.name, self.sigma.label, dict(w), text, self._bounds(False))

    def holds(self, series: bool = False, exact: bool = False, **extra) -> Verdict:
        graded = self.ring.graded and not exact
        status = Status.BOUNDED if (series or graded) else Status.HOLDS
        b = self._bounds(series)
        b.update(extra)
        return Verdict(self.prop, status, self.ring.name, self.sigma.label, None, "", b)

    def _bounds(self, series) -> dict:
        b = {}
        if series:
            b["D"] = self.bounds.D
        if self.ring.graded:
            b["degree_cap"] = self.ring.degree_cap
        if self.skipped:
            b["skipped"] = self.skipped
        return b


def _first(mask: np.ndarray):
    hits = np.argwhere(mask)
    return None if len(hits) == 0 else tuple(int(v) for v in hits[0])


# ---------------------------------------------------------------- element level

def _reduced(c: _Ctx) -> Verdict:
    m = c.m
    r = np.arange(c.ring.order)
    hit = _first((m[r, r] == 0) & (r != 0))
    return c.fails(a=hit[0]) if hit else c.holds()


def _reversible(c: _Ctx) -> Verdict:
    m = c.m
    hit = _first((m == 0) & (m.T != 0))
    return c.fails(a=hit[0], b=hit[1]) if hit else c.holds()


def _triples(c: _Ctx, other: Callable) -> tuple | None:
    """Scan abc = 0 => other(a, ab, ac) != 0; returns least violating (a,b,c)."""
    m, n = c.xm, c.n
    for a in range(n):
        ab = m[a, :n]
        abc = np.where((ab >= 0)[:, None], m[np.maximum(ab, 0), :n], -2)
        rhs = other(a)
        c.skipped += int((abc == -2).sum() + ((abc == 0) & (rhs == -2)).sum())
        hit = _first((abc == 0) & (rhs != 0) & (rhs != -2))
        if hit:
            return a, hit[0], hit[1]
    return None


def _symmetric(c: _Ctx) -> Verdict:
    m, n = c.xm, c.n

    def acb(a):
        ac = m[a, :n]
        # rhs[b, cc] = (a cc) b
        return np.where((ac >= 0)[None, :], m[np.maximum(ac, 0), :n].T, -2)

    hit = _triples(c, acb)
    return c.fails(a=hit[0], b=hit[1], c=hit[2]) if hit else c.holds()


def _sigma_symmetric_right(c: _Ctx) -> Verdict:
    m, n, s = c.xm, c.n, c.s

    def ac_sb(a):
        ac = m[a, :n]
        # rhs[b, cc] = (a cc) sigma(b)
        return np.where((ac >= 0)[None, :], m[np.maximum(ac, 0)][:, s].T, -2)

    hit = _triples(c, ac_sb)
    return c.fails(a=hit[0], b=hit[1], c=hit[2]) if hit else c.holds()


def _sigma_symmetric_left(c: _Ctx) -> Verdict:
    m, n, s = c.xm, c.n, c.s

    def sb_ac(a):
        ac = m[a, :n]
        # rhs[b, cc] = sigma(b) (a cc)
        return np.where((ac >= 0)[None, :], m[s][:, np.maximum(ac, 0)], -2)

    hit = _triples(c, sb_ac)
    return c.fails(a=hit[0], b=hit[1], c=hit[2]) if hit else c.holds()


def _semiprime(c: _Ctx) -> Verdict:
    m, n = c.xm, c.n
    for a in range(1, n):
        ar = m[a, :n]
        if (ar < 0).any():
            c.skipped += 1
            continue
        if (m[ar, a] == 0).all():
            return c.fails(a=a)
    return c.holds()


def _abelian(c: _Ctx) -> Verdict:
    m = c.m
    for e in structure.idempotent_indices(c.ring):
        er, re = m[e], m[:, e]
        unknown = (er < 0) & (re < 0)
        c.skipped += int(unknown.sum())
        hit = _first((er != re) & ~unknown)
        if hit:
            return c.fails(e=e, r=hit[0])
    return c.holds()


def _sigma_unital(c: _Ctx) -> Verdict:
    one = c.ring.one_index
    if c.sigma.images[one] != one:
        return c.fails(sigma_one=c.sigma.images[one])
    return c.holds(exact=True)


def _sigma_reversible_right(c: _Ctx) -> Verdict:
    m, s = c.m, c.s
    # rhs[a, b] = b sigma(a)
    hit = _first((m == 0) & (m[:, s].T != 0))
    return c.fails(a=hit[0], b=hit[1]) if hit else c.holds()


def _sigma_reversible_left(c: _Ctx) -> Verdict:
    m, s = c.m, c.s
    # rhs[a, b] = sigma(b) a
    hit = _first((m == 0) & (m[s].T != 0))
    return c.fails(a=hit[0], b=hit[1]) if hit else c.holds()


def _both(right: Callable, left: Callable) -> Callable:
    def decide(c: _Ctx) -> Verdict:
        for side, fn in (("right", right), ("left", left)):
            v = fn(c)
            if v.status is Status.FAILS:
                return c.fails(side=side, **v.witness)
        return c.holds()
    return decide


def _sigma_rigid(c: _Ctx) -> Verdict:
    m, s = c.m, c.s
    r = np.arange(c.ring.order)
    hit = _first((m[r, s] == 0) & (r != 0))
    return c.fails(a=hit[0]) if hit else c.holds()


def _c_sigma(c: _Ctx) -> Verdict:
    m, s = c.m, c.s
    hit = _first((m[:, s] == 0) & (m != 0))
    return c.fails(a=hit[0], b=hit[1]) if hit else c.holds()


def _sigma_compatible(c: _Ctx) -> Verdict:
    m, s = c.m, c.s
    asb = m[:, s]
    hit = _first((asb == 0) & (m != 0))
    if hit:
        return c.fails(a=hit[0], b=hit[1], direction="a*sigma(b)=0 but ab!=0")
    hit = _first((m == 0) & (asb != 0))
    if hit:
        return c.fails(a=hit[0], b=hit[1], direction="ab=0 but a*sigma(b)!=0")
    return c.holds()


# ---------------------------------------------------------------- annihilator families

def _baer(c: _Ctx) -> Verdict:
    found = structure.annihilator_lattice_sources(c.ring, "right")
    members = sorted(found.values(), key=lambda ms: structure._sort_key(ms[0]))
    for mask, src in members:
        if structure.generating_idempotent(c.ring, mask, "right") is None:
            return c.fails(ideal=tuple(np.flatnonzero(mask).tolist()), subset=src)
    return c.holds()


def _quasi_baer(c: _Ctx) -> Verdict:
    for I in structure.ideal_masks(c.ring, "right"):
        ann = structure.annihilator_mask(c.ring, np.flatnonzero(I).tolist(), "right")
        if structure.generating_idempotent(c.ring, ann, "right") is None:
            return c.fails(right_ideal=tuple(np.flatnonzero(I).tolist()),
                           annihilator=tuple(np.flatnonzero(ann).tolist()))
    return c.holds()


def _pp(side: str) -> Callable:
    def decide(c: _Ctx) -> Verdict:
        for a in range(c.ring.order):
            ann = structure.annihilator_mask(c.ring, [a], side)
            if structure.generating_idempotent(c.ring, ann, side) is None:
                return c.fails(a=a, annihilator=tuple(np.flatnonzero(ann).tolist()))
        return c.holds()
    return decide


# ---------------------------------------------------------------- polynomial level

@functools.lru_cache(maxsize=64)
def _poly_rows(order: int, D: int) -> np.ndarray:
    rows = coefficient_rows(order, D + 1)
    rows.setflags(write=False)
    return rows


def _pair_plan(c: _Ctx, count: int):
    """Choose exhaustive enumeration or seeded sampling for ``count`` pairs."""
    b = c.bounds
    if count <= b.budget:
        return "exhaustive", None
    if b.sample <= 0:
        raise BudgetExceeded(f"{c.prop} on {c.ring.name}: {count} cases exceed budget {b.budget}; "
                             f"request sampling explicitly")
    return "sampled", np.random.default_rng(b.seed)


def _armendariz(kind: str) -> Callable:
    """kind: 'classical' (R[x]), 'skew' (a_i sigma^i(b_j)), 'sps' (a_i b_j)."""

    def decide(c: _Ctx) -> Verdict:
        ring, D = c.ring, c.bounds.D
        sigma = identity(ring) if kind == "classical" else c.sigma
        arith = BatchArith(sigma, D + 1)
        P = _poly_rows(ring.order, D)
        M = len(P)
        mode, rng = _pair_plan(c, M * M)

        def violations(A, B, zero):
            # least (i, j) with the conclusion product nonzero, per row
            out = np.full(len(zero), -1, dtype=np.int64)
            for i in range(D + 1):
                for j in range(D + 1):
                    bj = arith.spow(i)[B[:, j]] if kind == "skew" else B[:, j]
                    term = arith.mul[A[:, i], bj]
                    fresh = zero & (term != 0) & (out < 0)
                    out[fresh] = i * (D + 1) + j
            return out

        if mode == "exhaustive":
            for pi in range(1, M):
                A = P[pi:pi + 1]
                C, bad = arith.convolve(A, P, twist=kind != "classical")
                zero = ~bad & (C == 0).all(axis=1)
                c.skipped += int(bad.sum())
                v = violations(np.broadcast_to(A, P.shape), P, zero)
                hit = np.flatnonzero(v >= 0)
                if len(hit):
                    qi = int(hit[0])
                    i, j = divmod(int(v[qi]), D + 1)
                    return c.fails(p=tuple(P[pi].tolist()), q=tuple(P[qi].tolist()), i=i, j=j)
            return c.holds(series=True, pairs=M * M)
        total = c.bounds.sample
        done = 0
        while done < total:
            k = min(65536, total - done)
            pi = rng.integers(0, M, k)
            qi = rng.integers(0, M, k)
            A, B = P[pi], P[qi]
            C, bad = arith.convolve(A, B, twist=kind != "classical")
            zero = ~bad & (C == 0).all(axis=1)
            c.skipped += int(bad.sum())
            v = violations(A, B, zero)
            hit = np.flatnonzero(v >= 0)
            if len(hit):
                r = int(hit[0])
                i, j = divmod(int(v[r]), D + 1)
                return c.fails(p=tuple(A[r].tolist()), q=tuple(B[r].tolist()), i=i, j=j)
            done += k
        return c.holds(series=True, samples=total, seed=c.bounds.seed)

    return decide


@functools.lru_cache(maxsize=16)
def zero_product_matrix(sigma: Endomorphism, D: int):
    """(Z, U): Z[p, q] True iff p*q = 0 exactly, U[p, q] True iff unknown.

    Rows and columns index all skew polynomials of degree <= D.
    """
    arith = BatchArith(sigma, D + 1)
    P = _poly_rows(sigma.ring.order, D)
    M = len(P)
    Z = np.zeros((M, M), dtype=bool)
    U = np.zeros((M, M), dtype=bool)
    for pi in range(M):
        C, bad = arith.convolve(P[pi:pi + 1], P)
        Z[pi] = ~bad & (C == 0).all(axis=1)
        U[pi] = bad
    Z.setflags(write=False)
    U.setflags(write=False)
    return Z, U


def _series_reversible(c: _Ctx) -> Verdict:
    P = _poly_rows(c.ring.order, c.bounds.D)
    M = len(P)
    if M * M > c.bounds.budget:
        raise BudgetExceeded(f"series_reversible on {c.ring.name}: {M * M} pairs exceed budget {c.bounds.budget}")
    Z, U = zero_product_matrix(c.sigma, c.bounds.D)
    c.skipped += int(U.sum())
    hit = _first(Z & ~Z.T & ~U.T)
    if hit:
        return c.fails(f=tuple(P[hit[0]].tolist()), g=tuple(P[hit[1]].tolist()))
    return c.holds(series=True, pairs=M * M)


def _pair_products(c: _Ctx, arith: BatchArith, P: np.ndarray):
    M = len(P)
    G = np.repeat(P, M, axis=0)
    H = np.tile(P, (M, 1))
    GH, bad_gh = arith.convolve(G, H)
    HG, bad_hg = arith.convolve(H, G)
    return GH, bad_gh, HG, bad_hg


def _series_symmetric(c: _Ctx) -> Verdict:
    ring, D = c.ring, c.bounds.D
    P = _poly_rows(ring.order, D)
    M = len(P)
    if M ** 3 > c.bounds.budget:
        raise BudgetExceeded(f"series_symmetric on {ring.name}: {M ** 3} triples exceed budget {c.bounds.budget}")
    arith = BatchArith(c.sigma, 3 * D + 1)
    GH, bad_gh, HG, bad_hg = _pair_products(c, arith, P)
    for fi in range(M):
        F = P[fi:fi + 1]
        C1, b1 = arith.convolve(F, GH)
        C2, b2 = arith.convolve(F, HG)
        unknown1 = b1 | bad_gh
        unknown2 = b2 | bad_hg
        zero1 = ~unknown1 & (C1 == 0).all(axis=1)
        nonzero2 = ~unknown2 & (C2 != 0).any(axis=1)
        c.skipped += int(unknown1.sum())
        hit = np.flatnonzero(zero1 & nonzero2)
        if len(hit):
            g, h = divmod(int(hit[0]), M)
            return c.fails(f=tuple(P[fi].tolist()), g=tuple(P[g].tolist()), h=tuple(P[h].tolist()))
    return c.holds(series=True, triples=M ** 3)


def _series_triple_vanishing(c: _Ctx) -> Verdict:
    """fgh = 0 => a_i b_j c_k = 0 for all i, j, k."""
    ring, D = c.ring, c.bounds.D
    P = _poly_rows(ring.order, D)
    M = len(P)
    if M ** 3 > c.bounds.budget:
        raise BudgetExceeded(f"triple vanishing on {ring.name}: {M ** 3} triples exceed budget {c.bounds.budget}")
    arith = BatchArith(c.sigma, 3 * D + 1)
    G = np.repeat(P, M, axis=0)
    H = np.tile(P, (M, 1))
    GH, bad_gh = arith.convolve(G, H)
    mul = arith.mul
    for fi in range(M):
        F = P[fi:fi + 1]
        C, b = arith.convolve(F, GH)
        unknown = b | bad_gh
        zero = ~unknown & (C == 0).all(axis=1)
        c.skipped += int(unknown.sum())
        idx = np.flatnonzero(zero)
        if not len(idx):
            continue
        Gs, Hs = G[idx], H[idx]
        for i in range(D + 1):
            ai = P[fi, i]
            if ai == 0:
                continue
            for j in range(D + 1):
                ab = mul[ai, Gs[:, j]]
                for k in range(D + 1):
                    abc = np.where(ab >= 0, mul[np.maximum(ab, 0), Hs[:, k]], -1)
                    bad_rows = np.flatnonzero(abc != 0)
                    if len(bad_rows):
                        r = int(idx[bad_rows[0]])
                        g, h = divmod(r, M)
                        return c.fails(f=tuple(P[fi].tolist()), g=tuple(P[g].tolist()),
                                       h=tuple(P[h].tolist()), i=i, j=j, k=k)
    return c.holds(series=True, triples=M ** 3)


_DECIDERS = {
    "reduced": _reduced,
    "reversible": _reversible,
    "symmetric": _symmetric,
    "semiprime": _semiprime,
    "abelian": _abelian,
    "sigma_reversible_right": _sigma_reversible_right,
    "sigma_reversible_left": _sigma_reversible_left,
    "sigma_reversible": _both(_sigma_reversible_right, _sigma_reversible_left),
    "sigma_symmetric_right": _sigma_symmetric_right,
    "sigma_symmetric_left": _sigma_symmetric_left,
    "sigma_symmetric": _both(_sigma_symmetric_right, _sigma_symmetric_left),
    "sigma_rigid": _sigma_rigid,
    "c_sigma": _c_sigma,
    "sigma_compatible": _sigma_compatible,
    "baer": _baer,
    "quasi_baer": _quasi_baer,
    "pp_right": _pp("right"),
    "pp_left": _pp("left"),
    "armendariz": _armendariz("classical"),
    "sigma_skew_sps_armendariz": _armendariz("skew"),
    "sigma_sps_armendariz": _armendariz("sps"),
    "sigma_unital": _sigma_unital,
    "series_reversible": _series_reversible,
    "series_symmetric": _series_symmetric,
    "series_triple_vanishing": _series_triple_vanishing,
}


@functools.lru_cache(maxsize=4096)
def _decide_cached(prop: str, ring: Ring, sigma: Endomorphism, bounds: Bounds) -> Verdict:
    return _DECIDERS[prop](_Ctx(prop, ring, sigma, bounds))


def decide(prop: str, ring: Ring, sigma: Endomorphism | None = None, bounds: Bounds | None = None, **kw) -> Verdict:
    """Run the decider for ``prop``; ``sigma=None`` means the identity."""
    if prop not in _DECIDERS:
        raise KeyError(f"unknown property {prop!r}")
    if ring.order < 2:
        raise DegenerateRing(f"{ring.name} has a single element")
    if sigma is None:
        sigma = identity(ring)
    elif sigma.ring != ring:
        raise ValueError(f"{sigma.label} is not an endomorphism of {ring.name}")
    bounds = bounds or Bounds(**kw)
    v = _decide_cached(prop, ring, sigma, bounds)
    # hand out a copy so callers cannot corrupt the cache
    return Verdict(v.property, v.status, v.ring, v.endo, dict(v.witness) if v.witness else None,
                   v.witness_text, dict(v.bounds))


def is_reduced(ring, sigma=None, **kw):
    return decide("reduced", ring, sigma, **kw)


def is_reversible(ring, sigma=None, **kw):
    return decide("reversible", ring, sigma, **kw)


def is_symmetric(ring, sigma=None, **kw):
    return decide("symmetric", ring, sigma, **kw)


def is_semiprime(ring, sigma=None, **kw):
    return decide("semiprime", ring, sigma, **kw)


def is_abelian(ring, sigma=None, **kw):
    return decide("abelian", ring, sigma, **kw)


def is_right_sigma_reversible(ring, sigma, **kw):
    return decide("sigma_reversible_right", ring, sigma, **kw)


def is_left_sigma_reversible(ring, sigma, **kw):
    return decide("sigma_reversible_left", ring, sigma, **kw)


def is_sigma_reversible(ring, sigma, **kw):
    return decide("sigma_reversible", ring, sigma, **kw)


def is_right_sigma_symmetric(ring, sigma, **kw):
    return decide("sigma_symmetric_right", ring, sigma, **kw)


def is_left_sigma_symmetric(ring, sigma, **kw):
    return decide("sigma_symmetric_left", ring, sigma, **kw)


def is_sigma_symmetric(ring, sigma, **kw):
    return decide("sigma_symmetric", ring, sigma, **kw)


def is_sigma_rigid(ring, sigma, **kw):
    return decide("sigma_rigid", ring, sigma, **kw)


def satisfies_c_sigma(ring, sigma, **kw):
    return decide("c_sigma", ring, sigma, **kw)


def is_sigma_compatible(ring, sigma, **kw):
    return decide("sigma_compatible", ring, sigma, **kw)


def is_baer(ring, **kw):
    return decide("baer", ring, None, **kw)


def is_quasi_baer(ring, **kw):
    return decide("quasi_baer", ring, None, **kw)


def is_pp(ring, side="right", **kw):
    return decide(f"pp_{side}", ring, None, **kw)


def is_armendariz_bounded(ring, D=2, **kw):
    return decide("armendariz", ring, None, D=D, **kw)


def is_sigma_skew_armendariz_bounded(ring, sigma, D=2, **kw):
    return decide("sigma_skew_sps_armendariz", ring, sigma, D=D, **kw)


def is_sigma_sps_armendariz_bounded(ring, sigma, D=2, **kw):
    return decide("sigma_sps_armendariz", ring, sigma, D=D, **kw)


# ---------------------------------------------------------------- replay

def _prod(*xs: Element):
    """Left-to-right product; None when the final product leaves a graded
    window (such a product is nonzero).  Intermediate overflow propagates."""
    acc = xs[0]
    for k, x in enumerate(xs[1:]):
        try:
            acc = acc * x
        except DegreeOverflow:
            if k == len(xs) - 2:
                return None
            raise
    return acc


def _is_zero(*xs: Element) -> bool:
    p = _prod(*xs)
    return p is not None and p.is_zero()


def replay(verdict: Verdict, ring: Ring, sigma: Endomorphism | None = None) -> bool:
    """True iff the witness of a Fails verdict violates the defining implication."""
    if verdict.status is not Status.FAILS or not verdict.witness:
        return False
    sigma = sigma or identity(ring)
    w = verdict.witness
    window = ring
    wide = shadow(sigma)
    if wide is not None and verdict.property not in ("baer", "quasi_baer", "pp_right", "pp_left"):
        # exact arithmetic; quantifiers still range over the window
        ring, sigma = wide.ring, wide
    E = lambda k: Element(ring, w[k])  # noqa: E731
    s = sigma
    prop = verdict.property
    if prop in ("sigma_reversible", "sigma_symmetric"):
        prop = f"{prop}_{w['side']}"
    if prop == "reduced":
        a = E("a")
        return not a.is_zero() and _is_zero(a, a)
    if prop == "reversible":
        a, b = E("a"), E("b")
        return _is_zero(a, b) and not _is_zero(b, a)
    if prop == "symmetric":
        a, b, c = E("a"), E("b"), E("c")
        return _is_zero(a, b, c) and not _is_zero(a, c, b)
    if prop == "semiprime":
        a = E("a")
        return not a.is_zero() and all(_is_zero(a, Element(ring, r), a) for r in range(window.order))
    if prop == "abelian":
        e, r = E("e"), E("r")
        return e * e == e and _prod(e, r) != _prod(r, e)
    if prop == "sigma_unital":
        return s(ring.one()) != ring.one()
    if prop == "sigma_reversible_right":
        a, b = E("a"), E("b")
        return _is_zero(a, b) and not _is_zero(b, s(a))
    if prop == "sigma_reversible_left":
        a, b = E("a"), E("b")
        return _is_zero(a, b) and not _is_zero(s(b), a)
    if prop == "sigma_symmetric_right":
        a, b, c = E("a"), E("b"), E("c")
        return _is_zero(a, b, c) and not _is_zero(a, c, s(b))
    if prop == "sigma_symmetric_left":
        a, b, c = E("a"), E("b"), E("c")
        return _is_zero(a, b, c) and not _is_zero(s(b), a, c)
    if prop == "sigma_rigid":
        a = E("a")
        return not a.is_zero() and _is_zero(a, s(a))
    if prop == "c_sigma":
        a, b = E("a"), E("b")
        return _is_zero(a, s(b)) and not _is_zero(a, b)
    if prop == "sigma_compatible":
        a, b = E("a"), E("b")
        return _is_zero(a, s(b)) != _is_zero(a, b)
    if prop == "baer":
        ideal = set(w["ideal"])
        got = {c.index for c in ring.elements() if all(_is_zero(Element(ring, d), c) for d in w["subset"])}
        return got == ideal and not _some_idempotent_generates(ring, ideal, "right")
    if prop == "quasi_baer":
        I = set(w["right_ideal"])
        closed = all(_prod(Element(ring, x), r) is None or _prod(Element(ring, x), r).index in I
                     for x in I for r in ring.elements())
        ann = {c.index for c in ring.elements() if all(_is_zero(Element(ring, d), c) for d in I)}
        return closed and ann == set(w["annihilator"]) and not _some_idempotent_generates(ring, ann, "right")
    if prop in ("pp_right", "pp_left"):
        side = prop[3:]
        a = E("a")
        if side == "right":
            ann = {c.index for c in ring.elements() if _is_zero(a, c)}
        else:
            ann = {c.index for c in ring.elements() if _is_zero(c, a)}
        return ann == set(w["annihilator"]) and not _some_idempotent_generates(ring, ann, side)
    if prop in ("armendariz", "sigma_skew_sps_armendariz", "sigma_sps_armendariz"):
        t = identity(ring) if prop == "armendariz" else sigma
        p, q = SkewPoly(t, w["p"]), SkewPoly(t, w["q"])
        if not (p * q).is_zero():
            return False
        a, b = p.coefficient(w["i"]), q.coefficient(w["j"])
        if prop == "sigma_skew_sps_armendariz":
            b = Element(ring, int(sigma.power(w["i"])[b.index]))
        return not _is_zero(a, b)
    if prop == "series_reversible":
        f, g = SkewPoly(sigma, w["f"]), SkewPoly(sigma, w["g"])
        return (f * g).is_zero() and not (g * f).is_zero()
    if prop == "series_symmetric":
        f, g, h = (SkewPoly(sigma, w[k]) for k in "fgh")
        return (f * g * h).is_zero() and not (f * h * g).is_zero()
    if prop == "series_triple_vanishing":
        f, g, h = (SkewPoly(sigma, w[k]) for k in "fgh")
        return (f * g * h).is_zero() and not _is_zero(f.coefficient(w["i"]), g.coefficient(w["j"]), h.coefficient(w["k"]))
    raise KeyError(f"no replay for {prop!r}")


def _some_idempotent_generates(ring: Ring, target: set, side: str) -> bool:
    for e in ring.elements():
        if _prod(e, e) != e:
            continue
        if side == "right":
            gen = {p.index for r in ring.elements() if (p := _prod(e, r)) is not None}
        else:
            gen = {p.index for r in ring.elements() if (p := _prod(r, e)) is not None}
        if gen == target:
            return True
    return False
