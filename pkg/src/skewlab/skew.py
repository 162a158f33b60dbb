"""Skew polynomials R[x; sigma] and skew power series truncated mod x^N.

Multiplication follows the Ore rule ``x a = sigma(a) x``, so the coefficient
of x^l in p*q is ``sum_{i+j=l} a_i sigma^i(b_j)``.  Coefficients are stored
low to high as ring indices.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

import functools

from .endomorphism import Endomorphism, eval_at_zero, identity
from .errors import CapacityError, EndoMismatch, RingMismatch
from .rings import TABLE_CAP, Element, Ring, make_bounded_poly


def skew_variable(ring: Ring) -> str:
    return "y" if ring.variable == "x" else "x"


def format_skew(ring: Ring, coeffs: Sequence[int], var: str | None = None) -> str:
    """Render ``a0 + a1*x + a2*x^2`` with ring-specific coefficient syntax."""
    var = var or skew_variable(ring)
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        cs = ring.format(c)
        if "+" in cs or cs.startswith("-"):
            cs = f"({cs})"
        if i == 0:
            terms.append(cs)
            continue
        mono = var if i == 1 else f"{var}^{i}"
        terms.append(mono if c == ring.one_index else f"{cs}*{mono}")
    return " + ".join(terms) if terms else "0"


def _coerce(ring: Ring, coeffs: Iterable) -> list:
    out = []
    for c in coeffs:
        if isinstance(c, Element):
            out.append(ring._own(c))
        else:
            out.append(ring.encode(c))
    return out


def _trim(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _convolve(sigma: Endomorphism, a: Sequence[int], b: Sequence[int], limit: int | None = None) -> list:
    ring = sigma.ring
    length = len(a) + len(b) - 1 if a and b else 0
    if limit is not None:
        length = min(length, limit)
    out = [0] * length
    for i, ai in enumerate(a):
        if ai == 0 or i >= length:
            continue
        s = sigma.power(i)
        for j, bj in enumerate(b):
            if i + j >= length:
                break
            if bj:
                out[i + j] = ring._add(out[i + j], ring._mul(ai, int(s[bj])))
    return out


class SkewPoly:
    """Exact element of R[x; sigma]; trailing zeros are trimmed."""

    __slots__ = ("sigma", "coeffs")

    def __init__(self, sigma: Endomorphism, coeffs: Iterable = ()):
        self.sigma = sigma
        self.coeffs = _trim(_coerce(sigma.ring, coeffs))

    @property
    def ring(self) -> Ring:
        return self.sigma.ring

    @classmethod
    def constant(cls, sigma: Endomorphism, a: Element) -> "SkewPoly":
        return cls(sigma, [a])

    @classmethod
    def monomial(cls, sigma: Endomorphism, a: Element, i: int) -> "SkewPoly":
        return cls(sigma, [0] * i + [sigma.ring._own(a)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> Element:
        return Element(self.ring, self.coeffs[i] if 0 <= i < len(self.coeffs) else 0)

    def _check(self, other):
        if not isinstance(other, SkewPoly):
            raise TypeError(f"expected SkewPoly, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring.name} vs {other.ring.name}")
        if other.sigma != self.sigma:
            raise EndoMismatch(f"{self.sigma.label} vs {other.sigma.label}")

    def __add__(self, other):
        self._check(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        ring = self.ring
        out = [ring._add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]
        return SkewPoly(self.sigma, out)

    def __neg__(self):
        return SkewPoly(self.sigma, [self.ring._neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        return SkewPoly(self.sigma, _convolve(self.sigma, self.coeffs, other.coeffs))

    def __eq__(self, other):
        return isinstance(other, SkewPoly) and self.sigma == other.sigma and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.sigma, self.coeffs))

    def __repr__(self):
        return format_skew(self.ring, self.coeffs)


class TruncSeries:
    """Skew power series modulo x^N; always stores exactly N coefficients."""

    __slots__ = ("sigma", "N", "coeffs")

    def __init__(self, sigma: Endomorphism, N: int, coeffs: Iterable = ()):
        if N < 1:
            raise ValueError("truncation order must be >= 1")
        c = _coerce(sigma.ring, coeffs)[:N]
        self.sigma = sigma
        self.N = N
        self.coeffs = tuple(c + [0] * (N - len(c)))

    @property
    def ring(self) -> Ring:
        return self.sigma.ring

    @classmethod
    def from_poly(cls, p: SkewPoly, N: int) -> "TruncSeries":
        return cls(p.sigma, N, p.coeffs)

    def to_poly(self) -> SkewPoly:
        return SkewPoly(self.sigma, self.coeffs)

    def coefficient(self, i: int) -> Element:
        return Element(self.ring, self.coeffs[i] if 0 <= i < self.N else 0)

    def _check(self, other):
        if not isinstance(other, TruncSeries):
            raise TypeError(f"expected TruncSeries, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring.name} vs {other.ring.name}")
        if other.sigma != self.sigma:
            raise EndoMismatch(f"{self.sigma.label} vs {other.sigma.label}")
        if other.N != self.N:
            raise ValueError(f"truncation orders differ: {self.N} vs {other.N}")

    def __add__(self, other):
        self._check(other)
        ring = self.ring
        return TruncSeries(self.sigma, self.N, [ring._add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        self._check(other)
        return TruncSeries(self.sigma, self.N, _convolve(self.sigma, self.coeffs, other.coeffs, self.N))

    def __eq__(self, other):
        return (isinstance(other, TruncSeries) and self.sigma == other.sigma
                and self.N == other.N and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.sigma, self.N, self.coeffs))

    def __repr__(self):
        var = skew_variable(self.ring)
        return f"{format_skew(self.ring, self.coeffs, var)} + O({var}^{self.N})"


def skew_mul(p, q):
    return p * q


def skew_add(p, q):
    return p + q


def scalar_mul(a: Element, p):
    """Left scalar multiple ``a * p``."""
    ring = p.ring
    ai = ring._own(a)
    coeffs = [ring._mul(ai, c) for c in p.coeffs]
    if isinstance(p, TruncSeries):
        return TruncSeries(p.sigma, p.N, coeffs)
    return SkewPoly(p.sigma, coeffs)


def coefficient(p, i: int) -> Element:
    return p.coefficient(i)


def is_idempotent_trunc(f: TruncSeries) -> tuple:
    """(True, None) if f*f == f mod x^N, else (False, least differing index)."""
    sq = f * f
    for ell, (a, b) in enumerate(zip(sq.coeffs, f.coeffs)):
        if a != b:
            return False, ell
    return True, None


# ---------------------------------------------------------------- batch kernels

SHADOW_FACTOR = 3
_EXTENDABLE = {"identity": identity, "eval0": eval_at_zero}


@functools.lru_cache(maxsize=32)
def shadow(sigma: Endomorphism) -> Endomorphism | None:
    """sigma on a window ``SHADOW_FACTOR`` times wider, or None.

    Products of up to three window elements are exact there, and window
    indices embed unchanged (coefficients are stored little-endian).  Only maps
    agreeing with a degree-free built-in map extend.
    """
    ring = sigma.ring
    if not ring.graded:
        return None
    # match on images, not on how sigma was built: equal maps share caches
    kind = next((k for k, build in _EXTENDABLE.items() if build(ring).images == sigma.images), None)
    if kind is None:
        return None
    try:
        wide = make_bounded_poly(ring.base, SHADOW_FACTOR * ring.degree_cap, ring.variable)
        if wide.order > TABLE_CAP:
            return None
        return _EXTENDABLE[kind](wide)
    except CapacityError:
        return None


def coefficient_rows(order: int, length: int) -> np.ndarray:
    """All coefficient vectors of the given length, row r encoding r in base ``order``."""
    count = order ** length
    r = np.arange(count, dtype=np.int64)
    cols = [(r // order ** p) % order for p in range(length)]
    return np.stack(cols, axis=1) if cols else np.zeros((count, 0), dtype=np.int64)


def row_index(coeffs: Sequence[int], order: int) -> int:
    return sum(int(c) * order ** p for p, c in enumerate(coeffs))


class BatchArith:
    """Vectorised skew convolution over the operation tables of a ring.

    On a graded window arithmetic runs in the exact shadow when one exists;
    otherwise products leaving the window are flagged in a ``bad`` mask
    rather than silently truncated.
    """

    def __init__(self, sigma: Endomorphism, depth: int = 8, exact: bool = True):
        wide = shadow(sigma) if exact else None
        self.exact = wide is not None or not sigma.ring.graded
        sigma = wide or sigma
        t = sigma.ring.tables
        self.sigma = sigma
        self.add = t.add
        self.mul = t.mul
        self.neg = t.neg
        self._spow = sigma.powers(depth)

    def spow(self, i: int) -> np.ndarray:
        if i >= len(self._spow):
            self._spow = self.sigma.powers(i + 1)
        return self._spow[i]

    def product(self, a, b):
        """Elementwise ring product with overflow mask."""
        r = self.mul[a, b]
        return np.maximum(r, 0), r < 0

    def convolve(self, A: np.ndarray, B: np.ndarray, *, twist: bool = True, limit: int | None = None):
        """Row-wise skew product of coefficient arrays A (m, la) and B (m, lb).

        Shapes broadcast on the leading axis.  Returns (C, bad) with C of
        shape (m, la+lb-1) or truncated to ``limit`` columns.
        """
        la, lb = A.shape[1], B.shape[1]
        length = la + lb - 1
        if limit is not None:
            length = min(length, limit)
        m = max(A.shape[0], B.shape[0])
        C = np.zeros((m, length), dtype=np.int64)
        bad = np.zeros(m, dtype=bool)
        for i in range(la):
            ai = A[:, i]
            s = self.spow(i) if twist else None
            for j in range(lb):
                ell = i + j
                if ell >= length:
                    break
                bj = B[:, j] if s is None else s[B[:, j]]
                term = self.mul[ai, bj]
                bad |= term < 0
                C[:, ell] = self.add[C[:, ell], np.maximum(term, 0)]
        return C, bad
