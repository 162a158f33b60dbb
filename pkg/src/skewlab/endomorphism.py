"""Verified ring endomorphisms with a lazily filled iterate cache."""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

import numpy as np

from .errors import ConstructionError, NotAnEndomorphism, RingMismatch
from .rings import BoundedPolyRing, Element, PolyQuotientRing, ProductRing, Ring


@dataclass(frozen=True)
class VerificationReport:
    additive: bool
    multiplicative: bool
    sigma_one: int
    preserves_unity: bool
    injective: bool
    identity: bool
    additive_witness: tuple | None = None
    multiplicative_witness: tuple | None = None
    skipped_pairs: int = 0

    @property
    def ok(self) -> bool:
        return self.additive and self.multiplicative


def _tabulate(ring: Ring, mapping) -> np.ndarray:
    n = ring.order
    images = []
    for i in range(n):
        try:
            if callable(mapping):
                v = mapping(Element(ring, i))
            else:
                v = mapping[i]
        except (KeyError, IndexError) as exc:
            raise NotAnEndomorphism(f"map undefined at {ring.format(i)}") from exc
        if isinstance(v, Element):
            if v.ring != ring:
                raise NotAnEndomorphism(f"image of {ring.format(i)} lies outside {ring.name}")
            v = v.index
        if not isinstance(v, (int, np.integer)) or not 0 <= v < n:
            raise NotAnEndomorphism(f"image {v!r} of {ring.format(i)} lies outside {ring.name}")
        images.append(int(v))
    return np.array(images, dtype=np.int64)


def verify_endomorphism(ring: Ring, mapping) -> VerificationReport:
    """Exhaustively test additivity and multiplicativity of ``mapping``.

    ``mapping`` is a callable on Elements or a sequence / mapping of indices.
    Pairs whose product leaves a graded window are skipped and counted.
    """
    s = _tabulate(ring, mapping)
    t = ring.tables
    add_lhs = s[t.add]
    add_rhs = t.add[s[:, None], s[None, :]]
    add_bad = np.argwhere(add_lhs != add_rhs)
    defined = t.mul >= 0
    mul_lhs = np.where(defined, s[np.maximum(t.mul, 0)], -2)
    mul_rhs = t.mul[s[:, None], s[None, :]]
    mul_bad = np.argwhere(defined & (mul_lhs != mul_rhs))
    sigma_one = int(s[ring.one_index])
    return VerificationReport(
        additive=len(add_bad) == 0,
        multiplicative=len(mul_bad) == 0,
        sigma_one=sigma_one,
        preserves_unity=sigma_one == ring.one_index,
        injective=len(set(s.tolist())) == ring.order,
        identity=bool(np.array_equal(s, np.arange(ring.order))),
        additive_witness=tuple(int(v) for v in add_bad[0]) if len(add_bad) else None,
        multiplicative_witness=tuple(int(v) for v in mul_bad[0]) if len(mul_bad) else None,
        skipped_pairs=int((~defined).sum()),
    )


class Endomorphism:
    """An additive, multiplicative self-map of a finite ring.

    Construction verifies the map exhaustively and raises NotAnEndomorphism
    otherwise.  ``sigma(1) != 1`` is allowed and recorded in
    ``preserves_unity``.
    """

    def __init__(self, ring: Ring, mapping, kind: str = "table", label: str | None = None):
        report = verify_endomorphism(ring, mapping)
        if not report.ok:
            what = "additive" if not report.additive else "multiplicative"
            wit = report.additive_witness or report.multiplicative_witness
            a, b = (ring.format(v) for v in wit)
            raise NotAnEndomorphism(f"{label or kind} on {ring.name} is not {what} (a={a}, b={b})")
        self.ring = ring
        self.kind = kind
        self.report = report
        self._images = _tabulate(ring, mapping)
        self._images.setflags(write=False)
        self.images = tuple(self._images.tolist())
        self.label = label or _table_label(ring, self.images)
        self._powers = [np.arange(ring.order, dtype=np.int64), self._images]
        self._lock = threading.Lock()

    @property
    def preserves_unity(self) -> bool:
        return self.report.preserves_unity

    @property
    def injective(self) -> bool:
        return self.report.injective

    @property
    def is_identity(self) -> bool:
        return self.report.identity

    def __eq__(self, other):
        return isinstance(other, Endomorphism) and self.ring == other.ring and self.images == other.images

    def __hash__(self):
        return hash((self.ring, self.images))

    def __repr__(self):
        return f"<Endomorphism {self.label} on {self.ring.name}>"

    def __call__(self, a: Element) -> Element:
        return Element(self.ring, self.images[self.ring._own(a)])

    def power(self, i: int) -> np.ndarray:
        """Image table of sigma^i."""
        if i < 0:
            raise ValueError("negative power")
        if i >= len(self._powers):
            with self._lock:
                while len(self._powers) <= i:
                    self._powers.append(self._images[self._powers[-1]])
        return self._powers[i]

    def powers(self, count: int) -> list:
        self.power(count - 1)
        return self._powers[:count]

    def orbit_shape(self) -> tuple:
        """(preperiod, period) of the sequence sigma^0, sigma^1, ..."""
        seen = {}
        k = 0
        while True:
            key = self.power(k).tobytes()
            if key in seen:
                return seen[key], k - seen[key]
            seen[key] = k
            k += 1


def _table_label(ring: Ring, images) -> str:
    return "table{" + ", ".join(f"{i}->{v}" for i, v in enumerate(images)) + "}"


def apply_power(sigma: Endomorphism, i: int, a: Element) -> Element:
    if not isinstance(a, Element) or a.ring != sigma.ring:
        raise RingMismatch(f"{a!r} is not in the domain of {sigma.label}")
    if i < 0:
        raise ValueError("power must be >= 0")
    return Element(sigma.ring, int(sigma.power(i)[a.index]))


# ---------------------------------------------------------------- built-ins

def identity(ring: Ring) -> Endomorphism:
    return Endomorphism(ring, range(ring.order), kind="identity", label="identity")


def frobenius(ring: Ring, q: int) -> Endomorphism:
    """a -> a^q."""
    if q < 1:
        raise ConstructionError("frobenius exponent must be >= 1")
    mul = ring.tables.mul

    def power(i):
        acc = ring.one_index
        for _ in range(q):
            acc = int(mul[acc, i])
            if acc < 0:
                raise NotAnEndomorphism(f"frobenius({q}) leaves {ring.name}")
        return acc

    return Endomorphism(ring, [power(i) for i in range(ring.order)], kind="frobenius", label=f"frobenius({q})")


def _constant_part(ring: Ring, label: str) -> Endomorphism:
    if not isinstance(ring, (BoundedPolyRing, PolyQuotientRing)):
        raise ConstructionError(f"{label} requires a polynomial ring, got {ring.name}")
    width = ring.width
    images = [ring.encode((ring.decode(i)[0],) + (0,) * (width - 1)) for i in range(ring.order)]
    return Endomorphism(ring, images, kind=label, label=label)


def eval_at_zero(ring: Ring) -> Endomorphism:
    """f(x) -> f(0) on a polynomial window."""
    return _constant_part(ring, "eval0")


def constant_term(ring: Ring) -> Endomorphism:
    """a0 + a1 t + ... -> a0 on a quotient ring."""
    return _constant_part(ring, "const_term")


def swap(ring: Ring) -> Endomorphism:
    if not isinstance(ring, ProductRing):
        raise ConstructionError(f"swap requires a Product ring, got {ring.name}")
    if ring.r1 != ring.r2:
        raise ConstructionError("swap requires two equal factors")
    images = [ring.encode(tuple(reversed(ring.decode(i)))) for i in range(ring.order)]
    return Endomorphism(ring, images, kind="swap", label="swap")


def from_table(ring: Ring, table: Mapping[int, int] | Sequence[int] | Callable) -> Endomorphism:
    if isinstance(table, Mapping):
        missing = [i for i in range(ring.order) if i not in table]
        if missing:
            raise NotAnEndomorphism(f"table misses element {ring.format(missing[0])}")
    return Endomorphism(ring, table, kind="table")


def all_endomorphisms(ring: Ring, max_order: int = 4) -> list:
    """Every endomorphism of a ring of order <= max_order, by brute force.

    Additivity pins sigma down on the additive group, so candidate maps are
    filtered cheaply by sigma(0) = 0 before the full check.
    """
    if ring.order > max_order:
        raise ConstructionError(f"{ring.name}: explicit-table enumeration limited to order {max_order}")
    found = []
    n = ring.order
    for tail in itertools.product(range(n), repeat=n - 1):
        images = (0,) + tail
        rep = verify_endomorphism(ring, images)
        if rep.ok:
            found.append(Endomorphism(ring, images, kind="table"))
    return found
