"""Annihilators, idempotents and one-sided ideals of finite rings.

Sets of ring elements are handled internally as boolean membership vectors.
Left-sided variants mirror the right-sided code by transposing the
multiplication table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import CapacityError, RingMismatch
from .rings import Element, Ring

LATTICE_CAP = 4096
IDEAL_ORDER_CAP = 64


def _index(ring: Ring, x) -> int:
    if isinstance(x, Element):
        return ring._own(x)
    return ring.encode(x)


def _mul(ring: Ring, side: str) -> np.ndarray:
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    m = ring.tables.mul
    # mirrored table: mul_left[a, c] = c * a
    return m if side == "right" else m.T


def _fmt_set(ring: Ring, members: Iterable[int]) -> str:
    return "{" + ",".join(ring.format(i) for i in members) + "}"


@dataclass(frozen=True)
class Ideal:
    """A one-sided ideal, verified closed on construction.

    ``side="right"`` means closed under right multiplication by R.
    """

    ring: Ring
    elements: tuple
    side: str = "right"
    generator: int | None = field(default=None, compare=False)

    def __post_init__(self):
        members = tuple(sorted(set(int(i) for i in self.elements)))
        object.__setattr__(self, "elements", members)
        _verify_ideal(self.ring, members, self.side)

    @property
    def members(self) -> list:
        return [Element(self.ring, i) for i in self.elements]

    @property
    def mask(self) -> np.ndarray:
        v = np.zeros(self.ring.order, dtype=bool)
        v[list(self.elements)] = True
        return v

    def __contains__(self, x) -> bool:
        return _index(self.ring, x) in self.elements

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return _fmt_set(self.ring, self.elements)


RightIdeal = Ideal


def _verify_ideal(ring: Ring, members: tuple, side: str) -> None:
    if 0 not in members:
        raise ValueError(f"{_fmt_set(ring, members)} does not contain 0")
    t = ring.tables
    inside = np.zeros(ring.order, dtype=bool)
    idx = np.array(members, dtype=np.int64)
    inside[idx] = True
    if not inside[t.add[np.ix_(idx, idx)]].all():
        raise ValueError(f"{_fmt_set(ring, members)} is not closed under addition")
    prods = _mul(ring, side)[idx]
    defined = prods >= 0
    if not inside[np.maximum(prods, 0)][defined].all():
        raise ValueError(f"{_fmt_set(ring, members)} is not a {side} ideal")


def _from_mask(ring: Ring, mask: np.ndarray, side: str, generator=None) -> Ideal:
    return Ideal(ring, tuple(np.flatnonzero(mask).tolist()), side, generator)


def annihilator_mask(ring: Ring, X: Iterable, side: str = "right") -> np.ndarray:
    m = _mul(ring, side)
    mask = np.ones(ring.order, dtype=bool)
    for x in X:
        mask &= m[_index(ring, x)] == 0
    return mask


def right_annihilator(ring: Ring, X: Iterable) -> Ideal:
    """r(X) = {c : d c = 0 for every d in X}; r of the empty set is R."""
    return _from_mask(ring, annihilator_mask(ring, X, "right"), "right")


def left_annihilator(ring: Ring, X: Iterable) -> Ideal:
    return _from_mask(ring, annihilator_mask(ring, X, "left"), "left")


def idempotent_indices(ring: Ring) -> list:
    m = ring.tables.mul
    r = np.arange(ring.order)
    return np.flatnonzero(m[r, r] == r).tolist()


def idempotents(ring: Ring) -> list:
    return [Element(ring, i) for i in idempotent_indices(ring)]


def principal_mask(ring: Ring, e: int, side: str = "right") -> np.ndarray:
    """Membership vector of eR (or Re), closed under addition."""
    row = _mul(ring, side)[e]
    mask = np.zeros(ring.order, dtype=bool)
    mask[row[row >= 0]] = True
    return additive_closure(ring, mask)


def additive_closure(ring: Ring, mask: np.ndarray) -> np.ndarray:
    add = ring.tables.add
    mask = mask.copy()
    mask[0] = True
    while True:
        idx = np.flatnonzero(mask)
        new = mask.copy()
        new[add[np.ix_(idx, idx)].ravel()] = True
        if new.sum() == mask.sum():
            return mask
        mask = new


def generating_idempotent(ring: Ring, mask: np.ndarray, side: str = "right") -> int | None:
    """Least idempotent e with eR (or Re) equal to the given set, else None."""
    for e in idempotent_indices(ring):
        if np.array_equal(principal_mask(ring, e, side), mask):
            return e
    return None


def is_generated_by_idempotent(ring: Ring, ideal: Ideal) -> Element | None:
    if ideal.ring != ring:
        raise RingMismatch(f"{ideal!r} is not an ideal of {ring.name}")
    e = generating_idempotent(ring, ideal.mask, ideal.side)
    return None if e is None else Element(ring, e)


def annihilator_lattice_sources(ring: Ring, side: str = "right", cap: int = LATTICE_CAP) -> dict:
    """Map each annihilator (as a bytes key) to (mask, least generating subset).

    Members are the closure of the single-element annihilators under
    intersection, together with r(empty) = R.
    """
    m = _mul(ring, side)
    found: dict = {}
    full = np.ones(ring.order, dtype=bool)
    found[full.tobytes()] = (full, ())
    frontier = []
    for a in range(ring.order):
        mask = m[a] == 0
        key = mask.tobytes()
        if key not in found:
            found[key] = (mask, (a,))
            frontier.append(key)
            if len(found) > cap:
                raise CapacityError(f"{ring.name}: annihilator lattice exceeds {cap} members")
    singles = [(m[a] == 0, a) for a in range(ring.order)]
    while frontier:
        nxt = []
        for key in frontier:
            mask, src = found[key]
            for smask, a in singles:
                inter = mask & smask
                k2 = inter.tobytes()
                if k2 not in found:
                    found[k2] = (inter, tuple(sorted(set(src) | {a})))
                    nxt.append(k2)
                    if len(found) > cap:
                        raise CapacityError(f"{ring.name}: annihilator lattice exceeds {cap} members")
        frontier = nxt
    return found


def _sort_key(mask: np.ndarray):
    return (int(mask.sum()), tuple(np.flatnonzero(mask).tolist()))


def annihilator_lattice(ring: Ring, side: str = "right", cap: int = LATTICE_CAP) -> list:
    found = annihilator_lattice_sources(ring, side, cap)
    masks = sorted((mask for mask, _ in found.values()), key=_sort_key)
    return [_from_mask(ring, mask, side) for mask in masks]


def ideal_generated(ring: Ring, gens: Iterable, side: str = "right") -> Ideal:
    """The one-sided ideal generated by ``gens``: additive closure of g*R."""
    mask = np.zeros(ring.order, dtype=bool)
    mask[0] = True
    for g in gens:
        mask |= principal_mask(ring, _index(ring, g), side)
    return _from_mask(ring, additive_closure(ring, mask), side)


def ideal_masks(ring: Ring, side: str = "right", cap: int = IDEAL_ORDER_CAP, max_count: int = LATTICE_CAP) -> list:
    """Membership vectors of every one-sided ideal, smallest first."""
    if ring.order > cap:
        raise CapacityError(f"{ring.name}: ideal enumeration is exact only up to order {cap}")
    add = ring.tables.add
    found: dict = {}
    for a in range(ring.order):
        mask = principal_mask(ring, a, side)
        found.setdefault(mask.tobytes(), mask)
    principals = list(found.values())
    frontier = list(found.values())
    while frontier:
        nxt = []
        for mask in frontier:
            for p in principals:
                if (p & ~mask).any():
                    i, j = np.flatnonzero(mask), np.flatnonzero(p)
                    s = np.zeros(ring.order, dtype=bool)
                    s[add[np.ix_(i, j)].ravel()] = True
                    key = s.tobytes()
                    if key not in found:
                        found[key] = s
                        nxt.append(s)
                        if len(found) > max_count:
                            raise CapacityError(f"{ring.name}: more than {max_count} ideals")
        frontier = nxt
    return sorted(found.values(), key=_sort_key)


def right_ideals(ring: Ring, cap: int = IDEAL_ORDER_CAP) -> list:
    return [_from_mask(ring, mask, "right") for mask in ideal_masks(ring, "right", cap)]


def left_ideals(ring: Ring, cap: int = IDEAL_ORDER_CAP) -> list:
    return [_from_mask(ring, mask, "left") for mask in ideal_masks(ring, "left", cap)]


def format_set(ring: Ring, mask_or_members) -> str:
    if isinstance(mask_or_members, np.ndarray) and mask_or_members.dtype == bool:
        return _fmt_set(ring, np.flatnonzero(mask_or_members).tolist())
    return _fmt_set(ring, mask_or_members)
