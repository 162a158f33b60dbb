"""Finite rings with canonical integer encodings.

Every ring enumerates its elements as the integers ``0 .. order-1``.  Index 0
is always the zero element.  Composite rings (quotients, matrices, products,
bounded polynomial windows, group algebras) encode a structural tuple of base
indices in mixed radix, least significant position first, so the encoding is
canonical by construction.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    CapacityError,
    ConstructionError,
    DegreeOverflow,
    RingMismatch,
)

DEFAULT_ORDER_CAP = 4096
# Rings above this order have no cached operation tables.
TABLE_CAP = 256


@dataclass(frozen=True)
class RingTables:
    add: np.ndarray
    mul: np.ndarray  # -1 marks a product that leaves a graded window
    neg: np.ndarray


@dataclass(frozen=True)
class Element:
    ring: "Ring"
    index: int

    @property
    def value(self):
        return self.ring.decode(self.index)

    def __add__(self, other):
        return self.ring.add(self, other)

    def __sub__(self, other):
        return self.ring.sub(self, other)

    def __mul__(self, other):
        return self.ring.mul(self, other)

    def __neg__(self):
        return self.ring.neg(self)

    def is_zero(self):
        return self.index == 0

    def __repr__(self):
        return self.ring.format(self.index)


class Ring:
    """Base class.  Subclasses supply ``_add``, ``_mul``, ``_neg`` on indices."""

    kind = "abstract"
    graded = False
    variable: str | None = None

    def __init__(self, order: int, name: str, expr: str, key: tuple, cap: int = DEFAULT_ORDER_CAP):
        if order > cap:
            raise CapacityError(f"{name} has order {order}, above the cap {cap}")
        self.order = order
        self.name = name
        self.expr = expr
        self.key = key

    zero_index = 0
    one_index = 1

    def __eq__(self, other):
        return isinstance(other, Ring) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"<{self.kind} {self.name}>"

    def __len__(self):
        return self.order

    # structural layer, overridden by subclasses
    def _add(self, i: int, j: int) -> int:
        raise NotImplementedError

    def _mul(self, i: int, j: int) -> int:
        raise NotImplementedError

    def _neg(self, i: int) -> int:
        raise NotImplementedError

    def decode(self, i: int):
        return i

    def encode(self, value) -> int:
        i = int(value)
        if not 0 <= i < self.order:
            raise ValueError(f"{value!r} is not an element of {self.name}")
        return i

    def format(self, i: int) -> str:
        return str(i)

    # element layer
    def element(self, value) -> Element:
        return Element(self, self.encode(value))

    def elements(self) -> Iterator[Element]:
        for i in range(self.order):
            yield Element(self, i)

    def zero(self) -> Element:
        return Element(self, self.zero_index)

    def one(self) -> Element:
        return Element(self, self.one_index)

    def from_int(self, c: int) -> Element:
        """The element ``c * 1``."""
        acc = 0
        step = self.one_index if c >= 0 else self._neg(self.one_index)
        for _ in range(abs(c)):
            acc = self._add(acc, step)
        return Element(self, acc)

    def _own(self, a) -> int:
        if not isinstance(a, Element) or a.ring != self:
            raise RingMismatch(f"{a!r} is not an element of {self.name}")
        return a.index

    def add(self, a: Element, b: Element) -> Element:
        return Element(self, self._add(self._own(a), self._own(b)))

    def sub(self, a: Element, b: Element) -> Element:
        return Element(self, self._add(self._own(a), self._neg(self._own(b))))

    def mul(self, a: Element, b: Element) -> Element:
        return Element(self, self._mul(self._own(a), self._own(b)))

    def neg(self, a: Element) -> Element:
        return Element(self, self._neg(self._own(a)))

    def eq(self, a: Element, b: Element) -> bool:
        return self._own(a) == self._own(b)

    @cached_property
    def tables(self) -> RingTables:
        if self.order > TABLE_CAP:
            raise CapacityError(f"{self.name}: order {self.order} above table cap {TABLE_CAP}")
        n = self.order
        add = np.empty((n, n), dtype=np.int64)
        mul = np.empty((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                add[i, j] = self._add(i, j)
        mul[:] = self._build_mul_table()
        neg = np.array([self._neg(i) for i in range(n)], dtype=np.int64)
        for arr in (add, mul, neg):
            arr.setflags(write=False)
        return RingTables(add, mul, neg)

    def _build_mul_table(self) -> np.ndarray:
        n = self.order
        mul = np.empty((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                try:
                    mul[i, j] = self._mul(i, j)
                except DegreeOverflow:
                    mul[i, j] = -1
        return mul

    @cached_property
    def is_commutative(self) -> bool:
        m = self.tables.mul
        return bool(np.array_equal(m, m.T))


class ZnRing(Ring):
    kind = "Zn"

    def __init__(self, n: int):
        super().__init__(n, f"Z_{n}", f"Zn({n})", ("Zn", n))
        self.n = n

    def _add(self, i, j):
        return (i + j) % self.n

    def _mul(self, i, j):
        return (i * j) % self.n

    def _neg(self, i):
        return (-i) % self.n

    @cached_property
    def tables(self) -> RingTables:
        if self.order > TABLE_CAP:
            raise CapacityError(f"{self.name}: order {self.order} above table cap {TABLE_CAP}")
        r = np.arange(self.n, dtype=np.int64)
        add = (r[:, None] + r[None, :]) % self.n
        mul = (r[:, None] * r[None, :]) % self.n
        neg = (-r) % self.n
        for arr in (add, mul, neg):
            arr.setflags(write=False)
        return RingTables(add, mul, neg)


class _TupleRing(Ring):
    """Elements are fixed-width tuples of base-ring indices."""

    def __init__(self, base: Ring, width: int, name, expr, key, cap=DEFAULT_ORDER_CAP):
        if base.graded:
            raise ConstructionError(f"{name}: base ring {base.name} is a graded window")
        order = base.order ** width
        super().__init__(order, name, expr, key, cap)
        if base.order > TABLE_CAP:
            raise CapacityError(f"{name}: base ring {base.name} too large")
        self.base = base
        self.width = width
        self._weights = [base.order ** p for p in range(width)]
        bt = base.tables
        self._ba = bt.add.tolist()
        self._bm = bt.mul.tolist()
        self._bn = bt.neg.tolist()

    @cached_property
    def _digits(self) -> list:
        r = self.base.order
        return [tuple(reversed(t)) for t in itertools.product(range(r), repeat=self.width)]

    def decode(self, i):
        return self._digits[i]

    def encode(self, value) -> int:
        if isinstance(value, (int, np.integer)):
            return super().encode(value)
        t = tuple(value)
        if len(t) != self.width or any(not 0 <= d < self.base.order for d in t):
            raise ValueError(f"{value!r} is not an element of {self.name}")
        return sum(d * w for d, w in zip(t, self._weights))

    def _pack(self, t) -> int:
        return sum(d * w for d, w in zip(t, self._weights))

    def _add(self, i, j):
        ba = self._ba
        x, y = self._digits[i], self._digits[j]
        return self._pack([ba[a][b] for a, b in zip(x, y)])

    def _neg(self, i):
        bn = self._bn
        return self._pack([bn[a] for a in self._digits[i]])

    def _convolve(self, x, y) -> list:
        ba, bm = self._ba, self._bm
        out = [0] * (len(x) + len(y) - 1)
        for p, a in enumerate(x):
            if a == 0:
                continue
            row = bm[a]
            for q, b in enumerate(y):
                if b:
                    out[p + q] = ba[out[p + q]][row[b]]
        return out


def _format_poly_terms(base: Ring, coeffs: Sequence[int], var: str) -> str:
    terms = []
    for p, c in enumerate(coeffs):
        if c == 0:
            continue
        cs = base.format(c)
        if p == 0:
            terms.append(cs)
            continue
        mono = var if p == 1 else f"{var}^{p}"
        if c == base.one_index:
            terms.append(mono)
        elif any(ch in cs for ch in "+-") or not cs.isdigit():
            terms.append(f"({cs}){mono}")
        else:
            terms.append(f"{cs}{mono}")
    return "+".join(terms) if terms else "0"


def _format_modulus(base: Ring, coeffs: Sequence[int], var: str) -> str:
    # conventional high-to-low order for ring names
    terms = _format_poly_terms(base, coeffs, var).split("+")
    return "+".join(reversed(terms))


class PolyQuotientRing(_TupleRing):
    kind = "PolyQuotient"

    def __init__(self, base: Ring, modulus: Sequence[int], *, kind=None, name=None, expr=None, cap=DEFAULT_ORDER_CAP):
        modulus = tuple(int(c) for c in modulus)
        deg = len(modulus) - 1
        if deg < 1:
            raise ConstructionError("modulus must have degree >= 1")
        if modulus[-1] != base.one_index:
            raise ConstructionError("modulus must be monic")
        if not base.is_commutative:
            raise ConstructionError("quotient rings need a commutative base")
        mod_text = _format_modulus(base, modulus, "t")
        name = name or f"{base.name}[t]/({mod_text})"
        expr = expr or f'PolyQuot({base.expr}, "{mod_text}")'
        super().__init__(base, deg, name, expr, ("PolyQuotient", base.key, modulus), cap)
        if kind:
            self.kind = kind
        self.modulus = modulus
        self.one_index = base.one_index
        self.variable = "t"

    def _mul(self, i, j):
        out = self._convolve(self._digits[i], self._digits[j])
        k = self.width
        ba, bm, bn = self._ba, self._bm, self._bn
        for d in range(len(out) - 1, k - 1, -1):
            c = out[d]
            if c == 0:
                continue
            nc = bn[c]
            for m in range(k + 1):
                out[d - k + m] = ba[out[d - k + m]][bm[nc][self.modulus[m]]]
        return self._pack(out[:k])

    def format(self, i):
        return _format_poly_terms(self.base, self._digits[i], "t")


class MatrixRing(_TupleRing):
    kind = "Matrix"

    def __init__(self, k: int, base: Ring, cap=DEFAULT_ORDER_CAP):
        if k < 1:
            raise ConstructionError("matrix size must be >= 1")
        super().__init__(base, k * k, f"M_{k}({base.name})", f"Mat({k}, {base.expr})", ("Matrix", k, base.key), cap)
        self.k = k
        self.one_index = self._pack([base.one_index if r == c else 0 for r in range(k) for c in range(k)])

    def _rows(self, i):
        d, k = self._digits[i], self.k
        return [d[r * k:(r + 1) * k] for r in range(k)]

    def _mul(self, i, j):
        ba, bm, k = self._ba, self._bm, self.k
        x, y = self._digits[i], self._digits[j]
        out = []
        for r in range(k):
            for c in range(k):
                acc = 0
                for m in range(k):
                    acc = ba[acc][bm[x[r * k + m]][y[m * k + c]]]
                out.append(acc)
        return self._pack(out)

    def format(self, i):
        return "[" + ",".join("[" + ",".join(self.base.format(v) for v in row) + "]" for row in self._rows(i)) + "]"

    def unit(self, r: int, c: int) -> Element:
        """Matrix unit e_rc (1-based): 1 in row r, column c."""
        k = self.k
        t = [0] * (k * k)
        t[(r - 1) * k + (c - 1)] = self.base.one_index
        return Element(self, self._pack(t))


class UpperTriangularRing(_TupleRing):
    kind = "UpperTriangular"

    def __init__(self, k: int, base: Ring, cap=DEFAULT_ORDER_CAP):
        if k < 1:
            raise ConstructionError("matrix size must be >= 1")
        self.k = k
        self.positions = [(r, c) for r in range(k) for c in range(r, k)]
        super().__init__(base, len(self.positions), f"T_{k}({base.name})", f"UpperTri({k}, {base.expr})",
                         ("UpperTriangular", k, base.key), cap)
        self.one_index = self._pack([base.one_index if r == c else 0 for r, c in self.positions])

    def _full(self, i):
        k = self.k
        m = [[0] * k for _ in range(k)]
        for (r, c), v in zip(self.positions, self._digits[i]):
            m[r][c] = v
        return m

    def _mul(self, i, j):
        ba, bm, k = self._ba, self._bm, self.k
        x, y = self._full(i), self._full(j)
        out = []
        for r, c in self.positions:
            acc = 0
            for m in range(r, c + 1):
                acc = ba[acc][bm[x[r][m]][y[m][c]]]
            out.append(acc)
        return self._pack(out)

    def format(self, i):
        return "[" + ",".join("[" + ",".join(self.base.format(v) for v in row) + "]" for row in self._full(i)) + "]"

    def unit(self, r: int, c: int) -> Element:
        t = [0] * len(self.positions)
        t[self.positions.index((r - 1, c - 1))] = self.base.one_index
        return Element(self, self._pack(t))


class ProductRing(Ring):
    kind = "Product"

    def __init__(self, r1: Ring, r2: Ring, cap=DEFAULT_ORDER_CAP):
        if r1.graded or r2.graded:
            raise ConstructionError("product factors must be finite rings")
        name = f"{_wrap(r1.name)}x{_wrap(r2.name)}"
        super().__init__(r1.order * r2.order, name, f"Product({r1.expr}, {r2.expr})",
                         ("Product", r1.key, r2.key), cap)
        self.r1, self.r2 = r1, r2
        self.one_index = r1.one_index + r1.order * r2.one_index

    def decode(self, i):
        return divmod(i, self.r1.order)[::-1]

    def encode(self, value) -> int:
        if isinstance(value, (int, np.integer)):
            return super().encode(value)
        a, b = value
        a, b = int(a), int(b)
        if not (0 <= a < self.r1.order and 0 <= b < self.r2.order):
            raise ValueError(f"{value!r} is not an element of {self.name}")
        return a + self.r1.order * b

    def _split(self, i):
        b, a = divmod(i, self.r1.order)
        return a, b

    def _join(self, a, b):
        return a + self.r1.order * b

    def _add(self, i, j):
        (a1, b1), (a2, b2) = self._split(i), self._split(j)
        return self._join(self.r1._add(a1, a2), self.r2._add(b1, b2))

    def _mul(self, i, j):
        (a1, b1), (a2, b2) = self._split(i), self._split(j)
        return self._join(self.r1._mul(a1, a2), self.r2._mul(b1, b2))

    def _neg(self, i):
        a, b = self._split(i)
        return self._join(self.r1._neg(a), self.r2._neg(b))

    def format(self, i):
        a, b = self._split(i)
        return f"({self.r1.format(a)},{self.r2.format(b)})"


def _wrap(name: str) -> str:
    return f"({name})" if "x" in name or "[" in name else name


class BoundedPolyRing(_TupleRing):
    """Polynomials of degree <= cap over a finite base: a graded window.

    Multiplication is partial; a product whose true degree exceeds the cap
    raises DegreeOverflow.  Such a product is necessarily nonzero.
    """

    kind = "BoundedPoly"
    graded = True

    def __init__(self, base: Ring, degree_cap: int, variable: str = "x", cap=DEFAULT_ORDER_CAP):
        if degree_cap < 1:
            raise ConstructionError("degree cap must be >= 1")
        super().__init__(base, degree_cap + 1, f"{base.name}[{variable}]_<={degree_cap}",
                         f"BoundedPoly({base.expr}, {degree_cap})", ("BoundedPoly", base.key, degree_cap, variable), cap)
        self.degree_cap = degree_cap
        self.variable = variable
        self.one_index = base.one_index

    def _mul(self, i, j):
        out = self._convolve(self._digits[i], self._digits[j])
        if any(out[self.width:]):
            raise DegreeOverflow(f"{self.format(i)} * {self.format(j)} has degree above {self.degree_cap}")
        return self._pack(out[:self.width])

    def degree(self, i) -> int:
        d = self._digits[i]
        for p in range(len(d) - 1, -1, -1):
            if d[p]:
                return p
        return -1

    def format(self, i):
        return _format_poly_terms(self.base, self._digits[i], self.variable)


@dataclass(frozen=True)
class FiniteGroup:
    name: str
    labels: tuple
    table: tuple  # table[g][h] = index of g*h; index 0 is the identity

    @cached_property
    def inverse(self) -> tuple:
        n = len(self.labels)
        return tuple(next(h for h in range(n) if self.table[g][h] == 0) for g in range(n))


def quaternion_group() -> FiniteGroup:
    labels = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
    # unit quaternions as (sign, axis) with axis 0 = real part
    units = [(1, 0), (-1, 0), (1, 1), (-1, 1), (1, 2), (-1, 2), (1, 3), (-1, 3)]
    # axis products: i*j = k, j*k = i, k*i = j, squares = -1
    axis_mul = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    table = []
    for s1, a1 in units:
        row = []
        for s2, a2 in units:
            s, a = axis_mul[(a1, a2)]
            row.append(units.index((s * s1 * s2, a)))
        table.append(tuple(row))
    return FiniteGroup("Q8", labels, tuple(table))


GROUPS = {"Q8": quaternion_group}


class GroupAlgebraRing(_TupleRing):
    kind = "GroupAlgebra"

    def __init__(self, base: Ring, group: FiniteGroup, cap=DEFAULT_ORDER_CAP):
        if not base.is_commutative:
            raise ConstructionError("group algebras need a commutative base")
        super().__init__(base, len(group.labels), f"{base.name}[{group.name}]",
                         f"GroupAlg({base.expr}, {group.name})", ("GroupAlgebra", base.key, group.name), cap)
        self.group = group
        self.one_index = base.one_index

    def _mul(self, i, j):
        ba, bm, tab = self._ba, self._bm, self.group.table
        x, y = self._digits[i], self._digits[j]
        out = [0] * self.width
        for g, a in enumerate(x):
            if a == 0:
                continue
            for h, b in enumerate(y):
                if b:
                    k = tab[g][h]
                    out[k] = ba[out[k]][bm[a][b]]
        return self._pack(out)

    def _build_mul_table(self) -> np.ndarray:
        if self.base.kind != "Zn":
            return super()._build_mul_table()
        n = self.base.order
        digits = np.array(self._digits, dtype=np.int64)
        inv = self.group.inverse
        tab = self.group.table
        m = len(self.group.labels)
        prod = np.zeros((self.order, self.order, m), dtype=np.int64)
        for g in range(m):
            # coefficient of k in x*y collects x_g * y_{g^-1 k}
            perm = [tab[inv[g]][k] for k in range(m)]
            prod += digits[:, g][:, None, None] * digits[:, perm][None, :, :]
        prod %= n
        weights = np.array(self._weights, dtype=np.int64)
        return prod @ weights

    def format(self, i):
        terms = []
        for g, c in enumerate(self._digits[i]):
            if c == 0:
                continue
            lab = f"[{self.group.labels[g]}]"
            terms.append(lab if c == self.base.one_index else f"{self.base.format(c)}{lab}")
        return "+".join(terms) if terms else "0"


# ---------------------------------------------------------------- constructors

def make_zn(n: int) -> ZnRing:
    if n < 2:
        raise ConstructionError(f"Z_n needs n >= 2, got {n}")
    return ZnRing(n)


_TERM = re.compile(r"^(?:(\d+)\*?)?(?:([a-z])(?:\^(\d+))?)?$")


def parse_polynomial(text: str, var: str = "t") -> list:
    """Parse ``"t^2+t+1"`` into integer coefficients, low to high."""
    s = text.replace(" ", "")
    if not re.fullmatch(r"[+-]?[^+-]+(?:[+-][^+-]+)*", s):
        raise ValueError(f"cannot parse polynomial {text!r}")
    coeffs: dict = {}
    for sign, body in re.findall(r"([+-]?)([^+-]+)", s):
        m = _TERM.match(body)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"bad term {body!r} in {text!r}")
        c_text, v, p_text = m.groups()
        if v is not None and v != var:
            raise ValueError(f"unexpected variable {v!r} in {text!r}")
        c = int(c_text) if c_text is not None else 1
        p = (int(p_text) if p_text is not None else 1) if v else 0
        coeffs[p] = coeffs.get(p, 0) + (-c if sign == "-" else c)
    deg = max(coeffs)
    return [coeffs.get(p, 0) for p in range(deg + 1)]


def make_poly_quotient(base: Ring, modulus, cap: int = DEFAULT_ORDER_CAP) -> PolyQuotientRing:
    """``base[t]/(modulus)``; modulus is a string or low-to-high coefficient list."""
    if isinstance(modulus, str):
        try:
            modulus = parse_polynomial(modulus, "t")
        except ValueError as exc:
            raise ConstructionError(str(exc)) from None
    coeffs = []
    for c in modulus:
        if isinstance(c, Element):
            coeffs.append(base._own(c))
        else:
            coeffs.append(base.from_int(int(c)).index)
    return PolyQuotientRing(base, coeffs, cap=cap)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def _poly_mod_p(a: list, b: list, p: int) -> list:
    a = a[:]
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def _monic_polys(p: int, deg: int):
    for tail in itertools.product(range(p), repeat=deg):
        yield list(reversed(tail)) + [1]


def irreducible_polynomial(p: int, k: int) -> list:
    """Least monic irreducible of degree k over Z_p, low-to-high coefficients."""
    for f in _monic_polys(p, k):
        if f[0] == 0:
            continue
        if all(_poly_mod_p(f, g, p) for d in range(1, k // 2 + 1) for g in _monic_polys(p, d)):
            return f
    raise ConstructionError(f"no irreducible of degree {k} over Z_{p}")


def make_galois_field(p: int, k: int, cap: int = DEFAULT_ORDER_CAP) -> Ring:
    if not _is_prime(p):
        raise ConstructionError(f"GF({p},{k}): {p} is not prime")
    if k < 1:
        raise ConstructionError("field degree must be >= 1")
    if k == 1:
        return make_zn(p)
    f = irreducible_polynomial(p, k)
    return PolyQuotientRing(make_zn(p), f, kind="GaloisField", name=f"GF({p ** k})", expr=f"GF({p},{k})", cap=cap)


def make_matrix(k: int, base: Ring, cap: int = DEFAULT_ORDER_CAP) -> MatrixRing:
    return MatrixRing(k, base, cap)


def make_upper_triangular(k: int, base: Ring, cap: int = DEFAULT_ORDER_CAP) -> UpperTriangularRing:
    return UpperTriangularRing(k, base, cap)


def make_product(r1: Ring, r2: Ring, cap: int = DEFAULT_ORDER_CAP) -> ProductRing:
    return ProductRing(r1, r2, cap)


def make_bounded_poly(base: Ring, degree_cap: int, variable: str = "x", cap: int = DEFAULT_ORDER_CAP) -> BoundedPolyRing:
    return BoundedPolyRing(base, degree_cap, variable, cap)


def make_group_algebra(base: Ring, group: FiniteGroup | str, cap: int = DEFAULT_ORDER_CAP) -> GroupAlgebraRing:
    if isinstance(group, str):
        if group not in GROUPS:
            raise ConstructionError(f"unknown group {group!r}")
        group = GROUPS[group]()
    return GroupAlgebraRing(base, group, cap)


# ---------------------------------------------------------------- axioms

def ring_axiom_violations(ring: Ring) -> list:
    """Exhaustive table check of the ring axioms; returns failure messages.

    Triples touching an undefined product of a graded window are skipped.
    """
    t = ring.tables
    add, mul, neg = t.add, t.mul, t.neg
    n = ring.order
    bad = []
    r = np.arange(n)
    if not np.array_equal(add, add.T):
        bad.append("addition not commutative")
    if not np.array_equal(add[0], r):
        bad.append("0 is not an additive identity")
    if not np.all(add[r, neg] == 0):
        bad.append("additive inverses fail")
    one = ring.one_index
    if not (np.array_equal(mul[one], r) and np.array_equal(mul[:, one], r)):
        bad.append("1 is not a multiplicative identity")
    for a in range(n):
        if not np.array_equal(add[add[a]], add[a][add]):
            bad.append(f"addition not associative at a={ring.format(a)}")
            break
    for a in range(n):
        ab = mul[a]
        # (ab)c vs a(bc)
        ok_ab = ab >= 0
        left = np.where(ok_ab[:, None], mul[np.maximum(ab, 0)], -2)
        bc = mul
        right = np.where(bc >= 0, mul[a][np.maximum(bc, 0)], -2)
        known = (left != -2) & (right != -2) & (left >= 0) & (right >= 0)
        if np.any(known & (left != right)):
            bad.append(f"multiplication not associative at a={ring.format(a)}")
            break
    for a in range(n):
        # a(b+c) = ab + ac and (b+c)a = ba + ca
        lhs = mul[a][add]
        ab = mul[a]
        rhs = np.where((ab[:, None] >= 0) & (ab[None, :] >= 0),
                       add[np.maximum(ab, 0)][:, np.maximum(ab, 0)], -2)
        known = (lhs >= 0) & (rhs >= 0)
        if np.any(known & (lhs != rhs)):
            bad.append(f"left distributivity fails at a={ring.format(a)}")
            break
        lhs = mul[:, a][add]
        ba = mul[:, a]
        rhs = np.where((ba[:, None] >= 0) & (ba[None, :] >= 0),
                       add[np.maximum(ba, 0)][:, np.maximum(ba, 0)], -2)
        known = (lhs >= 0) & (rhs >= 0)
        if np.any(known & (lhs != rhs)):
            bad.append(f"right distributivity fails at a={ring.format(a)}")
            break
    return bad
