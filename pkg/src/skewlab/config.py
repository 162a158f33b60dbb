"""Line-oriented config documents: ring and endomorphism declarations, tasks, bounds.

    ring R = Product(Zn(2), Zn(2))
    endo s on R = swap
    bounds D=2 N=3 seed=0
    task check R s property=sigma_reversible_right expect=fails
    task verify R s theorems=all D=2 N=3
    task search P=reduced Q=sigma_rigid max_order=4

Constructor expressions are parsed with the stdlib ``ast`` module; ``table{...}``
maps are the one form that is not Python syntax and get their own parser.
"""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass, field

from . import endomorphism as endo
from . import rings as rg
from .errors import ConfigError, SkewLabError
from .harness import THEOREM_IDS
from .properties import EXTRA_IDS, PROPERTY_IDS, Bounds

_NAME = r"[A-Za-z_][A-Za-z0-9_]*"
_RING_LINE = re.compile(rf"ring\s+({_NAME})\s*=\s*(.+)")
_ENDO_LINE = re.compile(rf"endo\s+({_NAME})\s+on\s+({_NAME})\s*=\s*(.+)")
_TABLE = re.compile(r"table\s*\{(.*)\}")
_BOUND_KEYS = {"D", "N", "budget", "sample", "seed"}


@dataclass
class Task:
    kind: str  # check | verify | search
    line: int
    ring: str | None = None
    endo: str | None = None
    names: tuple = ()  # properties or theorems
    expect_fail: bool = False
    holds: tuple = ()  # search: P
    fails: str | None = None  # search: Q
    max_order: int = 8
    overrides: dict = field(default_factory=dict)

    @property
    def label(self) -> str:
        if self.kind == "search":
            return f"search P={','.join(self.holds)} Q={self.fails} max_order={self.max_order}"
        return f"{self.kind} {self.ring} {self.endo or '-'}"


@dataclass
class ConfigDocument:
    rings: dict = field(default_factory=dict)
    endos: dict = field(default_factory=dict)
    tasks: list = field(default_factory=list)
    bounds: Bounds = field(default_factory=Bounds)


# ---------------------------------------------------------------- ring expressions

def _int_arg(node, what):
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return node.value
    raise ValueError(f"{what} must be an integer literal")


def _build_ring(node, rings: dict) -> rg.Ring:
    if isinstance(node, ast.Name):
        if node.id not in rings:
            raise ValueError(f"undeclared ring {node.id!r}")
        return rings[node.id]
    if not (isinstance(node, ast.Call) and isinstance(node.func, ast.Name)) or node.keywords:
        raise ValueError("expected a ring name or constructor call")
    ctor, args = node.func.id, node.args

    def arity(n):
        if len(args) != n:
            raise ValueError(f"{ctor} takes {n} argument(s), got {len(args)}")

    if ctor == "Zn":
        arity(1)
        return rg.make_zn(_int_arg(args[0], "Zn order"))
    if ctor == "GF":
        arity(2)
        return rg.make_galois_field(_int_arg(args[0], "GF prime"), _int_arg(args[1], "GF degree"))
    if ctor == "PolyQuot":
        arity(2)
        mod = args[1]
        if not (isinstance(mod, ast.Constant) and isinstance(mod.value, str)):
            raise ValueError('PolyQuot modulus must be a quoted polynomial such as "t^2+t+1"')
        return rg.make_poly_quotient(_build_ring(args[0], rings), mod.value)
    if ctor in ("Mat", "UpperTri"):
        arity(2)
        k = _int_arg(args[0], f"{ctor} size")
        build = rg.make_matrix if ctor == "Mat" else rg.make_upper_triangular
        return build(k, _build_ring(args[1], rings))
    if ctor == "Product":
        arity(2)
        return rg.make_product(_build_ring(args[0], rings), _build_ring(args[1], rings))
    if ctor == "BoundedPoly":
        arity(2)
        return rg.make_bounded_poly(_build_ring(args[0], rings), _int_arg(args[1], "degree cap"))
    if ctor == "GroupAlg":
        arity(2)
        if not isinstance(args[1], ast.Name):
            raise ValueError("GroupAlg group must be a group name such as Q8")
        return rg.make_group_algebra(_build_ring(args[0], rings), args[1].id)
    raise ValueError(f"unknown ring constructor {ctor!r}")


def parse_ring_expr(text: str, rings: dict | None = None) -> rg.Ring:
    """Build a ring from a constructor expression, e.g. ``Mat(2, Zn(2))``."""
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"malformed ring expression {text.strip()!r}") from exc
    return _build_ring(tree.body, rings or {})


# ---------------------------------------------------------------- endomorphisms

def _split_top(text: str) -> list:
    """Split on commas outside brackets."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def _lookup(ring: rg.Ring, token: str, labels: dict) -> int:
    key = token.replace(" ", "")
    if key in labels:
        return labels[key]
    if key.isdigit() and int(key) < ring.order:
        return int(key)
    raise ValueError(f"{token!r} is not an element of {ring.name}")


def parse_table(ring: rg.Ring, body: str) -> endo.Endomorphism:
    """``a->b`` pairs, elements written as printed or by index."""
    labels = {ring.format(i).replace(" ", ""): i for i in range(ring.order)}
    table = {}
    for pair in _split_top(body):
        if "->" not in pair:
            raise ValueError(f"table entry {pair!r} is not of the form a->b")
        a, b = pair.split("->", 1)
        ia = _lookup(ring, a, labels)
        if ia in table:
            raise ValueError(f"table maps {a.strip()} twice")
        table[ia] = _lookup(ring, b, labels)
    return endo.from_table(ring, table)


def parse_endo_expr(text: str, ring: rg.Ring) -> endo.Endomorphism:
    text = text.strip()
    m = _TABLE.fullmatch(text)
    if m:
        return parse_table(ring, m.group(1))
    simple = {"identity": endo.identity, "eval0": endo.eval_at_zero,
              "const_term": endo.constant_term, "swap": endo.swap}
    if text in simple:
        return simple[text](ring)
    m = re.fullmatch(r"frobenius\(\s*(\d+)\s*\)", text)
    if m:
        return endo.frobenius(ring, int(m.group(1)))
    raise ValueError(f"unknown endomorphism {text!r}")


# ---------------------------------------------------------------- tasks

def _keyvals(tokens, line, allowed) -> dict:
    out = {}
    for tok in tokens:
        if "=" not in tok:
            raise ConfigError(f"expected key=value, got {tok!r}", line)
        k, v = tok.split("=", 1)
        if k not in allowed:
            raise ConfigError(f"unknown parameter {k!r}", line)
        if k in out:
            raise ConfigError(f"parameter {k!r} given twice", line)
        out[k] = v
    return out


def _parse_bounds(kv: dict, line: int, base: dict | None = None) -> dict:
    out = dict(base or {})
    for k, v in kv.items():
        if k not in _BOUND_KEYS:
            continue
        try:
            n = int(v)
        except ValueError:
            raise ConfigError(f"{k} must be an integer, got {v!r}", line) from None
        if n < 0 or (n == 0 and k in ("D", "N", "budget")):
            raise ConfigError(f"{k} must be positive, got {n}", line)
        out[k] = n
    return out


def _expect(kv, line) -> bool:
    v = kv.get("expect", "holds")
    if v not in ("holds", "fails"):
        raise ConfigError(f"expect must be 'holds' or 'fails', got {v!r}", line)
    return v == "fails"


def _known_property(p, line):
    if p not in PROPERTY_IDS and p not in EXTRA_IDS:
        raise ConfigError(f"unknown property {p!r}", line)
    return p


def _parse_task(tokens, line, doc: ConfigDocument) -> Task:
    if not tokens:
        raise ConfigError("empty task", line)
    kind, rest = tokens[0], tokens[1:]
    if kind in ("check", "verify"):
        if len(rest) < 2:
            raise ConfigError(f"task {kind} needs RING and ENDO (or -)", line)
        ring, en = rest[0], rest[1]
        if ring not in doc.rings:
            raise ConfigError(f"undeclared ring {ring!r}", line)
        if en != "-":
            if en not in doc.endos:
                raise ConfigError(f"undeclared endomorphism {en!r}", line)
            if doc.endos[en].ring != doc.rings[ring]:
                raise ConfigError(f"{en} is not declared on {ring}", line)
        if kind == "check":
            kv = _keyvals(rest[2:], line, {"property", "expect"} | _BOUND_KEYS)
            if "property" not in kv:
                raise ConfigError("task check needs property=<id>", line)
            names = tuple(_known_property(p, line) for p in kv["property"].split(","))
        else:
            kv = _keyvals(rest[2:], line, {"theorems", "expect"} | _BOUND_KEYS)
            wanted = kv.get("theorems", "all")
            names = THEOREM_IDS if wanted == "all" else tuple(wanted.split(","))
            for t in names:
                if t not in THEOREM_IDS:
                    raise ConfigError(f"unknown theorem {t!r}", line)
        return Task(kind, line, ring, None if en == "-" else en, names, _expect(kv, line),
                    overrides=_parse_bounds(kv, line))
    if kind == "search":
        kv = _keyvals(rest, line, {"P", "Q", "max_order", "expect"} | _BOUND_KEYS)
        if "P" not in kv or "Q" not in kv:
            raise ConfigError("task search needs P=<id> and Q=<id>", line)
        holds = tuple(_known_property(p, line) for p in kv["P"].split(","))
        fails = _known_property(kv["Q"], line)
        try:
            max_order = int(kv.get("max_order", 8))
        except ValueError:
            raise ConfigError("max_order must be an integer", line) from None
        if max_order < 2:
            raise ConfigError("max_order must be at least 2", line)
        return Task("search", line, names=holds + (fails,), expect_fail=_expect(kv, line), holds=holds,
                    fails=fails, max_order=max_order, overrides=_parse_bounds(kv, line))
    raise ConfigError(f"unknown task kind {kind!r}", line)


def parse_config(text: str) -> ConfigDocument:
    doc = ConfigDocument()
    bound_vals: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head = line.split(None, 1)[0]
        try:
            if head == "ring":
                m = _RING_LINE.fullmatch(line)
                if not m:
                    raise ConfigError("expected: ring NAME = EXPR", lineno)
                name, expr = m.groups()
                if name in doc.rings:
                    raise ConfigError(f"ring {name!r} declared twice", lineno)
                doc.rings[name] = parse_ring_expr(expr, doc.rings)
            elif head == "endo":
                m = _ENDO_LINE.fullmatch(line)
                if not m:
                    raise ConfigError("expected: endo NAME on RING = EXPR", lineno)
                name, ring, expr = m.groups()
                if name in doc.endos:
                    raise ConfigError(f"endomorphism {name!r} declared twice", lineno)
                if ring not in doc.rings:
                    raise ConfigError(f"undeclared ring {ring!r}", lineno)
                doc.endos[name] = parse_endo_expr(expr, doc.rings[ring])
            elif head == "bounds":
                kv = _keyvals(line.split()[1:], lineno, _BOUND_KEYS)
                bound_vals = _parse_bounds(kv, lineno, bound_vals)
            elif head == "task":
                doc.tasks.append(_parse_task(line.split()[1:], lineno, doc))
            else:
                raise ConfigError(f"unknown directive {head!r}", lineno)
        except ConfigError:
            raise
        except (SkewLabError, ValueError) as exc:
            raise ConfigError(str(exc), lineno) from exc
    doc.bounds = Bounds(**bound_vals)
    return doc
