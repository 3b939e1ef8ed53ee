"""Finite groupoids: validation, generators and the JSON file format.

Composition convention: ``comp(p, q)`` (read "p after q") is defined exactly
when ``src(p) == tgt(q)``; then ``src(pq) = src(q)`` and ``tgt(pq) = tgt(p)``.
Units and arrows are strings, kept in lexicographic order so every derived
basis is reproducible.  Validation scans all composable triples, which is
cubic in the number of arrows and fine for small groupoids.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product as _product
from typing import Mapping, Sequence


class GroupoidError(ValueError):
    """Malformed groupoid data or a violated groupoid axiom."""


@dataclass(frozen=True)
class Groupoid:
    units: tuple
    arrows: tuple
    src: Mapping[str, str]
    tgt: Mapping[str, str]
    comp: Mapping[tuple, str]
    inv: Mapping[str, str]
    unit_arrow: Mapping[str, str]
    _index: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(self.arrows)})

    def index(self, p: str) -> int:
        return self._index[p]

    def composable(self, p: str, q: str) -> bool:
        return self.src[p] == self.tgt[q]

    def compose(self, p: str, q: str):
        """pq, or None when src(p) != tgt(q)."""
        return self.comp.get((p, q))

    def is_unit_arrow(self, p: str) -> bool:
        return p in self._unit_arrows

    @property
    def _unit_arrows(self) -> frozenset:
        return frozenset(self.unit_arrow.values())

    def composable_pairs(self):
        for p in self.arrows:
            for q in self.arrows:
                if self.src[p] == self.tgt[q]:
                    yield p, q

    def is_commutative(self) -> bool:
        """Do all composable pairs commute (both orders defined and equal)?"""
        for p, q in self.composable_pairs():
            if self.compose(q, p) != self.compose(p, q):
                return False
        return True

    def to_json(self) -> dict:
        return {
            "kind": "groupoid",
            "units": list(self.units),
            "arrows": [{"id": p, "src": self.src[p], "tgt": self.tgt[p]} for p in self.arrows],
            "comp": [[p, q, self.comp[(p, q)]] for p, q in self.composable_pairs()],
            "inv": {p: self.inv[p] for p in self.arrows},
        }

    def __repr__(self):
        return f"Groupoid(units={len(self.units)}, arrows={len(self.arrows)})"


def axiom_violations(G: Groupoid):
    """Yield human-readable descriptions of failed groupoid axioms (first failing data first)."""
    units = set(G.units)
    for u in G.units:
        e = G.unit_arrow.get(u)
        if e is None or e not in G._index:
            yield f"unit {u!r} has no identity arrow"
            return
        if G.src[e] != u or G.tgt[e] != u:
            yield f"identity arrow {e!r} of unit {u!r} is not a loop at {u!r}"
    for p in G.arrows:
        if G.src[p] not in units or G.tgt[p] not in units:
            yield f"arrow {p!r} has an unknown endpoint"
            return
    for (p, q), r in sorted(G.comp.items()):
        if p not in G._index or q not in G._index or r not in G._index:
            yield f"composition ({p!r}, {q!r}) -> {r!r} mentions an unknown arrow"
            continue
        if G.src[p] != G.tgt[q]:
            yield f"composition ({p!r}, {q!r}) declared but src({p})={G.src[p]!r} != tgt({q})={G.tgt[q]!r}"
            continue
        if G.src[r] != G.src[q] or G.tgt[r] != G.tgt[p]:
            yield f"composition ({p!r}, {q!r}) = {r!r} has wrong endpoints"
    for p, q in G.composable_pairs():
        if (p, q) not in G.comp:
            yield f"composable pair ({p!r}, {q!r}) has no declared composite"
    for p in G.arrows:
        if G.compose(p, G.unit_arrow[G.src[p]]) != p or G.compose(G.unit_arrow[G.tgt[p]], p) != p:
            yield f"unit law fails for arrow {p!r}"
        q = G.inv.get(p)
        if q is None or q not in G._index:
            yield f"arrow {p!r} has no inverse"
            continue
        if G.inv.get(q) != p:
            yield f"inverse is not an involution at {p!r}"
        if G.compose(p, q) != G.unit_arrow[G.tgt[p]] or G.compose(q, p) != G.unit_arrow[G.src[p]]:
            yield f"inverse law fails for arrow {p!r} with inverse {q!r}"
    for p in G.arrows:
        for q in G.arrows:
            pq = G.compose(p, q)
            if pq is None:
                continue
            for r in G.arrows:
                qr = G.compose(q, r)
                if qr is None:
                    continue
                lhs = G.compose(pq, r)
                rhs = G.compose(p, qr)
                if lhs != rhs:
                    yield f"associativity fails on triple ({p!r}, {q!r}, {r!r})"


def validate(G: Groupoid) -> Groupoid:
    for msg in axiom_violations(G):
        raise GroupoidError(msg)
    return G


def make_groupoid(units, arrows, src, tgt, comp, inv, unit_arrow) -> Groupoid:
    G = Groupoid(
        units=tuple(sorted(units)),
        arrows=tuple(sorted(arrows)),
        src=dict(src),
        tgt=dict(tgt),
        comp=dict(comp),
        inv=dict(inv),
        unit_arrow=dict(unit_arrow),
    )
    return validate(G)


# ---------------------------------------------------------------------------
# file format
# ---------------------------------------------------------------------------

def groupoid_from_json(data: dict) -> Groupoid:
    """Build a groupoid from the JSON object layout (``units``, ``arrows``, ``comp``, ``inv``).

    Identity arrows may be omitted; they are then created as ``"id:<unit>"``
    together with all their compositions.
    """
    try:
        units = [str(u) for u in data["units"]]
        arrow_list = data["arrows"]
        comp_list = data.get("comp", [])
        inv = {str(k): str(v) for k, v in data.get("inv", {}).items()}
    except (KeyError, TypeError, AttributeError) as exc:
        raise GroupoidError(f"malformed groupoid file: {exc}") from None
    if len(set(units)) != len(units):
        raise GroupoidError("duplicate unit identifiers")
    src, tgt = {}, {}
    for a in arrow_list:
        try:
            p, s, t = str(a["id"]), str(a["src"]), str(a["tgt"])
        except (KeyError, TypeError):
            raise GroupoidError(f"malformed arrow entry {a!r}") from None
        if p in src:
            raise GroupoidError(f"duplicate arrow {p!r}")
        src[p], tgt[p] = s, t
    comp = {}
    for triple in comp_list:
        if not isinstance(triple, (list, tuple)) or len(triple) != 3:
            raise GroupoidError(f"malformed composition entry {triple!r}")
        p, q, r = (str(x) for x in triple)
        if (p, q) in comp and comp[(p, q)] != r:
            raise GroupoidError(f"composition ({p!r}, {q!r}) declared twice")
        comp[(p, q)] = r

    unit_arrow = {}
    inferred = set()
    for u in units:
        explicit = f"id:{u}"
        if explicit in src:
            unit_arrow[u] = explicit
            continue
        # an identity loop already present under another name
        found = None
        for p in src:
            if src[p] == u and tgt[p] == u and comp.get((p, p)) == p:
                found = p
                break
        if found is None:
            found = explicit
            src[found] = tgt[found] = u
            inferred.add(found)
        unit_arrow[u] = found
    for u, e in unit_arrow.items():
        inv.setdefault(e, e)
        if e not in inferred:
            continue
        for p in list(src):
            if tgt[p] == u:
                comp.setdefault((e, p), p)
            if src[p] == u:
                comp.setdefault((p, e), p)
    return make_groupoid(units, list(src), src, tgt, comp, inv, unit_arrow)


def parse_groupoid(text: str) -> Groupoid:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GroupoidError(f"malformed groupoid file: {exc}") from None
    if not isinstance(data, dict):
        raise GroupoidError("groupoid file must contain a JSON object")
    return groupoid_from_json(data)


def load_groupoid(path) -> Groupoid:
    with open(path) as fh:
        return parse_groupoid(fh.read())


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def pair_groupoid(n: int) -> Groupoid:
    """Units 1..n, one arrow (i,j) from j to i for every pair."""
    if n < 1:
        raise ValueError("pair_groupoid needs n >= 1")
    units = [str(i) for i in range(1, n + 1)]
    name = {(i, j): f"({i},{j})" for i in units for j in units}
    src = {name[i, j]: j for i, j in name}
    tgt = {name[i, j]: i for i, j in name}
    comp = {(name[i, j], name[j, k]): name[i, k] for i in units for j in units for k in units}
    inv = {name[i, j]: name[j, i] for i, j in name}
    unit_arrow = {i: name[i, i] for i in units}
    return make_groupoid(units, name.values(), src, tgt, comp, inv, unit_arrow)


def trivial_groupoid() -> Groupoid:
    return pair_groupoid(1)


def group_groupoid(table, labels: Sequence[str] = None, unit: str = "*") -> Groupoid:
    """One-object groupoid of a finite group.

    ``table`` is either a square list of lists of element indices
    (``table[a][b]`` is the index of a*b) or a mapping ``(g, h) -> gh`` on labels.
    """
    if isinstance(table, Mapping):
        elems = sorted({g for pair in table for g in pair})
        mult = {(g, h): table[(g, h)] for g in elems for h in elems if (g, h) in table}
    else:
        k = len(table)
        if labels is None:
            labels = [str(i) for i in range(k)]
        labels = [str(x) for x in labels]
        elems = labels
        try:
            mult = {(labels[a], labels[b]): labels[table[a][b]] for a in range(k) for b in range(k)}
        except (IndexError, TypeError):
            raise GroupoidError("cayley table must be square with entries in range") from None
    if len(mult) != len(elems) ** 2 or any(v not in elems for v in mult.values()):
        raise GroupoidError("cayley table is not closed or not total")
    ids = [e for e in elems if all(mult[(e, g)] == g and mult[(g, e)] == g for g in elems)]
    if len(ids) != 1:
        raise GroupoidError("cayley table has no identity element")
    e = ids[0]
    inv = {}
    for g in elems:
        hs = [h for h in elems if mult[(g, h)] == e and mult[(h, g)] == e]
        if not hs:
            raise GroupoidError(f"element {g!r} has no inverse")
        inv[g] = hs[0]
    for a, b, c in _product(elems, repeat=3):
        if mult[(mult[(a, b)], c)] != mult[(a, mult[(b, c)])]:
            raise GroupoidError(f"cayley table is not associative on ({a!r}, {b!r}, {c!r})")
    src = {g: unit for g in elems}
    return make_groupoid([unit], elems, src, dict(src), mult, inv, {unit: e})


def cyclic_group(m: int) -> Groupoid:
    """Z/m as a one-object groupoid with arrows "0".."m-1" ("0" is the identity)."""
    table = [[(a + b) % m for b in range(m)] for a in range(m)]
    return group_groupoid(table)


def _relabel(G: Groupoid, tag: str) -> dict:
    t = lambda x: f"{tag}{x}"  # noqa: E731
    return dict(
        units=[t(u) for u in G.units],
        arrows=[t(p) for p in G.arrows],
        src={t(p): t(G.src[p]) for p in G.arrows},
        tgt={t(p): t(G.tgt[p]) for p in G.arrows},
        comp={(t(p), t(q)): t(r) for (p, q), r in G.comp.items()},
        inv={t(p): t(q) for p, q in G.inv.items()},
        unit_arrow={t(u): t(e) for u, e in G.unit_arrow.items()},
    )


def disjoint_union(G1: Groupoid, G2: Groupoid) -> Groupoid:
    """Disjoint union; units and arrows are prefixed with "0:" and "1:"."""
    a, b = _relabel(G1, "0:"), _relabel(G2, "1:")
    merged = {k: (a[k] + b[k]) if isinstance(a[k], list) else {**a[k], **b[k]} for k in a}
    return make_groupoid(**merged)


def product(G1: Groupoid, G2: Groupoid) -> Groupoid:
    """Cartesian product; an arrow (p, q) is named "(p,q)"."""
    pair = lambda x, y: f"({x},{y})"  # noqa: E731
    units = [pair(u, v) for u in G1.units for v in G2.units]
    arrows = [pair(p, q) for p in G1.arrows for q in G2.arrows]
    src = {pair(p, q): pair(G1.src[p], G2.src[q]) for p in G1.arrows for q in G2.arrows}
    tgt = {pair(p, q): pair(G1.tgt[p], G2.tgt[q]) for p in G1.arrows for q in G2.arrows}
    comp = {}
    for (p1, p2), r1 in G1.comp.items():
        for (q1, q2), r2 in G2.comp.items():
            comp[(pair(p1, q1), pair(p2, q2))] = pair(r1, r2)
    inv = {pair(p, q): pair(G1.inv[p], G2.inv[q]) for p in G1.arrows for q in G2.arrows}
    unit_arrow = {pair(u, v): pair(G1.unit_arrow[u], G2.unit_arrow[v]) for u in G1.units for v in G2.units}
    return make_groupoid(units, arrows, src, tgt, comp, inv, unit_arrow)


def corpus() -> dict:
    """The seven small groupoids used throughout the test and acceptance suites."""
    z2 = cyclic_group(2)
    return {
        "trivial": trivial_groupoid(),
        "Z2": z2,
        "Z3": cyclic_group(3),
        "Z2+trivial": disjoint_union(z2, trivial_groupoid()),
        "pair2": pair_groupoid(2),
        "pair3": pair_groupoid(3),
        "pair2xZ2": product(pair_groupoid(2), z2),
    }
