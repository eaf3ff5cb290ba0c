"""Decorated boundary strata and tautological classes.

A term (graph, decoration, c) denotes c * xi_*(decoration): the pushforward
of a psi-kappa monomial along the gluing map from the product of vertex
moduli spaces.  No automorphism factor is divided out, so the term equals
|Aut(graph)| times the corresponding multiple of the image cycle class.

Decorations place psi exponents on legs (by marking label) and on edge
half-edges (by (vertex, slot)), and a kappa monomial (multiset of indices
a >= 1) on each vertex.  Decorations related by an automorphism of the
graph push forward to the same class; terms are stored with the orbit
representative that is minimal in a fixed total order, with coefficients
merged.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .errors import DomainError
from .rationals import QQ, format_rat, parse_rat
from .stable_graphs import (
    StableGraph,
    automorphisms,
    canonical_form_with_map,
    enumerate_stable_graphs,
    smooth_graph,
)

PSI_LEG = "leg"
PSI_HE = "he"


def dim_moduli(g: int, n: int) -> int:
    return 3 * g - 3 + n


@dataclass(frozen=True)
class Decoration:
    """A psi-kappa monomial on a stable graph."""

    psi: tuple  # sorted tuple of (key, exponent), exponent > 0
    kappa: tuple  # per-vertex sorted tuples of kappa indices (each >= 1)

    def degree(self) -> int:
        return sum(e for _, e in self.psi) + sum(
            a for ks in self.kappa for a in ks
        )

    def is_trivial(self) -> bool:
        return not self.psi and all(not ks for ks in self.kappa)

    def transport(self, vmap, hemap) -> "Decoration":
        """Relabel along a graph isomorphism (vmap, hemap)."""
        psi = []
        for key, e in self.psi:
            if key[0] == PSI_HE:
                (_, v, s) = key
                nv, ns = hemap[(v, s)]
                psi.append(((PSI_HE, nv, ns), e))
            else:
                psi.append((key, e))
        kappa = [()] * len(self.kappa)
        for v, ks in enumerate(self.kappa):
            kappa[vmap[v]] = ks
        return Decoration(tuple(sorted(psi)), tuple(kappa))

    def sort_key(self):
        return (self.psi, self.kappa)

    def validate(self, graph: StableGraph) -> None:
        if len(self.kappa) != graph.n_vertices:
            raise DomainError("kappa data does not match the vertex count")
        marks = set(graph.markings())
        he = set(graph.half_edges())
        seen = set()
        for key, e in self.psi:
            if e <= 0:
                raise DomainError("psi exponents must be positive")
            if key in seen:
                raise DomainError("repeated psi key")
            seen.add(key)
            if key[0] == PSI_LEG:
                if key[1] not in marks:
                    raise DomainError(f"psi leg {key[1]} not in the graph")
            elif key[0] == PSI_HE:
                if (key[1], key[2]) not in he:
                    raise DomainError(f"psi half-edge {key[1:]} not in the graph")
            else:
                raise DomainError(f"unknown psi key {key!r}")
        for ks in self.kappa:
            if any(a < 1 for a in ks):
                raise DomainError("kappa_0 and negative indices are not allowed")


def decoration(graph: StableGraph, psi=None, kappa=None) -> Decoration:
    """Build a decoration. psi maps legs (int) or half-edges ((v, s)) to
    exponents; kappa maps vertex index to an iterable of kappa indices."""
    psi_items = []
    for key, e in (psi or {}).items():
        if e == 0:
            continue
        if isinstance(key, int):
            psi_items.append(((PSI_LEG, key), int(e)))
        else:
            v, s = key
            psi_items.append(((PSI_HE, int(v), int(s)), int(e)))
    kap = [()] * graph.n_vertices
    for v, ks in (kappa or {}).items():
        if not 0 <= v < graph.n_vertices:
            raise DomainError(f"kappa vertex {v} not in the graph")
        kap[v] = tuple(sorted(int(a) for a in ks))
    dec = Decoration(tuple(sorted(psi_items)), tuple(kap))
    dec.validate(graph)
    return dec


def trivial_decoration(graph: StableGraph) -> Decoration:
    return Decoration((), ((),) * graph.n_vertices)


def decoration_mul(d1: Decoration, d2: Decoration) -> Decoration:
    """Product of two monomials on the same graph."""
    exps = {}
    for key, e in itertools.chain(d1.psi, d2.psi):
        exps[key] = exps.get(key, 0) + e
    psi = tuple(sorted(exps.items()))
    kappa = tuple(
        tuple(sorted(k1 + k2)) for k1, k2 in zip(d1.kappa, d2.kappa)
    )
    return Decoration(psi, kappa)


def vertex_degrees(graph: StableGraph, dec: Decoration) -> list[int]:
    """Decoration degree accumulated at each vertex."""
    degs = [sum(ks) for ks in dec.kappa]
    leg_home = {}
    for v in range(graph.n_vertices):
        for m in graph.legs[v]:
            leg_home[m] = v
    for key, e in dec.psi:
        if key[0] == PSI_LEG:
            degs[leg_home[key[1]]] += e
        else:
            degs[key[1]] += e
    return degs


def term_is_zero_class(graph: StableGraph, dec: Decoration) -> bool:
    """True when some vertex decoration exceeds that vertex's dimension."""
    for v, deg in enumerate(vertex_degrees(graph, dec)):
        nv = len(graph.legs[v]) + len(graph.edge_ends(v))
        if deg > dim_moduli(graph.genera[v], nv):
            return True
    return False


_CANON_TERM_CACHE: dict = {}


def canonical_term(graph: StableGraph, dec: Decoration):
    """Canonical (graph, decoration) representative of a decorated stratum."""
    key = (graph, dec)
    cached = _CANON_TERM_CACHE.get(key)
    if cached is not None:
        return cached
    canon, vmap, hemap = canonical_form_with_map(graph)
    moved = dec.transport(vmap, hemap)
    best = min(
        (moved.transport(av, ah) for av, ah in automorphisms(canon)),
        key=Decoration.sort_key,
    )
    result = (canon, best)
    _CANON_TERM_CACHE[key] = result
    return result


class TautClass:
    """A finite rational combination of decorated strata of fixed degree."""

    __slots__ = ("g", "n", "d", "terms", "virtual")

    def __init__(self, g: int, n: int, d: int, terms=None, virtual=False):
        self.g = g
        self.n = n
        self.d = d
        self.virtual = virtual
        self.terms: dict = {}
        if terms:
            for (graph, dec), coeff in terms.items():
                self._insert(graph, dec, coeff)

    def _insert(self, graph: StableGraph, dec: Decoration, coeff):
        coeff = QQ(coeff)
        if not coeff:
            return
        if term_is_zero_class(graph, dec):
            return
        key = canonical_term(graph, dec)
        new = self.terms.get(key, 0) + coeff
        if new:
            self.terms[key] = new
        else:
            self.terms.pop(key, None)

    # -- algebra ---------------------------------------------------------

    def _check_compatible(self, other: "TautClass"):
        if (self.g, self.n, self.d, self.virtual) != (
            other.g,
            other.n,
            other.d,
            other.virtual,
        ):
            raise DomainError("classes live in different ambient groups")

    def __add__(self, other: "TautClass") -> "TautClass":
        self._check_compatible(other)
        out = TautClass(self.g, self.n, self.d, virtual=self.virtual)
        out.terms = dict(self.terms)
        for key, coeff in other.terms.items():
            new = out.terms.get(key, 0) + coeff
            if new:
                out.terms[key] = new
            else:
                out.terms.pop(key, None)
        return out

    def __sub__(self, other: "TautClass") -> "TautClass":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "TautClass":
        scalar = QQ(scalar)
        out = TautClass(self.g, self.n, self.d, virtual=self.virtual)
        if scalar:
            out.terms = {key: scalar * c for key, c in self.terms.items()}
        return out

    def __neg__(self) -> "TautClass":
        return (-1) * self

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, TautClass):
            return NotImplemented
        return (
            (self.g, self.n, self.d) == (other.g, other.n, other.d)
            and self.terms == other.terms
        )

    def __repr__(self):
        return (
            f"TautClass(g={self.g}, n={self.n}, d={self.d}, "
            f"{len(self.terms)} terms)"
        )

    def coefficient(self, graph: StableGraph, dec: Decoration = None):
        if dec is None:
            dec = trivial_decoration(graph)
        return QQ(self.terms.get(canonical_term(graph, dec), 0))

    def validate(self) -> None:
        if self.d < 0:
            raise DomainError("negative degree")
        for (graph, dec) in self.terms:
            graph.validate()
            dec.validate(graph)
            if not self.virtual:
                if graph.genus() != self.g or graph.n_markings != self.n:
                    raise DomainError("term graph has the wrong type")
                if graph.n_edges + dec.degree() != self.d:
                    raise DomainError("term degree mismatch")
            else:
                if graph.genus() != self.g:
                    raise DomainError("term graph has the wrong genus")

    # -- serialization ----------------------------------------------------

    def sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda kv: (kv[0][0].sort_key(), kv[0][1].sort_key()),
        )

    def to_json_dict(self) -> dict:
        terms = []
        for (graph, dec), coeff in self.sorted_terms():
            terms.append(
                {
                    "graph": graph.to_json_dict(),
                    "psi": [[list(key), e] for key, e in dec.psi],
                    "kappa": [list(ks) for ks in dec.kappa],
                    "coeff": format_rat(coeff),
                }
            )
        return {"g": self.g, "n": self.n, "d": self.d, "terms": terms}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @staticmethod
    def from_json_dict(data: dict) -> "TautClass":
        out = TautClass(data["g"], data["n"], data["d"])
        for term in data["terms"]:
            graph = StableGraph.from_json_dict(term["graph"])
            psi = tuple(
                sorted((tuple(key), int(e)) for key, e in term["psi"])
            )
            kappa = tuple(tuple(ks) for ks in term["kappa"])
            dec = Decoration(psi, kappa)
            dec.validate(graph)
            out._insert(graph, dec, parse_rat(term["coeff"]))
        out.validate()
        return out

    @staticmethod
    def from_json(text: str) -> "TautClass":
        return TautClass.from_json_dict(json.loads(text))


def class_of_graph(graph: StableGraph, dec: Decoration = None, coeff=1) -> TautClass:
    """The single-term class coeff * xi_*(dec) on the ambient of `graph`."""
    graph.validate()
    if dec is None:
        dec = trivial_decoration(graph)
    dec.validate(graph)
    d = graph.n_edges + dec.degree()
    out = TautClass(graph.genus(), graph.n_markings, d)
    out._insert(graph, dec, coeff)
    return out


def fundamental_class(g: int, n: int) -> TautClass:
    return class_of_graph(smooth_graph(g, n))


def psi_class(g: int, n: int, i: int, exponent: int = 1) -> TautClass:
    graph = smooth_graph(g, n)
    return class_of_graph(graph, decoration(graph, psi={i: exponent}))


def kappa_class(g: int, n: int, a: int) -> TautClass:
    graph = smooth_graph(g, n)
    return class_of_graph(graph, decoration(graph, kappa={0: (a,)}))


# ---------------------------------------------------------------------------
# generators


def _partitions(k: int):
    """Partitions of k into parts >= 1, as sorted tuples."""
    if k == 0:
        yield ()
        return

    def rec(remaining, max_part):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, max_part), 0, -1):
            for rest in rec(remaining - part, part):
                yield (part,) + rest

    yield from rec(k, k)


def _decorations_of_degree(graph: StableGraph, m: int):
    """All decorations of total degree m on `graph`, before orbit reduction."""
    psi_keys = [(PSI_LEG, i) for i in graph.markings()]
    psi_keys += [(PSI_HE, v, s) for (v, s) in sorted(graph.half_edges())]
    V = graph.n_vertices
    slots = len(psi_keys) + V

    def compositions(total, parts):
        if parts == 0:
            if total == 0:
                yield ()
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for combo in compositions(m, slots):
        psi_part = combo[: len(psi_keys)]
        kappa_budget = combo[len(psi_keys):]
        psi = tuple(
            sorted((key, e) for key, e in zip(psi_keys, psi_part) if e)
        )
        for kappa_parts in itertools.product(
            *[_partitions(k) for k in kappa_budget]
        ):
            yield Decoration(psi, tuple(kappa_parts))


_GENERATORS_CACHE: dict = {}


def generators(g: int, n: int, d: int) -> tuple[TautClass, ...]:
    """The decorated-stratum generating set of degree d on (g, n).

    One class per automorphism orbit of (graph, decoration) with
    #edges + decoration degree = d, skipping decorations that exceed a
    vertex dimension (those push forward to zero).  The kappa monomials are
    included in full, so the set is deliberately redundant.  The order is
    deterministic.
    """
    key = (g, n, d)
    cached = _GENERATORS_CACHE.get(key)
    if cached is not None:
        return cached
    if d < 0 or d > dim_moduli(g, n):
        raise DomainError("degree outside 0..3g-3+n")
    seen = set()
    for graph in enumerate_stable_graphs(g, n):
        if graph.n_edges > d:
            continue
        for dec in _decorations_of_degree(graph, d - graph.n_edges):
            if term_is_zero_class(graph, dec):
                continue
            seen.add(canonical_term(graph, dec))
    ordered = sorted(seen, key=lambda t: (t[0].sort_key(), t[1].sort_key()))
    result = tuple(
        class_of_graph(graph, dec) for (graph, dec) in ordered
    )
    _GENERATORS_CACHE[key] = result
    return result
