"""Stable graphs: dual graphs of stable nodal curves.

A stable graph of type (g, n) has vertices carrying genera, legs carrying the
marking labels 1..n, and edges given as unordered pairs of half-edges.  A
half-edge is addressed as (vertex index, local slot); slots at a vertex are
numbered 0..k-1 where k is the number of edge ends at that vertex.  Loops and
parallel edges are allowed.  Isomorphisms fix legs pointwise.

The total genus is sum of vertex genera plus the first Betti number
h1 = #edges - #vertices + 1, and every vertex must satisfy
2*g(v) - 2 + valence(v) > 0.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .errors import DomainError

HalfEdge = tuple[int, int]
Edge = tuple[HalfEdge, HalfEdge]


@dataclass(frozen=True)
class StableGraph:
    genera: tuple[int, ...]
    legs: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        genera = tuple(int(x) for x in self.genera)
        legs = tuple(tuple(sorted(int(m) for m in lv)) for lv in self.legs)
        edges = []
        for (h1, h2) in self.edges:
            a = (int(h1[0]), int(h1[1]))
            b = (int(h2[0]), int(h2[1]))
            edges.append((a, b) if a <= b else (b, a))
        edges = tuple(sorted(edges))
        object.__setattr__(self, "genera", genera)
        object.__setattr__(self, "legs", legs)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_hash", hash((genera, legs, edges)))

    def __hash__(self):
        return self._hash

    @property
    def n_vertices(self) -> int:
        return len(self.genera)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def h1(self) -> int:
        return self.n_edges - self.n_vertices + 1

    def genus(self) -> int:
        return sum(self.genera) + self.h1()

    def markings(self) -> tuple[int, ...]:
        return tuple(sorted(m for lv in self.legs for m in lv))

    @property
    def n_markings(self) -> int:
        return len(self.markings())

    def half_edges(self) -> list[HalfEdge]:
        out = []
        for (a, b) in self.edges:
            out.append(a)
            out.append(b)
        return out

    def edge_ends(self, v: int) -> list[int]:
        """Slots of the edge ends at vertex v."""
        return sorted(s for (w, s) in self.half_edges() if w == v)

    def n_loops(self, v: int) -> int:
        return sum(1 for ((v1, _), (v2, _)) in self.edges if v1 == v2 == v)

    def valence(self, v: int) -> int:
        return len(self.edge_ends(v)) + len(self.legs[v])

    def is_connected(self) -> bool:
        if self.n_vertices == 0:
            return False
        seen = {0}
        frontier = [0]
        adj = [[] for _ in range(self.n_vertices)]
        for ((v1, _), (v2, _)) in self.edges:
            adj[v1].append(v2)
            adj[v2].append(v1)
        while frontier:
            v = frontier.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return len(seen) == self.n_vertices

    def validate(self) -> None:
        """Raise DomainError unless this is a valid stable graph."""
        V = self.n_vertices
        if V == 0:
            raise DomainError("graph has no vertices")
        if len(self.legs) != V:
            raise DomainError("legs and genera lengths differ")
        if any(g < 0 for g in self.genera):
            raise DomainError("negative genus")
        marks = [m for lv in self.legs for m in lv]
        if sorted(marks) != list(range(1, len(marks) + 1)):
            raise DomainError("markings must be exactly 1..n without repeats")
        seen_he = set()
        slots = [[] for _ in range(V)]
        for (a, b) in self.edges:
            for (v, s) in (a, b):
                if not (0 <= v < V):
                    raise DomainError(f"half-edge {(v, s)} at missing vertex")
                if (v, s) in seen_he:
                    raise DomainError(f"half-edge {(v, s)} used twice")
                seen_he.add((v, s))
                slots[v].append(s)
        for v in range(V):
            if sorted(slots[v]) != list(range(len(slots[v]))):
                raise DomainError(f"slots at vertex {v} are not 0..k-1")
        if not self.is_connected():
            raise DomainError("graph is not connected")
        for v in range(V):
            if 2 * self.genera[v] - 2 + self.valence(v) <= 0:
                raise DomainError(f"vertex {v} violates stability")

    def sort_key(self):
        return (self.n_edges, self.n_vertices, self.genera, self.legs, self.edges)

    def to_json_dict(self) -> dict:
        return {
            "g": self.genus(),
            "n": self.n_markings,
            "vertices": [
                {"genus": self.genera[v], "legs": list(self.legs[v])}
                for v in range(self.n_vertices)
            ],
            "edges": [[[a[0], a[1]], [b[0], b[1]]] for (a, b) in self.edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @staticmethod
    def from_json_dict(data: dict) -> "StableGraph":
        genera = tuple(v["genus"] for v in data["vertices"])
        legs = tuple(tuple(v["legs"]) for v in data["vertices"])
        edges = tuple(
            ((e[0][0], e[0][1]), (e[1][0], e[1][1])) for e in data["edges"]
        )
        graph = StableGraph(genera, legs, edges)
        graph.validate()
        if graph.genus() != data.get("g", graph.genus()):
            raise DomainError("declared g does not match the graph")
        if graph.n_markings != data.get("n", graph.n_markings):
            raise DomainError("declared n does not match the graph")
        return graph

    @staticmethod
    def from_json(text: str) -> "StableGraph":
        return StableGraph.from_json_dict(json.loads(text))


def stable_graph(genera, legs, edges) -> StableGraph:
    """Build and validate a stable graph."""
    graph = StableGraph(tuple(genera), tuple(tuple(l) for l in legs),
                        tuple(edges))
    graph.validate()
    return graph


def smooth_graph(g: int, n: int) -> StableGraph:
    """The one-vertex graph with no edges (the open stratum)."""
    if 2 * g - 2 + n <= 0:
        raise DomainError(f"({g},{n}) is not stable")
    return StableGraph((g,), (tuple(range(1, n + 1)),), ())


# ---------------------------------------------------------------------------
# canonical form


def _vertex_colors(graph: StableGraph) -> list[tuple]:
    ends = [0] * graph.n_vertices
    loops = [0] * graph.n_vertices
    for ((v1, _), (v2, _)) in graph.edges:
        ends[v1] += 1
        ends[v2] += 1
        if v1 == v2:
            loops[v1] += 1
    return [
        (graph.genera[v], graph.legs[v], ends[v], loops[v])
        for v in range(graph.n_vertices)
    ]


def _color_classes(graph: StableGraph) -> list[list[int]]:
    colors = _vertex_colors(graph)
    order = sorted(range(graph.n_vertices), key=lambda v: (colors[v], v))
    classes = []
    for v in order:
        if classes and colors[classes[-1][-1]] == colors[v]:
            classes[-1].append(v)
        else:
            classes.append([v])
    return classes


def _candidate(graph: StableGraph, new_of_old: list[int]):
    """Relabel along a vertex permutation with greedy slot assignment.

    Returns (edge tuple, hemap).  The edge tuple depends only on the
    underlying multigraph and the permutation, which makes min-over-
    permutations a true canonical form.
    """
    items = []
    for idx, ((v1, s1), (v2, s2)) in enumerate(graph.edges):
        a, b = new_of_old[v1], new_of_old[v2]
        if a > b:
            items.append(((b, a), idx, True))
        else:
            items.append(((a, b), idx, False))
    items.sort(key=lambda t: (t[0], t[1]))
    next_slot = [0] * graph.n_vertices
    new_edges = []
    hemap = {}
    for (a, b), idx, swapped in items:
        (h1, h2) = graph.edges[idx]
        if swapped:
            h1, h2 = h2, h1
        # h1 now sits over new vertex a, h2 over b (for loops a == b and the
        # normalized order of the dataclass already gives h1 < h2).
        sa = next_slot[a]
        next_slot[a] += 1
        sb = next_slot[b]
        next_slot[b] += 1
        hemap[h1] = (a, sa)
        hemap[h2] = (b, sb)
        new_edges.append(((a, sa), (b, sb)))
    return tuple(new_edges), hemap


_CANONICAL_CACHE: dict[StableGraph, tuple] = {}


def canonical_form_with_map(graph: StableGraph):
    """Canonical representative plus the relabeling used to reach it.

    Returns (canon, vmap, hemap) with vmap[old_vertex] = new_vertex and
    hemap mapping every old half-edge to its new name.  The canonical graph
    of two isomorphic inputs coincides as a value.
    """
    cached = _CANONICAL_CACHE.get(graph)
    if cached is not None:
        return cached
    classes = _color_classes(graph)
    best = None
    for perms in itertools.product(*[itertools.permutations(c) for c in classes]):
        new_of_old = [0] * graph.n_vertices
        pos = 0
        for perm in perms:
            for old_v in perm:
                new_of_old[old_v] = pos
                pos += 1
        cand_edges, hemap = _candidate(graph, new_of_old)
        if best is None or cand_edges < best[0]:
            best = (cand_edges, tuple(new_of_old), hemap)
    cand_edges, vmap, hemap = best
    genera = [0] * graph.n_vertices
    legs: list[tuple[int, ...]] = [()] * graph.n_vertices
    for old_v in range(graph.n_vertices):
        genera[vmap[old_v]] = graph.genera[old_v]
        legs[vmap[old_v]] = graph.legs[old_v]
    canon = StableGraph(tuple(genera), tuple(legs), cand_edges)
    result = (canon, vmap, hemap)
    _CANONICAL_CACHE[graph] = result
    if canon not in _CANONICAL_CACHE:
        ident = {h: h for h in canon.half_edges()}
        _CANONICAL_CACHE[canon] = (canon, tuple(range(canon.n_vertices)), ident)
    return result


def canonical_form(graph: StableGraph) -> StableGraph:
    return canonical_form_with_map(graph)[0]


# ---------------------------------------------------------------------------
# automorphisms


def _edge_bundles(graph: StableGraph):
    """Non-loop edge indices per unordered vertex pair, loops per vertex."""
    bundles: dict[tuple[int, int], list[int]] = {}
    loops: dict[int, list[int]] = {}
    for idx, ((v1, _), (v2, _)) in enumerate(graph.edges):
        if v1 == v2:
            loops.setdefault(v1, []).append(idx)
        else:
            bundles.setdefault((min(v1, v2), max(v1, v2)), []).append(idx)
    return bundles, loops


def _vertex_automorphism_maps(graph: StableGraph):
    """Vertex permutations preserving colors and the edge multiset."""
    bundles, loops = _edge_bundles(graph)
    classes = _color_classes(graph)
    out = []
    for perms in itertools.product(*[itertools.permutations(c) for c in classes]):
        vmap = [0] * graph.n_vertices
        for cls, perm in zip(classes, perms):
            for src, dst in zip(cls, perm):
                vmap[src] = dst
        ok = True
        for (u, v), idxs in bundles.items():
            tu, tv = vmap[u], vmap[v]
            key = (min(tu, tv), max(tu, tv))
            if len(bundles.get(key, ())) != len(idxs):
                ok = False
                break
        if ok:
            for v, idxs in loops.items():
                if len(loops.get(vmap[v], ())) != len(idxs):
                    ok = False
                    break
        if ok:
            out.append(tuple(vmap))
    return out


_AUTOMORPHISM_CACHE: dict[StableGraph, tuple] = {}


def automorphisms(graph: StableGraph) -> tuple:
    """All automorphisms as (vmap, hemap) pairs, legs fixed pointwise."""
    cached = _AUTOMORPHISM_CACHE.get(graph)
    if cached is not None:
        return cached
    bundles, loops = _edge_bundles(graph)
    result = []
    for vmap in _vertex_automorphism_maps(graph):
        # Per-bundle target choices, expanded to half-edge maps.
        bundle_options = []
        for (u, v), idxs in sorted(bundles.items()):
            tu, tv = vmap[u], vmap[v]
            key = (min(tu, tv), max(tu, tv))
            tidxs = bundles[key]
            options = []
            for assignment in itertools.permutations(tidxs, len(idxs)):
                mapping = []
                for src_idx, dst_idx in zip(idxs, assignment):
                    (a1, a2) = graph.edges[src_idx]
                    (b1, b2) = graph.edges[dst_idx]
                    # orient: the half at u goes to the half at vmap[u]
                    src_u = a1 if a1[0] == u else a2
                    src_v = a2 if a1[0] == u else a1
                    dst_u = b1 if b1[0] == tu else b2
                    dst_v = b2 if b1[0] == tu else b1
                    mapping.append((src_u, dst_u))
                    mapping.append((src_v, dst_v))
                options.append(mapping)
            bundle_options.append(options)
        for v, idxs in sorted(loops.items()):
            tv = vmap[v]
            tidxs = loops[tv]
            options = []
            for assignment in itertools.permutations(tidxs, len(idxs)):
                for flips in itertools.product((False, True), repeat=len(idxs)):
                    mapping = []
                    for (src_idx, dst_idx), flip in zip(zip(idxs, assignment), flips):
                        (a1, a2) = graph.edges[src_idx]
                        (b1, b2) = graph.edges[dst_idx]
                        if flip:
                            b1, b2 = b2, b1
                        mapping.append((a1, b1))
                        mapping.append((a2, b2))
                    options.append(mapping)
            bundle_options.append(options)
        for combo in itertools.product(*bundle_options):
            hemap = {}
            for mapping in combo:
                hemap.update(mapping)
            result.append((vmap, hemap))
    result = tuple(result)
    _AUTOMORPHISM_CACHE[graph] = result
    return result


def automorphism_count(graph: StableGraph) -> int:
    """|Aut| via the orbit formula: vertex symmetries times edge symmetries.

    For each admissible vertex permutation the half-edge extensions count
    m! per parallel bundle and l! * 2^l per loop bundle.
    """
    bundles, loops = _edge_bundles(graph)
    total = 0
    for vmap in _vertex_automorphism_maps(graph):
        count = 1
        for idxs in bundles.values():
            m = len(idxs)
            for i in range(2, m + 1):
                count *= i
        for idxs in loops.values():
            l = len(idxs)
            for i in range(2, l + 1):
                count *= i
            count *= 2 ** l
        total += count
    return total


# ---------------------------------------------------------------------------
# contraction


def contract_edges(graph: StableGraph, subset):
    """Contract the edges with indices in subset.

    Returns (contracted graph, vmap, hemap) where vmap sends old vertices to
    new ones and hemap renames the half-edges of the surviving edges.
    Contracting a loop adds one to the genus of its vertex; contracting a
    connected subgraph adds its first Betti number.
    """
    subset = frozenset(subset)
    V = graph.n_vertices
    parent = list(range(V))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for idx in subset:
        (v1, _), (v2, _) = graph.edges[idx]
        r1, r2 = find(v1), find(v2)
        if r1 != r2:
            parent[max(r1, r2)] = min(r1, r2)

    comp_members: dict[int, list[int]] = {}
    for v in range(V):
        comp_members.setdefault(find(v), []).append(v)
    roots = sorted(comp_members)
    vmap = [0] * V
    for new_v, root in enumerate(roots):
        for v in comp_members[root]:
            vmap[v] = new_v

    genera = []
    legs = []
    for root in roots:
        members = comp_members[root]
        inner = sum(
            1
            for idx in subset
            if find(graph.edges[idx][0][0]) == root
        )
        h1_local = inner - (len(members) - 1)
        genera.append(sum(graph.genera[v] for v in members) + h1_local)
        legs.append(tuple(sorted(m for v in members for m in graph.legs[v])))

    next_slot = [0] * len(roots)
    new_edges = []
    hemap = {}
    for idx, (h1, h2) in enumerate(graph.edges):
        if idx in subset:
            continue
        a = vmap[h1[0]]
        b = vmap[h2[0]]
        sa = next_slot[a]
        next_slot[a] += 1
        sb = next_slot[b]
        next_slot[b] += 1
        hemap[h1] = (a, sa)
        hemap[h2] = (b, sb)
        new_edges.append(((a, sa), (b, sb)))
    new_graph = StableGraph(tuple(genera), tuple(legs), tuple(new_edges))
    return new_graph, tuple(vmap), hemap


def separating_edges(graph: StableGraph) -> list[int]:
    """Indices of edges whose removal disconnects the graph."""
    out = []
    for idx, ((v1, _), (v2, _)) in enumerate(graph.edges):
        if v1 == v2:
            continue
        adj = [[] for _ in range(graph.n_vertices)]
        for j, ((a, _), (b, _)) in enumerate(graph.edges):
            if j == idx:
                continue
            adj[a].append(b)
            adj[b].append(a)
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != graph.n_vertices:
            out.append(idx)
    return out


def has_separating_edge(graph: StableGraph) -> bool:
    return bool(separating_edges(graph))


# ---------------------------------------------------------------------------
# enumeration


def _compositions(total: int, parts: int):
    """All tuples of `parts` nonnegative ints summing to total."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _connected(V: int, counts: dict[tuple[int, int], int]) -> bool:
    adj = [[] for _ in range(V)]
    for (i, j), c in counts.items():
        if c > 0 and i != j:
            adj[i].append(j)
            adj[j].append(i)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == V


def _multigraphs(V: int, E: int):
    """Connected multigraphs on V labeled vertices with E edges.

    Yields dicts (i, j) -> multiplicity with i <= j (loops allowed).
    """
    pairs = [(i, j) for i in range(V) for j in range(i, V)]

    def rec(idx, remaining, current):
        if remaining == 0:
            counts = {p: c for p, c in current.items() if c}
            if _connected(V, counts):
                yield counts
            return
        if idx == len(pairs):
            return
        for cnt in range(remaining + 1):
            if cnt:
                current[pairs[idx]] = cnt
            yield from rec(idx + 1, remaining - cnt, current)
            current.pop(pairs[idx], None)

    yield from rec(0, E, {})


def _build_graph(counts, genera, leg_assign, n):
    V = len(genera)
    legs = [[] for _ in range(V)]
    for mark in range(1, n + 1):
        legs[leg_assign[mark - 1]].append(mark)
    next_slot = [0] * V
    edges = []
    for (i, j) in sorted(counts):
        for _ in range(counts[(i, j)]):
            si = next_slot[i]
            next_slot[i] += 1
            sj = next_slot[j]
            next_slot[j] += 1
            edges.append(((i, si), (j, sj)))
    return StableGraph(tuple(genera), tuple(tuple(l) for l in legs),
                       tuple(edges))


_ENUM_CACHE: dict[tuple[int, int], tuple] = {}


def enumerate_stable_graphs(g: int, n: int) -> tuple[StableGraph, ...]:
    """All isomorphism classes of stable graphs of type (g, n).

    Deterministic order.  The maximal number of edges is 3g - 3 + n (the
    dimension bound) and the maximal number of vertices is 2g - 2 + n since
    every vertex contributes at least 1 to sum(2 g_v - 2 + val(v)).
    """
    key = (g, n)
    if key in _ENUM_CACHE:
        return _ENUM_CACHE[key]
    if g < 0 or n < 0 or 2 * g - 2 + n <= 0:
        raise DomainError(f"({g},{n}) is not a stable type")
    found: set[StableGraph] = set()
    max_v = 2 * g - 2 + n if g > 0 else n - 2
    for V in range(1, max_v + 1):
        max_e = min(3 * g - 3 + n, g + V - 1)
        for E in range(V - 1, max_e + 1):
            h1 = E - V + 1
            gsum = g - h1
            if gsum < 0:
                continue
            for counts in _multigraphs(V, E):
                degree = [0] * V
                for (i, j), c in counts.items():
                    degree[i] += c
                    degree[j] += c
                for genera in _compositions(gsum, V):
                    base_ok = all(
                        2 * genera[v] - 2 + degree[v] + n > 0
                        for v in range(V)
                    )
                    if not base_ok:
                        continue
                    for leg_assign in itertools.product(range(V), repeat=n):
                        nlegs = [0] * V
                        for target in leg_assign:
                            nlegs[target] += 1
                        if any(
                            2 * genera[v] - 2 + degree[v] + nlegs[v] <= 0
                            for v in range(V)
                        ):
                            continue
                        graph = _build_graph(counts, genera, leg_assign, n)
                        found.add(canonical_form(graph))
    result = tuple(sorted(found, key=lambda gr: gr.sort_key()))
    _ENUM_CACHE[key] = result
    return result


# ---------------------------------------------------------------------------
# common degenerations


@dataclass(frozen=True)
class ContractionPair:
    """A common degeneration of two stable graphs.

    `graph` contracts onto each factor; `vmap_a[v]` is the factor-A vertex a
    vertex of `graph` lands on, `he_to_a` maps each half-edge of A to the
    half-edge of `graph` sitting over it (likewise for B).  `shared_edges`
    lists the edge indices of `graph` lying over an edge of both factors;
    these carry the excess factor in products.
    """
    graph: StableGraph
    vmap_a: tuple[int, ...]
    he_to_a: tuple
    vmap_b: tuple[int, ...]
    he_to_b: tuple
    shared_edges: tuple[int, ...]


_CONTRACTION_TABLE_CACHE: dict[StableGraph, dict] = {}
_DEGENERATION_CACHE: dict[tuple[StableGraph, StableGraph], tuple] = {}


def _contraction_table(graph: StableGraph) -> dict:
    """canonical contraction -> list of (edge subset, vmap, he_corr).

    For every subset S of edges, contract S, canonicalize, and record the
    composed maps from `graph` onto the canonical contracted graph:
    vmap (graph vertex -> canon vertex) and for every KEPT half-edge its
    canonical name.
    """
    cached = _CONTRACTION_TABLE_CACHE.get(graph)
    if cached is not None:
        return cached
    table: dict[StableGraph, list] = {}
    E = graph.n_edges
    for bits in range(1 << E):
        subset = frozenset(i for i in range(E) if bits >> i & 1)
        contracted, vmap, hemap = contract_edges(graph, subset)
        canon, cvmap, chemap = canonical_form_with_map(contracted)
        total_v = tuple(cvmap[vmap[v]] for v in range(graph.n_vertices))
        total_he = {h: chemap[m] for h, m in hemap.items()}
        table.setdefault(canon, []).append((subset, total_v, total_he))
    _CONTRACTION_TABLE_CACHE[graph] = table
    return table


def degeneration_base_pairs(a: StableGraph, b: StableGraph) -> tuple:
    """Common degenerations of a and b, one record per contraction pair.

    Each record is (graph, vmap_a, he_to_a, vmap_b, he_to_b, shared_edges)
    where he_to_a maps every half-edge of canonical(a) to the half-edge of
    `graph` over it, and shared_edges are the edge indices of `graph` kept
    by both contractions.  Records do not include compositions with
    automorphisms of a and b; callers that need all pairs (f_a, f_b) expand
    each record by Aut(a) x Aut(b).
    """
    a = canonical_form(a)
    b = canonical_form(b)
    key = (a, b)
    cached = _DEGENERATION_CACHE.get(key)
    if cached is not None:
        return cached
    g, n = a.genus(), a.n_markings
    if (g, n) != (b.genus(), b.n_markings):
        raise DomainError("graphs live on different moduli spaces")
    max_edges = a.n_edges + b.n_edges
    results = []
    for graph in enumerate_stable_graphs(g, n):
        if graph.n_edges > max_edges or graph.n_edges < max(a.n_edges, b.n_edges):
            continue
        table = _contraction_table(graph)
        into_a = table.get(a, ())
        into_b = table.get(b, ())
        if not into_a or not into_b:
            continue
        for (sa, va, ha) in into_a:
            inv_a = {m: h for h, m in ha.items()}
            for (sb, vb, hb) in into_b:
                if sa & sb:
                    continue
                shared = tuple(
                    i for i in range(graph.n_edges) if i not in sa and i not in sb
                )
                inv_b = {m: h for h, m in hb.items()}
                results.append((graph, va, inv_a, vb, inv_b, shared))
    result = tuple(results)
    _DEGENERATION_CACHE[key] = result
    return result


def common_degenerations(a: StableGraph, b: StableGraph) -> tuple[ContractionPair, ...]:
    """Generic degenerations of a pair of stable graphs.

    Returns all triples (graph, f_a, f_b) where graph is a stable graph of
    the same type, f_a and f_b contract it onto (the canonical forms of) a
    and b, and every edge of graph survives in at least one factor.  The
    list enumerates actual contraction pairs, i.e. base records composed
    with all automorphisms of the factors; in the excess intersection
    product each entry is weighted by 1/|Aut(graph)|.
    """
    a = canonical_form(a)
    b = canonical_form(b)
    auts_a = automorphisms(a)
    auts_b = automorphisms(b)
    results = []
    for (graph, va, ia, vb, ib, shared) in degeneration_base_pairs(a, b):
        for aut_v_a, aut_he_a in auts_a:
            fa_v = tuple(aut_v_a[va[v]] for v in range(graph.n_vertices))
            inv_a = tuple(sorted((aut_he_a[m], h) for m, h in ia.items()))
            for aut_v_b, aut_he_b in auts_b:
                fb_v = tuple(aut_v_b[vb[v]] for v in range(graph.n_vertices))
                inv_b = tuple(sorted((aut_he_b[m], h) for m, h in ib.items()))
                results.append(
                    ContractionPair(graph, fa_v, inv_a, fb_v, inv_b, shared)
                )
    return tuple(results)
