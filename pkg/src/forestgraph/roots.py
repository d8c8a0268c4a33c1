"""Inverse problems: which graphs arise as forest graphs, and how deep.

A forest graph of a finite graph is always connected, has no isthmus or
isolated vertex unless it is a single vertex, and contains a triangle unless
it is a single vertex.  Those necessary conditions give proof-grade "no root"
certificates; everything else is bounded search over small candidate graphs.
Whitney moves (identification, splitting, twisting) change a graph without
changing its maximal forests as edge sets, so roots are never unique when a
move applies.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .forest_graph import build_forest_graph
from .forests import FOREST_BUDGET, count_maximal_forests, maximal_forests
from .graphs import (BudgetError, Graph, GraphInputError, bridges, complete_graph,
                     components, find_isomorphism, is_bipartite, is_isomorphic)

GRAPH_ENUM_VERTEX_LIMIT = 7
DEFAULT_ROOT_VERTEX_BUDGET = 6
DEFAULT_DEPTH_LIMIT = 8

REASON_BIPARTITE = "bipartite"
REASON_ISTHMUS_OR_ISOLATED = "isthmus-or-isolated"
REASON_DISCONNECTED = "disconnected"
REASON_ORDER_MISMATCH = "order-mismatch"
REASON_EXHAUSTED = "exhausted-budget"

PROOF_REASONS = (REASON_BIPARTITE, REASON_ISTHMUS_OR_ISOLATED,
                 REASON_DISCONNECTED, REASON_ORDER_MISMATCH)


@dataclass(frozen=True)
class NoRootCertificate:
    """Why no graph H can have F(H) isomorphic to g (or why the search gave up).

    Every reason except "exhausted-budget" is proof-grade.  The witness holds
    the structure backing the reason: a 2-coloring, an isthmus edge or
    isolated vertex, or the component partition.
    """

    reason: str
    witness: object = None
    note: str = ""

    @property
    def proof_grade(self):
        return self.reason in PROOF_REASONS


@dataclass(frozen=True)
class RootSearchResult:
    """Roots found up to isomorphism, or a certificate explaining the empty list."""

    roots: tuple
    certificate: object = None
    searched_note: str = ""

    def found(self):
        return bool(self.roots)


def no_root_prune(g):
    """Proof-grade no-root certificate from cheap necessary conditions, or None.

    A single vertex is never pruned (it is its own forest graph).  Order of
    checks: bipartite, isthmus or isolated vertex, disconnected, impossible
    order.
    """
    n = g.vertex_count
    if n == 1 and not g.edges:
        return None
    if n >= 2:
        report = is_bipartite(g)
        if report.bipartite:
            return NoRootCertificate(
                REASON_BIPARTITE, witness=report.coloring,
                note="forest graphs of graphs with a cycle contain a triangle")
        for v in range(n):
            if g.degree(v) == 0:
                return NoRootCertificate(
                    REASON_ISTHMUS_OR_ISOLATED, witness=("vertex", v),
                    note="a forest graph larger than one vertex has no isolated vertex")
        isthmi = bridges(g)
        if isthmi:
            return NoRootCertificate(
                REASON_ISTHMUS_OR_ISOLATED, witness=("edge", isthmi.ids()[0]),
                note="a forest graph larger than one vertex has no isthmus")
        comps = components(g)
        if len(comps) > 1:
            return NoRootCertificate(
                REASON_DISCONNECTED, witness=tuple(tuple(c) for c in comps),
                note="forest graphs of finite graphs are connected")
    if n in (0, 2):
        return NoRootCertificate(
            REASON_ORDER_MISMATCH,
            note=f"no finite graph has exactly {n} maximal forests")
    return None


def enumerate_graphs(n) -> list:
    """All non-isomorphic simple graphs on exactly n vertices, deterministic order.

    Deduplicates the 2^C(n,2) labeled edge sets by marking whole S_n orbits;
    the representative of each class is its orbit-minimal bitmask, and output
    follows increasing representative masks.
    """
    if n < 0:
        raise GraphInputError("vertex count must be non-negative")
    if n > GRAPH_ENUM_VERTEX_LIMIT:
        raise BudgetError(
            f"graph enumeration limited to {GRAPH_ENUM_VERTEX_LIMIT} vertices (got {n})",
            count=n, budget=GRAPH_ENUM_VERTEX_LIMIT)
    pairs = list(itertools.combinations(range(n), 2))
    m = len(pairs)
    pair_pos = {p: i for i, p in enumerate(pairs)}
    tables = []
    for perm in itertools.permutations(range(n)):
        tables.append(tuple(pair_pos[tuple(sorted((perm[a], perm[b])))] for a, b in pairs))
    seen = bytearray(1 << m)
    out = []
    for mask in range(1 << m):
        if seen[mask]:
            continue
        out.append(Graph(n, (pairs[i] for i in range(m) if mask >> i & 1)))
        for table in tables:
            image = 0
            rest = mask
            while rest:
                lsb = rest & -rest
                rest ^= lsb
                image |= 1 << table[lsb.bit_length() - 1]
            seen[image] = 1
    return out


def find_roots(g, max_vertices=DEFAULT_ROOT_VERTEX_BUDGET, max_edges=None,
               budget=FOREST_BUDGET) -> RootSearchResult:
    """Search for all H (up to isomorphism) with F(H) isomorphic to g.

    Candidates are connected isthmus-free graphs on at most max_vertices
    vertices, filtered by cheap bounds, then by exact forest count, then by a
    full forest-graph construction plus isomorphism test.  An empty result
    carries either a proof-grade certificate or an exhausted-budget one.
    """
    cert = no_root_prune(g)
    if cert is not None:
        return RootSearchResult((), cert)
    target = g.vertex_count
    roots = []
    for n in range(1, max_vertices + 1):
        for h in enumerate_graphs(n):
            if max_edges is not None and len(h.edges) > max_edges:
                continue
            if len(components(h)) > 1:
                continue
            if n >= 2 and bridges(h):
                continue
            if count_maximal_forests(h) != target:
                continue
            if is_isomorphic(build_forest_graph(h, budget).graph, g):
                roots.append(h)
    note = (f"searched connected isthmus-free candidates on <= {max_vertices} vertices"
            + (f" with <= {max_edges} edges" if max_edges is not None else ""))
    if roots:
        return RootSearchResult(tuple(roots), None, note)
    return RootSearchResult((), NoRootCertificate(REASON_EXHAUSTED, note=note), note)


@dataclass(frozen=True)
class RootChainCertificate:
    """A verified chain H_k -> ... -> H_1 -> g with F(H_i) isomorphic to the next.

    `graphs` runs from the deepest root to g itself; iso_maps[i] maps the
    vertices of F(graphs[i]) (forest-family indices) onto graphs[i + 1].
    """

    graphs: tuple
    iso_maps: tuple

    @property
    def depth(self):
        return len(self.graphs) - 1

    def verify(self, budget=FOREST_BUDGET) -> bool:
        for i in range(len(self.graphs) - 1):
            fg = build_forest_graph(self.graphs[i], budget).graph
            nxt = self.graphs[i + 1]
            mapping = self.iso_maps[i]
            if fg.vertex_count != nxt.vertex_count or len(fg.edges) != len(nxt.edges):
                return False
            if sorted(tuple(sorted((mapping[u], mapping[v]))) for u, v in fg.edges) \
                    != sorted(nxt.edges):
                return False
        return True


@dataclass(frozen=True)
class DepthReport:
    """Result of chasing roots of roots.

    kind is "stable" (g is K_1 or K_3: roots never run out), "pruned" (depth
    exactly 0, with the proof certificate), or "chain" (depth at least
    `depth`, with the chain certificate and the certificate that stopped it;
    the stop is provable when its reason is proof-grade).
    """

    kind: str
    depth: int = None
    chain: object = None
    stop: object = None

    @property
    def provable_stop(self):
        return self.stop is not None and self.stop.proof_grade


def depth_lower_bound(g, max_vertices=DEFAULT_ROOT_VERTEX_BUDGET, max_edges=None,
                      max_depth=DEFAULT_DEPTH_LIMIT, budget=FOREST_BUDGET) -> DepthReport:
    """Longest root chain below g found within the budgets."""
    if is_isomorphic(g, complete_graph(1)) or is_isomorphic(g, complete_graph(3)):
        return DepthReport("stable")
    cert = no_root_prune(g)
    if cert is not None:
        return DepthReport("pruned", depth=0, stop=cert)

    def chase(graph, depth_left):
        result = find_roots(graph, max_vertices, max_edges, budget)
        if not result.found():
            return [], result.certificate
        if depth_left == 0:
            return [], NoRootCertificate(
                REASON_EXHAUSTED, note=f"depth limit {max_depth} reached")
        best_chain = []
        best_stop = None
        for h in result.roots:
            if is_isomorphic(h, graph):
                continue  # stable graphs are handled above; avoid self-loops
            chain, stop = chase(h, depth_left - 1)
            if len(chain) + 1 > len(best_chain):
                best_chain = chain + [h]
                best_stop = stop
        if not best_chain:
            h = result.roots[0]
            return [h], NoRootCertificate(
                REASON_EXHAUSTED, note="all further roots loop back")
        return best_chain, best_stop

    chain, stop = chase(g, max_depth)
    if not chain:
        return DepthReport("chain", depth=0, chain=None, stop=stop)
    graphs = list(chain) + [g]
    iso_maps = []
    for i in range(len(graphs) - 1):
        fg = build_forest_graph(graphs[i], budget).graph
        mapping = find_isomorphism(fg, graphs[i + 1])
        if mapping is None:
            raise AssertionError("root chain fails re-verification")
        iso_maps.append(mapping)
    return DepthReport("chain", depth=len(chain),
                       chain=RootChainCertificate(tuple(graphs), tuple(iso_maps)),
                       stop=stop)


@dataclass(frozen=True)
class WhitneyResult:
    """A rewritten graph plus the vertex and edge correspondences.

    vertex_map[v] is the image of old vertex v (None when the vertex was
    merged away is never needed: identification maps both ends to the kept
    index).  edge_map[i] is the new index of old edge i; the map is a
    bijection, and mapping a maximal forest edgewise yields a maximal forest
    of the new graph.
    """

    graph: Graph
    vertex_map: tuple
    edge_map: tuple


def _finish(g, new_n, vmap, names=None):
    edges = {}
    for i, (u, v) in enumerate(g.edges):
        a, b = vmap[u], vmap[v]
        if a == b:
            raise GraphInputError("operation would create a loop")
        key = (a, b) if a < b else (b, a)
        if key in edges:
            raise GraphInputError("operation would create a parallel edge")
        edges[key] = i
    new_graph = Graph(new_n, edges.keys(), names)
    edge_map = [0] * len(g.edges)
    for key, old in edges.items():
        edge_map[old] = new_graph.edge_index(*key)
    return WhitneyResult(new_graph, tuple(vmap), tuple(edge_map))


def whitney_identify(g, pairs) -> WhitneyResult:
    """Merge vertex pairs lying in distinct components, one pair at a time.

    Each merged cluster keeps its smallest vertex; survivors are renumbered
    densely in their original order.
    """
    if not pairs:
        raise GraphInputError("need at least one pair to identify")
    comp = list(range(g.vertex_count))
    cluster = list(range(g.vertex_count))

    def find(parent, x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        comp[find(comp, u)] = find(comp, v)
    for a, b in pairs:
        if not (0 <= a < g.vertex_count and 0 <= b < g.vertex_count):
            raise GraphInputError(f"vertex pair ({a}, {b}) out of range")
        ra, rb = find(comp, a), find(comp, b)
        if ra == rb:
            raise GraphInputError(
                f"vertices {a} and {b} are in the same component; identification "
                "applies across components only")
        comp[ra] = rb
        cluster[find(cluster, a)] = find(cluster, b)
    rep = {}
    for v in range(g.vertex_count):
        r = find(cluster, v)
        if r not in rep or v < rep[r]:
            rep[r] = v
    survivors = sorted(set(rep.values()))
    new_index = {v: i for i, v in enumerate(survivors)}
    vmap = [new_index[rep[find(cluster, v)]] for v in range(g.vertex_count)]
    return _finish(g, len(survivors), vmap)


def whitney_split(g, v, side) -> WhitneyResult:
    """Split cut vertex v: a new vertex takes over v's edges into `side`.

    `side` must be a union of components of g - v that covers at least one
    neighbor of v but not all of them; the inverse of identification.  The
    new vertex gets index g.vertex_count.
    """
    if not 0 <= v < g.vertex_count:
        raise GraphInputError(f"vertex {v} out of range")
    side = set(side)
    if v in side:
        raise GraphInputError("side must not contain the split vertex itself")
    rest_graph = Graph(g.vertex_count,
                       [e for e in g.edges if v not in e])
    comps = [set(c) for c in components(rest_graph) if c != [v]]
    for c in comps:
        if side & c and not c <= side:
            raise GraphInputError("side must be a union of components of g - v")
    nb = set(g.neighbors(v))
    if not side & nb or nb <= side:
        raise GraphInputError(
            "side must separate the neighbors of v; v is not split by this choice")
    vmap = list(range(g.vertex_count))
    new_v = g.vertex_count
    edges = {}
    for i, (a, b) in enumerate(g.edges):
        if a == v and b in side:
            a = new_v
        elif b == v and a in side:
            b = new_v
        key = (a, b) if a < b else (b, a)
        edges[key] = i
    new_graph = Graph(g.vertex_count + 1, edges.keys())
    edge_map = [0] * len(g.edges)
    for key, old in edges.items():
        edge_map[old] = new_graph.edge_index(*key)
    return WhitneyResult(new_graph, tuple(vmap), tuple(edge_map))


def whitney_twist(g, u, v, side) -> WhitneyResult:
    """Swap the roles of u and v on one side of the separation pair {u, v}.

    `side` is the vertex set of one separation half besides u and v; both
    halves must have more than two vertices including u and v, and no edge may
    cross between the halves except through u and v.
    """
    if u == v:
        raise GraphInputError("separation pair needs two distinct vertices")
    for x in (u, v):
        if not 0 <= x < g.vertex_count:
            raise GraphInputError(f"vertex {x} out of range")
    side = set(side) - {u, v}
    rest = set(range(g.vertex_count)) - side - {u, v}
    if not side or not rest:
        raise GraphInputError("both sides of the separation must have more than two vertices")
    for a, b in g.edges:
        if (a in side and b in rest) or (a in rest and b in side):
            raise GraphInputError(
                f"edge ({a}, {b}) crosses the separation; {{u, v}} is not a separation pair")
    edges = {}
    for i, (a, b) in enumerate(g.edges):
        if a in side or b in side:
            if a == u:
                a = v
            elif a == v:
                a = u
            if b == u:
                b = v
            elif b == v:
                b = u
        key = (a, b) if a < b else (b, a)
        if key in edges:
            raise GraphInputError("twist would create a parallel edge")
        edges[key] = i
    new_graph = Graph(g.vertex_count, edges.keys(), g.vertex_names)
    edge_map = [0] * len(g.edges)
    for key, old in edges.items():
        edge_map[old] = new_graph.edge_index(*key)
    return WhitneyResult(new_graph, tuple(range(g.vertex_count)), tuple(edge_map))
