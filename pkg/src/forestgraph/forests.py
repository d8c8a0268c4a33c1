"""Maximal spanning forests: exact counting, enumeration, extension.

A maximal forest takes one spanning tree per connected component, so the
count is the product of per-component spanning-tree counts.  Counting always
happens before enumerating; enumeration refuses to start when the exact count
exceeds the caller's budget.
"""

from __future__ import annotations

import itertools

from .graphs import BudgetError, EdgeSubset, GraphInputError, components

FOREST_BUDGET = 10**6
BRUTE_FORCE_EDGE_LIMIT = 20


class MaximalForest:
    """A maximal spanning forest of a host graph, validated on construction."""

    __slots__ = ("host", "edges")

    def __init__(self, host, edges):
        if isinstance(edges, EdgeSubset):
            if edges.host is not host and edges.host != host:
                raise GraphInputError("edge subset belongs to a different graph")
            subset = EdgeSubset(host, edges.bits)
        else:
            subset = EdgeSubset.from_ids(host, edges)
        want = host.vertex_count - len(components(host))
        if len(subset) != want:
            raise GraphInputError(
                f"not a maximal forest: {len(subset)} edges, expected {want}")
        if _has_cycle(host, subset.bits):
            raise GraphInputError("not a forest: edge set contains a cycle")
        self.host = host
        self.edges = subset

    @property
    def bits(self):
        return self.edges.bits

    def edge_ids(self):
        return self.edges.ids()

    def pairs(self):
        return self.edges.pairs()

    def __eq__(self, other):
        return (isinstance(other, MaximalForest) and self.bits == other.bits
                and (self.host is other.host or self.host == other.host))

    def __hash__(self):
        return hash(self.bits)

    def __repr__(self):
        return f"MaximalForest({list(self.edge_ids())})"


class ForestFamily:
    """All maximal forests of a graph in lexicographic edge-index order."""

    __slots__ = ("graph", "members", "_index")

    def __init__(self, graph, members):
        self.graph = graph
        self.members = tuple(members)
        self._index = {f.bits: i for i, f in enumerate(self.members)}

    def index_of(self, forest) -> int:
        try:
            return self._index[forest.bits]
        except KeyError:
            raise GraphInputError("forest is not a member of this family") from None

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]


def _has_cycle(g, bits):
    parent = list(range(g.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    b = bits
    while b:
        lsb = b & -b
        b ^= lsb
        u, v = g.edges[lsb.bit_length() - 1]
        ru, rv = find(u), find(v)
        if ru == rv:
            return True
        parent[ru] = rv
    return False


def _det_bareiss(mat):
    """Exact determinant of an integer matrix by fraction-free elimination."""
    a = [row[:] for row in mat]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def _tree_count(g, comp):
    """Spanning trees of one connected component via a Laplacian cofactor."""
    if len(comp) == 1:
        return 1
    pos = {v: i for i, v in enumerate(comp[1:])}
    k = len(comp) - 1
    mat = [[0] * k for _ in range(k)]
    for u, v in g.edges:
        iu = pos.get(u)
        iv = pos.get(v)
        if iu is None and iv is None:
            continue
        if iu is not None:
            mat[iu][iu] += 1
        if iv is not None:
            mat[iv][iv] += 1
        if iu is not None and iv is not None:
            mat[iu][iv] -= 1
            mat[iv][iu] -= 1
    return _det_bareiss(mat)


def count_maximal_forests(g) -> int:
    """Exact number of maximal forests, by the matrix-tree theorem per component."""
    total = 1
    for comp in components(g):
        total *= _tree_count(g, comp)
    return total


def _spanning_trees_of_component(g, comp):
    """Edge-id tuples of all spanning trees of one component.

    Include/exclude branching over the component's edges in index order, with
    an exclude branch taken only while the undecided edges can still span
    (which silently forces bridges in).
    """
    comp_set = set(comp)
    edge_ids = [i for i, (u, v) in enumerate(g.edges) if u in comp_set]
    need = len(comp) - 1
    if need == 0:
        return [()]
    out = []

    def spannable(chosen, start):
        parent = {v: v for v in comp}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        blocks = len(comp)
        for i in itertools.chain(chosen, edge_ids[start:]):
            u, v = g.edges[i]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                blocks -= 1
                if blocks == 1:
                    return True
        return blocks == 1

    def rec(idx, parent, chosen):
        if len(chosen) == need:
            out.append(tuple(chosen))
            return
        if idx == len(edge_ids):
            return
        eid = edge_ids[idx]
        u, v = g.edges[eid]

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        ru, rv = find(u), find(v)
        if ru != rv:
            child = dict(parent)
            child[ru] = rv
            chosen.append(eid)
            rec(idx + 1, child, chosen)
            chosen.pop()
        if spannable(chosen, idx + 1):
            rec(idx + 1, parent, chosen)

    rec(0, {v: v for v in comp}, [])
    return out


def maximal_forests(g, budget=FOREST_BUDGET) -> ForestFamily:
    """Enumerate every maximal forest; refuses (with the exact count) over budget."""
    count = count_maximal_forests(g)
    if count > budget:
        raise BudgetError(
            f"graph has {count} maximal forests, over the budget of {budget}",
            count=count, budget=budget)
    per_component = [_spanning_trees_of_component(g, comp)
                     for comp in components(g)]
    combos = []
    for pick in itertools.product(*per_component):
        ids = tuple(sorted(itertools.chain.from_iterable(pick)))
        combos.append(ids)
    combos.sort()
    family = ForestFamily(g, (MaximalForest(g, ids) for ids in combos))
    if len(family) != count:
        raise AssertionError(
            f"enumerated {len(family)} forests but the determinant says {count}")
    return family


def extend_to_maximal(g, partial) -> MaximalForest:
    """Grow an acyclic edge set to a maximal forest greedily in index order."""
    if isinstance(partial, EdgeSubset):
        bits = partial.bits
        if partial.host is not g and partial.host != g:
            raise GraphInputError("edge subset belongs to a different graph")
    else:
        bits = EdgeSubset.from_ids(g, partial).bits
    if _has_cycle(g, bits):
        raise GraphInputError("partial edge set already contains a cycle")
    parent = list(range(g.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    b = bits
    while b:
        lsb = b & -b
        b ^= lsb
        u, v = g.edges[lsb.bit_length() - 1]
        parent[find(u)] = find(v)
    for i, (u, v) in enumerate(g.edges):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            bits |= 1 << i
    return MaximalForest(g, EdgeSubset(g, bits))


def brute_force_maximal_forests(g) -> list:
    """Definitional oracle: test all 2^m edge subsets.  Small graphs only."""
    m = len(g.edges)
    if m > BRUTE_FORCE_EDGE_LIMIT:
        raise BudgetError(
            f"brute force limited to {BRUTE_FORCE_EDGE_LIMIT} edges (got {m})",
            count=m, budget=BRUTE_FORCE_EDGE_LIMIT)
    want = g.vertex_count - len(components(g))
    found = []
    for bits in range(1 << m):
        if bits.bit_count() == want and not _has_cycle(g, bits):
            found.append(bits)
    found.sort(key=lambda b: tuple(i for i in range(m) if b >> i & 1))
    return [MaximalForest(g, EdgeSubset(g, b)) for b in found]
