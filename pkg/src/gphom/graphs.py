"""Finite directed multigraphs, their morphisms, and categorical constructions.

A graph is (nodes, arcs) with each arc carrying a source and target node.
Loops and parallel arcs are allowed.  Everything here is immutable and
exact; all searches are guarded by an explicit node budget so they fail
loudly instead of hanging.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .errors import BudgetExceeded, InvalidGraph, InvalidInput

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class Arc:
    id: str
    src: str
    tgt: str


@dataclass(frozen=True)
class Graph:
    nodes: tuple[str, ...]
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        node_set = set(self.nodes)
        if len(node_set) != len(self.nodes):
            raise InvalidGraph("duplicate node ids")
        arc_ids = [a.id for a in self.arcs]
        if len(set(arc_ids)) != len(arc_ids):
            raise InvalidGraph("duplicate arc ids")
        for a in self.arcs:
            if a.src not in node_set or a.tgt not in node_set:
                raise InvalidGraph(f"arc {a.id!r} has dangling endpoint")

    @cached_property
    def node_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.nodes)}

    @cached_property
    def arc_by_id(self) -> dict[str, Arc]:
        return {a.id: a for a in self.arcs}

    @cached_property
    def out_arcs(self) -> dict[str, tuple[Arc, ...]]:
        out: dict[str, list[Arc]] = {v: [] for v in self.nodes}
        for a in self.arcs:
            out[a.src].append(a)
        return {v: tuple(arcs) for v, arcs in out.items()}

    @cached_property
    def in_arcs(self) -> dict[str, tuple[Arc, ...]]:
        inc: dict[str, list[Arc]] = {v: [] for v in self.nodes}
        for a in self.arcs:
            inc[a.tgt].append(a)
        return {v: tuple(arcs) for v, arcs in inc.items()}

    def outdegree(self, v: str) -> int:
        return len(self.out_arcs[v])

    def indegree(self, v: str) -> int:
        return len(self.in_arcs[v])

    def __repr__(self):
        return f"Graph({len(self.nodes)} nodes, {len(self.arcs)} arcs)"


@dataclass(frozen=True, repr=False)
class GraphMorphism:
    source: Graph
    target: Graph
    node_map: dict[str, str] = field(hash=False)
    arc_map: dict[str, str] = field(hash=False)

    def __post_init__(self):
        if set(self.node_map) != set(self.source.nodes):
            raise InvalidGraph("node_map not total on source nodes")
        if set(self.arc_map) != set(self.source.arc_by_id):
            raise InvalidGraph("arc_map not total on source arcs")
        tgt_nodes = set(self.target.nodes)
        for v, w in self.node_map.items():
            if w not in tgt_nodes:
                raise InvalidGraph(f"node {v!r} mapped outside target")
        for a in self.source.arcs:
            img = self.target.arc_by_id.get(self.arc_map[a.id])
            if img is None:
                raise InvalidGraph(f"arc {a.id!r} mapped outside target")
            if img.src != self.node_map[a.src] or img.tgt != self.node_map[a.tgt]:
                raise InvalidGraph(f"arc {a.id!r} breaks the commuting squares")

    def __call__(self, node: str) -> str:
        return self.node_map[node]

    def apply_arc(self, arc_id: str) -> str:
        return self.arc_map[arc_id]

    def compose(self, other: "GraphMorphism") -> "GraphMorphism":
        """self after other: (self . other)(x) = self(other(x))."""
        if other.target is not self.source and other.target != self.source:
            raise InvalidGraph("composition mismatch")
        return GraphMorphism(
            other.source,
            self.target,
            {v: self.node_map[w] for v, w in other.node_map.items()},
            {a: self.arc_map[b] for a, b in other.arc_map.items()},
        )

    def is_node_bijective(self) -> bool:
        return (len(set(self.node_map.values())) == len(self.target.nodes)
                and len(self.node_map) == len(self.target.nodes))

    def is_arc_bijective(self) -> bool:
        return (len(set(self.arc_map.values())) == len(self.target.arcs)
                and len(self.arc_map) == len(self.target.arcs))

    def __repr__(self):
        return f"GraphMorphism({self.source!r} -> {self.target!r})"


def identity(X: Graph) -> GraphMorphism:
    return GraphMorphism(X, X, {v: v for v in X.nodes},
                         {a.id: a.id for a in X.arcs})


# ---------------------------------------------------------------------------
# Constructors

EMPTY = Graph((), ())


def cycle_graph(n: int) -> Graph:
    """The directed n-cycle: nodes 0..n-1, arc i runs from i+1 (mod n) to i."""
    if n < 1:
        raise InvalidInput("cycle graph needs n >= 1")
    nodes = tuple(str(i) for i in range(n))
    arcs = tuple(Arc(str(i), str((i + 1) % n), str(i)) for i in range(n))
    return Graph(nodes, arcs)


def path_graph(n: int) -> Graph:
    """The directed path with n arcs: nodes 0..n, arc k runs k -> k+1."""
    if n < 0:
        raise InvalidInput("path graph needs n >= 0")
    nodes = tuple(str(i) for i in range(n + 1))
    arcs = tuple(Arc(str(k), str(k), str(k + 1)) for k in range(n))
    return Graph(nodes, arcs)


def dot_graph() -> Graph:
    """One node, no arcs."""
    return path_graph(0)


def arrow_graph() -> Graph:
    """Two nodes, one arc 0 -> 1."""
    return path_graph(1)


def figure_eight() -> Graph:
    """One node with two loops."""
    return Graph(("0",), (Arc("a", "0", "0"), Arc("b", "0", "0")))


def cross_graph() -> Graph:
    """Hub node 0 with spokes to and from nodes 1..4."""
    nodes = tuple(str(i) for i in range(5))
    arcs = []
    for i in range(1, 5):
        arcs.append(Arc(f"out{i}", "0", str(i)))
        arcs.append(Arc(f"in{i}", str(i), "0"))
    return Graph(nodes, tuple(arcs))


def undirected_cycle(n: int) -> Graph:
    """The doubled n-cycle: arcs i->i+1 and i->i-1 for each i mod n."""
    if n < 1:
        raise InvalidInput("undirected cycle needs n >= 1")
    nodes = tuple(str(i) for i in range(n))
    arcs = []
    for i in range(n):
        arcs.append(Arc(f"f{i}", str(i), str((i + 1) % n)))
        arcs.append(Arc(f"b{i}", str(i), str((i - 1) % n)))
    return Graph(nodes, tuple(arcs))


# ---------------------------------------------------------------------------
# Categorical constructions (elementwise, as in any presheaf category)

def _pair(x: str, y: str) -> str:
    return f"({x},{y})"


def product(X: Graph, Y: Graph) -> Graph:
    nodes = tuple(_pair(u, v) for u in X.nodes for v in Y.nodes)
    arcs = tuple(
        Arc(_pair(a.id, b.id), _pair(a.src, b.src), _pair(a.tgt, b.tgt))
        for a in X.arcs for b in Y.arcs)
    return Graph(nodes, arcs)


def coproduct_with_injections(X: Graph, Y: Graph):
    """Disjoint union with relabeled ids; returns (graph, inl, inr)."""
    nodes = tuple(f"0:{v}" for v in X.nodes) + tuple(f"1:{v}" for v in Y.nodes)
    arcs = tuple(Arc(f"0:{a.id}", f"0:{a.src}", f"0:{a.tgt}") for a in X.arcs) \
        + tuple(Arc(f"1:{a.id}", f"1:{a.src}", f"1:{a.tgt}") for a in Y.arcs)
    G = Graph(nodes, arcs)
    inl = GraphMorphism(X, G, {v: f"0:{v}" for v in X.nodes},
                        {a.id: f"0:{a.id}" for a in X.arcs})
    inr = GraphMorphism(Y, G, {v: f"1:{v}" for v in Y.nodes},
                        {a.id: f"1:{a.id}" for a in Y.arcs})
    return G, inl, inr


def coproduct(X: Graph, Y: Graph) -> Graph:
    return coproduct_with_injections(X, Y)[0]


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # keep the smaller id as representative, for determinism
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx

    def classes(self) -> dict:
        return {x: self.find(x) for x in self.parent}


def pushout(f: GraphMorphism, g: GraphMorphism):
    """Pushout of a span f: R -> T1, g: R -> T2 sharing source R.

    Returns (graph, from_left, from_right) where the cocone morphisms
    satisfy from_left . f == from_right . g.
    """
    if f.source != g.source:
        raise InvalidGraph("pushout legs must share their source")
    T1, T2 = f.target, g.target
    G, inl, inr = coproduct_with_injections(T1, T2)

    uf_nodes = _UnionFind(G.nodes)
    uf_arcs = _UnionFind([a.id for a in G.arcs])
    for v in f.source.nodes:
        uf_nodes.union(inl.node_map[f.node_map[v]], inr.node_map[g.node_map[v]])
    for a in f.source.arcs:
        uf_arcs.union(inl.arc_map[f.arc_map[a.id]], inr.arc_map[g.arc_map[a.id]])

    node_rep = uf_nodes.classes()
    arc_rep = uf_arcs.classes()
    q_nodes = tuple(sorted(set(node_rep.values())))
    q_arcs = []
    seen = set()
    for a in G.arcs:
        rep = arc_rep[a.id]
        if rep in seen:
            continue
        seen.add(rep)
        q_arcs.append(Arc(rep, node_rep[a.src], node_rep[a.tgt]))
    Q = Graph(q_nodes, tuple(sorted(q_arcs, key=lambda a: a.id)))

    def cocone(inj: GraphMorphism) -> GraphMorphism:
        return GraphMorphism(
            inj.source, Q,
            {v: node_rep[inj.node_map[v]] for v in inj.source.nodes},
            {a: arc_rep[inj.arc_map[a]] for a in inj.arc_map})

    return Q, cocone(inl), cocone(inr)


def connected_components(X: Graph) -> list[tuple[str, ...]]:
    """Partition of nodes under the equivalence generated by src~tgt."""
    uf = _UnionFind(X.nodes)
    for a in X.arcs:
        uf.union(a.src, a.tgt)
    groups: dict[str, list[str]] = {}
    for v in X.nodes:
        groups.setdefault(uf.find(v), []).append(v)
    return sorted(tuple(sorted(g)) for g in groups.values())


def component_count(X: Graph) -> int:
    return len(connected_components(X))


# ---------------------------------------------------------------------------
# Exhaustive searches

class Budget:
    """Counts search steps; raises when the allowance runs out."""

    def __init__(self, limit: int = DEFAULT_BUDGET):
        self.limit = limit
        self.used = 0

    def spend(self, n: int = 1):
        self.used += n
        if self.used > self.limit:
            raise BudgetExceeded(f"search budget of {self.limit} exceeded")


def enumerate_morphisms(X: Graph, Y: Graph,
                        budget: Budget | None = None) -> list[GraphMorphism]:
    """All graph morphisms X -> Y, in a deterministic order.

    Backtracks over arc assignments (arcs pin down node images via their
    endpoints, which is what matters for multigraphs); nodes touched by no
    arc are assigned freely at the end.
    """
    budget = budget or Budget()
    src_arcs = X.arcs
    results: list[GraphMorphism] = []

    touched = set()
    for a in src_arcs:
        touched.add(a.src)
        touched.add(a.tgt)
    free_nodes = [v for v in X.nodes if v not in touched]

    def finish(node_map: dict[str, str], arc_map: dict[str, str]):
        if free_nodes:
            for images in itertools.product(Y.nodes, repeat=len(free_nodes)):
                budget.spend()
                nm = dict(node_map)
                nm.update(zip(free_nodes, images))
                results.append(GraphMorphism(X, Y, nm, dict(arc_map)))
        else:
            results.append(GraphMorphism(X, Y, dict(node_map), dict(arc_map)))

    def extend(i: int, node_map: dict[str, str], arc_map: dict[str, str]):
        if i == len(src_arcs):
            finish(node_map, arc_map)
            return
        a = src_arcs[i]
        for b in Y.arcs:
            budget.spend()
            if a.src in node_map and node_map[a.src] != b.src:
                continue
            if a.tgt in node_map and node_map[a.tgt] != b.tgt:
                continue
            added = []
            consistent = True
            for v, w in ((a.src, b.src), (a.tgt, b.tgt)):
                if v not in node_map:
                    node_map[v] = w
                    added.append(v)
                elif node_map[v] != w:   # loop arc vs non-loop image
                    consistent = False
                    break
            if consistent:
                arc_map[a.id] = b.id
                extend(i + 1, node_map, arc_map)
                del arc_map[a.id]
            for v in added:
                del node_map[v]

    if not X.nodes:
        return [GraphMorphism(X, Y, {}, {})]
    extend(0, {}, {})
    return results


def is_isomorphic(X: Graph, Y: Graph,
                  budget: Budget | None = None) -> tuple[bool, GraphMorphism | None]:
    """Decide isomorphism by permutation search; returns a witness when true."""
    budget = budget or Budget()
    if len(X.nodes) != len(Y.nodes) or len(X.arcs) != len(Y.arcs):
        return False, None

    def degree_profile(G: Graph):
        return sorted((G.indegree(v), G.outdegree(v)) for v in G.nodes)

    if degree_profile(X) != degree_profile(Y):
        return False, None

    def arc_count(G: Graph):
        cnt: dict[tuple[str, str], int] = {}
        for a in G.arcs:
            cnt[(a.src, a.tgt)] = cnt.get((a.src, a.tgt), 0) + 1
        return cnt

    cx, cy = arc_count(X), arc_count(Y)
    xn = list(X.nodes)

    def search(i: int, node_map: dict[str, str], used: set[str]):
        if i == len(xn):
            return dict(node_map)
        v = xn[i]
        for w in Y.nodes:
            budget.spend()
            if w in used:
                continue
            if (X.indegree(v), X.outdegree(v)) != (Y.indegree(w), Y.outdegree(w)):
                continue
            ok = True
            for u, wu in node_map.items():
                if cx.get((v, u), 0) != cy.get((w, wu), 0) or \
                   cx.get((u, v), 0) != cy.get((wu, w), 0):
                    ok = False
                    break
            if not ok or cx.get((v, v), 0) != cy.get((w, w), 0):
                continue
            node_map[v] = w
            used.add(w)
            found = search(i + 1, node_map, used)
            if found is not None:
                return found
            del node_map[v]
            used.remove(w)
        return None

    node_map = search(0, {}, set())
    if node_map is None:
        return False, None

    # pair up parallel arcs deterministically per ordered node pair
    by_pair_y: dict[tuple[str, str], list[str]] = {}
    for a in sorted(Y.arcs, key=lambda a: a.id):
        by_pair_y.setdefault((a.src, a.tgt), []).append(a.id)
    arc_map = {}
    counters: dict[tuple[str, str], int] = {}
    for a in sorted(X.arcs, key=lambda a: a.id):
        key = (node_map[a.src], node_map[a.tgt])
        k = counters.get(key, 0)
        counters[key] = k + 1
        arc_map[a.id] = by_pair_y[key][k]
    return True, GraphMorphism(X, Y, node_map, arc_map)


# ---------------------------------------------------------------------------
# Canonical JSON format

def graph_to_json(X: Graph) -> dict:
    return {
        "nodes": sorted(X.nodes),
        "arcs": [{"id": a.id, "src": a.src, "tgt": a.tgt}
                 for a in sorted(X.arcs, key=lambda a: a.id)],
    }


def graph_from_json(data) -> Graph:
    if not isinstance(data, dict) or set(data) != {"nodes", "arcs"}:
        raise InvalidInput("graph JSON must have exactly 'nodes' and 'arcs'")
    nodes = data["nodes"]
    if not isinstance(nodes, list) or not all(isinstance(v, str) for v in nodes):
        raise InvalidInput("'nodes' must be a list of strings")
    arcs = []
    if not isinstance(data["arcs"], list):
        raise InvalidInput("'arcs' must be a list")
    for i, rec in enumerate(data["arcs"]):
        if not isinstance(rec, dict) or set(rec) != {"id", "src", "tgt"}:
            raise InvalidInput(f"arc #{i} must have exactly 'id', 'src', 'tgt'")
        if not all(isinstance(rec[k], str) for k in ("id", "src", "tgt")):
            raise InvalidInput(f"arc #{i} fields must be strings")
        arcs.append(Arc(rec["id"], rec["src"], rec["tgt"]))
    try:
        return Graph(tuple(nodes), tuple(arcs))
    except InvalidGraph as e:
        raise InvalidInput(str(e)) from e


def morphism_to_json(f: GraphMorphism) -> dict:
    return {
        "source": graph_to_json(f.source),
        "target": graph_to_json(f.target),
        "node_map": dict(sorted(f.node_map.items())),
        "arc_map": dict(sorted(f.arc_map.items())),
    }


def morphism_from_json(data) -> GraphMorphism:
    required = {"source", "target", "node_map", "arc_map"}
    if not isinstance(data, dict) or set(data) != required:
        raise InvalidInput("morphism JSON must have exactly "
                           "'source', 'target', 'node_map', 'arc_map'")
    src = graph_from_json(data["source"])
    tgt = graph_from_json(data["target"])
    for key in ("node_map", "arc_map"):
        m = data[key]
        if not isinstance(m, dict) or \
           not all(isinstance(k, str) and isinstance(v, str) for k, v in m.items()):
            raise InvalidInput(f"'{key}' must map strings to strings")
    try:
        return GraphMorphism(src, tgt, dict(data["node_map"]), dict(data["arc_map"]))
    except InvalidGraph as e:
        raise InvalidInput(str(e)) from e
