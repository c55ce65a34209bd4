"""Morphism classifiers, generating sets, lifting, factorization, and the
cycle resolution.

The three morphism classes: Surjecting (fibrations), Whiskering (acyclic
cofibrations, i.e. tree attachments), and Acyclic (weak equivalences,
semi-decided up to a bound on cycle length).  The cycle resolution of a
finite graph is a disjoint union of cycles, one per necklace of closed
walks, and comes with explicit counit morphisms back to the graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInconsistency, InvalidGraph, InvalidInput
from .graphs import (Arc, Budget, Graph, GraphMorphism, arrow_graph,
                     coproduct_with_injections, cycle_graph, dot_graph,
                     enumerate_morphisms, identity, pushout, EMPTY)
from .witt import from_graph


def morphism_key(f: GraphMorphism) -> tuple:
    """Hashable identity of a morphism with fixed source and target."""
    return (tuple(f.node_map[v] for v in f.source.nodes),
            tuple(f.arc_map[a.id] for a in f.source.arcs))


# ---------------------------------------------------------------------------
# Classifiers

def is_surjecting(f: GraphMorphism) -> bool:
    """Out-arc sets surject: every arc leaving f(x) is hit from x."""
    for x in f.source.nodes:
        hit = {f.arc_map[a.id] for a in f.source.out_arcs[x]}
        for b in f.target.out_arcs[f.node_map[x]]:
            if b.id not in hit:
                return False
    return True


def is_whiskering(f: GraphMorphism) -> bool:
    """Target is the source with out-directed rooted trees attached."""
    nm, am = f.node_map, f.arc_map
    if len(set(nm.values())) != len(nm) or len(set(am.values())) != len(am):
        return False
    node_image = set(nm.values())
    arc_image = set(am.values())
    Y = f.target
    for b in Y.arcs:
        if b.tgt in node_image and b.id not in arc_image:
            return False
    outside = [v for v in Y.nodes if v not in node_image]
    for v in outside:
        if Y.indegree(v) != 1:
            return False
    # backward walk along unique incoming arcs must reach the image
    for v in outside:
        cur = v
        for _ in range(len(Y.nodes)):
            cur = Y.in_arcs[cur][0].src
            if cur in node_image:
                break
        else:
            return False
        if cur not in node_image:
            # walked back through outside nodes only; re-check termination
            return False
    return True


def is_acyclic_bounded(f: GraphMorphism, N: int,
                       budget: Budget | None = None) -> bool:
    """Bijective on cycle-morphism sets C_n(-) for all n <= N.

    A semi-decision: True means acyclic up to the bound only.
    """
    if N < 1:
        raise InvalidInput("acyclicity bound must be >= 1")
    budget = budget or Budget()
    for n in range(1, N + 1):
        Cn = cycle_graph(n)
        src = enumerate_morphisms(Cn, f.source, budget)
        tgt = enumerate_morphisms(Cn, f.target, budget)
        images = {morphism_key(f.compose(m)) for m in src}
        if len(images) != len(src) or images != {morphism_key(m) for m in tgt}:
            return False
    return True


def is_fibrant(X: Graph) -> bool:
    """No dead-ends: every node has at least one arc leaving."""
    return all(X.outdegree(v) >= 1 for v in X.nodes)


def is_cofibrant(X: Graph) -> bool:
    """Disjoint union of whiskered cycles.

    For a finite graph this is exactly: every node has indegree 1 (the
    backward walk along unique incoming arcs must eventually cycle).
    """
    return all(X.indegree(v) == 1 for v in X.nodes)


# ---------------------------------------------------------------------------
# Generating sets

def source_inclusion() -> GraphMorphism:
    """s: D -> A, the dot as the source of the arrow."""
    return GraphMorphism(dot_graph(), arrow_graph(), {"0": "0"}, {})


def initial_to_cycle(n: int) -> GraphMorphism:
    """i_n: 0 -> C_n."""
    return GraphMorphism(EMPTY, cycle_graph(n), {}, {})


def cycle_fold(n: int) -> GraphMorphism:
    """j_n: C_n + C_n -> C_n, the codiagonal."""
    Cn = cycle_graph(n)
    G, inl, inr = coproduct_with_injections(Cn, Cn)
    nm = {}
    am = {}
    for v in Cn.nodes:
        nm[inl.node_map[v]] = v
        nm[inr.node_map[v]] = v
    for a in Cn.arcs:
        am[inl.arc_map[a.id]] = a.id
        am[inr.arc_map[a.id]] = a.id
    return GraphMorphism(G, Cn, nm, am)


def cycle_projection(n: int, k: int) -> GraphMorphism:
    """pi_{n,k}: C_{nk} -> C_n, reduction of node and arc labels mod n."""
    Cnk, Cn = cycle_graph(n * k), cycle_graph(n)
    nm = {str(i): str(i % n) for i in range(n * k)}
    return GraphMorphism(Cnk, Cn, nm, dict(nm))


def cycle_projection_via_pushout(n: int, k: int):
    """Exhibit pi_{n,k} as a pushout of the fold j_{nk}.

    Uses the shift-by-n self-map of C_{nk} + C_{nk} on the first summand and
    the identity on the second; returns (pushout graph, cocone from C_{nk}).
    """
    nk = n * k
    Cnk = cycle_graph(nk)
    G, inl, inr = coproduct_with_injections(Cnk, Cnk)
    nm = {}
    am = {}
    for i in range(nk):
        shifted = str((i + n) % nk)
        nm[inl.node_map[str(i)]] = shifted
        am[inl.arc_map[str(i)]] = shifted
        nm[inr.node_map[str(i)]] = str(i)
        am[inr.arc_map[str(i)]] = str(i)
    f = GraphMorphism(G, Cnk, nm, am)
    Q, from_f, from_fold = pushout(f, cycle_fold(nk))
    return Q, from_f


@dataclass(frozen=True)
class GeneratorSet:
    """J = {s}, K = {i_n, j_n : 1 <= n <= bound}, I = J + K."""

    bound: int

    @property
    def J(self) -> list[GraphMorphism]:
        return [source_inclusion()]

    @property
    def K(self) -> list[GraphMorphism]:
        out = []
        for n in range(1, self.bound + 1):
            out.append(initial_to_cycle(n))
            out.append(cycle_fold(n))
        return out

    @property
    def I(self) -> list[GraphMorphism]:
        return self.J + self.K


# ---------------------------------------------------------------------------
# Lifting

@dataclass(frozen=True, repr=False)
class LiftingProblem:
    """A commuting square: left l: X->Y, right r: A->B, top f: X->A,
    bottom g: Y->B, with r.f == g.l."""

    left: GraphMorphism
    right: GraphMorphism
    top: GraphMorphism
    bottom: GraphMorphism

    def __post_init__(self):
        l, r, f, g = self.left, self.right, self.top, self.bottom
        if f.source != l.source or f.target != r.source \
           or g.source != l.target or g.target != r.target:
            raise InvalidGraph("lifting square endpoints do not match")
        if morphism_key(r.compose(f)) != morphism_key(g.compose(l)):
            raise InvalidGraph("lifting square does not commute")

    def __repr__(self):
        return f"LiftingProblem({self.left!r} vs {self.right!r})"


def find_lift(p: LiftingProblem,
              budget: Budget | None = None) -> GraphMorphism | None:
    """A diagonal h: Y -> A with h.l == f and r.h == g, or None.

    Assignments forced by the left leg are filled in first; remaining arcs
    and nodes of Y are backtracked over, each constrained through r and g.
    """
    budget = budget or Budget()
    l, r, f, g = p.left, p.right, p.top, p.bottom
    Y, A = l.target, r.source

    node_map: dict[str, str] = {}
    arc_map: dict[str, str] = {}
    for x in l.source.nodes:
        y, a = l.node_map[x], f.node_map[x]
        if node_map.get(y, a) != a:
            return None
        node_map[y] = a
    for e in l.source.arcs:
        y, a = l.arc_map[e.id], f.arc_map[e.id]
        if arc_map.get(y, a) != a:
            return None
        arc_map[y] = a
    # forced assignments must already satisfy r.h == g
    for y, a in node_map.items():
        if r.node_map[a] != g.node_map[y]:
            return None
    for y, a in arc_map.items():
        if r.arc_map[a] != g.arc_map[y]:
            return None
        img = A.arc_by_id[a]
        for v, w in ((Y.arc_by_id[y].src, img.src), (Y.arc_by_id[y].tgt, img.tgt)):
            if node_map.get(v, w) != w:
                return None
            node_map[v] = w

    free_arcs = [b for b in Y.arcs if b.id not in arc_map]
    touched = {b.src for b in Y.arcs} | {b.tgt for b in Y.arcs} | set(node_map)
    free_nodes = [v for v in Y.nodes if v not in touched]

    def assign_free_nodes(nm: dict[str, str]):
        def rec(i: int):
            if i == len(free_nodes):
                return GraphMorphism(Y, A, dict(nm), dict(arc_map))
            v = free_nodes[i]
            for w in A.nodes:
                budget.spend()
                if r.node_map[w] != g.node_map[v]:
                    continue
                nm[v] = w
                h = rec(i + 1)
                if h is not None:
                    return h
                del nm[v]
            return None
        return rec(0)

    def extend(i: int):
        if i == len(free_arcs):
            return assign_free_nodes(node_map)
        b = free_arcs[i]
        for c in A.arcs:
            budget.spend()
            if r.arc_map[c.id] != g.arc_map[b.id]:
                continue
            if node_map.get(b.src, c.src) != c.src:
                continue
            if node_map.get(b.tgt, c.tgt) != c.tgt:
                continue
            added = []
            for v, w in ((b.src, c.src), (b.tgt, c.tgt)):
                if v in node_map:
                    if node_map[v] != w:
                        break
                elif r.node_map[w] != g.node_map[v]:
                    break
                else:
                    node_map[v] = w
                    added.append(v)
            else:
                arc_map[b.id] = c.id
                h = extend(i + 1)
                if h is not None:
                    return h
                del arc_map[b.id]
            for v in added:
                del node_map[v]
        return None

    return extend(0)


# ---------------------------------------------------------------------------
# Bounded small-object factorization

def factorize_bounded(f: GraphMorphism, depth: int):
    """Factor f = p . w with w a Whiskering, by attaching one whisker arc
    per lifting defect per round, breadth-first.

    Returns (w, p, complete); complete is True iff p came out Surjecting
    within `depth` rounds.
    """
    X, Y = f.source, f.target
    W = X
    w_nodes = {v: v for v in X.nodes}
    w_arcs = {a.id: a.id for a in X.arcs}
    p_nodes = dict(f.node_map)
    p_arcs = dict(f.arc_map)
    fresh = 0

    for _ in range(depth):
        defects = []
        for x in W.nodes:
            hit = {p_arcs[a.id] for a in W.out_arcs[x]}
            for b in Y.out_arcs[p_nodes[x]]:
                if b.id not in hit:
                    defects.append((x, b))
        if not defects:
            break
        new_nodes = list(W.nodes)
        new_arcs = list(W.arcs)
        for x, b in defects:
            node_id = f"w{fresh}"
            arc_id = f"wa{fresh}"
            fresh += 1
            new_nodes.append(node_id)
            new_arcs.append(Arc(arc_id, x, node_id))
            p_nodes[node_id] = b.tgt
            p_arcs[arc_id] = b.id
        W = Graph(tuple(new_nodes), tuple(new_arcs))

    w = GraphMorphism(X, W, w_nodes, w_arcs)
    p = GraphMorphism(W, Y, p_nodes, p_arcs)
    return w, p, is_surjecting(p)


# ---------------------------------------------------------------------------
# Cycle resolution (cofibrant replacement, truncated)

def closed_walks(X: Graph, n: int, budget: Budget | None = None) -> list[tuple[str, ...]]:
    """Arc sequences (a_0..a_{n-1}) with src(a_i) = tgt(a_{i+1 mod n}).

    These are exactly the morphisms C_n -> X, with arc i of the cycle sent
    to a_i.
    """
    if n < 1:
        raise InvalidInput("walk length must be >= 1")
    budget = budget or Budget()
    out: list[tuple[str, ...]] = []
    seq: list[Arc] = []

    def extend():
        if len(seq) == n:
            if seq[-1].src == seq[0].tgt:
                out.append(tuple(a.id for a in seq))
            return
        for a in X.arcs:
            budget.spend()
            if seq and seq[-1].src != a.tgt:
                continue
            seq.append(a)
            extend()
            seq.pop()

    extend()
    return out


def _rotations(walk: tuple[str, ...]):
    n = len(walk)
    return [walk[r:] + walk[:r] for r in range(n)]


def aperiodic_necklaces(X: Graph, n: int,
                        budget: Budget | None = None) -> list[tuple[str, ...]]:
    """One representative (lexicographically least rotation) per rotation
    class of aperiodic closed walks of length n."""
    reps = []
    seen = set()
    for walk in closed_walks(X, n, budget):
        if walk in seen:
            continue
        rots = _rotations(walk)
        if len(set(rots)) != n:    # periodic walk, belongs to a shorter orbit
            seen.update(rots)
            continue
        reps.append(min(rots))
        seen.update(rots)
    return sorted(reps)


def walk_to_morphism(X: Graph, walk: tuple[str, ...],
                     cycle: Graph | None = None) -> GraphMorphism:
    """The morphism C_n -> X with arc i sent to walk[i]."""
    n = len(walk)
    Cn = cycle if cycle is not None else cycle_graph(n)
    am = {str(i): walk[i] for i in range(n)}
    nm = {str(i): X.arc_by_id[walk[i]].tgt for i in range(n)}
    return GraphMorphism(Cn, X, nm, am)


@dataclass(frozen=True, repr=False)
class CycleResolution:
    graph: Graph
    counit: GraphMorphism                  # combined morphism onto X
    pieces: tuple[GraphMorphism, ...]      # one C_n -> X per necklace
    witt_summary: dict[int, int]

    def __repr__(self):
        return f"CycleResolution({self.graph!r})"


def cofibrant_replacement(X: Graph, N: int,
                          budget: Budget | None = None) -> CycleResolution:
    """Disjoint union of s_n copies of C_n for n <= N, with counit into X.

    Each copy is carried by a distinct aperiodic-walk representative; the
    per-n counts are cross-checked against the Witt coordinates of X.
    """
    if N < 1:
        raise InvalidInput("resolution bound must be >= 1")
    budget = budget or Budget()
    afz = from_graph(X)
    nodes: list[str] = []
    arcs: list[Arc] = []
    node_map: dict[str, str] = {}
    arc_map: dict[str, str] = {}
    pieces: list[GraphMorphism] = []
    summary: dict[int, int] = {}

    for n in range(1, N + 1):
        reps = aperiodic_necklaces(X, n, budget)
        if len(reps) != afz.witt(n):
            raise InternalInconsistency(
                f"necklace count {len(reps)} != witt coordinate {afz.witt(n)} at n={n}")
        summary[n] = len(reps)
        for k, walk in enumerate(reps):
            prefix = f"n{n}c{k}:"
            for i in range(n):
                nodes.append(f"{prefix}{i}")
                arcs.append(Arc(f"{prefix}{i}", f"{prefix}{(i + 1) % n}", f"{prefix}{i}"))
                arc_map[f"{prefix}{i}"] = walk[i]
                node_map[f"{prefix}{i}"] = X.arc_by_id[walk[i]].tgt
            pieces.append(walk_to_morphism(X, walk))

    C = Graph(tuple(nodes), tuple(arcs))
    counit = GraphMorphism(C, X, node_map, arc_map)
    return CycleResolution(C, counit, tuple(pieces), summary)
