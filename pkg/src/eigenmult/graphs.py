"""Immutable simple graphs and the structural invariants the checkers need.

A Graph is a vertex count plus sorted neighbor tuples; vertices are
0 .. n-1.  All operations are pure functions returning new graphs, so
values can be shared freely.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple


class GraphError(ValueError):
    """Raised for malformed graph constructions or out-of-range vertices."""


class Graph:
    """Finite simple undirected graph, immutable after construction."""

    __slots__ = ("n", "adj", "labels")

    def __init__(
        self,
        n: int,
        adj: Sequence[Sequence[int]],
        labels: Optional[Dict[int, str]] = None,
    ):
        self.n = n
        self.adj: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(sorted(set(row))) for row in adj
        )
        self.labels: Dict[int, str] = dict(labels) if labels else {}

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> List[int]:
        return [len(row) for row in self.adj]

    def edge_count(self) -> int:
        return sum(len(row) for row in self.adj) // 2

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for graph on {self.n} vertices")

    def relabel(self, labels: Dict[int, str]) -> "Graph":
        return Graph(self.n, self.adj, labels)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()!r})"


@dataclass(frozen=True)
class PendantPath:
    """A maximal path hanging off the graph at a leaf.

    vertices runs from the leaf inward; anchor is the adjacent vertex of
    degree >= 3, absent when the whole component is a bare path.
    """

    vertices: Tuple[int, ...]
    anchor: Optional[int]
    bare_component: bool = False

    @property
    def order(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: Tuple[FrozenSet[int], ...]
    block_edges: Tuple[int, ...]
    cut_vertices: FrozenSet[int]
    block_kind: Tuple[str, ...] = field(default=())  # 'edge' | 'cycle' | 'other'


def from_edge_list(
    n: int, edges: Iterable[Tuple[int, int]], labels: Optional[Dict[int, str]] = None
) -> Graph:
    """Build a graph from explicit edges; duplicates collapse, loops reject."""
    if n < 0:
        raise GraphError("vertex count must be >= 0")
    adj: List[set] = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop ({u},{v}) not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) has an endpoint out of range 0..{n-1}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj, labels)


def induced_delete(g: Graph, remove: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """Induced subgraph on the complement of `remove`, plus the old->new map."""
    rem = set(remove)
    for v in rem:
        g.check_vertex(v)
    keep = [v for v in range(g.n) if v not in rem]
    mapping = {v: i for i, v in enumerate(keep)}
    adj = [[mapping[u] for u in g.adj[v] if u not in rem] for v in keep]
    labels = {mapping[v]: lab for v, lab in g.labels.items() if v in mapping}
    return Graph(len(keep), adj, labels), mapping


def join_bridge(
    g: Graph, u: int, h: Graph, v: int
) -> Tuple[Graph, Dict[int, int], Dict[int, int]]:
    """Disjoint union of g and h plus one bridge edge between u and v."""
    g.check_vertex(u)
    h.check_vertex(v)
    map_g = {w: w for w in range(g.n)}
    map_h = {w: w + g.n for w in range(h.n)}
    adj = [list(row) for row in g.adj] + [
        [w + g.n for w in row] for row in h.adj
    ]
    adj[u].append(map_h[v])
    adj[map_h[v]].append(u)
    labels = dict(g.labels)
    labels.update({map_h[w]: lab for w, lab in h.labels.items()})
    return Graph(g.n + h.n, adj, labels), map_g, map_h


def connected_components(g: Graph) -> List[List[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and is_connected(g) and g.edge_count() == g.n - 1


def is_path_graph(g: Graph) -> bool:
    """Whether g is a bare path (includes the one- and two-vertex paths)."""
    if g.n == 0 or not is_tree(g):
        return False
    return all(g.degree(v) <= 2 for v in range(g.n))


def is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and all(g.degree(v) == 2 for v in range(g.n))


def cyclomatic_number(g: Graph) -> int:
    """|E| - |V| + number of components; the number of independent cycles."""
    return g.edge_count() - g.n + len(connected_components(g))


def pendant_vertices(g: Graph) -> FrozenSet[int]:
    return frozenset(v for v in range(g.n) if g.degree(v) == 1)


def high_degree_vertices(g: Graph) -> FrozenSet[int]:
    return frozenset(v for v in range(g.n) if g.degree(v) >= 3)


def distance(g: Graph, u: int, v: int) -> Optional[int]:
    """BFS shortest-path length; None when u and v are in different components."""
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        return 0
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                if y == v:
                    return dist[y]
                queue.append(y)
    return None


def pendant_paths(g: Graph) -> List[PendantPath]:
    """One pendant path per leaf, plus bare path components reported once."""
    out: List[PendantPath] = []
    in_bare: set = set()
    for comp in connected_components(g):
        comp_edges = sum(len(g.adj[v]) for v in comp) // 2
        if comp_edges == len(comp) - 1 and all(g.degree(v) <= 2 for v in comp):
            # Bare path component (single vertices included).
            if len(comp) == 1:
                out.append(PendantPath((comp[0],), None, True))
                in_bare.update(comp)
                continue
            ends = sorted(v for v in comp if g.degree(v) == 1)
            order = [ends[0]]
            prev = None
            cur = ends[0]
            while True:
                nxts = [w for w in g.adj[cur] if w != prev]
                if not nxts:
                    break
                prev, cur = cur, nxts[0]
                order.append(cur)
            out.append(PendantPath(tuple(order), None, True))
            in_bare.update(comp)
    for leaf in sorted(pendant_vertices(g)):
        if leaf in in_bare:
            continue
        verts = [leaf]
        prev = None
        cur = leaf
        while True:
            nxts = [w for w in g.adj[cur] if w != prev]
            nxt = nxts[0]
            if g.degree(nxt) >= 3:
                out.append(PendantPath(tuple(verts), nxt, False))
                break
            prev, cur = cur, nxt
            verts.append(cur)
    return out


def is_in_Gs(g: Graph, s: int) -> bool:
    """Whether every pendant path has order >= s.

    Bare path components must have order >= 2s+1, so that each of their
    leaves has a well-defined vertex at distance s.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    for pp in pendant_paths(g):
        if pp.bare_component:
            if pp.order < 2 * s + 1:
                return False
        elif pp.order < s:
            return False
    return True


def q_s_set(g: Graph, s: int) -> FrozenSet[int]:
    """Vertices at distance exactly s from at least one pendant vertex."""
    if not is_in_Gs(g, s):
        for pp in pendant_paths(g):
            bad = pp.order < (2 * s + 1 if pp.bare_component else s)
            if bad:
                raise GraphError(
                    f"graph not in G_{s}: pendant path {list(pp.vertices)} "
                    f"has order {pp.order}"
                )
    found = set()
    for leaf in pendant_vertices(g):
        dist = {leaf: 0}
        queue = deque([leaf])
        while queue:
            x = queue.popleft()
            if dist[x] == s:
                found.add(x)
                continue
            for y in g.adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
    return frozenset(found)


def _q_s_by_walking(g: Graph, s: int) -> FrozenSet[int]:
    """Independent Q_s implementation: walk s steps along each pendant path."""
    found = set()
    for pp in pendant_paths(g):
        ends: List[Tuple[int, ...]] = []
        if pp.bare_component:
            ends.append(pp.vertices)
            ends.append(tuple(reversed(pp.vertices)))
        else:
            ends.append(pp.vertices + ((pp.anchor,) if pp.anchor is not None else ()))
        for walk in ends:
            if len(walk) > s:
                found.add(walk[s])
    return frozenset(found)


def q_s_count(g: Graph, s: int) -> int:
    return len(q_s_set(g, s))


def plinth(g: Graph) -> Graph:
    """Maximal leaf-free induced subgraph: iterated deletion of degree <= 1.

    Forests shrink to the empty graph.
    """
    keep = plinth_vertices(g)
    sub, _ = induced_delete(g, [v for v in range(g.n) if v not in keep])
    return sub


def plinth_vertices(g: Graph) -> FrozenSet[int]:
    deg = {v: g.degree(v) for v in range(g.n)}
    queue = deque(v for v in range(g.n) if deg[v] <= 1)
    dead = set()
    while queue:
        v = queue.popleft()
        if v in dead:
            continue
        dead.add(v)
        for u in g.adj[v]:
            if u not in dead:
                deg[u] -= 1
                if deg[u] <= 1:
                    queue.append(u)
    return frozenset(v for v in range(g.n) if v not in dead)


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Biconnected components plus cut vertices (iterative Hopcroft-Tarjan)."""
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    is_cut = [False] * g.n
    edge_stack: List[Tuple[int, int]] = []
    blocks: List[List[Tuple[int, int]]] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        root_children = 0
        stack = [(root, iter(g.adj[root]))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    parent[w] = v
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, iter(g.adj[w])))
                    advanced = True
                    break
                elif w != parent[v] and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    if u != root or root_children >= 1:
                        block = []
                        while edge_stack and edge_stack[-1] != (u, v):
                            block.append(edge_stack.pop())
                        if edge_stack:
                            block.append(edge_stack.pop())
                        if block:
                            blocks.append(block)
                    if u != root:
                        is_cut[u] = True
        if root_children >= 2:
            is_cut[root] = True
    vert_sets = []
    edge_counts = []
    kinds = []
    for block in blocks:
        vs = frozenset(v for e in block for v in e)
        vert_sets.append(vs)
        edge_counts.append(len(block))
        if len(block) == 1:
            kinds.append("edge")
        elif len(block) == len(vs):
            kinds.append("cycle")
        else:
            kinds.append("other")
    return BlockDecomposition(
        tuple(vert_sets),
        tuple(edge_counts),
        frozenset(v for v in range(g.n) if is_cut[v]),
        tuple(kinds),
    )


def cycles_pairwise_disjoint(g: Graph) -> bool:
    """True iff every block is an edge or a chordless cycle and no two
    cycle blocks share a vertex."""
    dec = block_decomposition(g)
    if any(kind == "other" for kind in dec.block_kind):
        return False
    seen: set = set()
    for vs, kind in zip(dec.blocks, dec.block_kind):
        if kind != "cycle":
            continue
        if vs & seen:
            return False
        seen |= vs
    return True


def pendant_cycles(g: Graph) -> List[Tuple[FrozenSet[int], int]]:
    """Cycle blocks with exactly one cut vertex and no other branching."""
    dec = block_decomposition(g)
    out = []
    for vs, kind in zip(dec.blocks, dec.block_kind):
        if kind != "cycle":
            continue
        cuts = [v for v in vs if v in dec.cut_vertices]
        if len(cuts) != 1:
            continue
        w = cuts[0]
        if all(g.degree(v) == 2 for v in vs if v != w):
            out.append((vs, w))
    out.sort(key=lambda t: t[1])
    return out


def _cycle_edge_set(g: Graph) -> set:
    dec = block_decomposition(g)
    on_cycle = set()
    for vs, kind in zip(dec.blocks, dec.block_kind):
        if kind != "edge":
            for u in vs:
                for v in g.adj[u]:
                    if v in vs:
                        on_cycle.add((min(u, v), max(u, v)))
    return on_cycle


def internal_paths(g: Graph) -> List[List[int]]:
    """Maximal degree-2 chains (possibly empty) joining two branch vertices.

    Only chains avoiding every cycle count; each is returned as the list of
    its internal vertices.
    """
    on_cycle = _cycle_edge_set(g)
    high = high_degree_vertices(g)
    seen = set()
    out = []
    for a in sorted(high):
        for b in g.adj[a]:
            if (min(a, b), max(a, b)) in on_cycle:
                continue
            chain: List[int] = []
            prev, cur = a, b
            while g.degree(cur) == 2:
                chain.append(cur)
                nxts = [w for w in g.adj[cur] if w != prev]
                prev, cur = cur, nxts[0]
            if g.degree(cur) < 3:
                continue  # pendant path, not internal
            key = (min(a, cur), max(a, cur), tuple(sorted(chain)))
            if key in seen:
                continue
            seen.add(key)
            if a > cur:
                chain.reverse()
            out.append(chain)
    return out


def internal_path_endpoints(g: Graph) -> List[Tuple[int, int, List[int]]]:
    """Like internal_paths but keeping the two branch-vertex endpoints."""
    on_cycle = _cycle_edge_set(g)
    high = high_degree_vertices(g)
    seen = set()
    out = []
    for a in sorted(high):
        for b in g.adj[a]:
            if (min(a, b), max(a, b)) in on_cycle:
                continue
            chain: List[int] = []
            prev, cur = a, b
            while g.degree(cur) == 2:
                chain.append(cur)
                nxts = [w for w in g.adj[cur] if w != prev]
                prev, cur = cur, nxts[0]
            if g.degree(cur) < 3:
                continue
            key = (min(a, cur), max(a, cur), tuple(sorted(chain)))
            if key in seen:
                continue
            seen.add(key)
            lo, hi = (a, cur) if a <= cur else (cur, a)
            if a > cur:
                chain.reverse()
            out.append((lo, hi, chain))
    return out


# ---------------------------------------------------------------------------
# Canonical codes
# ---------------------------------------------------------------------------

DEFAULT_CANONICAL_LIMIT = 10


def _refine_colors(g: Graph) -> List[int]:
    """Stable neighbor-multiset color refinement, canonically ordered."""
    colors = g.degrees()
    order = {c: i for i, c in enumerate(sorted(set(colors)))}
    colors = [order[c] for c in colors]
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in g.adj[v])))
            for v in range(g.n)
        ]
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def canonical_code(g: Graph, limit: int = DEFAULT_CANONICAL_LIMIT) -> bytes:
    """Canonical form: minimal upper-triangle bit string over relabelings.

    The minimum is taken over all vertex orders that list the refinement
    cells in canonical order; equal codes hold exactly for isomorphic
    graphs.  Intended for small graphs (permutation search with pruning);
    the limit guards against misuse.
    """
    n = g.n
    if n > limit:
        raise GraphError(f"canonical_code limited to {limit} vertices, got {n}")
    if n == 0:
        return b"\x00"
    colors = _refine_colors(g)
    cells: Dict[int, List[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    cell_list = [cells[c] for c in sorted(cells)]
    cell_of_pos: List[int] = []
    for ci, cell in enumerate(cell_list):
        cell_of_pos.extend([ci] * len(cell))
    masks = [0] * n
    for v in range(n):
        for u in g.adj[v]:
            masks[v] |= 1 << u
    remaining = [list(cell) for cell in cell_list]
    placed: List[int] = []
    bits: List[int] = []
    best: Optional[List[int]] = None

    def rec(pos: int) -> None:
        nonlocal best
        # best shrinks during the search, so tightness is recomputed here
        # rather than carried down (a carried flag can go stale).
        tight = False
        if best is not None:
            pref = best[: len(bits)]
            if bits > pref:
                return
            tight = bits == pref
        if pos == n:
            if best is None or bits < best:
                best = bits.copy()
            return
        cands = remaining[cell_of_pos[pos]]
        offset = len(bits)
        entries = []
        kept: List[Tuple[int, int]] = []
        for v in cands:
            vm = masks[v]
            dup = False
            for wm, w in kept:
                if (vm ^ wm) & ~((1 << v) | (1 << w)) == 0:
                    dup = True  # interchangeable twins
                    break
            if dup:
                continue
            kept.append((vm, v))
            seg = tuple((vm >> p) & 1 for p in placed)
            entries.append((seg, v))
        entries.sort()
        for seg, v in entries:
            if best is not None and tight:
                ref = tuple(best[offset : offset + pos])
                if seg > ref:
                    break
            cands.remove(v)
            placed.append(v)
            bits.extend(seg)
            rec(pos + 1)
            del bits[offset:]
            placed.pop()
            cands.append(v)
            cands.sort()
        return

    rec(0)
    assert best is not None
    out = bytearray([n])
    acc = 0
    for i, b in enumerate(best):
        acc = (acc << 1) | b
        if i % 8 == 7:
            out.append(acc)
            acc = 0
    if len(best) % 8:
        out.append(acc << (8 - len(best) % 8))
    return bytes(out)


def tree_canonical_code(g: Graph) -> bytes:
    """Canonical form for trees of any size (rooted encoding at the center)."""
    if not is_tree(g):
        raise GraphError("tree_canonical_code requires a tree")
    if g.n == 1:
        return b"()"
    # find the one or two central vertices by iterated leaf stripping
    deg = {v: g.degree(v) for v in range(g.n)}
    layer = [v for v in range(g.n) if deg[v] <= 1]
    removed = set()
    remaining = g.n
    while remaining > 2:
        nxt = []
        for v in layer:
            removed.add(v)
            remaining -= 1
            for u in g.adj[v]:
                if u not in removed:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    centers = [v for v in range(g.n) if v not in removed]

    def encode(v: int, parent: Optional[int]) -> bytes:
        subs = sorted(encode(u, v) for u in g.adj[v] if u != parent)
        return b"(" + b"".join(subs) + b")"

    if len(centers) == 1:
        return encode(centers[0], None)
    a, b = centers
    return b"".join(sorted([encode(a, b), encode(b, a)]))


def iso_key(g: Graph) -> Tuple:
    """Hashable key equal exactly for isomorphic graphs (small or tree inputs)."""
    if is_tree(g):
        return ("tree", tree_canonical_code(g))
    return ("code", g.n, canonical_code(g, limit=max(DEFAULT_CANONICAL_LIMIT, g.n)))


def are_isomorphic(a: Graph, b: Graph, limit: int = 64) -> bool:
    """Exact isomorphism test via canonical codes (small graphs only)."""
    if a.n != b.n or a.edge_count() != b.edge_count():
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_code(a, limit=limit) == canonical_code(b, limit=limit)
