"""Isomorph-free generation of small graphs, plus the graph6 codec.

Generation is exact: connected graphs are grown by edge addition from the
trees on n vertices, deduplicated by canonical code, which visits every
connected isomorphism class exactly once (removing a non-bridge edge from
any connected non-tree leaves a smaller connected graph on the same
vertices).  Trees are grown by leaf addition and deduplicated by the
rooted tree code, which scales past the permutation-search cap.
"""

from __future__ import annotations

import functools
import random
from typing import Iterable, Iterator, Optional, Tuple

from .graphs import Graph, canonical_code, from_edge_list, tree_canonical_code

CONNECTED_CAP = 8
TREE_CAP = 14


class Graph6Error(ValueError):
    """Base class for graph6 codec failures."""


class MalformedByteError(Graph6Error):
    """A byte outside the printable graph6 range 63..126."""


class TruncatedPayloadError(Graph6Error):
    """The adjacency bit payload ends before n(n-1)/2 bits."""


class TrailingDataError(Graph6Error):
    """Extra bytes (or set padding bits) after the adjacency payload."""


def emit_graph6(g: Graph) -> str:
    """Standard short-form graph6: header byte n+63, column-major bits."""
    n = g.n
    if n > 62:
        raise Graph6Error(f"short-form graph6 holds at most 62 vertices, got {n}")
    out = [chr(n + 63)]
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one short-form graph6 string (optional ``>>graph6<<`` prefix)."""
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<") :]
    text = text.rstrip("\r\n")
    if not text:
        raise TruncatedPayloadError("empty graph6 string")
    data = [ord(ch) for ch in text]
    for pos, byte in enumerate(data):
        if byte < 63 or byte > 126:
            raise MalformedByteError(
                f"byte {byte} at position {pos} outside graph6 range 63..126"
            )
    if data[0] == 126:
        raise Graph6Error("long-form graph6 (>=63 vertices) is not supported")
    n = data[0] - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = data[1:]
    if len(payload) < need:
        raise TruncatedPayloadError(
            f"need {need} payload bytes for {n} vertices, got {len(payload)}"
        )
    if len(payload) > need:
        raise TrailingDataError(
            f"{len(payload) - need} trailing byte(s) after the adjacency payload"
        )
    bits = []
    for byte in payload:
        val = byte - 63
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise TrailingDataError("padding bits beyond the adjacency payload are set")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return from_edge_list(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


# ---------------------------------------------------------------------------
# Exhaustive generation
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def trees(n: int, cap: int = TREE_CAP) -> Tuple[Graph, ...]:
    """One representative per isomorphism class of trees on n vertices."""
    if n < 1:
        raise ValueError("tree order must be >= 1")
    if n > cap:
        raise ValueError(f"tree generation capped at {cap} vertices")
    if n == 1:
        return (from_edge_list(1, []),)
    seen = {}
    for t in trees(n - 1, cap):
        for v in range(t.n):
            adj = [list(row) for row in t.adj] + [[v]]
            adj[v] = list(adj[v]) + [t.n]
            g = Graph(n, adj)
            code = tree_canonical_code(g)
            if code not in seen:
                seen[code] = g
    return tuple(seen[c] for c in sorted(seen))


@functools.lru_cache(maxsize=None)
def connected_graphs(n: int, cap: int = CONNECTED_CAP) -> Tuple[Graph, ...]:
    """One representative per isomorphism class of connected graphs,
    in deterministic canonical-code order."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if n > cap:
        raise ValueError(f"connected-graph generation capped at {cap} vertices")
    if n == 1:
        return (from_edge_list(1, []),)
    level = {canonical_code(t): t for t in trees(n)}
    seen = dict(level)
    while level:
        grown = {}
        for g in level.values():
            for u in range(n):
                for v in range(u + 1, n):
                    if v in g.adj[u]:
                        continue
                    adj = [list(row) for row in g.adj]
                    adj[u].append(v)
                    adj[v].append(u)
                    h = Graph(n, adj)
                    code = canonical_code(h)
                    if code not in seen:
                        seen[code] = h
                        grown[code] = h
        level = grown
    return tuple(seen[c] for c in sorted(seen))


# ---------------------------------------------------------------------------
# Seeded random graphs for the identity checks
# ---------------------------------------------------------------------------


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform random tree by decoding a random Pruefer sequence."""
    if n < 1:
        raise ValueError("tree order must be >= 1")
    if n == 1:
        return from_edge_list(1, [])
    if n == 2:
        return from_edge_list(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = sorted(leaves)[:2]
    edges.append((u, w))
    return from_edge_list(n, edges)


def random_connected_graph(
    rng: random.Random,
    n: int,
    extra_edges: Optional[int] = None,
    keep_pendant: bool = False,
) -> Graph:
    """Random spanning tree plus extra edges; optionally protects one leaf."""
    t = random_tree(rng, n)
    edges = t.edges()
    protected = None
    if keep_pendant:
        leaves = [v for v in range(n) if t.degree(v) == 1]
        protected = rng.choice(leaves) if leaves else None
    if extra_edges is None:
        extra_edges = rng.randint(0, max(0, n - 2))
    present = set(edges)
    candidates = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in present and protected not in (u, v)
    ]
    rng.shuffle(candidates)
    edges.extend(candidates[: min(extra_edges, len(candidates))])
    return from_edge_list(n, edges)
