"""Constructors for the named graph families and their deletion processes.

Every constructor labels its semantically distinguished vertices (centers,
tail ends, attachment points) so downstream checkers can reuse them;
recognition on unlabeled graphs is done structurally in `characterize`.

Conventions:

* A starlike tree has k legs of order exactly s joined at a center.
* broom(k, s, l) is the starlike tree with a tail path of order l
  identified at the center; the far end of the tail is the "tail" vertex
  (order l = 0 degenerates to k disjoint legs, l = 1 to the bare starlike
  tree with the center doubling as the tail end).
* tadpole(g, l) is the cycle of length g with a tail of order l identified
  at a cycle vertex.
* attach_* operations use path identification: the connecting path of
  order l shares its first vertex with the host graph and its last with
  the branch, so path_order = 1 plants the branch directly on the host
  vertex.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .graphs import (
    Graph,
    GraphError,
    from_edge_list,
    induced_delete,
    is_in_Gs,
    iso_key,
    pendant_paths,
)


class FamilyError(GraphError):
    """Raised for invalid family parameters."""


LABEL_CENTER = "center"
LABEL_TAIL = "tail"
LABEL_ANCHOR = "anchor"


def _add_label(labels: Dict[int, str], v: int, name: str) -> None:
    labels[v] = f"{labels[v]}+{name}" if v in labels else name


def find_labeled(g: Graph, name: str) -> List[int]:
    """All vertices carrying the given label token."""
    return sorted(v for v, lab in g.labels.items() if name in lab.split("+"))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise FamilyError("path order must be >= 1")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise FamilyError("cycle length must be >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def spider(leg_orders: Sequence[int]) -> Graph:
    """Center vertex 0 with one pendant path of each given order."""
    if not leg_orders or any(t < 1 for t in leg_orders):
        raise FamilyError("spider legs must all have order >= 1")
    edges = []
    nxt = 1
    for t in leg_orders:
        prev = 0
        for i in range(t):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    labels = {0: LABEL_CENTER}
    return from_edge_list(nxt, edges, labels)


def starlike(k: int, s: int) -> Graph:
    """k legs of order s joined at a labeled center (k=2 is the bare path)."""
    if k < 1 or s < 1:
        raise FamilyError("starlike tree needs k >= 1 and s >= 1")
    return spider([s] * k)


def broom(k: int, s: int, l: int) -> Graph:
    """Starlike tree with a tail of order l at the center (sk + l vertices).

    l = 0 gives the disconnected union of k legs, per the family
    definition's degenerate case.
    """
    if k < 1 or s < 1 or l < 0:
        raise FamilyError("broom needs k >= 1, s >= 1, l >= 0")
    if l == 0:
        edges = []
        for j in range(k):
            base = j * s
            edges.extend((base + i, base + i + 1) for i in range(s - 1))
        return from_edge_list(k * s, edges)
    g = starlike(k, s)
    labels = dict(g.labels)
    edges = g.edges()
    prev = 0  # center
    nxt = g.n
    for _ in range(l - 1):
        edges.append((prev, nxt))
        prev = nxt
        nxt += 1
    _add_label(labels, prev, LABEL_TAIL)
    return from_edge_list(nxt, edges, labels)


def double_spider(k1: int, k2: int, s: int, l: int) -> Graph:
    """Two starlike trees whose centers are the ends of a path of order l >= 2."""
    if k1 < 1 or k2 < 1 or s < 1:
        raise FamilyError("double spider needs k1, k2 >= 1 and s >= 1")
    if l < 2:
        raise FamilyError("connecting path must have order l >= 2")
    edges = [(i, i + 1) for i in range(l - 1)]
    labels = {0: LABEL_CENTER, l - 1: LABEL_CENTER}
    nxt = l
    for center, k in ((0, k1), (l - 1, k2)):
        for _ in range(k):
            prev = center
            for _ in range(s):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
    return from_edge_list(nxt, edges, labels)


def tadpole(g: int, l: int) -> Graph:
    """Cycle of length g with a tail of order l at vertex 0 (g + l - 1 vertices)."""
    if g < 3:
        raise FamilyError("cycle length must be >= 3")
    if l < 1:
        raise FamilyError("tail order must be >= 1")
    edges = [(i, (i + 1) % g) for i in range(g)]
    labels: Dict[int, str] = {}
    prev = 0
    nxt = g
    for _ in range(l - 1):
        edges.append((prev, nxt))
        prev = nxt
        nxt += 1
    _add_label(labels, prev, LABEL_TAIL)
    return from_edge_list(g + l - 1, edges, labels)


def figure_eight(l: int, k: int) -> Graph:
    """Two cycles of lengths l and k sharing exactly one vertex."""
    if l < 3 or k < 3:
        raise FamilyError("cycle lengths must be >= 3")
    edges = [(i, (i + 1) % l) for i in range(l)]
    shared = 0
    ring2 = [shared] + list(range(l, l + k - 1))
    edges += [(ring2[i], ring2[(i + 1) % k]) for i in range(k)]
    return from_edge_list(l + k - 1, edges, {shared: LABEL_CENTER})


def theta_graph(a: int, b: int, c: int) -> Graph:
    """Two branch vertices joined by three arms of a, b, c edges each.

    At most one arm may have length 1, otherwise the graph would need a
    multi-edge.
    """
    arms = [a, b, c]
    if any(x < 1 for x in arms):
        raise FamilyError("theta arms must have length >= 1")
    if sum(1 for x in arms if x == 1) > 1:
        raise FamilyError("at most one theta arm may be a single edge")
    u, v = 0, 1
    edges = []
    nxt = 2
    for length in arms:
        prev = u
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, v))
    return from_edge_list(nxt, edges, {u: LABEL_CENTER, v: LABEL_CENTER})


def attach_broom(host: Graph, u: int, path_order: int, k: int, s: int) -> Graph:
    """Join a starlike branch to the host through a path of the given order.

    The connecting path shares its first vertex with u and its last with
    the branch center; path_order = 1 plants the legs directly at u.
    Requires the host to keep degree >= 2 at u, matching the inverse
    deletion process.
    """
    host.check_vertex(u)
    if host.degree(u) < 2:
        raise FamilyError(f"attachment vertex {u} must have degree >= 2 in the host")
    if path_order < 1 or k < 1 or s < 1:
        raise FamilyError("attach_broom needs path_order, k, s all >= 1")
    edges = host.edges()
    labels = dict(host.labels)
    prev = u
    nxt = host.n
    for _ in range(path_order - 1):
        edges.append((prev, nxt))
        prev = nxt
        nxt += 1
    center = prev
    _add_label(labels, center, LABEL_CENTER)
    for _ in range(k):
        p = center
        for _ in range(s):
            edges.append((p, nxt))
            p = nxt
            nxt += 1
    return from_edge_list(nxt, edges, labels)


def attach_tadpole(host: Graph, u: int, path_order: int, g: int) -> Graph:
    """Join a cycle to the host through a path of the given order.

    path_order = 1 puts u itself on the new cycle.
    """
    host.check_vertex(u)
    if host.degree(u) < 2:
        raise FamilyError(f"attachment vertex {u} must have degree >= 2 in the host")
    if path_order < 1 or g < 3:
        raise FamilyError("attach_tadpole needs path_order >= 1 and cycle >= 3")
    edges = host.edges()
    labels = dict(host.labels)
    prev = u
    nxt = host.n
    for _ in range(path_order - 1):
        edges.append((prev, nxt))
        prev = nxt
        nxt += 1
    ring = [prev] + list(range(nxt, nxt + g - 1))
    nxt += g - 1
    edges += [(ring[i], ring[(i + 1) % g]) for i in range(g)]
    return from_edge_list(nxt, edges, labels)


# ---------------------------------------------------------------------------
# Skeleton-with-branches assembly
# ---------------------------------------------------------------------------

BranchSpec = Tuple[str, int, int]  # ("T", k, l) or ("C", g, f)


def build_branched_family(
    skeleton: Graph, branches: Sequence[BranchSpec], s: int
) -> Graph:
    """Plant one branch per skeleton leaf: legs for T-branches, a stemmed
    cycle for C-branches.

    The skeleton plays the role of the decomposition tree: a T-branch
    (k, l) turns leaf u_i into the center of k legs of order s, where l
    must equal u_i's pendant-path order in the skeleton; a C-branch (g, f)
    replaces that pendant path by a tadpole with tail order f hung from
    the same anchor.  Only structural preconditions are enforced here;
    spectral side conditions are the checkers' business, so deliberately
    broken fixtures can be built.
    """
    if s < 1:
        raise FamilyError("s must be >= 1")
    if skeleton.n < 1 or skeleton.edge_count() != skeleton.n - 1:
        raise FamilyError("skeleton must be a tree")
    from .graphs import is_connected

    if not is_connected(skeleton):
        raise FamilyError("skeleton must be a tree")
    paths = [p for p in pendant_paths(skeleton) if not p.bare_component]
    if not paths:
        raise FamilyError("skeleton must have at least 3 leaves, got a bare path")
    leaves = sorted(p.vertices[0] for p in paths)
    if len(leaves) < 3:
        raise FamilyError(f"skeleton needs at least 3 leaves, got {len(leaves)}")
    if len(branches) != len(leaves):
        raise FamilyError(
            f"branch count mismatch: {len(branches)} specs for {len(leaves)} leaves"
        )
    high = [v for v in range(skeleton.n) if skeleton.degree(v) >= 3]
    for a in high:
        for b in skeleton.adj[a]:
            if b in high:
                raise FamilyError(
                    f"skeleton high-degree vertices {a} and {b} are adjacent"
                )
    by_leaf = {p.vertices[0]: p for p in paths}
    edges = [e for e in skeleton.edges()]
    labels = dict(skeleton.labels)
    removed: List[int] = []
    nxt = skeleton.n
    for leaf, spec in zip(leaves, branches):
        kind, a, b = spec
        pp = by_leaf[leaf]
        if kind == "T":
            k, l = a, b
            if k < 1 or l < 1:
                raise FamilyError("T-branch needs k >= 1 and l >= 1")
            if l != pp.order:
                raise FamilyError(
                    f"pendant-path order of skeleton leaf {leaf} is {pp.order}, "
                    f"inconsistent with branch tail l={l} (composite would leave G_s)"
                )
            center = leaf
            _add_label(labels, center, LABEL_CENTER)
            for _ in range(k):
                prev = center
                for _ in range(s):
                    edges.append((prev, nxt))
                    prev = nxt
                    nxt += 1
        elif kind == "C":
            g, f = a, b
            if g < 3 or f < 1:
                raise FamilyError("C-branch needs cycle g >= 3 and tail f >= 1")
            anchor = pp.anchor
            assert anchor is not None
            removed.extend(pp.vertices)
            prev = anchor
            for _ in range(f):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
            ring = [prev] + list(range(nxt, nxt + g - 1))
            nxt += g - 1
            edges += [(ring[i], ring[(i + 1) % g]) for i in range(g)]
            _add_label(labels, anchor, LABEL_ANCHOR)
        else:
            raise FamilyError(f"unknown branch kind {kind!r}")
    big = from_edge_list(nxt, edges, labels)
    if removed:
        big, mapping = induced_delete(big, removed)
    if not is_in_Gs(big, s):
        raise FamilyError("composite graph fell outside G_s; check branch orders")
    return big


# ---------------------------------------------------------------------------
# Deletion processes (inverse of the attach operations)
# ---------------------------------------------------------------------------


def _walk_chain(g: Graph, start: int, prev: int) -> Tuple[List[int], int]:
    """Follow degree-2 vertices from start (coming from prev); return the
    chain of degree-2 vertices walked and the terminal vertex."""
    chain: List[int] = []
    cur = start
    while g.degree(cur) == 2:
        chain.append(cur)
        nxts = [w for w in g.adj[cur] if w != prev]
        prev, cur = cur, nxts[0]
    return chain, cur


def _leg_orders(g: Graph, v: int, exclude: Sequence[int], s: int) -> Optional[List[List[int]]]:
    """The legs at v (excluding given neighbors) when every one is a bare
    path of order exactly s; None otherwise."""
    legs = []
    for y in g.adj[v]:
        if y in exclude:
            continue
        if g.degree(y) == 1:
            leg = [y]
        else:
            chain, term = _walk_chain(g, y, v)
            if g.degree(term) != 1:
                return None
            leg = chain + [term]
        if len(leg) != s:
            return None
        legs.append(leg)
    return legs


def broom_deletions(g: Graph, s: int) -> List[Tuple[Graph, Dict[str, int]]]:
    """Every way to strip a starlike branch joined through a path.

    Each result is the remaining host H (with the removal description:
    k, s, path order l, attachment vertex), deduplicated up to isomorphism.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    results: List[Tuple[Graph, Dict[str, int]]] = []
    for u in range(g.n):
        du = g.degree(u)
        if du < 3:
            continue
        # branches through one connecting path of order >= 2
        for x in g.adj[u]:
            if g.degree(x) == 1:
                chain, term = [], x
            elif g.degree(x) == 2:
                chain, term = _walk_chain(g, x, u)
            else:
                continue
            if term == u:
                continue
            if g.degree(term) == 1:
                tail = chain + [term]
                t = len(tail)
                if t > s and du - 1 >= 2:
                    results.append(
                        (
                            _delete(g, tail),
                            {"kind": "T", "k": 1, "l": t - s + 1, "s": s, "attach": u},
                        )
                    )
            elif g.degree(term) >= 3:
                legs = _leg_orders(g, term, [chain[-1] if chain else u], s)
                if legs is not None and du - 1 >= 2:
                    removed = chain + [term] + [v for leg in legs for v in leg]
                    results.append(
                        (
                            _delete(g, removed),
                            {
                                "kind": "T",
                                "k": len(legs),
                                "l": len(chain) + 2,
                                "s": s,
                                "attach": u,
                            },
                        )
                    )
        # branches planted directly at u (path order 1)
        direct = _legs_at(g, u, s)
        for k in range(1, len(direct) + 1):
            if du - k < 2:
                break
            removed = [v for leg in direct[:k] for v in leg]
            results.append(
                (_delete(g, removed), {"kind": "T", "k": k, "l": 1, "s": s, "attach": u})
            )
    return _dedupe(results)


def _legs_at(g: Graph, u: int, s: int) -> List[List[int]]:
    legs = []
    for y in g.adj[u]:
        if g.degree(y) == 1:
            leg = [y]
        elif g.degree(y) == 2:
            chain, term = _walk_chain(g, y, u)
            if g.degree(term) != 1:
                continue
            leg = chain + [term]
        else:
            continue
        if len(leg) == s:
            legs.append(leg)
    return legs


def cycle_deletions(g: Graph) -> List[Tuple[Graph, Dict[str, int]]]:
    """Every way to strip a pendant cycle joined through a path."""
    from .graphs import pendant_cycles

    results: List[Tuple[Graph, Dict[str, int]]] = []
    for block, w in pendant_cycles(g):
        glen = len(block)
        dw = g.degree(w)
        if dw >= 4:
            results.append(
                (
                    _delete(g, [v for v in block if v != w]),
                    {"kind": "C", "g": glen, "l": 1, "attach": w},
                )
            )
        elif dw == 3:
            (x,) = [y for y in g.adj[w] if y not in block]
            if g.degree(x) == 1:
                continue  # the whole graph is a tadpole; nothing remains
            chain, term = _walk_chain(g, x, w)
            if term == w or g.degree(term) < 3:
                continue
            removed = sorted(block) + chain
            results.append(
                (
                    _delete(g, removed),
                    {"kind": "C", "g": glen, "l": len(chain) + 2, "attach": term},
                )
            )
    return _dedupe(results)


def _delete(g: Graph, removed: Sequence[int]) -> Graph:
    sub, _ = induced_delete(g, removed)
    return sub


def _dedupe(
    results: List[Tuple[Graph, Dict[str, int]]]
) -> List[Tuple[Graph, Dict[str, int]]]:
    seen = set()
    out = []
    for h, desc in results:
        key = (tuple(sorted(desc.items())), iso_key(h))
        if key not in seen:
            seen.add(key)
            out.append((h, desc))
    return out


# ---------------------------------------------------------------------------
# Family specs (the CLI's text form)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """Parsed canonical text form of a family constructor call.

    Grammar (orders are vertex counts, arms are edge counts)::

        P(n)                      path
        C(n)                      cycle
        S(l1,l2,...)              spider with the given leg orders
        Tk(k=K,s=S)               starlike tree
        Tkl(k=K,s=S,l=L)          broom
        Tkkl(k1=A,k2=B,s=S,l=L)   double spider
        Ckl(g=G,l=L)              tadpole
        B(l=A,k=B)                two cycles sharing a vertex
        Theta(a=A,b=B,c=C)        theta graph
        BTh(T0=<spec>;<branch>,...;s=S)
                                  skeleton family; branches are T(k,l) or C(g,f)
    """

    kind: str
    params: Tuple[Tuple[str, int], ...] = ()
    skeleton: Optional["FamilySpec"] = None
    branches: Tuple[BranchSpec, ...] = ()

    def to_text(self) -> str:
        if self.kind == "BTh":
            assert self.skeleton is not None
            bs = ",".join(f"{k}({a},{b})" for k, a, b in self.branches)
            s = dict(self.params)["s"]
            return f"BTh(T0={self.skeleton.to_text()};{bs};s={s})"
        if self.kind in ("P", "C", "S"):
            return f"{self.kind}({','.join(str(v) for _, v in self.params)})"
        inner = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.kind}({inner})"


_POSITIONAL = {"P": 1, "C": 1, "S": None}
_KEYWORD = {
    "Tk": ("k", "s"),
    "Tkl": ("k", "s", "l"),
    "Tkkl": ("k1", "k2", "s", "l"),
    "Ckl": ("g", "l"),
    "B": ("l", "k"),
    "Theta": ("a", "b", "c"),
}


def parse_family_spec(text: str) -> FamilySpec:
    text = text.strip()
    m = re.match(r"^([A-Za-z]+)\((.*)\)$", text, re.DOTALL)
    if not m:
        raise FamilyError(f"cannot parse family spec {text!r}")
    name, inner = m.group(1), m.group(2).strip()
    if name == "BTh":
        parts = inner.split(";")
        if len(parts) != 3:
            raise FamilyError("BTh spec needs three ';'-separated sections")
        t0_part, branch_part, s_part = (p.strip() for p in parts)
        if not t0_part.startswith("T0="):
            raise FamilyError("BTh spec must start with T0=<spec>")
        skeleton = parse_family_spec(t0_part[3:])
        branches = []
        for b in re.findall(r"([TC])\(\s*(\d+)\s*,\s*(\d+)\s*\)", branch_part):
            branches.append((b[0], int(b[1]), int(b[2])))
        joined = ",".join(f"{k}({a},{b})" for k, a, b in branches)
        if re.sub(r"\s", "", branch_part) != re.sub(r"\s", "", joined):
            raise FamilyError(f"cannot parse BTh branches {branch_part!r}")
        if not re.match(r"^s=\d+$", s_part):
            raise FamilyError("BTh spec must end with s=<int>")
        s = int(s_part[2:])
        return FamilySpec("BTh", (("s", s),), skeleton, tuple(branches))
    if name in _POSITIONAL:
        if not inner:
            raise FamilyError(f"{name} needs at least one parameter")
        vals = [int(v) for v in inner.split(",")]
        arity = _POSITIONAL[name]
        if arity is not None and len(vals) != arity:
            raise FamilyError(f"{name} takes {arity} parameter(s)")
        return FamilySpec(name, tuple((f"p{i}", v) for i, v in enumerate(vals)))
    if name in _KEYWORD:
        want = _KEYWORD[name]
        got: Dict[str, int] = {}
        for piece in inner.split(","):
            km = re.match(r"^\s*(\w+)\s*=\s*(\d+)\s*$", piece)
            if not km:
                raise FamilyError(f"cannot parse parameter {piece!r} in {text!r}")
            got[km.group(1)] = int(km.group(2))
        if set(got) != set(want):
            raise FamilyError(f"{name} needs parameters {want}, got {sorted(got)}")
        return FamilySpec(name, tuple((k, got[k]) for k in want))
    raise FamilyError(f"unknown family {name!r}")


def build_family(spec: FamilySpec) -> Graph:
    p = dict(spec.params)
    if spec.kind == "P":
        return path_graph(p["p0"])
    if spec.kind == "C":
        return cycle_graph(p["p0"])
    if spec.kind == "S":
        return spider([v for _, v in spec.params])
    if spec.kind == "Tk":
        return starlike(p["k"], p["s"])
    if spec.kind == "Tkl":
        return broom(p["k"], p["s"], p["l"])
    if spec.kind == "Tkkl":
        return double_spider(p["k1"], p["k2"], p["s"], p["l"])
    if spec.kind == "Ckl":
        return tadpole(p["g"], p["l"])
    if spec.kind == "B":
        return figure_eight(p["l"], p["k"])
    if spec.kind == "Theta":
        return theta_graph(p["a"], p["b"], p["c"])
    if spec.kind == "BTh":
        assert spec.skeleton is not None
        return build_branched_family(
            build_family(spec.skeleton), list(spec.branches), p["s"]
        )
    raise FamilyError(f"unknown family {spec.kind!r}")
