"""Independent oracles used to validate the package from the outside.

Nothing here reuses the package's canonicalization, enumeration or exact
linear algebra: connectivity is re-implemented with a plain stack walk,
class counting goes through labeled-count arithmetic and automorphism
sums, and numeric eigenvalues come from numpy's symmetric eigensolver.
"""

from fractions import Fraction
from itertools import combinations, permutations
from math import comb

import numpy as np


def all_edge_subsets(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]


def is_connected_edges(n, edges):
    if n <= 1:
        return True
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def labeled_connected_count(n):
    """Number of labeled connected graphs, by the classical recurrence."""
    c = {}
    for m in range(1, n + 1):
        total = 2 ** comb(m, 2)
        for k in range(1, m):
            total -= comb(m - 1, k - 1) * c[k] * 2 ** comb(m - k, 2)
        c[m] = total
    return c[n]


def brute_labeled_connected_count(n):
    """Same number by raw iteration over all edge subsets."""
    return sum(1 for edges in all_edge_subsets(n) if is_connected_edges(n, edges))


def automorphism_count(g):
    """|Aut(G)| by brute force over all vertex permutations."""
    edges = frozenset(frozenset(e) for e in g.edges())
    count = 0
    for perm in permutations(range(g.n)):
        mapped = frozenset(frozenset((perm[a], perm[b])) for (a, b) in g.edges())
        if mapped == edges:
            count += 1
    return count


def numeric_eigenvalues(g):
    """Adjacency eigenvalues from numpy (float), sorted descending."""
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return sorted(np.linalg.eigvalsh(a), reverse=True)


def numeric_multiplicity(g, value, tol=1e-7):
    return sum(1 for x in numeric_eigenvalues(g) if abs(x - value) < tol)


def poly_roots(coeffs):
    """Real parts of the roots of an integer polynomial (low degree first)."""
    return [complex(z) for z in np.roots(list(reversed(coeffs)))]


def rational_matrix_rank(rows):
    """Rank of a rational matrix by plain fraction Gaussian elimination."""
    rows = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r
