"""Brute-force reference implementations, deliberately naive and independent of the package solvers."""

import itertools


def edge_set(g):
    return {(u, v) for u in range(g.n) for v in range(u + 1, g.n) if g.adj[u] >> v & 1}


def proper(edges, colouring):
    return all(colouring[u] != colouring[v] for u, v in edges)


def k_colourable(g, k):
    """Backtracking over colour assignments in vertex order 0..n-1, no bounds."""
    edges = edge_set(g)
    nbrs = {v: [u for u in range(v) if (u, v) in edges] for v in range(g.n)}
    colour = [None] * g.n

    def go(v):
        if v == g.n:
            return True
        for c in range(k):
            if all(colour[u] != c for u in nbrs[v]):
                colour[v] = c
                if go(v + 1):
                    return True
        colour[v] = None
        return False

    return go(0)


def brute_chi(g):
    if g.n == 0:
        return 0
    k = 1
    while not k_colourable(g, k):
        k += 1
    return k


def chi_by_partitions(g):
    """chi via dynamic programming over all vertex subsets (minimum cover by independent sets)."""
    n = g.n
    full = (1 << n) - 1
    ind = [True] * (1 << n)
    for m in range(1, 1 << n):
        low = (m & -m).bit_length() - 1
        rest = m & (m - 1)
        ind[m] = ind[rest] and not g.adj[low] & rest
    chi = [0] * (1 << n)
    for m in range(1, 1 << n):
        low = m & -m
        rest = m ^ low
        best = n
        s = rest
        while True:
            if ind[s | low]:
                best = min(best, chi[m ^ (s | low)] + 1)
            if s == 0:
                break
            s = (s - 1) & rest
        chi[m] = best
    return chi[full], ind, chi


def independent_sets(g):
    edges = edge_set(g)
    for r in range(g.n + 1):
        for s in itertools.combinations(range(g.n), r):
            if all((u, v) not in edges for u, v in itertools.combinations(s, 2)):
                yield s


def brute_mis(g):
    """Largest independent set, lexicographically smallest among the largest."""
    best = ()
    for s in independent_sets(g):
        if len(s) > len(best) or (len(s) == len(best) and s < best):
            best = s
    return best


def brute_min_vertex_cover(g):
    edges = edge_set(g)
    for r in range(g.n + 1):
        for s in itertools.combinations(range(g.n), r):
            ss = set(s)
            if all(u in ss or v in ss for u, v in edges):
                return r


def brute_max_clique_size(g):
    edges = edge_set(g)
    best = 0
    for r in range(1, g.n + 1):
        found = False
        for s in itertools.combinations(range(g.n), r):
            if all((u, v) in edges for u, v in itertools.combinations(s, 2)):
                found = True
                break
        if not found:
            break
        best = r
    return best


def brute_s(g, h):
    """Largest subset W with chi(G[W]) <= h via the subset DP table."""
    _, _, chi = chi_by_partitions(g)
    return max(bin(m).count("1") for m in range(1 << g.n) if chi[m] <= h)
