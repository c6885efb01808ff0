"""Exact maximum clique on bitset graphs.

Carraghan-Pardalos style depth-first search with a greedy-colouring bound.
Candidates are expanded in increasing vertex index, include-before-exclude,
and the incumbent is only replaced on strict improvement, so the first
maximum clique found is the one whose sorted vertex sequence is
lexicographically smallest.
"""

from __future__ import annotations

from .graph import iter_bits


def colour_bound(adj, p: int) -> int:
    """Number of colours a greedy sequential colouring uses on ``p``.

    Any clique inside ``p`` has at most this many vertices.
    """
    k = 0
    while p:
        k += 1
        q = p
        while q:
            low = q & -q
            p ^= low
            q &= ~adj[low.bit_length() - 1] & ~low
    return k


def max_clique_mask(adj, candidates: int) -> int:
    """Lexicographically smallest maximum clique within ``candidates``, as a bitmask."""
    best = [0, 0]  # size, mask

    def expand(r_mask, r_size, p):
        if not p:
            if r_size > best[0]:
                best[0], best[1] = r_size, r_mask
            return
        while p:
            if r_size + p.bit_count() <= best[0]:
                return
            if r_size + colour_bound(adj, p) <= best[0]:
                return
            low = p & -p
            v = low.bit_length() - 1
            p ^= low
            expand(r_mask | low, r_size + 1, p & adj[v])

    expand(0, 0, candidates)
    return best[1]


def clique_number(adj, candidates: int) -> int:
    return max_clique_mask(adj, candidates).bit_count()


def is_clique(adj, mask: int) -> bool:
    return all(mask & ~adj[v] & ~(1 << v) == 0 for v in iter_bits(mask))


def is_independent(adj, mask: int) -> bool:
    return all(adj[v] & mask == 0 for v in iter_bits(mask))
