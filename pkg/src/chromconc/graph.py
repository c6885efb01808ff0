"""Undirected simple graphs on vertices 0..n-1 with bitset adjacency.

Each vertex ``v`` stores its neighbourhood as a Python int whose bit ``u`` is
set iff ``{u, v}`` is an edge.  Vertex sets are passed around either as
iterables of ints (public API) or as bitmasks (internal hot paths).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import GraphTooLarge

# Largest order gen_gnp will allocate; this is ~1.25e9 pair draws.
MAX_GNP_N = 50_000
SEED_BITS = 64


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph.

    ``adj[v]`` is the neighbourhood bitmask of ``v``.  Use the constructors
    (:meth:`from_edges`, :func:`gen_gnp`, ...) rather than building ``adj``
    by hand; the constructor validates symmetry and irreflexivity.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def petersen(cls) -> "Graph":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return cls.from_edges(10, outer + spokes + inner)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nb in enumerate(self.adj):
            for v in iter_bits(nb >> (u + 1)):
                yield u, u + 1 + v

    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def _check_vertex(self, v):
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")


def vertex_set_mask(g: Graph, w: Iterable[int]) -> int:
    """Validate a vertex set against ``g`` and return its bitmask."""
    m = 0
    for v in w:
        if not isinstance(v, (int, np.integer)) or not 0 <= v < g.n:
            raise IndexError(f"vertex {v!r} out of range for n={g.n}")
        m |= 1 << int(v)
    return m


def validate_p(p: float) -> float:
    p = float(p)
    if not 0.0 < p < 1.0:
        raise ValueError(f"edge probability must lie in (0, 1), got {p}")
    return p


def validate_seed(seed: int) -> int:
    if not isinstance(seed, (int, np.integer)) or not 0 <= seed < 2**SEED_BITS:
        raise ValueError(f"seed must be an integer in [0, 2**64), got {seed!r}")
    return int(seed)


@dataclass(frozen=True)
class GnpParams:
    n: int
    p: float
    seed: int

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 0:
            raise ValueError(f"n must be a non-negative integer, got {self.n!r}")
        validate_p(self.p)
        validate_seed(self.seed)


def make_rng(seed: int) -> np.random.Generator:
    """The package's random stream: numpy PCG64 keyed by ``SeedSequence(seed)``."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(validate_seed(seed))))


def derive_seed(master_seed: int, index: int) -> int:
    """Per-trial 64-bit seed: first word of ``SeedSequence([master_seed, index])``."""
    validate_seed(master_seed)
    if index < 0:
        raise ValueError("trial index must be non-negative")
    ss = np.random.SeedSequence([master_seed, index])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def gen_gnp(params: GnpParams) -> Graph:
    """Sample G(n, p).

    Pairs ``(i, j)``, ``i < j``, consume one ``Generator.random()`` draw each in
    lexicographic order; the pair is an edge iff the draw is ``< p``.  The
    output therefore depends only on ``(n, p, seed)``.
    """
    n, p = params.n, validate_p(params.p)
    if n > MAX_GNP_N:
        raise GraphTooLarge(f"n={n} exceeds MAX_GNP_N={MAX_GNP_N}")
    rng = make_rng(params.seed)
    adj = [0] * n
    for i in range(n - 1):
        row = rng.random(n - i - 1) < p
        # bit k of the packed row is pair (i, i + 1 + k)
        upper = int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")
        upper <<= i + 1
        adj[i] |= upper
        for j in iter_bits(upper):
            adj[j] |= 1 << i
    return Graph(n, tuple(adj)) if n <= 64 else _trusted(n, adj)


def _trusted(n, adj):
    # skip the O(m) symmetry re-check for large sampled graphs
    g = object.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "adj", tuple(adj))
    return g


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return _trusted(g.n, [full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)])


def induced_subgraph(g: Graph, w: Iterable[int], return_map: bool = False):
    """Subgraph induced on ``w``, relabelled ``0..|w|-1`` in increasing vertex order.

    With ``return_map=True`` also returns the tuple mapping new labels to the
    original vertices.
    """
    members = tuple(iter_bits(vertex_set_mask(g, w)))
    pos = {v: i for i, v in enumerate(members)}
    sub_adj = []
    wmask = mask_of(members)
    for v in members:
        sub_adj.append(mask_of(pos[u] for u in iter_bits(g.adj[v] & wmask)))
    h = _trusted(len(members), sub_adj)
    return (h, members) if return_map else h


def edge_count(g: Graph, u: Iterable[int]) -> int:
    """Number of edges of ``g`` with both endpoints in ``u``."""
    return edge_count_mask(g, vertex_set_mask(g, u))


def edge_count_mask(g: Graph, m: int) -> int:
    return sum((g.adj[v] & m).bit_count() for v in iter_bits(m)) // 2
