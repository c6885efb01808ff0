"""Exact and heuristic colouring machinery.

Exact routines refuse inputs above their guard (:class:`GuardExceeded`)
instead of silently degrading; heuristic routines are only used when a
caller asks for them, and results built from them carry ``heuristic=True``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clique import is_independent, max_clique_mask
from .errors import GuardExceeded
from .graph import Graph, induced_subgraph, iter_bits, vertex_set_mask

CHI_EXACT_MAX_N = 45
MIS_EXACT_MAX_N = 45
S_EXACT_MAX_N = 20

MODES = ("exact", "heuristic", "auto")


def canonical_assignment(assignment) -> tuple[int, ...]:
    """Relabel colours 0, 1, ... in order of first appearance by vertex."""
    relabel = {}
    out = []
    for c in assignment:
        if c not in relabel:
            relabel[c] = len(relabel)
        out.append(relabel[c])
    return tuple(out)


@dataclass(frozen=True)
class Coloring:
    """Colour per vertex (``assignment[v]``), 0-based and canonicalised."""

    assignment: tuple[int, ...]
    heuristic: bool = False

    def __post_init__(self):
        object.__setattr__(self, "assignment", canonical_assignment(self.assignment))

    @property
    def color_count(self) -> int:
        return len(set(self.assignment))

    def classes(self) -> list[tuple[int, ...]]:
        out = [[] for _ in range(self.color_count)]
        for v, c in enumerate(self.assignment):
            out[c].append(v)
        return [tuple(cl) for cl in out]

    def is_proper(self, g: Graph) -> bool:
        if len(self.assignment) != g.n:
            return False
        a = self.assignment
        return all(a[u] != a[v] for u, v in g.edges())

    def to_csv(self) -> str:
        lines = ["vertex,color"]
        lines.extend(f"{v},{c}" for v, c in enumerate(self.assignment))
        return "\n".join(lines) + "\n"


def _guard(what, n, max_n, default):
    limit = default if max_n is None else max_n
    if n > limit:
        raise GuardExceeded(what, n, limit)


def _complement_adj(adj, n):
    full = (1 << n) - 1
    return [full & ~nb & ~(1 << v) for v, nb in enumerate(adj)]


def dsatur(g: Graph) -> Coloring:
    """Brelaz's DSATUR heuristic: most saturated vertex first, then degree, then index."""
    n, adj = g.n, g.adj
    classes: list[int] = []
    colour = [-1] * n
    uncol = g.vertex_mask
    while uncol:
        v = _pick_dsatur(adj, classes, uncol)
        for c, cl in enumerate(classes):
            if not adj[v] & cl:
                break
        else:
            c = len(classes)
            classes.append(0)
        classes[c] |= 1 << v
        colour[v] = c
        uncol ^= 1 << v
    return Coloring(tuple(colour), heuristic=True)


def _pick_dsatur(adj, classes, uncol):
    best_v, best_key = -1, (-1, -1)
    for u in iter_bits(uncol):
        nb = adj[u]
        sat = 0
        for cl in classes:
            if nb & cl:
                sat += 1
        key = (sat, (nb & uncol).bit_count())
        if key > best_key:
            best_v, best_key = u, key
    return best_v


def chromatic_number_exact(g: Graph, max_n: int | None = None) -> tuple[int, Coloring]:
    """Exact chromatic number by DSATUR branch and bound.

    Lower bound from an exact maximum clique (whose vertices are pre-coloured
    to break colour symmetry), upper bound from the DSATUR heuristic.
    """
    _guard("chromatic_number_exact", g.n, max_n, CHI_EXACT_MAX_N)
    n, adj = g.n, g.adj
    if n == 0:
        return 0, Coloring(())
    clique = max_clique_mask(adj, g.vertex_mask)
    lower = clique.bit_count()
    greedy = dsatur(g)
    best = [greedy.color_count, greedy.assignment]
    if best[0] == lower:
        return lower, Coloring(best[1])

    colour = [-1] * n
    classes = []
    for c, v in enumerate(iter_bits(clique)):
        colour[v] = c
        classes.append(1 << v)

    def search(uncol):
        ncol = len(classes)
        if ncol >= best[0]:
            return False
        if not uncol:
            best[0], best[1] = ncol, tuple(colour)
            return ncol == lower
        v = _pick_dsatur(adj, classes, uncol)
        bit = 1 << v
        rest = uncol ^ bit
        nb = adj[v]
        for c in range(ncol):
            if not nb & classes[c]:
                classes[c] |= bit
                colour[v] = c
                if search(rest):
                    return True
                classes[c] ^= bit
                if len(classes) >= best[0]:
                    # best improved below us; this branch can no longer win
                    colour[v] = -1
                    return False
        if ncol + 1 < best[0]:
            classes.append(bit)
            colour[v] = ncol
            if search(rest):
                return True
            classes.pop()
        colour[v] = -1
        return False

    search(g.vertex_mask & ~clique)
    k, assignment = best
    return k, Coloring(assignment)


def greedy_independent_set(g: Graph, within=None) -> tuple[int, ...]:
    """Repeatedly take a minimum-degree vertex (lowest index on ties), drop its closed neighbourhood."""
    cand = g.vertex_mask if within is None else vertex_set_mask(g, within)
    return tuple(iter_bits(_greedy_mis_mask(g.adj, cand)))


def _greedy_mis_mask(adj, cand):
    chosen = 0
    while cand:
        best_v, best_d = -1, None
        for v in iter_bits(cand):
            d = (adj[v] & cand).bit_count()
            if best_d is None or d < best_d:
                best_v, best_d = v, d
        chosen |= 1 << best_v
        cand &= ~adj[best_v] & ~(1 << best_v)
    return chosen


def max_independent_set(g: Graph, mode: str = "exact", max_n: int | None = None) -> tuple[int, ...]:
    """Maximum independent set of ``g``.

    ``mode="exact"`` returns the maximum independent set whose sorted vertex
    sequence is lexicographically smallest; ``mode="heuristic"`` returns
    :func:`greedy_independent_set`.
    """
    if mode == "heuristic":
        return greedy_independent_set(g)
    if mode != "exact":
        raise ValueError(f"mode must be 'exact' or 'heuristic', got {mode!r}")
    _guard("max_independent_set", g.n, max_n, MIS_EXACT_MAX_N)
    cadj = _complement_adj(g.adj, g.n)
    return tuple(iter_bits(max_clique_mask(cadj, g.vertex_mask)))


def peel_coloring(g: Graph, residue_threshold: int, mode: str = "auto",
                  max_n: int | None = None) -> Coloring:
    """Colour by repeatedly removing a maximum independent set.

    Each removed set gets a fresh colour until at most ``residue_threshold``
    vertices remain; every remaining vertex then gets its own colour.  In
    ``"auto"`` mode a step is solved exactly while the remaining set is within
    the independent-set guard and greedily otherwise.
    """
    if residue_threshold < 0:
        raise ValueError("residue_threshold must be non-negative")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    limit = MIS_EXACT_MAX_N if max_n is None else max_n
    if mode == "exact":
        _guard("peel_coloring", g.n, max_n, MIS_EXACT_MAX_N)
    adj = g.adj
    cadj = _complement_adj(adj, g.n)
    colour = [-1] * g.n
    remaining = g.vertex_mask
    used_heuristic = False
    c = 0
    while remaining.bit_count() > residue_threshold:
        if mode == "exact" or (mode == "auto" and remaining.bit_count() <= limit):
            chosen = max_clique_mask(cadj, remaining)
        else:
            chosen = _greedy_mis_mask(adj, remaining)
            used_heuristic = True
        for v in iter_bits(chosen):
            colour[v] = c
        c += 1
        remaining &= ~chosen
    for v in iter_bits(remaining):
        colour[v] = c
        c += 1
    return Coloring(tuple(colour), heuristic=used_heuristic)


# --- maximum h-colourable induced subgraph -------------------------------------

def _popcounts(n):
    pc = np.zeros(1 << n, dtype=np.int8)
    for i in range(n):
        pc[1 << i: 2 << i] = pc[: 1 << i] + 1
    return pc


def _independent_table(adj, n):
    table = np.zeros(1 << n, dtype=bool)
    table[0] = True
    for v in range(n):
        lower = np.arange(1 << v, dtype=np.int64)
        back = adj[v] & ((1 << v) - 1)
        table[1 << v: 2 << v] = table[: 1 << v] & ((lower & back) == 0)
    return table


def _zeta(f, n):
    f = f.astype(np.int64)
    for i in range(n):
        view = f.reshape(-1, 2, 1 << i)
        view[:, 1, :] += view[:, 0, :]
    return f


def _mobius(f, n):
    for i in range(n):
        view = f.reshape(-1, 2, 1 << i)
        view[:, 1, :] -= view[:, 0, :]
    return f


def h_colorable_table(g: Graph, h: int) -> np.ndarray:
    """Boolean table over vertex bitmasks ``W``: is ``G[W]`` h-colourable?

    ``G[W]`` is h-colourable iff ``W`` is a union of h independent sets.  The
    family of such unions is built by repeated union-products computed with
    subset-sum (zeta) and Moebius transforms; counts stay below ``2**60`` for
    ``n <= 20`` so int64 arithmetic is exact.
    """
    n = g.n
    if h <= 0:
        table = np.zeros(1 << n, dtype=bool)
        table[0] = True
        return table
    indep = _independent_table(g.adj, n)
    zi = _zeta(indep, n)
    cur = indep
    for _ in range(1, min(h, n)):
        if cur[-1]:
            break
        cur = _mobius(_zeta(cur, n) * zi, n) > 0
    return cur


def _lex_first(masks, n):
    # the lexicographically smallest sorted vertex sequence has the largest bit reversal
    rev = np.zeros_like(masks)
    for i in range(n):
        rev |= ((masks >> i) & 1) << (n - 1 - i)
    return int(masks[int(np.argmax(rev))])


def max_h_colorable_set(g: Graph, h: int, max_n: int | None = None) -> tuple[int, ...]:
    """A largest vertex set inducing an h-colourable subgraph (lexicographically first)."""
    _guard("s_of_g", g.n, max_n, S_EXACT_MAX_N)
    n = g.n
    table = h_colorable_table(g, h)
    if table[-1]:
        return tuple(range(n))
    pc = _popcounts(n)
    s = int(pc[table].max())
    masks = np.nonzero(table & (pc == s))[0].astype(np.int64)
    return tuple(iter_bits(_lex_first(masks, n)))


def s_of_g(g: Graph, h: int, max_n: int | None = None) -> int:
    """Maximum number of vertices of ``g`` that can be properly coloured with ``h`` colours."""
    _guard("s_of_g", g.n, max_n, S_EXACT_MAX_N)
    if h < 0:
        raise ValueError("colour budget must be non-negative")
    table = h_colorable_table(g, h)
    if table[-1]:
        return g.n
    return int(_popcounts(g.n)[table].max())


def greedy_h_colorable(g: Graph, h: int) -> tuple[tuple[int, ...], Coloring]:
    """DSATUR-order assignment into at most h colours, discarding vertices that do not fit.

    Returns the kept vertex set and a colouring of the induced subgraph on it.
    """
    adj = g.adj
    classes = [0] * max(h, 0)
    uncol = g.vertex_mask
    while uncol:
        v = _pick_dsatur(adj, classes, uncol)
        uncol ^= 1 << v
        for c in range(h):
            if not adj[v] & classes[c]:
                classes[c] |= 1 << v
                break
    kept = 0
    for cl in classes:
        kept |= cl
    w = tuple(iter_bits(kept))
    pos = {v: i for i, v in enumerate(w)}
    colour = [0] * len(w)
    for c, cl in enumerate(classes):
        for v in iter_bits(cl):
            colour[pos[v]] = c
    return w, Coloring(tuple(colour), heuristic=True)


def cube_root_ceil(n: int) -> int:
    """Smallest integer r with r**3 >= n."""
    if n <= 0:
        return 0
    r = round(n ** (1.0 / 3.0))
    while r ** 3 < n:
        r += 1
    while r > 0 and (r - 1) ** 3 >= n:
        r -= 1
    return r


@dataclass(frozen=True)
class TwoPhaseResult:
    """Colouring of ``g`` as a budget-h part ``w`` plus a peeled residue ``u``."""

    w: tuple[int, ...]
    u: tuple[int, ...]
    base_colors: int
    extra_colors: int
    coloring: Coloring
    heuristic: bool = False

    @property
    def total(self) -> int:
        return self.base_colors + self.extra_colors


def two_phase_upper(g: Graph, h: int, mode: str = "auto",
                    residue_threshold: int | None = None) -> TwoPhaseResult:
    """Upper bound ``chi(G) <= chi(G[W]) + chi(G[U])`` with ``W`` of maximum size h-colourable.

    In exact mode ``W`` attains :func:`s_of_g` and ``G[W]`` is coloured
    optimally; heuristic mode uses :func:`greedy_h_colorable`.  The residue
    ``U = V \\ W`` is coloured by :func:`peel_coloring` with threshold
    ``ceil(n ** (1/3))`` for the order n of ``g``.
    """
    if h < 0:
        raise ValueError("colour budget must be non-negative")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    exact = mode == "exact" or (mode == "auto" and g.n <= S_EXACT_MAX_N)
    if exact:
        w = max_h_colorable_set(g, h)
        gw = induced_subgraph(g, w)
        base, wcol = chromatic_number_exact(gw)
    else:
        w, wcol = greedy_h_colorable(g, h)
        base = wcol.color_count
    wmask = vertex_set_mask(g, w)
    u = tuple(v for v in range(g.n) if not wmask >> v & 1)
    threshold = cube_root_ceil(g.n) if residue_threshold is None else residue_threshold
    ucol = peel_coloring(induced_subgraph(g, u), threshold)
    colour = [-1] * g.n
    for i, v in enumerate(w):
        colour[v] = wcol.assignment[i]
    for i, v in enumerate(u):
        colour[v] = base + ucol.assignment[i]
    heuristic = (not exact) or ucol.heuristic
    return TwoPhaseResult(w, u, base, ucol.color_count, Coloring(tuple(colour), heuristic), heuristic)


def is_independent_set(g: Graph, vertices) -> bool:
    return is_independent(g.adj, vertex_set_mask(g, vertices))
