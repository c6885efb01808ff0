"""Large cliques in every big vertex subset of a dense random graph.

Closed-form tail bounds used to show that, with high probability, every
vertex subset has edge density at least p/2, together with the greedy
clique extraction that turns this density into a clique of logarithmic
size.  All logarithms are natural.
"""

from __future__ import annotations

import decimal
import itertools
import math
from dataclasses import dataclass
from decimal import Decimal
from typing import Iterable

from .errors import EnumerationBudgetExceeded
from .graph import Graph, edge_count_mask, iter_bits, validate_p, vertex_set_mask

# density_event_check refuses to scan more than this many subsets
DENSITY_ENUMERATION_BUDGET = 10**7


@dataclass(frozen=True)
class TailParams:
    r: int
    p: float
    t: float

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("r must be non-negative")
        validate_p(self.p)
        if not self.t >= 0:
            raise ValueError("t must be non-negative")


def chernoff_lower_tail(tp: TailParams) -> float:
    """Bound ``exp(-t**2 / (2 r p))`` on ``P(X < r p - t)`` for ``X ~ Bin(r, p)``."""
    if tp.r == 0:
        raise ValueError("r must be positive")
    return math.exp(-(tp.t * tp.t) / (2.0 * tp.r * tp.p))


def sparse_subset_bound(n: int, u: int, p: float) -> float:
    """Union bound ``(e n / u * exp(-p u / 30)) ** u`` on some u-subset being sparse.

    The exponent is a difference of terms of order ``u ln n`` and ``p u^2``,
    so it is summed in 40-digit decimal arithmetic before rounding; the result
    saturates to ``inf`` or ``0.0`` outside the double range.
    """
    validate_p(p)
    if u < 1:
        raise ValueError("subset size u must be at least 1")
    if u > n:
        raise ValueError("subset size u cannot exceed n")
    with decimal.localcontext() as ctx:
        ctx.prec = 40
        ctx.traps[decimal.Overflow] = False
        du = Decimal(u)
        log_value = du * (1 + (Decimal(n) / du).ln() - Decimal(p) * du / 30)
        return float(log_value.exp())


def c_of_p(p: float) -> float:
    """Clique-size constant ``-1 / (12 ln(p / 2))``; positive for p in (0, 1)."""
    validate_p(p)
    return -1.0 / (12.0 * math.log(p / 2.0))


def guaranteed_clique_size(n: int, p: float) -> int:
    """``ceil(c(p) ln n)``, the clique size the greedy extraction is guaranteed."""
    if n < 1:
        raise ValueError("n must be positive")
    return max(1, math.ceil(c_of_p(p) * math.log(n)))


def greedy_clique(g: Graph, w: Iterable[int]) -> tuple[int, ...]:
    """Greedy clique inside ``w``.

    Repeatedly picks the vertex of the current candidate set with the most
    neighbours inside it (lowest index on ties), then restricts the candidates
    to that vertex's neighbourhood, stopping once the candidate set is empty.
    Returns the picked vertices in increasing order.
    """
    cand = vertex_set_mask(g, w)
    if not cand:
        raise ValueError("greedy_clique needs a non-empty vertex set")
    adj = g.adj
    picked = 0
    while cand:
        best_v, best_deg = -1, -1
        for v in iter_bits(cand):
            d = (adj[v] & cand).bit_count()
            if d > best_deg:
                best_v, best_deg = v, d
        picked |= 1 << best_v
        cand &= adj[best_v]
    return tuple(iter_bits(picked))


def density_event_check(g: Graph, u: int, p: float):
    """Check that every u-subset ``U`` of ``g`` has ``e(U) >= p u^2 / 4``.

    Returns ``None`` when the event holds, otherwise the lexicographically
    first violating subset as a sorted tuple.  Raises
    :class:`EnumerationBudgetExceeded` when ``C(n, u)`` exceeds
    :data:`DENSITY_ENUMERATION_BUDGET`.
    """
    validate_p(p)
    if not 0 <= u <= g.n:
        raise ValueError(f"subset size must lie in 0..{g.n}, got {u}")
    total = math.comb(g.n, u)
    if total > DENSITY_ENUMERATION_BUDGET:
        raise EnumerationBudgetExceeded("density_event_check", total, DENSITY_ENUMERATION_BUDGET)
    need = p * u * u / 4.0
    for subset in itertools.combinations(range(g.n), u):
        m = 0
        for v in subset:
            m |= 1 << v
        if edge_count_mask(g, m) < need:
            return subset
    return None
