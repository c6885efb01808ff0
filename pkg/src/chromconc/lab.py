"""Monte Carlo concentration laboratory for the chromatic number of G(n, p).

Samples graphs with per-trial derived seeds, solves each chromatic number
exactly, and summarises the empirical distribution: the quantile-type
threshold ``h_hat``, the shortest integer interval carrying mass at least
``1 - 1/omega(n)``, and the target width ``omega(n) sqrt(n) / ln n``.
"""

from __future__ import annotations

import json
import math
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .coloring import chromatic_number_exact, dsatur, s_of_g
from .errors import GuardExceeded
from .graph import GnpParams, Graph, complement, derive_seed, gen_gnp, validate_seed
from .lemma import greedy_clique, guaranteed_clique_size

LIPSCHITZ_MAX_N = 12


@dataclass(frozen=True)
class OmegaSpec:
    """Growth function omega(n), clamped below at 1.

    ``kind`` is ``"const"`` (value ``c``), ``"loglog"`` (``ln ln n``) or
    ``"log"`` (``ln n``).
    """

    kind: str = "loglog"
    c: float = 1.0

    def __post_init__(self):
        if self.kind not in ("const", "loglog", "log"):
            raise ValueError(f"unknown omega kind {self.kind!r}")
        if self.kind == "const" and not (math.isfinite(self.c) and self.c > 0):
            raise ValueError("constant omega must be a positive finite number")

    @classmethod
    def parse(cls, text: str) -> "OmegaSpec":
        if text in ("loglog", "log"):
            return cls(text)
        if text.startswith("const:"):
            try:
                c = float(text[len("const:"):])
            except ValueError:
                raise ValueError(f"bad omega constant in {text!r}") from None
            return cls("const", c)
        raise ValueError(f"omega must be const:<c>, loglog or log; got {text!r}")

    @property
    def descriptor(self) -> str:
        return f"const:{self.c:g}" if self.kind == "const" else self.kind

    def __call__(self, n: int) -> float:
        if self.kind == "const":
            raw = self.c
        elif self.kind == "log":
            raw = math.log(n) if n > 1 else 1.0
        else:
            raw = math.log(math.log(n)) if n > math.e else 1.0
        return max(1.0, raw)


def _as_omega(omega) -> OmegaSpec:
    if omega is None:
        return OmegaSpec()
    if isinstance(omega, OmegaSpec):
        return omega
    if isinstance(omega, str):
        return OmegaSpec.parse(omega)
    return OmegaSpec("const", float(omega))


@dataclass(frozen=True)
class TrialRecord:
    """Outcome of one trial; ``chi`` is ``None`` when the exact solve was refused."""

    index: int
    seed: int
    chi: int | None
    chi_lower: int
    chi_upper: int
    solve_time: float = field(default=0.0, compare=False)
    lemma_ok: bool = True

    def __post_init__(self):
        if self.chi_lower > self.chi_upper:
            raise ValueError("chi_lower exceeds chi_upper")
        if self.chi is not None and not self.chi_lower <= self.chi <= self.chi_upper:
            raise ValueError("chi outside its bound pair")


def azuma_tail(t: float, n: int) -> float:
    """``2 exp(-t**2 / n)``.  Not capped at 1: small t gives values up to 2."""
    if not t > 0:
        raise ValueError("deviation t must be positive")
    if n < 1:
        raise ValueError("n must be at least 1")
    return 2.0 * math.exp(-(t * t) / n)


def theorem1_width_target(n: int, omega) -> float:
    """Target interval length ``omega(n) * sqrt(n) / ln n``."""
    if n < 2:
        raise ValueError("width target needs n >= 2")
    return _as_omega(omega)(n) * math.sqrt(n) / math.log(n)


def _exact_counts(records: Sequence[TrialRecord]) -> Counter:
    if not records:
        raise ValueError("no trial records")
    if any(r.chi is None for r in records):
        raise ValueError("records without an exact chromatic number cannot define h")
    return Counter(r.chi for r in records)


def estimate_h_from_counts(counts: Counter, omega_value: float) -> int:
    """Smallest r whose empirical CDF strictly exceeds ``1/omega_value``.

    When no r qualifies (possible only for ``omega_value == 1``) the largest
    observed value is returned, the limit of the definition as omega -> 1+.
    """
    total = sum(counts.values())
    threshold = 1 / Fraction(omega_value)
    cum = 0
    for r in sorted(counts):
        cum += counts[r]
        if Fraction(cum, total) > threshold:
            return r
    return max(counts)


def estimate_h(records: Sequence[TrialRecord], omega, n: int) -> int:
    return estimate_h_from_counts(_exact_counts(records), _as_omega(omega)(n))


def shortest_mass_interval(counts: Counter, mass: Fraction) -> tuple[int, int]:
    """Shortest ``[lo, hi]`` with attained endpoints and empirical mass ``>= mass``.

    Ties go to the larger mass, then to the smaller ``lo``.
    """
    total = sum(counts.values())
    values = sorted(counts)
    best = None
    for i, lo in enumerate(values):
        cum = 0
        for hi in values[i:]:
            cum += counts[hi]
            if Fraction(cum, total) >= mass:
                key = (hi - lo, -cum, lo)
                if best is None or key < best[0]:
                    best = (key, lo, hi)
                break
    assert best is not None
    return best[1], best[2]


def lipschitz_check_s(g: Graph, h: int, v: int, max_n: int | None = None) -> int:
    """Largest change of :func:`s_of_g` over every rewiring of the edges at ``v``.

    All ``2**(n-1)`` neighbourhoods of ``v`` are tried.
    """
    limit = LIPSCHITZ_MAX_N if max_n is None else max_n
    if g.n > limit:
        raise GuardExceeded("lipschitz_check_s", g.n, limit)
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")
    base = s_of_g(g, h)
    others = [u for u in range(g.n) if u != v]
    stripped = [nb & ~(1 << v) for nb in g.adj]
    worst = 0
    for sub in range(1 << len(others)):
        new_nb = 0
        adj = list(stripped)
        for k, u in enumerate(others):
            if sub >> k & 1:
                new_nb |= 1 << u
                adj[u] |= 1 << v
        adj[v] = new_nb
        worst = max(worst, abs(s_of_g(Graph(g.n, tuple(adj)), h) - base))
    return worst


@dataclass(frozen=True)
class ConcentrationReport:
    n: int
    p: float
    trials: int
    master_seed: int
    omega: OmegaSpec
    omega_value: float
    counts: dict
    h_hat: int | None
    interval_lo: int | None
    interval_hi: int | None
    target_width: float | None
    incomplete_trials: int
    lemma_event_failures: int
    records: tuple = field(default=(), compare=False, repr=False)

    @property
    def width(self) -> int | None:
        if self.interval_lo is None:
            return None
        return self.interval_hi - self.interval_lo

    @property
    def complete(self) -> bool:
        return self.incomplete_trials == 0

    def cdf(self, r: int) -> float:
        exact = sum(self.counts.values())
        return sum(c for k, c in self.counts.items() if k <= r) / exact

    def to_csv(self) -> str:
        lines = ["chi,count"]
        lines.extend(f"{k},{self.counts[k]}" for k in sorted(self.counts))
        return "\n".join(lines) + "\n"

    def summary(self) -> dict:
        out = {
            "n": self.n,
            "p": _sig6(self.p),
            "trials": self.trials,
            "omega": self.omega.descriptor,
            "omega_value": _sig6(self.omega_value),
            "h_hat": self.h_hat,
            "interval_lo": self.interval_lo,
            "interval_hi": self.interval_hi,
            "width": self.width,
            "target_width": _sig6(self.target_width),
            "master_seed": self.master_seed,
            "incomplete_trials": self.incomplete_trials,
            "lemma_event_failures": self.lemma_event_failures,
        }
        if self.h_hat is not None:
            exact = sum(self.counts.values())
            f_h = self.cdf(self.h_hat)
            out["cdf_at_h_hat"] = _sig6(f_h)
            out["cdf_at_h_hat_stderr"] = _sig6(math.sqrt(f_h * (1 - f_h) / exact))
            out["cdf_below_h_hat"] = _sig6(self.cdf(self.h_hat - 1))
        return out

    def summary_json(self) -> str:
        return json.dumps(self.summary(), indent=2, sort_keys=True) + "\n"


def _sig6(x):
    if x is None:
        return None
    return float(f"{x:.6g}")


def run_trial(n: int, p: float, master_seed: int, index: int,
              chi_max_n: int | None = None) -> TrialRecord:
    seed = derive_seed(master_seed, index)
    g = gen_gnp(GnpParams(n, p, seed))
    lemma_ok = n == 0 or len(greedy_clique(complement(g), range(n))) >= guaranteed_clique_size(n, p)
    start = time.perf_counter()
    try:
        chi, _ = chromatic_number_exact(g, max_n=chi_max_n)
        lo = hi = chi
    except GuardExceeded:
        chi = None
        lo = len(greedy_clique(g, range(n))) if n else 0
        hi = dsatur(g).color_count
    return TrialRecord(index, seed, chi, lo, hi, time.perf_counter() - start, lemma_ok)


def _run_trial_args(args):
    return run_trial(*args)


def run_concentration_experiment(n: int, p: float, trials: int, master_seed: int,
                                 omega=None, chi_max_n: int | None = None,
                                 workers: int = 1) -> ConcentrationReport:
    """Sample ``trials`` graphs G(n, p) and summarise their chromatic numbers.

    Trial ``i`` uses seed ``derive_seed(master_seed, i)``.  Trials whose exact
    solve is refused record a bound pair and count as incomplete; they are left
    out of the distribution.  Aggregation is by counts, so ``workers > 1``
    gives the same report as a sequential run.
    """
    GnpParams(n, p, validate_seed(master_seed))
    if trials < 1:
        raise ValueError("trials must be at least 1")
    om = _as_omega(omega)
    args = [(n, p, master_seed, i, chi_max_n) for i in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_run_trial_args, args, chunksize=max(1, trials // (4 * workers))))
    else:
        records = [run_trial(*a) for a in args]
    records.sort(key=lambda r: r.index)

    omega_value = om(n)
    exact = [r for r in records if r.chi is not None]
    counts = Counter(r.chi for r in exact)
    h_hat = lo = hi = None
    if exact:
        h_hat = estimate_h_from_counts(counts, omega_value)
        lo, hi = shortest_mass_interval(counts, 1 - 1 / Fraction(omega_value))
    return ConcentrationReport(
        n=n,
        p=float(p),
        trials=trials,
        master_seed=master_seed,
        omega=om,
        omega_value=omega_value,
        counts=dict(sorted(counts.items())),
        h_hat=h_hat,
        interval_lo=lo,
        interval_hi=hi,
        target_width=theorem1_width_target(n, om) if n >= 2 else None,
        incomplete_trials=len(records) - len(exact),
        lemma_event_failures=sum(not r.lemma_ok for r in records),
        records=tuple(records),
    )
