"""Seeded Monte-Carlo experiments for concentration inequalities on G(n, p),
plus the exact graph solvers they need.

Sampling discipline: an experiment on `samples` samples consumes them in
fixed chunks of CHUNK, chunk j drawing exactly the same words from substream
j of the caller's seed no matter how chunks are scheduled, and aggregates
order-independent sums.  Repeating a run with the same (parameters, seed)
therefore reproduces every reported number bit for bit.

Graphs drawn with edge probability p consume one uniform per vertex pair, in
row-major pair order (0,1), (0,2), ..., (n-2, n-1).

Acceptance slack is 4 standard errors throughout.  Quantities estimated from
the sample set they are then tested on (the chromatic mean, the LIS median)
carry a bias that is far below that slack at the sample sizes used here.
"""

import math
from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import BudgetExceededError
from .rng import CHUNK, Rng

__all__ = [
    "Rng",
    "RandomGraph",
    "ExperimentReport",
    "gnp_sample",
    "chromatic_number",
    "clique_number",
    "has_three_path_all_pairs",
    "lis_length",
    "run_chebyshev_threepoint",
    "run_chernoff_coinflip",
    "run_azuma_chromatic",
    "run_janson_triangle",
    "run_janson_threepath",
    "run_talagrand_lis",
    "run_clique_survey",
    "EXPERIMENTS",
]


@dataclass(frozen=True)
class RandomGraph:
    """Undirected graph; rows[i] is the neighbor bitmask of vertex i."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError("rows length must equal n")
        for i, row in enumerate(self.rows):
            if (row >> i) & 1:
                raise ValueError("self-loops are not allowed")
            if row >> self.n:
                raise ValueError("row bits beyond n")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if ((self.rows[i] >> j) & 1) != ((self.rows[j] >> i) & 1):
                    raise ValueError("adjacency must be symmetric")

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def degree(self, i: int) -> int:
        return self.rows[i].bit_count()

    def edge_count(self) -> int:
        return sum(self.degree(i) for i in range(self.n)) // 2

    def to_numpy(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for i in range(self.n):
            for j in range(self.n):
                a[i, j] = (self.rows[i] >> j) & 1
        return a


@dataclass(frozen=True)
class ExperimentReport:
    name: str
    parameters: dict
    samples: int
    estimate: float
    std_error: float
    bound_value: Optional[float]
    passed: bool
    extra: dict = field(default_factory=dict)


def _se(p_hat: float, samples: int) -> float:
    return math.sqrt(max(p_hat * (1.0 - p_hat), 0.0) / samples)


def _chunked(samples: int):
    done, j = 0, 0
    while done < samples:
        cnt = min(CHUNK, samples - done)
        yield j, cnt
        done += cnt
        j += 1


def _pair_count(n: int) -> int:
    return n * (n - 1) // 2


def _rows_from_bits(n: int, bits) -> tuple[int, ...]:
    rows = [0] * n
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            if bits[idx]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return tuple(rows)


def gnp_sample(n: int, p: float, rng: Rng) -> RandomGraph:
    """G(n, p): each pair an edge independently with probability p."""
    if not (0.0 <= p <= 1.0):
        raise ValueError("need 0 <= p <= 1")
    bits = rng.block_floats(_pair_count(n)) < p
    return RandomGraph(n, _rows_from_bits(n, bits))


def _adjacency_batch(n: int, cnt: int, p: float, rng: Rng) -> np.ndarray:
    """(cnt, n, n) float32 adjacency tensor; same draws as cnt gnp_samples."""
    u = rng.block_floats(cnt * _pair_count(n)).reshape(cnt, _pair_count(n))
    bits = u < p
    iu, ju = np.triu_indices(n, 1)
    a = np.zeros((cnt, n, n), dtype=np.float32)
    a[:, iu, ju] = bits
    a[:, ju, iu] = bits
    return a


def clique_number(g: RandomGraph) -> int:
    """Exact maximum clique size, branch and bound on candidate bitsets with
    a greedy-coloring bound."""
    if g.n > 40:
        raise BudgetExceededError("clique solver limited to n <= 40")
    if g.n == 0:
        return 0
    rows = g.rows
    best = 0

    def expand(cand: int, size: int):
        nonlocal best
        if cand == 0:
            if size > best:
                best = size
            return
        verts = []
        c = cand
        while c:
            b = c & -c
            verts.append(b.bit_length() - 1)
            c ^= b
        # greedy coloring of the candidates; a clique needs one per color
        classes: list[int] = []
        color_of = {}
        for v in verts:
            for ci in range(len(classes)):
                if not (classes[ci] & rows[v]):
                    classes[ci] |= 1 << v
                    color_of[v] = ci + 1
                    break
            else:
                classes.append(1 << v)
                color_of[v] = len(classes)
        order = sorted(verts, key=lambda v: color_of[v])
        local = cand
        for v in reversed(order):
            if size + color_of[v] <= best:
                return
            expand(local & rows[v], size + 1)
            local &= ~(1 << v)

    expand((1 << g.n) - 1, 0)
    return best


def _greedy_clique(rows: Sequence[int], n: int) -> list[int]:
    best: list[int] = []
    for start in range(n):
        cl = [start]
        cand = rows[start]
        while cand:
            pick, pick_deg = -1, -1
            c = cand
            while c:
                b = c & -c
                v = b.bit_length() - 1
                c ^= b
                deg = (rows[v] & cand).bit_count()
                if deg > pick_deg:
                    pick_deg, pick = deg, v
            cl.append(pick)
            cand &= rows[pick]
        if len(cl) > len(best):
            best = cl
    return best


def _colorable(rows: Sequence[int], n: int, k: int, clique: Sequence[int]) -> bool:
    """Backtracking k-colorability, saturation-first order, clique pre-colored."""
    if len(clique) > k:
        return False
    full = (1 << k) - 1
    color = [0] * n
    forb = [0] * n
    for i, v in enumerate(clique):
        color[v] = i + 1
        m = rows[v]
        while m:
            b = m & -m
            u = b.bit_length() - 1
            m ^= b
            forb[u] |= 1 << i

    def pick() -> int:
        out, key = -1, (-1, -1)
        for v in range(n):
            if color[v] == 0:
                cand = (forb[v].bit_count(), rows[v].bit_count())
                if cand > key:
                    key, out = cand, v
        return out

    def rec(ncolored: int) -> bool:
        if ncolored == n:
            return True
        v = pick()
        avail = ~forb[v] & full
        while avail:
            b = avail & -avail
            avail ^= b
            c = b.bit_length()
            color[v] = c
            cbit = 1 << (c - 1)
            touched = []
            dead = False
            m = rows[v]
            while m:
                bb = m & -m
                u = bb.bit_length() - 1
                m ^= bb
                if color[u] == 0 and not (forb[u] & cbit):
                    forb[u] |= cbit
                    touched.append(u)
                    if forb[u] == full:
                        dead = True
            if not dead and rec(ncolored + 1):
                return True
            for u in touched:
                forb[u] &= ~cbit
            color[v] = 0
        return False

    return rec(len(clique))


def chromatic_number(g: RandomGraph) -> int:
    """Exact chromatic number: clique seed, then ascending k-colorability."""
    if g.n > 20:
        raise BudgetExceededError("chromatic solver limited to n <= 20")
    if g.n == 0:
        return 0
    clique = _greedy_clique(g.rows, g.n)
    k = len(clique)
    while not _colorable(g.rows, g.n, k, clique):
        k += 1
    return k


def has_three_path_all_pairs(g: RandomGraph) -> bool:
    """True iff every vertex pair is joined by a simple path of exactly
    three edges (two distinct internal vertices outside the pair).

    Simple 3-paths u-v count as walks minus the backtracking ones:
    (A^3)_uv - A_uv (deg u + deg v - 1).
    """
    n = g.n
    if n < 2:
        return True
    a = g.to_numpy()
    a3 = a @ a @ a
    deg = a.sum(axis=1)
    corr = a * (deg[:, None] + deg[None, :] - 1)
    simple = a3 - corr
    off = ~np.eye(n, dtype=bool)
    return bool((simple[off] > 0).all())


def _three_path_batch(a: np.ndarray) -> np.ndarray:
    """Vectorized all-pairs check over a (cnt, n, n) adjacency tensor."""
    n = a.shape[1]
    a3 = a @ a @ a
    deg = a.sum(axis=2)
    corr = a * (deg[:, :, None] + deg[:, None, :] - 1)
    simple = a3 - corr
    off = ~np.eye(n, dtype=bool)
    return (simple[:, off] > 0).all(axis=1)


def lis_length(x: Sequence[float]) -> int:
    """Longest strictly increasing subsequence by patience sorting."""
    tails: list[float] = []
    for v in x:
        i = bisect_left(tails, v)
        if i == len(tails):
            tails.append(v)
        else:
            tails[i] = v
    return len(tails)


def run_chebyshev_threepoint(p: float, a: float, samples: int, rng: Rng) -> ExperimentReport:
    """Three-point variable (0 w.p. 1-2p, +-a w.p. p each); the variance
    bound sigma^2/a^2 = 2p is attained, so the estimate must sit AT the
    bound, not merely below it."""
    if not (0.0 <= p <= 0.5):
        raise ValueError("need 0 <= p <= 1/2")
    if a <= 0:
        raise ValueError("need a > 0")
    if samples < 1:
        raise ValueError("need samples >= 1")
    hits = 0
    for j, cnt in _chunked(samples):
        u = rng.substream(j).block_floats(cnt)
        hits += int((u < 2.0 * p).sum())
    est = hits / samples
    se = _se(est, samples)
    bound = 2.0 * p
    return ExperimentReport(
        name="chebyshev-threepoint",
        parameters={"p": p, "a": a},
        samples=samples,
        estimate=est,
        std_error=se,
        bound_value=bound,
        passed=abs(est - bound) <= 4.0 * se,
    )


def run_chernoff_coinflip(n: int, lam: float, samples: int, rng: Rng) -> ExperimentReport:
    """Heads count of n fair flips against the tail bound exp(-lam^2/(3 mu)).

    Also reports the Chebyshev value sigma^2/lam^2 at the same lam for the
    weak-versus-strong comparison.
    """
    if n < 1 or lam <= 0 or samples < 1:
        raise ValueError("need n >= 1, lam > 0, samples >= 1")
    mu = n / 2.0
    words = (n + 63) // 64
    tail_bits = n - 64 * (words - 1)
    last_mask = np.uint64((1 << tail_bits) - 1) if tail_bits < 64 else np.uint64(2**64 - 1)
    threshold = mu + lam
    hits = 0
    for j, cnt in _chunked(samples):
        w = rng.substream(j).block_u64(cnt * words).reshape(cnt, words)
        w[:, -1] &= last_mask
        heads = np.bitwise_count(w).sum(axis=1)
        hits += int((heads >= threshold).sum())
    est = hits / samples
    se = _se(est, samples)
    bound = math.exp(-lam * lam / (3.0 * mu))
    chebyshev = (n / 4.0) / (lam * lam)
    return ExperimentReport(
        name="chernoff-coinflip",
        parameters={"n": n, "lam": lam},
        samples=samples,
        estimate=est,
        std_error=se,
        bound_value=bound,
        passed=est <= bound + 4.0 * se,
        extra={"mu": mu, "chebyshev_comparison": chebyshev},
    )


def run_azuma_chromatic(n: int, p: float, lam: float, samples: int, rng: Rng) -> ExperimentReport:
    """Tail of the chromatic number of G(n, p) around its empirical mean at
    scale lam*sqrt(n-1), against 2 exp(-lam^2/2)."""
    if n > 20:
        raise BudgetExceededError("exact chromatic limited to n <= 20")
    if n < 2 or lam <= 0 or samples < 1:
        raise ValueError("need 2 <= n <= 20, lam > 0, samples >= 1")
    if not (0.0 <= p <= 1.0):
        raise ValueError("need 0 <= p <= 1")
    pairs = _pair_count(n)
    values = []
    for j, cnt in _chunked(samples):
        bits = rng.substream(j).block_floats(cnt * pairs).reshape(cnt, pairs) < p
        for s in range(cnt):
            rows = _rows_from_bits(n, bits[s])
            values.append(chromatic_number(RandomGraph(n, rows)))
    arr = np.array(values, dtype=np.float64)
    mean = float(arr.mean())
    radius = lam * math.sqrt(n - 1)
    est = float((np.abs(arr - mean) > radius).mean())
    se = _se(est, samples)
    bound = 2.0 * math.exp(-lam * lam / 2.0)
    hist = Counter(values)
    return ExperimentReport(
        name="azuma-chromatic",
        parameters={"n": n, "p": p, "lam": lam},
        samples=samples,
        estimate=est,
        std_error=se,
        bound_value=bound,
        passed=est <= bound + 4.0 * se,
        extra={
            "mean_chromatic": mean,
            "radius": radius,
            "histogram": {str(key): hist[key] for key in sorted(hist)},
        },
    )


def run_janson_triangle(n: int, c: float, samples: int, rng: Rng) -> ExperimentReport:
    """Triangle-free probability of G(n, c/n) against the correlation
    sandwich M <= Pr <= M exp(Delta/(2(1-eps))).

    M = (1-p^3)^C(n,3), eps = p^3, and Delta counts the edge-sharing triangle
    pairs: C(n,3)*3*(n-3)*p^5.  The limit exp(-c^3/6) is reported alongside.
    """
    if n < 3 or c <= 0 or samples < 1:
        raise ValueError("need n >= 3, c > 0, samples >= 1")
    p = c / n
    if p > 1.0:
        raise ValueError("need p = c/n <= 1")
    free = 0
    for j, cnt in _chunked(samples):
        a = _adjacency_batch(n, cnt, p, rng.substream(j))
        paths2 = a @ a
        triangles = (paths2 * a).sum(axis=(1, 2))  # 6x the triangle count
        free += int((triangles == 0).sum())
    est = free / samples
    se = _se(est, samples)
    triples = math.comb(n, 3)
    m_low = (1.0 - p**3) ** triples
    eps = p**3
    delta = triples * 3 * (n - 3) * p**5
    upper = m_low * math.exp(delta / (2.0 * (1.0 - eps)))
    # plug-in se is 0 when every sample agrees; 3/samples keeps the
    # two-sided check honest at the boundary
    slack = 4.0 * se + 3.0 / samples
    passed = (m_low - slack) <= est <= (upper + slack)
    return ExperimentReport(
        name="janson-triangle",
        parameters={"n": n, "c": c},
        samples=samples,
        estimate=est,
        std_error=se,
        bound_value=upper,
        passed=passed,
        extra={
            "M": m_low,
            "epsilon": eps,
            "delta": delta,
            "limit": math.exp(-(c**3) / 6.0),
        },
    )


def run_janson_threepath(
    n: int, c: float, samples: int, rng: Rng, floor: float = 0.0
) -> ExperimentReport:
    """Probability that G(n, p) with p = (c ln n / n^2)^(1/3) joins every
    vertex pair by a simple 3-path.  The claim is asymptotic, so the report
    only asserts a configurable floor (default 0)."""
    if n < 4 or c < 2 or samples < 1:
        raise ValueError("need n >= 4, c >= 2, samples >= 1")
    p = (c * math.log(n) / (n * n)) ** (1.0 / 3.0)
    p = min(p, 1.0)
    good = 0
    for j, cnt in _chunked(samples):
        a = _adjacency_batch(n, cnt, p, rng.substream(j))
        good += int(_three_path_batch(a).sum())
    est = good / samples
    se = _se(est, samples)
    return ExperimentReport(
        name="janson-threepath",
        parameters={"n": n, "c": c},
        samples=samples,
        estimate=est,
        std_error=se,
        bound_value=None,
        passed=est >= floor,
        extra={"p": p, "floor": floor},
    )


def run_talagrand_lis(n: int, t: float, samples: int, rng: Rng) -> ExperimentReport:
    """Both LIS tails at distance t*sqrt(median) against 2 exp(-t^2/4);
    the median is taken from the same sample set."""
    if n < 10 or t <= 0 or samples < 1:
        raise ValueError("need n >= 10, t > 0, samples >= 1")
    values = []
    for j, cnt in _chunked(samples):
        u = rng.substream(j).block_floats(cnt * n).reshape(cnt, n)
        for s in range(cnt):
            values.append(lis_length(u[s]))
    arr = np.array(values, dtype=np.float64)
    med = float(np.median(arr))
    radius = t * math.sqrt(med)
    upper = float((arr > med + radius).mean())
    lower = float((arr < med - radius).mean())
    se_upper = _se(upper, samples)
    se_lower = _se(lower, samples)
    bound = 2.0 * math.exp(-t * t / 4.0)
    passed = upper <= bound + 4.0 * se_upper and lower <= bound + 4.0 * se_lower
    return ExperimentReport(
        name="talagrand-lis",
        parameters={"n": n, "t": t},
        samples=samples,
        estimate=upper,
        std_error=se_upper,
        bound_value=bound,
        passed=passed,
        extra={
            "lower_estimate": lower,
            "lower_std_error": se_lower,
            "median": med,
            "median_over_sqrt_n": med / math.sqrt(n),
        },
    )


def run_clique_survey(n: int, samples: int, rng: Rng) -> ExperimentReport:
    """Empirical distribution of the clique number of G(n, 1/2).

    Informational: reports Pr[omega < floor(log2 n)] (expected near 0) and
    the histogram; the known tail bound carries an unspecified constant,
    so nothing is asserted and passed is always true.
    """
    if n > 40:
        raise BudgetExceededError("clique solver limited to n <= 40")
    if n < 1 or samples < 1:
        raise ValueError("need n >= 1, samples >= 1")
    pairs = _pair_count(n)
    values = []
    for j, cnt in _chunked(samples):
        bits = rng.substream(j).block_floats(cnt * pairs).reshape(cnt, pairs) < 0.5
        for s in range(cnt):
            values.append(clique_number(RandomGraph(n, _rows_from_bits(n, bits[s]))))
    threshold = math.floor(math.log2(n))
    arr = np.array(values)
    est = float((arr < threshold).mean())
    hist = Counter(values)
    return ExperimentReport(
        name="clique-survey",
        parameters={"n": n},
        samples=samples,
        estimate=est,
        std_error=_se(est, samples),
        bound_value=None,
        passed=True,
        extra={
            "threshold": threshold,
            "two_log2_n": 2.0 * math.log2(n),
            "histogram": {str(key): hist[key] for key in sorted(hist)},
        },
    )


# experiment name -> (runner, required params, optional params with defaults)
EXPERIMENTS = {
    "chebyshev-threepoint": (run_chebyshev_threepoint, ("p", "a"), {}),
    "chernoff-coinflip": (run_chernoff_coinflip, ("n", "lam"), {}),
    "azuma-chromatic": (run_azuma_chromatic, ("n", "p", "lam"), {}),
    "janson-triangle": (run_janson_triangle, ("n", "c"), {}),
    "janson-threepath": (run_janson_threepath, ("n", "c"), {"floor": 0.0}),
    "talagrand-lis": (run_talagrand_lis, ("n", "t"), {}),
    "clique-survey": (run_clique_survey, ("n",), {}),
}
