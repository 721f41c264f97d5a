"""Exact Ramsey-type numbers by backtracking over 2-colorings.

The solver colors positions 1..N in order, keeping each color class as a
bitmask, and prunes a branch the moment a monochromatic k-term progression
ends at the newest position (any monochromatic progression has a last
element, so this check is complete).  Color 0 is tried before color 1, which
makes the first coloring found the lexicographically least good one; all the
shortcuts below (symmetry breaking, warm starts, prefix splitting) are
arranged to preserve that witness.

The value ramsey_number returns is the least N with no good coloring.  Its
correctness rests on downward closure: restricting a good coloring of [1, N]
to [1, N-1] keeps it good, so the first failing N is found by ascending N.

Parallel mode splits the tree at a fixed prefix depth into independent
subtree tasks.  Tasks are merged in prefix lexicographic order and the node
count is the sum over merged tasks up to the first success, so value,
witness, and nodes_explored do not depend on the worker count.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from multiprocessing import get_context
from typing import Optional

from .errors import BudgetExceededError, CeilingReachedError, TimeBudgetError
from .progressions import (
    Coloring,
    ProgressionKind,
    find_monochromatic,
    progression_masks_by_last,
)

__all__ = [
    "SearchConfig",
    "Certificate",
    "RamseyResult",
    "exists_good_coloring",
    "ramsey_number",
    "verify_certificate",
    "DEFAULT_NODE_BUDGET",
]

DEFAULT_NODE_BUDGET = 10**9


@dataclass
class SearchConfig:
    kind: ProgressionKind
    k: int
    max_n: int
    symmetry_break: bool = True
    parallel_width: int = 0
    threads: int = 1
    node_budget: int = DEFAULT_NODE_BUDGET
    time_budget: Optional[float] = None

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("need k >= 2")
        if self.max_n < self.k:
            raise ValueError("need max_n >= k")
        if self.parallel_width < 0 or self.parallel_width >= self.max_n:
            raise ValueError("need 0 <= parallel_width < max_n")
        if self.threads < 1:
            raise ValueError("need threads >= 1")


@dataclass(frozen=True)
class Certificate:
    kind: ProgressionKind
    k: int
    n: int
    coloring: Coloring

    def __post_init__(self):
        if self.coloring.n != self.n:
            raise ValueError("certificate length mismatch")


@dataclass(frozen=True)
class RamseyResult:
    value: int
    witness: Certificate
    nodes_explored: int
    elapsed: float


def verify_certificate(c: Certificate) -> bool:
    """Independent check: full scan only, never the incremental path."""
    return find_monochromatic(c.coloring, c.kind, c.k) is None


class _Budget:
    __slots__ = ("nodes", "limit", "deadline")

    def __init__(self, limit: int, deadline: Optional[float]):
        self.nodes = 0
        self.limit = limit
        self.deadline = deadline

    def spend(self):
        self.nodes += 1
        if self.nodes > self.limit:
            raise BudgetExceededError(f"node budget {self.limit} exhausted")
        if self.deadline is not None and (self.nodes & 4095) == 0:
            if time.monotonic() > self.deadline:
                raise TimeBudgetError("time budget exhausted")


def _dfs(by_last, N, pos, c0, c1, budget):
    """Lex-least good completion from position pos, or None."""
    if pos > N:
        return c0, c1
    bit = 1 << (pos - 1)
    masks = by_last[pos]
    for zero_side in (True, False):
        budget.spend()
        cls = (c0 | bit) if zero_side else (c1 | bit)
        ok = True
        for m in masks:
            if m & cls == m:
                ok = False
                break
        if ok:
            r = _dfs(by_last, N, pos + 1,
                     cls if zero_side else c0,
                     c1 if zero_side else cls,
                     budget)
            if r is not None:
                return r
    return None


def _classes_to_coloring(N: int, c1: int) -> Coloring:
    return Coloring(N, tuple((c1 >> i) & 1 for i in range(N)))


def _search_plain(by_last, N, cfg: SearchConfig, deadline):
    budget = _Budget(cfg.node_budget, deadline)
    if cfg.symmetry_break and N >= 1:
        # color(1) = 0: swapping colors preserves goodness, and the
        # lex-least good coloring starts with 0 anyway
        budget.spend()
        r = _dfs(by_last, N, 2, 1, 0, budget)
    else:
        r = _dfs(by_last, N, 1, 0, 0, budget)
    if r is None:
        return None, budget.nodes
    return _classes_to_coloring(N, r[1]), budget.nodes


# Worker context; populated in the parent before the fork-based pool spawns
# workers, so child processes inherit it.
_POOL_MASKS = None


def _solve_prefix(args):
    prefix, N, limit, deadline = args
    by_last = _POOL_MASKS
    budget = _Budget(limit, deadline)
    c0 = c1 = 0
    try:
        for i, color in enumerate(prefix):
            pos = i + 1
            budget.spend()
            bit = 1 << (pos - 1)
            cls = (c0 | bit) if color == 0 else (c1 | bit)
            for m in by_last[pos]:
                if m & cls == m:
                    return None, budget.nodes, None
            if color == 0:
                c0 = cls
            else:
                c1 = cls
        r = _dfs(by_last, N, len(prefix) + 1, c0, c1, budget)
    except BudgetExceededError:
        return None, budget.nodes, "budget"
    except TimeBudgetError:
        return None, budget.nodes, "time"
    if r is None:
        return None, budget.nodes, None
    return r[1], budget.nodes, None


def _prefixes(width: int, symmetry_break: bool):
    if symmetry_break:
        for rest in product((0, 1), repeat=width - 1):
            yield (0,) + rest
    else:
        yield from product((0, 1), repeat=width)


def _search_split(by_last, N, cfg: SearchConfig, deadline):
    """Prefix-split search; merge order makes the outcome thread-count-free."""
    global _POOL_MASKS
    width = min(cfg.parallel_width, N)
    tasks = [(p, N, cfg.node_budget, deadline) for p in _prefixes(width, cfg.symmetry_break)]
    total = 0
    if cfg.threads == 1:
        for t in tasks:
            _POOL_MASKS = by_last
            c1, nodes, failure = _solve_prefix(t)
            total += nodes
            _check_merge(total, failure, cfg)
            if c1 is not None:
                return _classes_to_coloring(N, c1), total
        return None, total
    _POOL_MASKS = by_last
    ctx = get_context("fork")
    with ProcessPoolExecutor(max_workers=cfg.threads, mp_context=ctx) as pool:
        futures = [pool.submit(_solve_prefix, t) for t in tasks]
        try:
            for fut in futures:
                c1, nodes, failure = fut.result()
                total += nodes
                _check_merge(total, failure, cfg)
                if c1 is not None:
                    return _classes_to_coloring(N, c1), total
        finally:
            for fut in futures:
                fut.cancel()
    return None, total


def _check_merge(total, failure, cfg):
    if failure == "budget" or total > cfg.node_budget:
        raise BudgetExceededError(f"node budget {cfg.node_budget} exhausted")
    if failure == "time":
        raise TimeBudgetError("time budget exhausted")


def _search_at(by_last, N, cfg: SearchConfig, deadline):
    if cfg.parallel_width > 0:
        return _search_split(by_last, N, cfg, deadline)
    return _search_plain(by_last, N, cfg, deadline)


def exists_good_coloring(
    N: int, kind: ProgressionKind, k: int, cfg: Optional[SearchConfig] = None
) -> Optional[Coloring]:
    """A coloring of [1, N] with no monochromatic k-term progression, or None.

    When a coloring exists, the lexicographically least one is returned.
    """
    if N < 1 or k < 2:
        raise ValueError("need N >= 1 and k >= 2")
    if cfg is None:
        cfg = SearchConfig(kind, k, max_n=max(N, k))
    if N < k:
        return Coloring(N, (0,) * N)
    by_last = progression_masks_by_last(N, kind, k)
    deadline = None if cfg.time_budget is None else time.monotonic() + cfg.time_budget
    witness, _ = _search_at(by_last, N, cfg, deadline)
    return witness


def _good_extension(by_last, N, c0, c1, color):
    bit = 1 << (N - 1)
    cls = (c0 | bit) if color == 0 else (c1 | bit)
    for m in by_last[N]:
        if m & cls == m:
            return False
    return True


def ramsey_number(cfg: SearchConfig) -> RamseyResult:
    """Least N <= cfg.max_n such that no good coloring of [1, N] exists.

    Ascends N starting from k.  Each step first tries to extend the previous
    witness by one position (the extension, when it works, is again the
    lex-least witness); only when both extensions die does the full
    backtracking run.  Raises CeilingReachedError when good colorings still
    exist at max_n.
    """
    t0 = time.perf_counter()
    kind, k = cfg.kind, cfg.k
    by_last = progression_masks_by_last(cfg.max_n, kind, k)
    deadline = None if cfg.time_budget is None else time.monotonic() + cfg.time_budget
    nodes_total = 0
    # at N = k-1 every coloring is good; all zeros is the lex-least
    c0 = (1 << (k - 1)) - 1
    c1 = 0
    value = None
    for N in range(k, cfg.max_n + 1):
        found = None
        try:
            for color in (0, 1):
                nodes_total += 1
                if _good_extension(by_last, N, c0, c1, color):
                    bit = 1 << (N - 1)
                    if color == 0:
                        found = (c0 | bit, c1)
                    else:
                        found = (c0, c1 | bit)
                    break
            if found is None:
                witness, nodes = _search_at(by_last, N, cfg, deadline)
                nodes_total += nodes
                if witness is not None:
                    found = (witness.class_mask(0), witness.class_mask(1))
        except TimeBudgetError:
            raise TimeBudgetError("time budget exhausted", lower_bound=N) from None
        if found is None:
            value = N
            break
        c0, c1 = found
    witness_coloring = _classes_to_coloring(max(k - 1, (value or cfg.max_n + 1) - 1), c1)
    if value is None:
        cert = Certificate(kind, k, cfg.max_n, _classes_to_coloring(cfg.max_n, c1))
        raise CeilingReachedError(cfg.max_n + 1, witness=cert, nodes=nodes_total)
    cert = Certificate(kind, k, value - 1, witness_coloring)
    return RamseyResult(value, cert, nodes_total, time.perf_counter() - t0)
