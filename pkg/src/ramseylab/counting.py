"""Exact counting oracles for the progression-avoidance proofs.

Colorings of [1, N] are identified with integers in [0, 2^N): bit p-1 holds
the color of position p.  A coloring contains a monochromatic progression
with mask m exactly when (c & m) is 0 or m, which lets numpy sweep all 2^N
colorings against a mask list in bulk.  The full-enumeration budget is
N <= 24; larger N must go through mc_good_fraction.

Counts are accumulated per index range in exact integers, so partitioning
the enumeration (for concurrency or memory) cannot change any result.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

import numpy as np

from .errors import BudgetExceededError
from .progressions import (
    Coloring,
    ProgressionKind,
    enumerate_progressions,
    progression_masks,
)
from .rng import CHUNK, Rng

__all__ = [
    "ENUMERATION_BUDGET",
    "CountReport",
    "LambdaVector",
    "RSet",
    "SumBound",
    "Estimate",
    "count_T",
    "count_S",
    "union_bound_check",
    "build_R_set",
    "closure_property_check",
    "lambda_vector",
    "dominant_eigenvalue",
    "scope2_closed_sum",
    "scopem_multinomial_sum",
    "mc_good_fraction",
]

ENUMERATION_BUDGET = 24
_RANGE = 1 << 20


@dataclass(frozen=True)
class CountReport:
    N: int
    k: int
    kind: ProgressionKind
    S: int
    T: dict
    sum_T: int
    max_T: int
    union_bound: Fraction
    argmax: Optional[tuple[int, int]]
    argmax_at_origin: Optional[bool]
    chain_ok: bool


@dataclass(frozen=True)
class LambdaVector:
    k: int
    v0: Fraction
    v1: Fraction

    @property
    def sum(self) -> Fraction:
        return self.v0 + self.v1


@dataclass(frozen=True)
class RSet:
    a: int
    d: int
    k: int
    N: int
    kind: ProgressionKind
    elements: tuple[int, ...]
    s: int
    t: int


class SumBound(NamedTuple):
    value: int
    bound: Fraction


class Estimate(NamedTuple):
    value: float
    std_error: float


def _check_budget(N: int):
    if N > ENUMERATION_BUDGET:
        raise BudgetExceededError(
            f"full enumeration limited to N <= {ENUMERATION_BUDGET}, got {N}"
        )
    if N < 1:
        raise ValueError("need N >= 1")


def _count_hit(N: int, masks) -> int:
    """How many colorings of [1, N] are monochromatic on some mask."""
    if not masks:
        return 0
    npmasks = [np.uint32(m) for m in masks]
    total = 1 << N
    count = 0
    for lo in range(0, total, _RANGE):
        idx = np.arange(lo, min(lo + _RANGE, total), dtype=np.uint32)
        hit = np.zeros(idx.shape, dtype=bool)
        for m in npmasks:
            v = idx & m
            hit |= (v == m) | (v == 0)
        count += int(hit.sum())
    return count


def _membership(N: int, masks) -> np.ndarray:
    idx = np.arange(1 << N, dtype=np.uint32)
    hit = np.zeros(idx.shape, dtype=bool)
    for m in masks:
        v = idx & np.uint32(m)
        hit |= (v == m) | (v == 0)
    return hit


def count_T(N: int, kind: ProgressionKind, k: int, a: int, d: int) -> int:
    """Colorings of [1, N] monochromatic on some k-term progression with
    first term a and witness difference d.  Zero when none fits."""
    _check_budget(N)
    if not (1 <= a <= N) or d < 1 or k < 1:
        raise ValueError("need 1 <= a <= N, d >= 1, k >= 1")
    if a + (k - 1) * d > N:
        return 0
    masks = {p.mask() for p in enumerate_progressions(N, kind, k, a, d)}
    return _count_hit(N, sorted(masks))


def count_S(N: int, kind: ProgressionKind, k: int) -> int:
    """Colorings of [1, N] containing any monochromatic k-term progression."""
    _check_budget(N)
    if k < 1:
        raise ValueError("need k >= 1")
    if k == 1:
        return 1 << N
    if N < k:
        return 0
    return _count_hit(N, progression_masks(N, kind, k))


def union_bound_check(N: int, kind: ProgressionKind, k: int) -> CountReport:
    """Exact S, the full T map, and the (N-k+1)(N/k)max T chain.

    The chain S <= sum T <= (N-k+1)(N/k)max T and the argmax-at-(1,1) claim
    are recorded in the report rather than asserted; probing them is the
    point of this oracle.
    """
    _check_budget(N)
    T = {}
    for d in range(1, N + 1):
        if 1 + (k - 1) * d > N:
            break
        for a in range(1, N - (k - 1) * d + 1):
            T[(a, d)] = count_T(N, kind, k, a, d)
    S = count_S(N, kind, k)
    sum_T = sum(T.values())
    if T:
        max_T = max(T.values())
        argmax = min(pair for pair, v in T.items() if v == max_T)
        argmax_at_origin = argmax == (1, 1) or T.get((1, 1)) == max_T
    else:
        max_T, argmax, argmax_at_origin = 0, None, None
    union_bound = Fraction((N - k + 1) * N, k) * max_T
    chain_ok = S <= sum_T and sum_T <= union_bound
    return CountReport(
        N=N,
        k=k,
        kind=kind,
        S=S,
        T=T,
        sum_T=sum_T,
        max_T=max_T,
        union_bound=union_bound,
        argmax=argmax,
        argmax_at_origin=argmax_at_origin,
        chain_ok=chain_ok,
    )


def build_R_set(N: int, kind: ProgressionKind, k: int, a: int, d: int) -> RSet:
    """The set of positions whose colors can influence membership in the
    (a, d) coloring family, with s = |R|.

    quasi(n): union over i < k-1 of the full blocks [a+id, a+id+n*i] plus
    the final block [a+(k-1)d, a+(k-1)d+t] clipped at N; t is its extent.
    semi(m): the d-spaced run {a+qd : 0 <= q <= k-1+r} with r maximal
    subject to r <= (m-1)(k-1) and a+(k-1+r)d <= N; here t reports r.
    """
    if a + (k - 1) * d > N:
        raise ValueError("no k-term progression fits")
    if k < 1 or d < 1 or a < 1:
        raise ValueError("need a, d, k >= 1")
    if kind.family == "quasi":
        n = kind.param
        elems = set()
        for i in range(k - 1):
            for x in range(a + i * d, min(a + i * d + n * i, N) + 1):
                elems.add(x)
        start = a + (k - 1) * d
        t = min(n * (k - 1), N - start)
        for x in range(start, start + t + 1):
            elems.add(x)
    elif kind.family == "semi":
        m = kind.param
        r = min((m - 1) * (k - 1), (N - a) // d - (k - 1))
        t = r
        elems = {a + q * d for q in range(k + r)}
    else:
        t = 0
        elems = {a + q * d for q in range(k)}
    elements = tuple(sorted(elems))
    return RSet(a=a, d=d, k=k, N=N, kind=kind, elements=elements, s=len(elements), t=t)


def closure_property_check(N: int, kind: ProgressionKind, k: int, a: int, d: int) -> bool:
    """Membership in the (a, d) family must not depend on colors outside R.

    Checked by enumeration: flipping any single element outside R maps the
    family's coloring set onto itself.
    """
    if N > 20:
        raise BudgetExceededError("closure check limited to N <= 20")
    if a + (k - 1) * d > N:
        return True
    rset = build_R_set(N, kind, k, a, d)
    masks = sorted({p.mask() for p in enumerate_progressions(N, kind, k, a, d)})
    member = _membership(N, masks)
    idx = np.arange(1 << N, dtype=np.uint32)
    outside = [p for p in range(1, N + 1) if p not in set(rset.elements)]
    for p in outside:
        flipped = idx ^ np.uint32(1 << (p - 1))
        if not np.array_equal(member[flipped], member):
            return False
    return True


def lambda_vector(k: int) -> LambdaVector:
    """Exact jump-weight vector: k-1 applications of A = [[1, 1/2], [1, 1]]
    to (1, 1)."""
    if k < 1:
        raise ValueError("need k >= 1")
    v0, v1 = Fraction(1), Fraction(1)
    for _ in range(k - 1):
        v0, v1 = v0 + v1 / 2, v0 + v1
    return LambdaVector(k, v0, v1)


def dominant_eigenvalue(max_iter: int = 200) -> float:
    """Dominant eigenvalue of A by power iteration on exact rationals."""
    v0, v1 = Fraction(1), Fraction(1)
    ratio = 0.0
    for _ in range(max_iter):
        n0, n1 = v0 + v1 / 2, v0 + v1
        new_ratio = float(Fraction(n0 + n1, v0 + v1))
        if abs(new_ratio - ratio) < 1e-15:
            return new_ratio
        ratio = new_ratio
        v0, v1 = n0, n1
    return ratio


def scope2_closed_sum(k: int, r: int) -> SumBound:
    """Sum over l <= r of C(k-1, l) 2^(r+1-l), against the bound
    2^(r+1) (3/2)^(k-1).  Equality holds exactly when r = k-1."""
    if k < 1 or not (0 <= r <= k - 1):
        raise ValueError("need k >= 1 and 0 <= r <= k-1")
    value = sum(math.comb(k - 1, l) * 2 ** (r + 1 - l) for l in range(r + 1))
    bound = 2 ** (r + 1) * Fraction(3, 2) ** (k - 1)
    return SumBound(value, bound)


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def scopem_multinomial_sum(k: int, m: int, r: int) -> SumBound:
    """Weighted multinomial sum over jump-type compositions for scope m.

    Sums multinomial(k-1; x) 2^(r+1-w) over compositions x of k-1 into m
    parts with weight w = sum (i-1) x_i <= r; the bound is
    2^(r+1) 2^(k-1) ((2^m - 1)/2^m)^(k-1), attained exactly at
    r = (m-1)(k-1).
    """
    if k < 1 or m < 1 or not (0 <= r <= (m - 1) * (k - 1)):
        raise ValueError("need k, m >= 1 and 0 <= r <= (m-1)(k-1)")
    fact = math.factorial
    value = 0
    for x in _compositions(k - 1, m):
        w = sum((i) * x[i] for i in range(m))  # parts are 1..m, weight (i-1)
        if w > r:
            continue
        mult = fact(k - 1)
        for xi in x:
            mult //= fact(xi)
        value += mult * 2 ** (r + 1 - w)
    bound = 2 ** (r + 1) * 2 ** (k - 1) * Fraction(2**m - 1, 2**m) ** (k - 1)
    return SumBound(value, bound)


def mc_good_fraction(
    N: int, kind: ProgressionKind, k: int, samples: int, seed: int
) -> Estimate:
    """Monte-Carlo estimate of the fraction of colorings with no
    monochromatic k-term progression.

    Samples are drawn in fixed chunks of CHUNK colorings, chunk j from
    substream j of the seed, so the estimate is independent of how chunks
    are scheduled.  One 64-bit word is drawn per sample; N <= 64 runs
    vectorized, larger N falls back to a per-sample scan.
    """
    if samples < 1:
        raise ValueError("need samples >= 1")
    if k < 2:
        return Estimate(0.0, 0.0)
    masks = progression_masks(N, kind, k) if N >= k else []
    good = 0
    done = 0
    chunk_id = 0
    while done < samples:
        cnt = min(CHUNK, samples - done)
        rng = Rng(seed, stream_id=chunk_id)
        if N <= 64:
            words = rng.block_u64(cnt)
            if N < 64:
                words = words & np.uint64((1 << N) - 1)
            bad = np.zeros(cnt, dtype=bool)
            for m in masks:
                v = words & np.uint64(m)
                bad |= (v == np.uint64(m)) | (v == np.uint64(0))
            good += int(cnt - bad.sum())
        else:
            full = (1 << N) - 1
            for _ in range(cnt):
                c = 0
                for w in range((N + 63) // 64):
                    c |= rng.next_u64() << (64 * w)
                c &= full
                if all((c & m) != m and (c & m) != 0 for m in masks):
                    good += 1
        done += cnt
        chunk_id += 1
    est = good / samples
    se = math.sqrt(est * (1.0 - est) / samples)
    return Estimate(est, se)
