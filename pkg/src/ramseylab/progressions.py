"""Progression families on [1, N] and their verification primitives.

Three families, all parameterized by a positive witness difference d:

  arithmetic      every jump equals d
  semi(m)         every jump lies in {d, 2d, ..., m*d}
  quasi(n)        every jump lies in {d, d+1, ..., d+n}

semi(1) and quasi(0) coincide with the arithmetic family; that equivalence
is a tested property, not an assumption.

Conventions used throughout the package: integers are 1-indexed positions,
colorings are over {0, 1}, and bit p-1 of an integer bitmask stands for
position p (so a coloring's color-1 class read as a binary number equals
the coloring's index in 0..2^n-1 enumeration order).
"""

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

__all__ = [
    "ProgressionKind",
    "Coloring",
    "Progression",
    "feasible_differences",
    "is_progression",
    "enumerate_progressions",
    "find_monochromatic",
    "find_monochromatic_ending_at",
    "progression_masks",
    "progression_masks_by_last",
]


@dataclass(frozen=True)
class ProgressionKind:
    """Tagged progression family: 'arithmetic', 'semi' (scope m), 'quasi' (diameter n)."""

    family: str
    param: int = 0

    def __post_init__(self):
        if self.family not in ("arithmetic", "semi", "quasi"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "semi" and self.param < 1:
            raise ValueError("semi scope must be >= 1")
        if self.family == "quasi" and self.param < 0:
            raise ValueError("quasi diameter must be >= 0")
        if self.family == "arithmetic" and self.param != 0:
            raise ValueError("arithmetic kind takes no parameter")

    @staticmethod
    def arithmetic() -> "ProgressionKind":
        return ProgressionKind("arithmetic")

    @staticmethod
    def semi(scope: int) -> "ProgressionKind":
        return ProgressionKind("semi", scope)

    @staticmethod
    def quasi(diameter: int) -> "ProgressionKind":
        return ProgressionKind("quasi", diameter)

    @staticmethod
    def parse(family: str, param: int = 0) -> "ProgressionKind":
        """Accepts the CLI spellings ap/semi/quasi."""
        name = family.lower()
        if name in ("ap", "arithmetic"):
            return ProgressionKind.arithmetic()
        if name == "semi":
            return ProgressionKind.semi(param)
        if name == "quasi":
            return ProgressionKind.quasi(param)
        raise ValueError(f"unknown family {family!r}")

    def jump_set(self, d: int) -> tuple[int, ...]:
        """Allowed jumps for witness difference d, ascending."""
        if d < 1:
            raise ValueError("difference must be >= 1")
        if self.family == "arithmetic":
            return (d,)
        if self.family == "semi":
            return tuple(i * d for i in range(1, self.param + 1))
        return tuple(d + i for i in range(self.param + 1))

    def __str__(self):
        if self.family == "arithmetic":
            return "ap"
        return f"{self.family}({self.param})"


@dataclass(frozen=True)
class Coloring:
    """A 2-coloring of [1, n]; colors[i] is the color of integer i+1."""

    n: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.colors) != self.n:
            raise ValueError("colors length must equal n")
        if any(c not in (0, 1) for c in self.colors):
            raise ValueError("colors must be 0 or 1")

    @staticmethod
    def from_string(s: str) -> "Coloring":
        return Coloring(len(s), tuple(int(ch) for ch in s))

    @staticmethod
    def from_index(n: int, index: int) -> "Coloring":
        """Coloring whose color-1 class, read as a binary number, is `index`."""
        return Coloring(n, tuple((index >> i) & 1 for i in range(n)))

    def to_string(self) -> str:
        return "".join(str(c) for c in self.colors)

    def color_of(self, p: int) -> int:
        return self.colors[p - 1]

    def class_mask(self, color: int) -> int:
        """Bitmask of the positions carrying `color` (bit p-1 for position p)."""
        m = 0
        for i, c in enumerate(self.colors):
            if c == color:
                m |= 1 << i
        return m

    def __str__(self):
        return self.to_string()


@dataclass(frozen=True)
class Progression:
    terms: tuple[int, ...]
    kind: ProgressionKind
    difference: Optional[int] = None

    def __str__(self):
        return ",".join(str(t) for t in self.terms)

    def mask(self) -> int:
        m = 0
        for t in self.terms:
            m |= 1 << (t - 1)
        return m


def _jumps(terms: Sequence[int]) -> list[int]:
    return [terms[i + 1] - terms[i] for i in range(len(terms) - 1)]


def feasible_differences(terms: Sequence[int], kind: ProgressionKind) -> set[int]:
    """All d >= 1 witnessing that `terms` belongs to the family.

    arithmetic: the common jump, if there is one.
    semi(m): divisors d of every jump with max jump <= m*d.
    quasi(n): the interval max(1, maxjump - n) .. minjump.
    """
    if len(terms) < 2:
        raise ValueError("need at least two terms")
    if any(terms[i + 1] <= terms[i] for i in range(len(terms) - 1)):
        raise ValueError("terms must be strictly increasing")
    js = _jumps(terms)
    lo, hi = min(js), max(js)
    if kind.family == "arithmetic":
        return {lo} if lo == hi else set()
    if kind.family == "quasi":
        return set(range(max(1, hi - kind.param), lo + 1))
    # semi: jump = i*d with 1 <= i <= m forces d | jump and jump/d <= m
    out = set()
    for d in range(1, lo + 1):
        if hi <= kind.param * d and all(j % d == 0 for j in js):
            out.add(d)
    return out


def is_progression(terms: Sequence[int], kind: ProgressionKind) -> bool:
    """A single term is vacuously a progression of every kind."""
    if len(terms) == 0:
        raise ValueError("terms must be nonempty")
    if len(terms) == 1:
        return True
    if any(terms[i + 1] <= terms[i] for i in range(len(terms) - 1)):
        return False
    return bool(feasible_differences(terms, kind))


def enumerate_progressions(
    N: int, kind: ProgressionKind, k: int, a: int, d: int
) -> Iterator[Progression]:
    """All k-term progressions with first term a, witness d, and terms <= N.

    Jump patterns are expanded in lexicographic order (jumps ascending), and
    distinct patterns give distinct term sequences, so the stream is
    duplicate-free.
    """
    if not (1 <= a <= N):
        raise ValueError("need 1 <= a <= N")
    if d < 1 or k < 1:
        raise ValueError("need d >= 1 and k >= 1")
    if k == 1:
        yield Progression((a,), kind, d)
        return
    jumps = kind.jump_set(d)
    min_jump = jumps[0]
    terms = [a]

    def rec(remaining: int) -> Iterator[Progression]:
        if remaining == 0:
            yield Progression(tuple(terms), kind, d)
            return
        cur = terms[-1]
        for j in jumps:
            # jumps ascend, so once this one overshoots they all do
            if cur + j + (remaining - 1) * min_jump > N:
                break
            terms.append(cur + j)
            yield from rec(remaining - 1)
            terms.pop()

    yield from rec(k - 1)


def progression_masks_by_last(N: int, kind: ProgressionKind, k: int) -> list[list[int]]:
    """Bitmasks of every k-term progression in [1, N], grouped by last term.

    Entry [p] lists the masks whose largest element is p, deduplicated (the
    same term set can arise from several witness differences).  This is the
    table the incremental search check walks.
    """
    if k < 2:
        raise ValueError("need k >= 2")
    by_last: list[set[int]] = [set() for _ in range(N + 1)]
    d = 1
    while a_fits(1, d, k, N):
        for a in range(1, N - (k - 1) * d + 1):
            for prog in enumerate_progressions(N, kind, k, a, d):
                by_last[prog.terms[-1]].add(prog.mask())
        d += 1
    return [sorted(s) for s in by_last]


def a_fits(a: int, d: int, k: int, N: int) -> bool:
    return a + (k - 1) * d <= N


def progression_masks(N: int, kind: ProgressionKind, k: int) -> list[int]:
    """Deduplicated masks of all k-term progressions in [1, N]."""
    out: set[int] = set()
    for lst in progression_masks_by_last(N, kind, k):
        out.update(lst)
    return sorted(out)


def find_monochromatic(c: Coloring, kind: ProgressionKind, k: int) -> Optional[Progression]:
    """Some monochromatic k-term progression in [1, c.n], or None.

    Full scan over all (a, d) pairs; every progression is reachable from the
    witness d = its minimum jump, so the scan is exhaustive.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    if k == 1:
        return Progression((1,), kind, 1) if c.n >= 1 else None
    N = c.n
    d = 1
    while a_fits(1, d, k, N):
        for a in range(1, N - (k - 1) * d + 1):
            for prog in enumerate_progressions(N, kind, k, a, d):
                first = c.color_of(prog.terms[0])
                if all(c.color_of(t) == first for t in prog.terms[1:]):
                    return prog
        d += 1
    return None


def find_monochromatic_ending_at(
    c: Coloring, kind: ProgressionKind, k: int, last: int
) -> Optional[Progression]:
    """Incremental variant: only progressions whose last term equals `last`."""
    if k < 1:
        raise ValueError("need k >= 1")
    if not (1 <= last <= c.n):
        return None
    if k == 1:
        return Progression((last,), kind, 1)
    d = 1
    while a_fits(1, d, k, last):
        for a in range(1, last - (k - 1) * d + 1):
            for prog in enumerate_progressions(c.n, kind, k, a, d):
                if prog.terms[-1] != last:
                    continue
                first = c.color_of(prog.terms[0])
                if all(c.color_of(t) == first for t in prog.terms[1:]):
                    return prog
        d += 1
    return None
