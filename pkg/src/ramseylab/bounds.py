"""Closed-form bounds and exact formulas for Ramsey-type numbers.

Every evaluator is a pure function that checks its applicability
preconditions explicitly and raises ApplicabilityError naming the violated
clause.  Exact integer results are computed with arbitrary-precision
arithmetic; asymptotic results drop their o(1) factors and say so via the
``asymptotic`` flag.  Nothing here searches; cross-checks against computed
exact values live in the test suite and the table report.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import sympy

from .errors import ApplicabilityError, RamseyLabError

__all__ = [
    "BoundValue",
    "TowerExpr",
    "vdw_lower_primes",
    "vdw_lower_general",
    "gowers_upper",
    "vdw_lower_probabilistic",
    "sp_upper",
    "sp_lower_constructive",
    "sp_lower_probabilistic",
    "q_exact",
    "q1_vijay_beta",
    "q1_new_base",
    "q_landman_coeff",
    "BOUND_REGISTRY",
]


@dataclass(frozen=True)
class BoundValue:
    """A bound with its direction and the preconditions that were checked.

    value is an exact int, an exact Fraction, a float, or a TowerExpr.
    """

    value: object
    direction: str  # "lower" | "upper" | "exact"
    asymptotic: bool = False
    conditions: tuple[str, ...] = ()
    extra: Optional[dict] = None


def _require(ok: bool, clause: str):
    if not ok:
        raise ApplicabilityError(clause)


class TowerExpr:
    """A right-nested exponent chain b1^(b2^(...^(bn))) of integers."""

    def __init__(self, levels):
        levels = tuple(int(x) for x in levels)
        if not levels or any(x < 1 for x in levels):
            raise ValueError("levels must be positive integers")
        self.levels = levels

    def __str__(self):
        return _render_tower(self.levels)

    def __repr__(self):
        return f"TowerExpr({self.levels})"

    def __eq__(self, other):
        return isinstance(other, TowerExpr) and self.levels == other.levels

    def __hash__(self):
        return hash(self.levels)

    @property
    def height(self):
        return len(self.levels)

    def evaluate(self, max_digits: int = 10**6) -> int:
        """Exact value, refused once any intermediate exceeds max_digits digits."""
        val = self.levels[-1]
        for base in reversed(self.levels[:-1]):
            # digits of base**val ~= val*log10(base); refuse before computing
            if val > 4 * max_digits or val * math.log10(max(base, 2)) > max_digits:
                raise ValueError(
                    f"evaluation refused: more than {max_digits} digits"
                )
            val = base**val
        return val

    def strip_log2(self, times: int = 1) -> "TowerExpr":
        """Exact iterated log2 while the outer base is 2."""
        levels = self.levels
        for _ in range(times):
            if len(levels) < 2 or levels[0] != 2:
                raise ValueError("log2 is only exact for outer base 2")
            levels = levels[1:]
        return TowerExpr(levels)

    def log_profile(self) -> list[str]:
        """Iterated-log2 size estimates, one line per application.

        Levels with base 2 strip exactly; a base b != 2 drops the
        multiplicative factor log2(b), which is negligible at this scale and
        is flagged by '~='.
        """
        lines = []
        levels = list(self.levels)
        approx = False
        i = 0
        while len(levels) > 1:
            i += 1
            base = levels[0]
            levels = levels[1:]
            if base != 2:
                approx = True
                lines.append(
                    f"log2^{i} ~= {_render_tower(levels)} (factor log2({base}) dropped)"
                )
            else:
                rel = "~=" if approx else "="
                lines.append(f"log2^{i} {rel} {_render_tower(levels)}")
        v = float(levels[0])
        while v >= 2.0:
            i += 1
            v = math.log2(v)
            lines.append(f"log2^{i} ~= {v:.6g}")
        return lines


def _render_tower(levels) -> str:
    out = str(levels[-1])
    for base in reversed(levels[:-1]):
        out = f"{base}^({out})"
    return out


def vdw_lower_primes(p: int, q: int) -> BoundValue:
    """w(p+1; q) >= p*(q^p - 1) + 1 for primes p >= 5 and q."""
    _require(p >= 5, "p >= 5")
    _require(sympy.isprime(p), "p prime")
    _require(sympy.isprime(q), "q prime")
    return BoundValue(
        value=p * (q**p - 1) + 1,
        direction="lower",
        conditions=("p >= 5", "p prime", "q prime"),
        extra={"k": p + 1, "colors": q},
    )


def vdw_lower_general(k: int, r: int) -> BoundValue:
    """w(k; r) > r^k / (e*k*r), leading term only."""
    _require(k >= 2, "k >= 2")
    _require(r >= 2, "r >= 2")
    value = math.exp(k * math.log(r) - math.log(k * r) - 1.0)
    return BoundValue(value, "lower", asymptotic=True, conditions=("k >= 2", "r >= 2"))


def gowers_upper(k: int, r: int) -> TowerExpr:
    """w(k; r) <= 2^(2^(r^(2^(2^(k+9))))), returned symbolically."""
    _require(k >= 2, "k >= 2")
    _require(r >= 2, "r >= 2")
    return TowerExpr((2, 2, r, 2, 2, k + 9))


def vdw_lower_probabilistic(k: int) -> BoundValue:
    """w(k; 2) >= sqrt(2^k * k / 2), the union-bound warm-up."""
    _require(k >= 2, "k >= 2")
    return BoundValue(math.sqrt(2**k * k / 2), "lower", conditions=("k >= 2",))


def sp_upper(m: int, k: int) -> BoundValue:
    """Scope-m upper bound 2c(k-1)+1 with c = ceil(m/(2m-k)), for m < k < 2m."""
    _require(m >= 2, "m >= 2")
    _require(m < k, "k > m")
    _require(k < 2 * m, "k < 2m")
    c = math.ceil(m / (2 * m - k))
    return BoundValue(
        2 * c * (k - 1) + 1,
        "upper",
        conditions=("m >= 2", "m < k < 2m"),
        extra={"c": c},
    )


def sp_lower_constructive(m: int, k: int) -> BoundValue:
    """Block-construction lower bound 2(k-1)(ceil(k/lam)-1)+1.

    lam = ceil((k-1) / ceil(k/m)) is the largest usable block width.
    """
    _require(k >= 2, "k >= 2")
    _require(m >= 1, "m >= 1")
    lam = math.ceil((k - 1) / math.ceil(k / m))
    value = 2 * (k - 1) * (math.ceil(k / lam) - 1) + 1
    return BoundValue(
        value, "lower", conditions=("k >= 2", "m >= 1"), extra={"lam": lam}
    )


def sp_lower_probabilistic(m: int, k: int) -> BoundValue:
    """Probabilistic scope-m lower bound sqrt((2^m-1)k/2^m) * (2^m/(2^m-1))^(k/2).

    At m = 1 this is the arithmetic warm-up bound; at m = 2 it equals
    sqrt(3k/4) * (4/3)^(k/2) identically.  The growth base tends to 1 as m
    grows.
    """
    _require(m >= 1, "m >= 1")
    _require(k >= 2, "k >= 2")
    w = 2**m
    value = math.sqrt((w - 1) * k / w) * (w / (w - 1)) ** (k / 2)
    return BoundValue(value, "lower", conditions=("m >= 1", "k >= 2"))


def q_exact(i: int, m: int, r: int) -> BoundValue:
    """Exact diameter-(k-i) value 2ik - 4i + 2r - 1 at k = m*i + r.

    Valid for 3 <= r < i/2 and r - 1 <= m (which forces i >= 7).
    """
    _require(r >= 3, "r >= 3")
    _require(2 * r < i, "r < i/2")
    _require(r - 1 <= m, "r - 1 <= m")
    k = m * i + r
    value = 2 * i * k - 4 * i + 2 * r - 1
    return BoundValue(
        value,
        "exact",
        conditions=("3 <= r < i/2", "r - 1 <= m"),
        extra={"k": k, "diameter": k - i},
    )


# z = y^4 turns the flat degree-24 polynomial
#   y^24 + 8y^20 - 112y^16 - 128y^12 + 1792y^8 + 1024y^4 - 4096
# into a degree-6 one whose positive roots are well separated.
_Z_COEFFS = (1, 8, -112, -128, 1792, 1024, -4096)


def _zpoly(z: float) -> float:
    acc = 0.0
    for c in _Z_COEFFS:
        acc = acc * z + c
    return acc


def _beta_brackets(step: float = 1e-3, z_max: float = 64.0) -> list[tuple[float, float]]:
    """Sign-change brackets of the substituted polynomial on (0, z_max]."""
    out = []
    prev_z = step
    prev_f = _zpoly(prev_z)
    n = int(round(z_max / step))
    for j in range(2, n + 1):
        z = j * step
        f = _zpoly(z)
        if f == 0.0:
            out.append((z, z))
        elif prev_f < 0.0 < f or f < 0.0 < prev_f:
            out.append((prev_z, z))
        prev_z, prev_f = z, f
    return out


def q1_vijay_beta(tol: float = 1e-6) -> float:
    """Smallest positive real root of the diameter-1 growth polynomial.

    Bracket scan with step 1e-3 on z in (0, 64], then bisection.  The
    bisection always polishes past the requested tol (down to ~1e-13 in z)
    so the residual of the original degree-24 polynomial stays below 1e-6.
    """
    _require(tol > 0, "tol > 0")
    brackets = _beta_brackets()
    if not brackets:
        raise RamseyLabError("no bracket found for the growth polynomial")
    lo, hi = brackets[0]
    width = min(tol, 1e-13)
    flo = _zpoly(lo)
    for _ in range(200):
        if hi - lo <= width:
            break
        mid = 0.5 * (lo + hi)
        fmid = _zpoly(mid)
        if fmid == 0.0:
            lo = hi = mid
            break
        if (flo < 0.0) == (fmid < 0.0):
            lo, flo = mid, fmid
        else:
            hi = mid
    z = 0.5 * (lo + hi)
    return z**0.25


def q1_new_base() -> tuple[float, float]:
    """(b, g) with b = 1 + 1/sqrt(2) the dominant transfer-matrix eigenvalue
    and g = sqrt(2/b) the resulting growth base."""
    b = 1.0 + 1.0 / math.sqrt(2.0)
    g = math.sqrt(2.0 / b)
    return b, g


def q_landman_coeff(k: int) -> BoundValue:
    """Cubic upper bound (43/324) k^3 at diameter ceil(2k/3), leading term."""
    _require(k >= 2, "k >= 2")
    value = float(Fraction(43, 324) * k**3)
    return BoundValue(
        value,
        "upper",
        asymptotic=True,
        conditions=("k >= 2",),
        extra={"diameter": math.ceil(2 * k / 3), "coefficient": "43/324"},
    )


def _beta_as_bound(tol: float = 1e-6) -> BoundValue:
    return BoundValue(
        q1_vijay_beta(tol),
        "lower",
        asymptotic=True,
        conditions=("tol > 0",),
        extra={"role": "growth base for diameter-1 lower bound"},
    )


def _new_base_as_bound() -> BoundValue:
    b, g = q1_new_base()
    return BoundValue(
        g,
        "lower",
        asymptotic=True,
        extra={"eigenvalue": b, "role": "growth base for diameter-1 lower bound"},
    )


# name -> (callable returning BoundValue or TowerExpr, argument names)
BOUND_REGISTRY = {
    "vdw-lower-primes": (vdw_lower_primes, ("p", "q")),
    "vdw-lower-general": (vdw_lower_general, ("k", "r")),
    "gowers-upper": (gowers_upper, ("k", "r")),
    "vdw-lower-probabilistic": (vdw_lower_probabilistic, ("k",)),
    "sp-upper": (sp_upper, ("m", "k")),
    "sp-lower-constructive": (sp_lower_constructive, ("m", "k")),
    "sp-lower-probabilistic": (sp_lower_probabilistic, ("m", "k")),
    "q-exact": (q_exact, ("i", "m", "r")),
    "q1-vijay-beta": (_beta_as_bound, ("tol",)),
    "q1-new-base": (_new_base_as_bound, ()),
    "q-landman-coeff": (q_landman_coeff, ("k",)),
}
