"""Closed-form bounds: frozen values, applicability guards, root finding."""

import math
from fractions import Fraction

import pytest
import sympy

from ramseylab.bounds import (
    BOUND_REGISTRY,
    TowerExpr,
    gowers_upper,
    q1_new_base,
    q1_vijay_beta,
    q_exact,
    q_landman_coeff,
    sp_lower_constructive,
    sp_lower_probabilistic,
    sp_upper,
    vdw_lower_general,
    vdw_lower_primes,
    vdw_lower_probabilistic,
    _beta_brackets,
)
from ramseylab.errors import ApplicabilityError


class TestVdwLowerPrimes:
    # value is p(q^p - 1) + 1 for prime p >= 5, prime q
    @pytest.mark.parametrize("p,q,expect", [
        (5, 2, 156),
        (5, 3, 1211),
        (7, 2, 890),
    ])
    def test_values(self, p, q, expect):
        bv = vdw_lower_primes(p, q)
        assert bv.value == expect
        assert bv.direction == "lower"
        assert not bv.asymptotic
        assert bv.extra["k"] == p + 1

    def test_rejects_small_or_composite(self):
        with pytest.raises(ApplicabilityError):
            vdw_lower_primes(3, 2)
        with pytest.raises(ApplicabilityError):
            vdw_lower_primes(6, 2)
        with pytest.raises(ApplicabilityError):
            vdw_lower_primes(5, 4)


class TestVdwLowerGeneral:
    def test_formula(self):
        bv = vdw_lower_general(5, 2)
        assert bv.value == pytest.approx(2**5 / (math.e * 5 * 2), rel=1e-12)
        assert bv.asymptotic

    def test_grows_with_k(self):
        vals = [vdw_lower_general(k, 2).value for k in range(5, 15)]
        assert all(a < b for a, b in zip(vals, vals[1:]))


class TestProbabilisticLower:
    def test_two_color_case(self):
        bv = vdw_lower_probabilistic(6)
        assert bv.value == pytest.approx(math.sqrt(2**6 * 6 / 2), rel=1e-12)

    def test_scope_one_matches_plain(self):
        for k in range(3, 12):
            assert sp_lower_probabilistic(1, k).value == pytest.approx(
                vdw_lower_probabilistic(k).value, rel=1e-12)

    def test_scope_m_formula(self):
        m, k = 2, 6
        want = math.sqrt(3 * k / 4) * (4 / 3) ** (k / 2)
        assert sp_lower_probabilistic(m, k).value == pytest.approx(want, rel=1e-12)

    def test_base_decreases_toward_one(self):
        # growth base (2^m/(2^m-1))^(1/2) shrinks to 1 as scope grows
        bases = [(2**m / (2**m - 1)) ** 0.5 for m in range(1, 8)]
        got = [sp_lower_probabilistic(m, 40).value ** (1 / 40) for m in range(1, 8)]
        assert all(a > b for a, b in zip(got, got[1:]))
        assert got[-1] < bases[0]


class TestSpUpper:
    @pytest.mark.parametrize("m,k,expect,c", [
        (2, 3, 9, 2),
        (3, 4, 13, 2),
        (3, 5, 25, 3),
    ])
    def test_values(self, m, k, expect, c):
        bv = sp_upper(m, k)
        assert bv.value == expect
        assert bv.extra["c"] == c
        assert bv.direction == "upper"

    def test_window_enforced(self):
        with pytest.raises(ApplicabilityError):
            sp_upper(3, 3)   # needs m < k
        with pytest.raises(ApplicabilityError):
            sp_upper(3, 6)   # needs k < 2m
        with pytest.raises(ApplicabilityError):
            sp_upper(1, 2)   # needs m >= 2


class TestSpLowerConstructive:
    @pytest.mark.parametrize("m,k,expect", [
        (2, 5, 17),
        (1, 3, 9),
        (3, 4, 7),
    ])
    def test_values(self, m, k, expect):
        assert sp_lower_constructive(m, k).value == expect

    def test_never_exceeds_upper_in_window(self):
        for m in range(2, 8):
            for k in range(m + 1, 2 * m):
                lo = sp_lower_constructive(m, k).value
                hi = sp_upper(m, k).value
                assert lo <= hi


class TestQExact:
    def test_frozen_values(self):
        bv = q_exact(7, 2, 3)
        assert bv.value == 215
        assert bv.extra["k"] == 17
        assert bv.extra["diameter"] == 10
        assert q_exact(8, 2, 3).value == 277

    def test_direction_exact(self):
        assert q_exact(7, 2, 3).direction == "exact"

    def test_preconditions(self):
        with pytest.raises(ApplicabilityError):
            q_exact(7, 1, 3)   # needs r - 1 <= m
        with pytest.raises(ApplicabilityError):
            q_exact(5, 2, 3)   # needs 2r < i
        with pytest.raises(ApplicabilityError):
            q_exact(9, 3, 2)   # needs r >= 3

    def test_formula_shape(self):
        # 2ik - 4i + 2r - 1 with k = m*i + r
        i, m, r = 9, 3, 4
        k = m * i + r
        assert q_exact(i, m, r).value == 2 * i * k - 4 * i + 2 * r - 1


class TestBetaRoot:
    def test_against_sympy_roots(self):
        # independent oracle: smallest positive real root of the quartic-free
        # polynomial in y
        y = sympy.Symbol("y")
        poly = (y**24 + 8 * y**20 - 112 * y**16 - 128 * y**12
                + 1792 * y**8 + 1024 * y**4 - 4096)
        roots = [float(r) for r in sympy.real_roots(poly) if r > 0]
        want = min(roots)
        assert q1_vijay_beta(1e-6) == pytest.approx(want, abs=1e-9)

    def test_four_digit_value(self):
        assert q1_vijay_beta(1e-6) == pytest.approx(1.08226, abs=1e-4)

    def test_brackets_sorted_smallest_first(self):
        # three positive roots exist; the bound uses the smallest
        brackets = _beta_brackets()
        assert len(brackets) == 3
        assert brackets == sorted(brackets)
        lo, hi = brackets[0]
        assert lo < q1_vijay_beta(1e-9) ** 4 < hi

    def test_tol_monotone(self):
        loose = q1_vijay_beta(1e-2)
        tight = q1_vijay_beta(1e-12)
        assert abs(loose - tight) < 1e-2

    def test_is_actual_root(self):
        b = q1_vijay_beta(1e-10)
        val = (b**24 + 8 * b**20 - 112 * b**16 - 128 * b**12
               + 1792 * b**8 + 1024 * b**4 - 4096)
        assert abs(val) < 1e-6


class TestNewBase:
    def test_values(self):
        b, g = q1_new_base()
        assert b == pytest.approx(1 + 1 / math.sqrt(2), rel=1e-15)
        assert g == pytest.approx(math.sqrt(2 / b), rel=1e-15)
        assert g == pytest.approx(1.08239, abs=1e-4)

    def test_order(self):
        beta = q1_vijay_beta(1e-8)
        _, g = q1_new_base()
        assert 1 < beta < g < math.sqrt(2)


class TestLandman:
    def test_k9(self):
        bv = q_landman_coeff(9)
        assert bv.value == pytest.approx(float(Fraction(43, 324) * 729), rel=1e-12)
        assert bv.extra["diameter"] == 6
        assert bv.extra["coefficient"] == "43/324"
        assert bv.asymptotic

    def test_cubic_growth(self):
        assert q_landman_coeff(18).value == pytest.approx(8 * q_landman_coeff(9).value)


class TestTower:
    def test_str_right_nested(self):
        t = TowerExpr((2, 3))
        assert str(t) == "2^(3)"
        assert str(TowerExpr((2, 2, 2))) == "2^(2^(2))"

    def test_gowers_levels(self):
        t = gowers_upper(2, 2)
        assert t.levels == (2, 2, 2, 2, 2, 11)
        assert t.height == 6

    def test_small_evaluate(self):
        assert TowerExpr((2, 2, 2)).evaluate() == 16
        assert TowerExpr((2, 3, 2)).evaluate() == 512

    def test_evaluate_refuses_huge(self):
        with pytest.raises(ValueError):
            gowers_upper(3, 2).evaluate()

    def test_strip_log2(self):
        t = TowerExpr((2, 2, 2, 11))
        assert t.strip_log2(1).levels == (2, 2, 11)
        assert t.strip_log2(2).levels == (2, 11)

    def test_log_profile_terminates(self):
        lines = gowers_upper(3, 2).log_profile()
        assert lines and all(isinstance(s, str) for s in lines)

    def test_eq_hash(self):
        assert TowerExpr((2, 2)) == TowerExpr((2, 2))
        assert hash(TowerExpr((2, 2))) == hash(TowerExpr((2, 2)))
        assert TowerExpr((2, 2)) != TowerExpr((2, 3))


class TestRegistry:
    def test_every_entry_callable_on_valid_args(self):
        samples = {
            "vdw-lower-primes": {"p": 5, "q": 2},
            "vdw-lower-general": {"k": 6, "r": 2},
            "gowers-upper": {"k": 4, "r": 2},
            "vdw-lower-probabilistic": {"k": 5},
            "sp-upper": {"m": 3, "k": 5},
            "sp-lower-constructive": {"m": 2, "k": 5},
            "sp-lower-probabilistic": {"m": 2, "k": 5},
            "q-exact": {"i": 7, "m": 2, "r": 3},
            "q1-vijay-beta": {"tol": 1e-6},
            "q1-new-base": {},
        }
        for name, (fn, argnames) in BOUND_REGISTRY.items():
            if name == "q-landman-coeff":
                args = {"k": 9}
            else:
                args = samples[name]
            assert set(argnames) == set(args)
            fn(**args)

    def test_applicability_clause_text(self):
        with pytest.raises(ApplicabilityError) as exc:
            sp_upper(3, 7)
        assert "precondition violated" in str(exc.value)
