"""Every inequality in the catalog, on worked cases and random matrices."""

import numpy as np
import pytest

from radius_bounds import bounds
from radius_bounds.errors import DimensionMismatch, InvalidExponent, NotUnitVector
from radius_bounds.linalg import HermitianPSD, abs_op, adjoint, op_norm, power_pair
from radius_bounds.radius import numerical_radius

from conftest import random_complex

EXAMPLE = np.array([[0, 1, 0], [0, 0, 2], [0, 0, 0]], dtype=complex)
JORDAN = np.array([[0, 1], [0, 0]], dtype=complex)
EYE2 = np.eye(2, dtype=complex)

# closed form of the min-over-v bound for the worked example: the two branches
# max(1 + 4^v, 4^(1-v))/2 balance at 4^v = (sqrt(17) - 1)/2
EXAMPLE_MIN29 = (1.0 + (np.sqrt(17.0) - 1.0) / 2.0) / 2.0


class TestClassical:
    def test_jordan(self):
        lo, hi = bounds.classical_bounds(JORDAN)
        assert lo.value == pytest.approx(0.5, abs=1e-12)
        assert hi.value == pytest.approx(1.0, abs=1e-12)

    def test_identity(self):
        lo, hi = bounds.classical_bounds(EYE2)
        assert (lo.value, hi.value) == (pytest.approx(0.5), pytest.approx(1.0))

    def test_worked_example(self):
        lo, hi = bounds.classical_bounds(EXAMPLE)
        assert lo.value == pytest.approx(1.0, abs=1e-12)
        assert hi.value == pytest.approx(2.0, abs=1e-12)


class TestKittaneh02:
    def test_jordan(self):
        assert bounds.kittaneh_02(JORDAN).value == pytest.approx(0.5, abs=1e-12)

    def test_identity(self):
        assert bounds.kittaneh_02(EYE2).value == pytest.approx(1.0, abs=1e-12)

    def test_worked_example(self):
        assert bounds.kittaneh_02(EXAMPLE).value == pytest.approx(
            0.5 * (2.0 + np.sqrt(2.0)), abs=1e-12)

    def test_upper_bounds_radius(self, rng):
        for _ in range(100):
            a = random_complex(rng, 4)
            w = numerical_radius(a, theta_grid=256).omega
            assert w <= bounds.kittaneh_02(a).value + 1e-8


class TestKittaneh07:
    def test_worked_example(self):
        assert bounds.kittaneh_07(EXAMPLE).value == pytest.approx(1.5, abs=1e-12)

    def test_jordan(self):
        assert bounds.kittaneh_07(JORDAN).value == pytest.approx(0.5, abs=1e-12)

    def test_identity(self):
        assert bounds.kittaneh_07(EYE2).value == pytest.approx(1.0, abs=1e-12)

    def test_between_radius_and_norm(self, rng):
        for _ in range(100):
            a = random_complex(rng, 4)
            w = numerical_radius(a, theta_grid=256).omega
            k07 = bounds.kittaneh_07(a).value
            assert w - 1e-8 <= k07 <= op_norm(a) + 1e-8


class TestSquaredBounds:
    def test_upper_04_values(self):
        assert bounds.squared_upper_04(JORDAN).value == pytest.approx(0.5, abs=1e-12)
        assert bounds.squared_upper_04(EYE2).value == pytest.approx(1.0, abs=1e-12)
        assert bounds.squared_upper_04(EXAMPLE).value == pytest.approx(2.5, abs=1e-12)

    def test_lower_01_equality_cases(self):
        # both the square-zero and the shift fixture attain the lower bound
        assert bounds.squared_lower_01(JORDAN).value == pytest.approx(0.25, abs=1e-12)
        assert bounds.squared_lower_01(EXAMPLE).value == pytest.approx(1.25, abs=1e-12)

    def test_sandwich_on_omega_squared(self, rng):
        for _ in range(100):
            a = random_complex(rng, 5)
            w2 = numerical_radius(a, theta_grid=256).omega ** 2
            lo = bounds.squared_lower_01(a).value
            hi = bounds.squared_upper_04(a).value
            assert lo - 1e-8 <= w2 <= hi + 1e-8


class TestMinOverV29:
    def test_worked_example_closed_form(self):
        bv, argmin_v = bounds.min_over_v_29(EXAMPLE)
        assert bv.value == pytest.approx(EXAMPLE_MIN29, abs=1e-8)
        assert 0.0 < argmin_v < 1.0

    def test_jordan(self):
        bv, _ = bounds.min_over_v_29(JORDAN)
        assert bv.value == pytest.approx(0.5, abs=1e-8)

    def test_never_worse_than_half_sum(self, rng):
        # v = 1/2 is a feasible point, so the min cannot exceed that bound
        for _ in range(30):
            a = random_complex(rng, 4)
            bv, _ = bounds.min_over_v_29(a)
            assert bv.value <= bounds.kittaneh_07(a).value + 1e-10

    def test_still_an_upper_bound(self, rng):
        for _ in range(30):
            a = random_complex(rng, 4)
            w = numerical_radius(a, theta_grid=256).omega
            assert w <= bounds.min_over_v_29(a)[0].value + 1e-8

    def test_grid_floor(self):
        with pytest.raises(ValueError):
            bounds.min_over_v_29(EXAMPLE, v_grid=10)


class TestCorollary29:
    def test_identity(self):
        assert bounds.corollary_after_29(EYE2, 0.5).value == pytest.approx(1.0, abs=1e-12)

    def test_jordan(self):
        assert bounds.corollary_after_29(JORDAN, 0.5).value == pytest.approx(0.5, abs=1e-12)

    def test_worked_example(self):
        expected = 1.0 + np.sqrt(2.0) / 2.0
        assert bounds.corollary_after_29(EXAMPLE, 0.5).value == pytest.approx(
            expected, abs=1e-10)

    def test_v_range(self):
        for bad in (-0.1, 1.1, float("nan")):
            with pytest.raises(InvalidExponent):
                bounds.corollary_after_29(EXAMPLE, bad)

    def test_relaxes_the_operator_bound(self, rng):
        # the scalar form can only be looser than the operator min at the same v
        for _ in range(20):
            a = random_complex(rng, 4)
            for v in (0.0, 0.25, 0.5, 0.75, 1.0):
                op_val = bounds._h29(abs_op(a), abs_op(adjoint(a)), v)
                assert op_val <= bounds.corollary_after_29(a, v).value + 1e-9


class TestTheorem8:
    def test_jordan_halves(self):
        refined, relaxed = bounds.theorem_8(JORDAN, power_pair(0.5))
        assert refined.value == pytest.approx(0.25, abs=1e-12)
        assert relaxed.value == pytest.approx(0.5, abs=1e-12)

    def test_identity(self):
        refined, relaxed = bounds.theorem_8(EYE2, power_pair(0.5))
        assert refined.value == pytest.approx(1.0, abs=1e-12)
        assert relaxed.value == pytest.approx(1.0, abs=1e-12)

    def test_worked_example(self):
        refined, relaxed = bounds.theorem_8(EXAMPLE, power_pair(0.5))
        assert refined.value == pytest.approx(2.25, abs=1e-10)
        assert relaxed.value == pytest.approx(2.5, abs=1e-10)

    def test_refined_never_exceeds_relaxed(self, rng):
        for _ in range(50):
            a = random_complex(rng, 4)
            for v in (0.0, 0.25, 0.5, 0.75, 1.0):
                refined, relaxed = bounds.theorem_8(a, power_pair(v))
                assert refined.value <= relaxed.value + 1e-10

    def test_bounds_omega_squared_all_pairs(self, rng):
        for _ in range(50):
            a = random_complex(rng, 4)
            w2 = numerical_radius(a, theta_grid=256).omega ** 2
            for v in (0.0, 0.25, 0.5, 0.75, 1.0):
                refined, _ = bounds.theorem_8(a, power_pair(v))
                assert w2 <= refined.value + 1e-8 * max(1.0, refined.value)


class TestEq25:
    def test_values(self):
        assert bounds.eq_25(JORDAN).value == pytest.approx(0.25, abs=1e-12)
        assert bounds.eq_25(EXAMPLE).value == pytest.approx(2.25, abs=1e-10)

    def test_normal_matrix_is_norm_squared(self, rng):
        q, _ = np.linalg.qr(random_complex(rng, 3))
        a = (q * np.array([1.0, -1.0, 0.5j])) @ q.conj().T
        assert bounds.eq_25(a).value == pytest.approx(1.0, abs=1e-9)

    def test_specializes_theorem8_at_half(self, rng):
        for _ in range(20):
            a = random_complex(rng, 5)
            refined, _ = bounds.theorem_8(a, power_pair(0.5))
            assert bounds.eq_25(a).value == pytest.approx(refined.value, abs=1e-10)


class TestChain26:
    def test_worked_example_values(self):
        verdict = bounds.chain_26(EXAMPLE)
        assert verdict.holds
        (lo0, hi0, _), (lo1, hi1, _) = verdict.links
        assert lo0.value == pytest.approx(np.sqrt(1.25), abs=1e-9)
        assert hi0.value == pytest.approx(1.5, abs=1e-10)
        assert hi1.value == pytest.approx(0.5 * (2.0 + np.sqrt(2.0)), abs=1e-10)

    def test_identity_collapses(self):
        verdict = bounds.chain_26(EYE2)
        assert verdict.holds
        for lo, hi, slack in verdict.links:
            assert slack == pytest.approx(0.0, abs=1e-10)

    def test_random(self, rng):
        for _ in range(50):
            assert bounds.chain_26(random_complex(rng, 4)).holds


class TestEq24Comparison:
    def test_jordan(self):
        satary, e25 = bounds.eq_24_comparison(JORDAN)
        assert satary.value == pytest.approx(0.25, abs=1e-10)
        assert e25.value == pytest.approx(0.25, abs=1e-10)

    def test_worked_example(self):
        satary, e25 = bounds.eq_24_comparison(EXAMPLE)
        assert satary.value == pytest.approx(2.25, abs=1e-10)
        assert e25.value == pytest.approx(2.25, abs=1e-10)

    def test_product_form_never_looser(self, rng):
        # omega of a product of positives is at most half the anticommutator norm
        for _ in range(30):
            a = random_complex(rng, 4)
            satary, e25 = bounds.eq_24_comparison(a)
            assert e25.value <= satary.value + 1e-8 * max(1.0, satary.value)


class TestReversePower:
    def test_jordan_equalities(self):
        verdict = bounds.reverse_power_bound(JORDAN)
        assert verdict.holds
        # A^2 = 0 collapses the first two links to zero
        assert verdict.links[0][0].value == pytest.approx(0.0, abs=1e-12)
        assert verdict.links[1][1].value == pytest.approx(0.0, abs=1e-12)
        assert verdict.links[2][1].value == pytest.approx(0.25, abs=1e-10)

    def test_random(self, rng):
        for _ in range(50):
            assert bounds.reverse_power_bound(random_complex(rng, 4),
                                              theta_grid=256).holds


class TestTriangleRefinement:
    def test_identity_pair(self):
        verdict = bounds.triangle_refinement_6(EYE2, EYE2)
        assert verdict.holds
        assert [round(t[0].value, 10) for t in verdict.links] == [2.0, 2.0, 2.0]

    def test_opposite_shifts(self):
        b = np.array([[0, 0], [1, 0]], dtype=complex)
        verdict = bounds.triangle_refinement_6(JORDAN, b)
        vals = [verdict.links[0][0].value, verdict.links[1][0].value,
                verdict.links[2][0].value, verdict.links[2][1].value]
        assert vals == pytest.approx([1.0, 1.0, np.sqrt(2.0), 2.0], abs=1e-10)

    def test_cancellation(self, rng):
        a = random_complex(rng, 3)
        verdict = bounds.triangle_refinement_6(a, -a)
        assert verdict.holds
        assert verdict.links[0][0].value == pytest.approx(0.0, abs=1e-12)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            bounds.triangle_refinement_6(EYE2, np.eye(3))

    def test_random(self, rng):
        for _ in range(100):
            a, b = random_complex(rng, 4), random_complex(rng, 4)
            assert bounds.triangle_refinement_6(a, b).holds


class TestLemma17:
    def test_equal_operands_tight(self):
        s = HermitianPSD.from_matrix(np.eye(2))
        assert bounds.lemma_17_bound(s, s).value == pytest.approx(2.0, abs=1e-12)

    def test_orthogonal_supports_tight(self):
        s = HermitianPSD.from_matrix(np.diag([1.0, 0.0]))
        t = HermitianPSD.from_matrix(np.diag([0.0, 1.0]))
        assert bounds.lemma_17_bound(s, t).value == pytest.approx(1.0, abs=1e-12)

    def test_worked_example_specialization(self):
        s = HermitianPSD.from_matrix(EXAMPLE.conj().T @ EXAMPLE)
        t = HermitianPSD.from_matrix(EXAMPLE @ EXAMPLE.conj().T)
        bound = bounds.lemma_17_bound(s, t).value
        assert bound == pytest.approx(6.0, abs=1e-10)
        assert op_norm(s.entries + t.entries) == pytest.approx(5.0, abs=1e-10)

    def test_dominates_sum_norm(self, rng):
        for _ in range(100):
            g1, g2 = random_complex(rng, 4), random_complex(rng, 4)
            s = HermitianPSD.from_matrix(g1.conj().T @ g1)
            t = HermitianPSD.from_matrix(g2.conj().T @ g2)
            bound = bounds.lemma_17_bound(s, t).value
            assert op_norm(s.entries + t.entries) <= bound + 1e-9

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            bounds.lemma_17_bound(HermitianPSD.from_matrix(np.eye(2)),
                                  HermitianPSD.from_matrix(np.eye(3)))


class TestLemma08:
    def test_identity_diagonal_vector(self):
        e1 = np.array([1.0, 0.0])
        lhs, rhs = bounds.lemma_08_check(EYE2, power_pair(0.5), e1, e1)
        assert lhs == pytest.approx(1.0, abs=1e-12)
        assert rhs == pytest.approx(1.0, abs=1e-12)

    def test_zero_matrix(self):
        e1 = np.array([1.0, 0.0])
        lhs, rhs = bounds.lemma_08_check(np.zeros((2, 2)), power_pair(0.5), e1, e1)
        assert lhs == 0.0 and rhs == pytest.approx(0.0, abs=1e-12)

    def test_unit_vector_enforced(self):
        with pytest.raises(NotUnitVector):
            bounds.lemma_08_check(EYE2, power_pair(0.5),
                                  np.array([1.0, 1.0]), np.array([1.0, 0.0]))

    def test_random_tuples(self, rng):
        pairs = [power_pair(v) for v in (0.0, 0.25, 0.5, 0.75, 1.0)]
        for k in range(100):
            n = int(rng.integers(2, 6))
            a = random_complex(rng, n)
            x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            y = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            x /= np.linalg.norm(x)
            y /= np.linalg.norm(y)
            lhs, rhs = bounds.lemma_08_check(a, pairs[k % len(pairs)], x, y)
            assert lhs <= rhs + 1e-10 * max(1.0, rhs)


class TestPositiveDiffNorm:
    def test_equal_operands(self):
        s = HermitianPSD.from_matrix(np.diag([2.0, 1.0]))
        diff, total = bounds.positive_diff_norm_14(s, s)
        assert diff == pytest.approx(0.0, abs=1e-12)
        assert total == pytest.approx(4.0, abs=1e-12)

    def test_orthogonal_supports(self):
        s = HermitianPSD.from_matrix(np.diag([1.0, 0.0]))
        t = HermitianPSD.from_matrix(np.diag([0.0, 1.0]))
        assert bounds.positive_diff_norm_14(s, t) == (pytest.approx(1.0),
                                                      pytest.approx(1.0))

    def test_difference_never_larger(self, rng):
        for _ in range(100):
            g1, g2 = random_complex(rng, 4), random_complex(rng, 4)
            s = HermitianPSD.from_matrix(g1.conj().T @ g1)
            t = HermitianPSD.from_matrix(g2.conj().T @ g2)
            diff, total = bounds.positive_diff_norm_14(s, t)
            assert diff <= total + 1e-10


class TestLowerRefinementFinal:
    def test_hermitian_closed_form(self, rng):
        # for self-adjoint A the chain is omega^2/2 <= omega^2/sqrt(2) <= omega^2
        g = random_complex(rng, 4)
        h = 0.5 * (g + g.conj().T)
        w = numerical_radius(h).omega
        verdict = bounds.lower_refinement_final(h, omega=w)
        assert verdict.holds
        assert verdict.links[0][0].value == pytest.approx(0.5 * w ** 2, abs=1e-9)
        assert verdict.links[0][1].value == pytest.approx(w ** 2 / np.sqrt(2.0), abs=1e-9)

    def test_jordan_all_equal(self):
        verdict = bounds.lower_refinement_final(JORDAN)
        assert verdict.holds
        for lo, hi, slack in verdict.links:
            assert slack == pytest.approx(0.0, abs=1e-10)
        assert verdict.links[1][1].value == pytest.approx(0.25, abs=1e-12)

    def test_middle_forms_agree(self, rng):
        for _ in range(50):
            a = random_complex(rng, 4)
            stmt, proof = bounds.final_middle_terms(a)
            assert stmt == pytest.approx(proof, abs=1e-8 * max(1.0, stmt))

    def test_random(self, rng):
        for _ in range(50):
            assert bounds.lower_refinement_final(random_complex(rng, 5),
                                                 theta_grid=256).holds


class TestCatalog:
    def test_names_are_stable(self):
        names = bounds.catalog_names()
        expected = {
            "lower.half_norm", "lower.quarter_sum_squares", "lower.final_refined",
            "upper.norm", "upper.kittaneh02", "upper.kittaneh07", "upper.min_v_29",
            "upper.corollary_29", "upper.sq04", "upper.eq25", "upper.satary24",
            "lemma17.sum_bound",
        }
        for v in ("v0", "v0.25", "v0.5", "v0.75", "v1"):
            expected.add(f"upper.theorem8.{v}")
            expected.add(f"upper.theorem8.{v}.relaxed")
        assert set(names) == expected
        assert names == sorted(names)

    def test_evaluate_matches_individual_operations(self, rng):
        a = random_complex(rng, 4)
        w = numerical_radius(a).omega
        values = bounds.evaluate_catalog(a, omega=w)
        assert values["upper.kittaneh02"].value == pytest.approx(
            bounds.kittaneh_02(a).value, abs=1e-12)
        assert values["upper.kittaneh07"].value == pytest.approx(
            bounds.kittaneh_07(a).value, abs=1e-12)
        assert values["upper.sq04"].value == pytest.approx(
            bounds.squared_upper_04(a).value, abs=1e-12)
        assert values["upper.eq25"].value == pytest.approx(
            bounds.eq_25(a).value, abs=1e-12)
        assert values["upper.min_v_29"].value == pytest.approx(
            bounds.min_over_v_29(a)[0].value, abs=1e-10)
        refined, relaxed = bounds.theorem_8(a, power_pair(0.25))
        assert values["upper.theorem8.v0.25"].value == pytest.approx(
            refined.value, abs=1e-12)
        assert values["upper.theorem8.v0.25.relaxed"].value == pytest.approx(
            relaxed.value, abs=1e-12)

    def test_all_slacks_nonnegative(self, rng):
        for _ in range(10):
            a = random_complex(rng, 4)
            w = numerical_radius(a).omega
            for name, bv in bounds.evaluate_catalog(a, omega=w).items():
                if name == "lemma17.sum_bound":
                    continue
                assert bounds.bound_slack(bv, w) >= -1e-8, name

    def test_bound_value_validation(self):
        with pytest.raises(ValueError):
            bounds.BoundValue(name="upper.norm", value=-1.0, side="upper", target="omega")
        with pytest.raises(ValueError):
            bounds.BoundValue(name="upper.norm", value=1.0, side="lower", target="omega")
