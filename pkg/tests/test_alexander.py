import random

import pytest

from alexinv.alexander import (AlexanderMatrix, LevineHypothesisError,
                               alexander_polynomial, characterize_b1_one,
                               check_blanchfield, check_levine_hypotheses,
                               det, elementary_minors, fox_alexander_matrix,
                               full_report, levine_extend, order_zero_direct,
                               torsion_order_b1_one)
from alexinv.laurent import LaurentPoly, normalize, parse_poly
from alexinv.presentation import parse_presentation
from alexinv.verify import (random_matrix, random_symmetric_nonzero_trace,
                            random_unit_symmetric_nonzero_trace)
from conftest import palindrome_unit_symmetric

t = LaurentPoly.variable(0, 1)


def poly2(text):
    return parse_poly(text, 2)


class TestMinors:
    def test_1x1(self):
        A = AlexanderMatrix.from_rows([[poly2("1 - t2"), poly2("t1 - 1")]], 2)
        assert set(elementary_minors(A, 1)) == \
            {poly2("1 - t2"), poly2("t1 - 1")}

    def test_0x0_convention(self):
        A = AlexanderMatrix.from_rows([[poly2("t1")]], 2)
        assert elementary_minors(A, 0) == [LaurentPoly.one(2)]

    def test_oversized_is_empty(self):
        A = AlexanderMatrix.from_rows([[poly2("1"), poly2("t1")]], 2)
        assert elementary_minors(A, 3) == []

    def test_det_block(self):
        zero = LaurentPoly.zero(1)
        rows = [[t - 1, zero], [zero, t + 1]]
        assert det(rows, 1) == t ** 2 - 1


class TestAlexanderPolynomial:
    def test_mapping_torus(self):
        from alexinv.corpus import get
        delta = alexander_polynomial(get("mapping-torus-A").presentation)
        assert delta.poly == parse_poly("t^2 - 4*t + 1", 1)
        assert delta.convention == "RelativeFirstMinors"

    def test_delta_one_family(self):
        for text, rank in [("<x | >", 1),
                           ("<x, y, z | Z*[x,y], [x,z], [y,z]>", 2),
                           ("<x,y,z | [x,y], [x,z], [y,z]>", 3)]:
            P = parse_presentation(text)
            assert alexander_polynomial(P).poly.is_one()

    def test_trefoil(self):
        P = parse_presentation("<x,y | x*y*x*Y*X*Y>")
        assert alexander_polynomial(P).poly == parse_poly("t^2 - t + 1", 1)

    def test_free_groups(self):
        assert alexander_polynomial(
            parse_presentation("<x1, x2, x3, x4 | >")).poly.is_zero()
        assert alexander_polynomial(
            parse_presentation("<x1, x2 | >")).poly.is_zero()

    def test_b1_zero_rejected(self):
        with pytest.raises(ValueError):
            alexander_polynomial(parse_presentation("<x | x^2>"))

    def test_surface_times_circle(self):
        # genus-2 surface times the circle: classically (h - 1)^(2g - 2)
        # in the circle variable h, here the fifth generator
        P = parse_presentation(
            "<a1, b1, a2, b2, h | [a1,b1]*[a2,b2], [a1,h], [b1,h], "
            "[a2,h], [b2,h]>")
        delta = alexander_polynomial(P)
        h = LaurentPoly.variable(4, 5)
        assert delta.poly == (h - 1) ** 2

    def test_zero_surgery_on_trefoil_as_bundle(self):
        # the order-6 torus bundle is the 0-surgery on the trefoil; its
        # polynomial matches the knot-group computation exactly
        from alexinv.corpus import mapping_torus
        bundle = mapping_torus([[1, 1], [-1, 0]])
        knot = parse_presentation("<x,y | x*y*x*Y*X*Y>")
        assert alexander_polynomial(bundle.presentation).poly == \
            alexander_polynomial(knot).poly == parse_poly("t^2 - t + 1", 1)

    def test_periodic_bundle_torsion(self):
        from alexinv.corpus import mapping_torus
        bundle = mapping_torus([[0, 1], [-1, 0]])
        rep = full_report(bundle.presentation)
        assert str(rep.delta) == "t^2 + 1"
        assert rep.torsion == (2,) and rep.checks["trace_matches_torsion_order"]


class TestOrderZeroDirect:
    def test_diagonal(self):
        lam = t + 1 + t ** -1
        A = AlexanderMatrix.diagonal([lam], 1)
        assert order_zero_direct(A).poly == t ** 2 + t + 1

    def test_diag_with_constant(self):
        two = LaurentPoly.constant(2, 1)
        A = AlexanderMatrix.diagonal([two, t - 1], 1)
        assert order_zero_direct(A).poly == 2 * t - 2

    def test_empty_matrix(self):
        A = AlexanderMatrix((), 0, 1)
        assert order_zero_direct(A).poly.is_one()

    def test_fewer_rows_than_columns(self):
        A = AlexanderMatrix.from_rows([[t, t + 1]], 1)
        assert order_zero_direct(A).poly.is_zero()


class TestLevine:
    def test_hypotheses_reports(self):
        hyp = check_levine_hypotheses(t + 1 + t ** -1)
        assert (hyp.is_symmetric, hyp.trace_nonzero, hyp.trace) == \
            (True, True, 3)
        hyp = check_levine_hypotheses(t ** 2 + t + 1)
        assert (hyp.is_symmetric, hyp.trace_nonzero) == (False, True)
        hyp = check_levine_hypotheses(t - t ** -1)
        assert (hyp.is_symmetric, hyp.trace_nonzero) == (False, False)

    def test_extend_from_trivial_module(self):
        seed = AlexanderMatrix.diagonal([LaurentPoly.one(1)], 1)
        ext = levine_extend(seed, t + 1 + t ** -1)
        assert order_zero_direct(ext).poly == t ** 2 + t + 1

    def test_extend_multiplies(self):
        A = AlexanderMatrix.diagonal([t ** 2 - 4 * t + 1], 1)
        lam = t + 3 + t ** -1
        ext = levine_extend(A, lam)
        assert order_zero_direct(ext).poly == \
            normalize((t ** 2 - 4 * t + 1) * lam)

    def test_rejects_trace_zero(self):
        seed = AlexanderMatrix.diagonal([LaurentPoly.one(1)], 1)
        with pytest.raises(LevineHypothesisError) as err:
            levine_extend(seed, t - 1)
        assert "trace" in str(err.value) or "symmetric" in str(err.value)

    def test_random_multiplicativity(self):
        rng = random.Random(12)
        for _ in range(30):
            arity = rng.randint(1, 3)
            n = rng.randint(1, 2)
            P = random_matrix(rng, n + rng.choice((0, 1)), n, arity)
            lam = random_symmetric_nonzero_trace(rng, arity)
            lhs = order_zero_direct(levine_extend(P, lam)).poly
            assert lhs == normalize(lam * order_zero_direct(P).poly)


class TestCharacterizeB1One:
    def test_mapping_torus_polynomial(self):
        verdict = characterize_b1_one(t ** 2 - 4 * t + 1)
        assert verdict.realizable
        assert verdict.witness_delta.poly == t ** 2 - 4 * t + 1

    def test_rejects_t_minus_1(self):
        verdict = characterize_b1_one(t - 1)
        assert not verdict.realizable
        assert not verdict.unit_symmetric and not verdict.trace_nonzero

    def test_rejects_2t_minus_1(self):
        # dense coefficients (-1, 2) are not palindromic, so not unit
        # symmetric: the single candidate shift fails
        assert not palindrome_unit_symmetric(2 * t - 1)
        verdict = characterize_b1_one(2 * t - 1)
        assert not verdict.realizable and verdict.trace_nonzero

    def test_witness_roundtrip_random(self):
        rng = random.Random(13)
        for _ in range(30):
            lam = random_unit_symmetric_nonzero_trace(rng)
            verdict = characterize_b1_one(lam)
            assert verdict.realizable
            assert verdict.witness_delta.poly == normalize(lam)

    def test_arity_guard(self):
        with pytest.raises(ValueError):
            characterize_b1_one(poly2("t1 + t2"))


class TestBlanchfieldAndTorsion:
    def test_check_blanchfield(self):
        assert check_blanchfield(alexander_polynomial(
            parse_presentation("<x,y | x*y*x*Y*X*Y>")))
        from alexinv.alexander import AlexanderPolynomial
        assert check_blanchfield(
            AlexanderPolynomial(t ** 2 - 4 * t + 1, "OrderZeroDirect"))
        assert not check_blanchfield(
            AlexanderPolynomial(t ** 2 - t + 2, "OrderZeroDirect"))

    def test_torsion_order(self):
        from alexinv.alexander import AlexanderPolynomial
        assert torsion_order_b1_one(
            AlexanderPolynomial(t ** 2 - 4 * t + 1, "OrderZeroDirect")) == 2
        assert torsion_order_b1_one(
            AlexanderPolynomial(LaurentPoly.one(1), "OrderZeroDirect")) == 1
        assert torsion_order_b1_one(
            AlexanderPolynomial(t ** 2 - t + 1, "OrderZeroDirect")) == 1


class TestFullReport:
    def test_mapping_torus_report(self):
        from alexinv.corpus import get
        rep = full_report(get("mapping-torus-A").presentation)
        data = rep.as_dict()
        assert data["b1"] == 1
        assert data["torsion"] == [2]
        assert data["delta"] == "t^2 - 4*t + 1"
        assert data["symmetry"] == "UnitSymmetric"
        assert data["trace"] == -2
        assert data["checks"]["trace_matches_torsion_order"]
        assert rep.torsion_order == 2

    def test_torus_and_heisenberg(self):
        rep = full_report(parse_presentation("<x,y,z | [x,y],[x,z],[y,z]>"))
        assert (rep.b1, rep.torsion, str(rep.delta)) == (3, (), "1")
        rep = full_report(parse_presentation(
            "<x, y, z | Z*[x,y], [x,z], [y,z]>"))
        assert (rep.b1, rep.torsion, str(rep.delta)) == (2, (), "1")

    def test_zero_delta_flagged(self):
        rep = full_report(parse_presentation("<x1, x2 | >"))
        assert rep.symmetry is None and rep.trace is None
        assert rep.checks == {"delta_is_zero": True}

    def test_fox_matrix_shapes(self):
        A = fox_alexander_matrix(parse_presentation("<x | >"))
        assert (A.nrows, A.ncols, A.arity) == (0, 1, 1)
