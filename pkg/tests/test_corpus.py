import random

import pytest

from alexinv import corpus
from alexinv.alexander import alexander_polynomial, full_report
from alexinv.laurent import LaurentPoly, normalize
from alexinv.presentation import abelianize, parse_presentation
from conftest import int_det, random_unimodular


class TestExpectedFragments:
    @pytest.mark.parametrize("name", corpus.names())
    def test_report_matches_expected(self, name):
        entry = corpus.get(name)
        rep = full_report(entry.presentation)
        expected = entry.expected
        assert rep.b1 == expected["b1"]
        assert rep.torsion == tuple(expected["torsion"])
        assert str(rep.delta) == expected["delta"]
        assert set(entry.provenance) >= set(expected)

    def test_names_stable(self):
        assert "mapping-torus-A" in corpus.names()
        assert "t3" in corpus.names()
        with pytest.raises(KeyError):
            corpus.get("nope")


class TestMappingTorus:
    def test_hyperbolic_monodromy(self):
        entry = corpus.mapping_torus([[3, 2], [1, 1]])
        assert entry.expected["delta"] == "t^2 - 4*t + 1"
        assert entry.expected["torsion"] == (2,)

    def test_identity_monodromy_is_t3_like(self):
        entry = corpus.mapping_torus([[1, 0], [0, 1]])
        rep = full_report(entry.presentation)
        assert rep.b1 == 3
        assert str(rep.delta) == "1"

    def test_fibonacci_monodromy(self):
        entry = corpus.mapping_torus([[2, 1], [1, 1]])
        rep = full_report(entry.presentation)
        assert str(rep.delta) == "t^2 - 3*t + 1"
        assert rep.torsion == ()  # |delta(1)| = 1

    def test_non_unimodular_rejected(self):
        with pytest.raises(ValueError):
            corpus.mapping_torus([[2, 0], [0, 1]])
        with pytest.raises(ValueError):
            corpus.mapping_torus([[1, 0], [0, 1], [0, 0]])

    def test_char_poly_coeffs(self):
        assert corpus.char_poly_coeffs([[3, 2], [1, 1]]) == [1, -4, 1]
        assert int_det([[3, 2], [1, 1]]) == 1

    def test_random_unimodular_against_char_poly(self):
        # independent oracle: det(A - tI) by Leibniz expansion on integer
        # coefficient lists, never touching Fox calculus
        rng = random.Random(30)
        checked = 0
        while checked < 20:
            n = rng.choice((2, 2, 3))
            A = random_unimodular(rng, n)
            AminusI = [[A[i][j] - (i == j) for j in range(n)]
                       for i in range(n)]
            if int_det(AminusI) == 0:  # b1 > 1, delta convention differs
                continue
            entry = corpus.mapping_torus(A)
            delta = alexander_polynomial(entry.presentation)
            coeffs = corpus.char_poly_coeffs(A)
            oracle = normalize(
                LaurentPoly(1, {(k,): c for k, c in enumerate(coeffs)}))
            assert delta.poly == oracle
            assert abelianize(entry.presentation).torsion_order == \
                abs(int_det(AminusI))
            checked += 1


class TestConnectedSum:
    def test_k1_is_s1xs2(self):
        entry = corpus.connected_sum_s1s2(1)
        assert str(full_report(entry.presentation).delta) == "1"

    @pytest.mark.parametrize("k", [2, 4])
    def test_delta_zero(self, k):
        entry = corpus.connected_sum_s1s2(k)
        rep = full_report(entry.presentation)
        assert str(rep.delta) == "0" and rep.b1 == k

    def test_k_below_one_rejected(self):
        with pytest.raises(ValueError):
            corpus.connected_sum_s1s2(0)


class TestHeisenbergPresentation:
    def test_relator_shape(self):
        entry = corpus.heisenberg()
        P = entry.presentation
        assert P.generator_names == ("x", "y", "z")
        # z^-1 [x, y] as a freely reduced word of length 5
        assert P.relators[0] == \
            ((2, -1), (0, 1), (1, 1), (0, -1), (1, -1))

    def test_roundtrip_through_text(self):
        for name in corpus.names():
            P = corpus.get(name).presentation
            assert parse_presentation(str(P)) == P
