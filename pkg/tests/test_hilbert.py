import pytest

from borelcover.borel import (MonomialIdeal, enumerate_borel_in_g,
                              enumerate_borel_saturated, regularity, truncate)
from borelcover.errors import (InadmissiblePolynomialError, MathDomainError,
                               ParseError)
from borelcover.hilbert import (HilbertPoly, ambient_dimension, chart_constants,
                                gotzmann_number, gotzmann_representation,
                                hilbert_function, hilbert_polynomial,
                                parse_hilbert_poly)
from borelcover.ring import Monomial


class TestHilbertPoly:
    def test_integer_valuedness_enforced(self):
        with pytest.raises(MathDomainError):
            HilbertPoly.from_power_coeffs(["1/2", 0])  # t/2 is not integer valued

    def test_binomial_coords_of_half_square(self):
        # (t^2 + t)/2 = C(t+1, 2) is integer valued
        p = HilbertPoly.from_power_coeffs(["0", "1/2", "1/2"])
        assert [p.evaluate(t) for t in range(5)] == [0, 1, 3, 6, 10]

    def test_parse_and_str(self):
        for text, values in [("3*t", [0, 3, 6]), ("7", [7, 7, 7]),
                             ("2*t+3", [3, 5, 7]), ("t^2-t", [0, 0, 2]),
                             ("4t", [0, 4, 8])]:
            p = parse_hilbert_poly(text)
            assert [p.evaluate(t) for t in range(3)] == values
            assert parse_hilbert_poly(str(p)) == p

    def test_parse_rejects(self):
        with pytest.raises(ParseError):
            parse_hilbert_poly("t + bogus")
        with pytest.raises(ParseError):
            parse_hilbert_poly("")

    def test_arithmetic(self):
        p, q = parse_hilbert_poly("2*t+3"), parse_hilbert_poly("t+1")
        assert (p - q) == parse_hilbert_poly("t+2")
        assert (p - p).is_zero()


class TestHilbertFunction:
    def test_counted_sous_escalier(self, j1sat):
        assert hilbert_function(j1sat, 2) == 4
        outside = [str(m) for m in j1sat.sous_escalier_at(2)]
        assert outside == ["x1^2", "x2*x0", "x1*x0", "x0^2"]

    def test_unit_ideal(self):
        one = MonomialIdeal(2, [Monomial((0, 0, 0))])
        for t in range(4):
            assert hilbert_function(one, t) == 0

    def test_zero_ideal(self):
        zero = MonomialIdeal.zero(3)
        for t in range(4):
            assert hilbert_function(zero, t) == ambient_dimension(3, t)

    def test_negative_degree(self, j1sat):
        with pytest.raises(MathDomainError):
            hilbert_function(j1sat, -1)


class TestHilbertPolynomial:
    def test_cubic_curve_charts(self):
        j1 = MonomialIdeal.parse("x2^3, x3^2, x2^2*x1, x3*x1, x3*x2", 3)
        assert hilbert_polynomial(truncate(j1, 3)) == parse_hilbert_poly("2*t+3")
        j4 = MonomialIdeal.parse(
            "x1^3, x2^3, x3^2, x2*x1^2, x2^2*x1, x3*x1^2, x3*x2^2, x3*x2*x1", 3)
        assert hilbert_polynomial(truncate(j4, 3)) == parse_hilbert_poly("9")

    def test_lex_cubic(self, lex_cubic):
        assert hilbert_polynomial(lex_cubic) == parse_hilbert_poly("3*t")

    def test_agrees_with_function_beyond_regularity(self, j1sat, lex_cubic):
        for J in (j1sat, lex_cubic, truncate(j1sat, 4)):
            p = hilbert_polynomial(J)
            reg = regularity(J)
            for t in range(reg, reg + J.n + 4):
                assert p.evaluate(t) == hilbert_function(J, t)

    def test_unit_ideal_rejected(self):
        with pytest.raises(MathDomainError):
            hilbert_polynomial(MonomialIdeal(2, [Monomial((0, 0, 0))]))


class TestGotzmann:
    def test_reference_values(self):
        assert gotzmann_number(4, 2) == 4
        assert gotzmann_number("4*t", 3) == 6
        assert gotzmann_number("3*t", 3) == 3
        assert gotzmann_number(2, 2) == 2
        assert gotzmann_number(7, 2) == 7

    def test_representation_shape(self):
        # 3t = C(t+1,1) + C(t,1) + C(t-1,1)
        assert gotzmann_representation("3*t", 3) == [1, 1, 1]
        assert gotzmann_representation(4, 2) == [0, 0, 0, 0]

    def test_inadmissible(self):
        with pytest.raises(InadmissiblePolynomialError):
            gotzmann_number(HilbertPoly.zero(), 2)
        with pytest.raises(InadmissiblePolynomialError):
            gotzmann_number("t^2", 2)  # degree must stay below n
        with pytest.raises(InadmissiblePolynomialError):
            gotzmann_number(parse_hilbert_poly("t^2-5*t"), 4)

    def test_bounds_regularity_of_saturations(self):
        # the Gotzmann number dominates reg(J^sat) over each listed scheme
        for n, p in [(2, "4"), (3, "3*t"), (2, "7")]:
            c = chart_constants(parse_hilbert_poly(p), n)
            for sat in enumerate_borel_saturated(n, c.p):
                assert regularity(sat) <= c.r


class TestChartConstants:
    def test_reference_values(self):
        c = chart_constants(4, 2)
        assert (c.r, c.N_r, c.s, c.D) == (4, 15, 11, 44)
        c = chart_constants("3*t", 3)
        assert (c.r, c.s) == (3, 11)
        c = chart_constants(7, 2)
        assert (c.r, c.s, c.N_r) == (7, 29, 36)

    def test_q_consistency(self):
        c = chart_constants(4, 2)
        assert c.q(c.r) == c.s
        assert c.q(c.r + 1) == c.s_prime
        assert c.D == c.p.evaluate(c.r) * c.s


class TestMacaulayBound:
    def test_growth_at_gotzmann_level(self):
        # dim J_{r+1} >= q(r+1) for every Borel member of the family,
        # with equality exactly when the quotient has the target polynomial
        c = chart_constants("3*t", 3)
        for J in enumerate_borel_in_g(3, c.r, c.s):
            products = {g * Monomial.variable(3, i)
                        for g in J.gens for i in range(4)}
            assert len(products) >= c.s_prime
            matches = hilbert_polynomial(J) == c.p
            assert (len(products) == c.s_prime) == matches
