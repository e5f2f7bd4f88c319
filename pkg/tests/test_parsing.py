import pytest

from icm.errors import IdealParseError
from icm.ideals import MonomialIdeal, unit_ideal
from icm.parsing import (ideal_from_document, ideal_to_document, parse_ideal,
                         parse_points, render_ideal)


def ideal(*gens):
    gens = [tuple(g) for g in gens]
    return MonomialIdeal(len(gens[0]), tuple(sorted(gens)))


class TestParseIdeal:
    def test_basic(self):
        assert parse_ideal("x^2, x*y, y^2") == ideal((2, 0), (1, 1), (0, 2))

    def test_three_variable_mixed_powers(self):
        assert parse_ideal("x^3,y^3,z^3,x*y,x*z,y*z") == ideal(
            (3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 0), (1, 0, 1), (0, 1, 1))

    def test_unit(self):
        assert parse_ideal("1") == unit_ideal(1)
        assert parse_ideal("1", dim=3) == unit_ideal(3)

    def test_indexed_variables(self):
        assert parse_ideal("x1^2*x5") == ideal((2, 0, 0, 0, 1))

    def test_repeated_factors_add(self):
        assert parse_ideal("x*x*y^2") == ideal((2, 2))

    def test_dim_override(self):
        assert parse_ideal("x,y", dim=3) == ideal((1, 0, 0), (0, 1, 0))

    def test_minimalizes(self):
        assert parse_ideal("x, x^2, y") == ideal((1, 0), (0, 1))

    def test_whitespace(self):
        assert parse_ideal("  x ^ 2 ,  y  ") == ideal((2, 0), (0, 1))


class TestParseErrors:
    @pytest.mark.parametrize("text", ["", "x^", "x+y", "x,,y", "x^2 y", "^2"])
    def test_syntax_errors_carry_position(self, text):
        with pytest.raises(IdealParseError) as exc:
            parse_ideal(text)
        assert exc.value.position >= 0

    def test_zero_monomial(self):
        with pytest.raises(IdealParseError):
            parse_ideal("0")

    def test_index_beyond_dim(self):
        with pytest.raises(IdealParseError):
            parse_ideal("x3", dim=2)


class TestRender:
    @pytest.mark.parametrize("text", [
        "x^2, x*y, y^2", "1", "x^3,y^3,z^3,x*y,x*z,y*z", "x1*x5^2",
        "x*w, z^4",
    ])
    def test_round_trip(self, text):
        I = parse_ideal(text)
        assert parse_ideal(render_ideal(I)) == I

    def test_high_dimension_names(self):
        I = parse_ideal("x1*x5^2")
        assert "x5^2" in render_ideal(I)


class TestPoints:
    def test_basic(self):
        assert parse_points("2,0; 0,3") == [(2, 0), (0, 3)]

    def test_negative_coords(self):
        assert parse_points("-1,2") == [(-1, 2)]

    def test_mixed_dimension_rejected(self):
        with pytest.raises(IdealParseError):
            parse_points("1,2; 1,2,3")


class TestDocuments:
    def test_round_trip(self):
        I = ideal((2, 0), (1, 1), (0, 2))
        assert ideal_from_document(ideal_to_document(I)) == I

    def test_string_numbers_accepted(self):
        doc = {"vars": "2", "gens": [["2", "0"], [0, "2"]]}
        assert ideal_from_document(doc) == ideal((2, 0), (0, 2))

    def test_negative_rejected(self):
        with pytest.raises(IdealParseError):
            ideal_from_document({"vars": 2, "gens": [[-1, 0]]})
