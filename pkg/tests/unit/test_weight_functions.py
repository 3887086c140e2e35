"""
Unit tests for weight functions, sums, induced maps, extremal functions and search
"""
import itertools
from fractions import Fraction

import pytest

from src.errors import OutOfRangeError, RationalParseError, ShapeError, WeightFunctionError
from src.lattice import LatticeString, Shape, enumerate_strings, lattice_table, leq, parse_string
from src.maps import Truth
from src.rationals import format_rational, parse_rational, scale_to_integers
from src.weights import (
    WeightFunction,
    alpha,
    induced_map,
    interpolate,
    is_valid,
    maximizer,
    minimizer,
    sample_random,
    search_realizing,
    sigma,
    sum_table,
    validate,
)


def brute_force_alpha(wf):
    values = wf.values
    return sum(
        1
        for k in range(1, len(values) + 1)
        for subset in itertools.combinations(values, k)
        if sum(subset) >= 0
    )


class TestRationals:
    """Tests for exact rational parsing"""

    @pytest.mark.parametrize("text,expected", [
        ("0.9", Fraction(9, 10)),
        ("-2.1", Fraction(-21, 10)),
        ("3/4", Fraction(3, 4)),
        (" 7 ", Fraction(7)),
        (5, Fraction(5)),
        (0.9, Fraction(9, 10)),
    ])
    def test_parse(self, text, expected):
        """Test decimal, p/q and numeric input"""
        assert parse_rational(text) == expected

    @pytest.mark.parametrize("text", ["", "abc", "1/0", "1,5", True])
    def test_parse_invalid(self, text):
        """Test rejected inputs"""
        with pytest.raises(RationalParseError):
            parse_rational(text)

    def test_format(self):
        """Test integers print bare"""
        assert format_rational(Fraction(4)) == "4"
        assert format_rational(Fraction(-21, 10)) == "-21/10"

    def test_scale(self):
        """Test scaling to a common denominator"""
        assert scale_to_integers([Fraction(1, 2), Fraction(-1, 3)]) == ([3, -2], 6)


class TestWeightFunction:
    """Tests for construction and parsing"""

    def test_display_order(self, example_weights):
        """Test the positive side is stored by ascending index"""
        assert example_weights.pos_values == (Fraction(9, 10), Fraction(1), Fraction(1))
        assert example_weights.display_pos == (Fraction(1), Fraction(1), Fraction(9, 10))
        assert example_weights.neg_values == (Fraction(-4, 5), Fraction(-21, 10))
        assert str(example_weights) == "(1,1,9/10|-4/5,-21/10)"
        assert example_weights.total == 0

    def test_parse_forms(self, shape_5_3, example_weights):
        """Test split and flat inputs"""
        assert WeightFunction.parse(shape_5_3, "1,1,0.9|-0.8,-2.1") == example_weights
        assert WeightFunction.parse(shape_5_3, "1,1,0.9,-0.8,-2.1") == example_weights

    def test_parse_errors(self, shape_5_3):
        """Test malformed inputs"""
        with pytest.raises(WeightFunctionError):
            WeightFunction.parse(shape_5_3, "1,1|0.5|-1")
        with pytest.raises(WeightFunctionError):
            WeightFunction.parse(shape_5_3, "1,1|-1,-1")
        with pytest.raises(RationalParseError):
            WeightFunction.parse(shape_5_3, "1,x,1|-1,-1")

    def test_from_values_normalizes(self):
        """Test an arbitrary multiset becomes a monotone function"""
        wf = WeightFunction.from_values([1, -2, "0.5", -1])
        assert wf.shape == Shape(4, 2)
        assert wf.display_pos == (Fraction(1), Fraction(1, 2))
        assert wf.neg_values == (Fraction(-1), Fraction(-2))
        assert is_valid(wf) is False
        assert validate(wf) == ["non-negativity: total sum -3/2 < 0"]

    def test_from_values_needs_nonnegative(self):
        """Test all-negative input is rejected"""
        with pytest.raises(WeightFunctionError):
            WeightFunction.from_values([-1, -2])


class TestValidate:
    """Tests for validate"""

    def test_valid_example(self, example_weights):
        """Test the running example is valid"""
        assert validate(example_weights) == []
        assert is_valid(example_weights)

    def test_non_monotone_positive_side(self, shape_3_2):
        """Test f(2~) < f(1~)"""
        wf = WeightFunction.from_display(shape_3_2, [1, 2], [-1])
        violations = validate(wf)
        assert len(violations) == 1
        assert violations[0].startswith("monotonicity:")

    def test_non_negative_bar_value(self, shape_3_2):
        """Test a bar index with value 0"""
        wf = WeightFunction.from_display(shape_3_2, [1, 1], [0])
        assert validate(wf) == ["monotonicity: f(1-) = 0 is not negative"]

    def test_negative_total(self, shape_3_2):
        """Test the total must be non-negative"""
        wf = WeightFunction.from_display(shape_3_2, [1, 1], [-3])
        assert validate(wf) == ["non-negativity: total sum -1 < 0"]

    def test_bar_order(self, shape_5_3):
        """Test f(2-) > f(1-)"""
        wf = WeightFunction.from_display(shape_5_3, [3, 2, 1], [-2, -1])
        assert any(v.startswith("monotonicity: f(2-)") for v in validate(wf))


class TestSums:
    """Tests for sigma, sum_table, induced_map and alpha"""

    def test_sigma(self, shape_5_3, example_weights):
        """Test the sum over one element"""
        assert sigma(example_weights, parse_string(shape_5_3, "310|01")) == Fraction(11, 10)
        assert sigma(example_weights, parse_string(shape_5_3, "000|00")) == 0

    def test_sum_table_matches_sigma(self, shape_5_3, example_weights):
        """Test the vectorized sums against sigma"""
        sums = sum_table(example_weights)
        _, denominator = scale_to_integers(list(example_weights.pos_values) + list(example_weights.neg_values))
        for i, w in enumerate(enumerate_strings(shape_5_3)):
            assert Fraction(int(sums[i]), denominator) == sigma(example_weights, w)

    def test_example_alpha(self, example_weights):
        """Test the running example has 16 non-negative sums"""
        assert alpha(example_weights) == 16
        assert brute_force_alpha(example_weights) == 16

    def test_theta_forced_negative(self, shape_5_3, example_weights):
        """Test the empty sum maps to N"""
        boolean_map = induced_map(example_weights)
        assert boolean_map(LatticeString(shape_5_3, 0, 0)) is Truth.N
        assert boolean_map.is_positive(parse_string(shape_5_3, "321|00"))

    def test_alpha_matches_brute_force(self):
        """Test alpha on random functions"""
        for seed in range(10):
            wf = sample_random(Shape(6, 3), seed)
            assert alpha(wf) == brute_force_alpha(wf)

    def test_shape_mismatch(self, shape_3_2, example_weights):
        """Test sigma rejects foreign strings"""
        with pytest.raises(ValueError):
            sigma(example_weights, parse_string(shape_3_2, "21|0"))

    @pytest.mark.parametrize("n,r", [
        pytest.param(n, r, marks=pytest.mark.slow) if n > 6 else (n, r)
        for n in range(2, 9)
        for r in range(1, n)
    ])
    def test_sums_are_monotone(self, n, r):
        """Test v <= w implies sigma(v) <= sigma(w) on every pair, three random functions"""
        shape = Shape(n, r)
        elements = enumerate_strings(shape)
        pairs = [(i, j) for (i, v), (j, w) in itertools.product(enumerate(elements), repeat=2)
                 if i != j and leq(v, w)]
        for seed in range(3):
            sums = sum_table(sample_random(shape, seed))
            for i, j in pairs:
                assert int(sums[i]) <= int(sums[j]), (str(elements[i]), str(elements[j]), seed)

    def test_large_values_stay_exact(self):
        """Test sums beyond int64 fall back to Python ints"""
        shape = Shape(4, 2)
        big = 10 ** 20
        wf = WeightFunction.from_display(shape, [big, big], [-big, -big - 1])
        sums = sum_table(wf)
        table = lattice_table(shape)
        assert int(sums[table.index_of(parse_string(shape, "21|12"))]) == -1
        assert alpha(wf) == brute_force_alpha(wf)


class TestExtremes:
    """Tests for minimizer, maximizer, interpolate and sample_random"""

    def test_minimizer_values(self, shape_5_3):
        """Test the minimizer of (5,3)"""
        wf = minimizer(shape_5_3)
        assert wf.display_pos == (2, 2, 2)
        assert wf.neg_values == (-1, -5)
        assert wf.total == 0

    def test_maximizer_values(self, shape_5_3):
        """Test the maximizer of (5,3)"""
        wf = maximizer(shape_5_3)
        assert wf.display_pos == (1, 1, 1)
        assert wf.neg_values == (Fraction(-1, 2), Fraction(-1, 2))

    def test_extremes_attain_bounds(self, small_shapes):
        """Test alpha of the extremes is gamma and eta"""
        for shape in small_shapes:
            low, high = minimizer(shape), maximizer(shape)
            assert is_valid(low) and is_valid(high)
            assert alpha(low) == shape.gamma
            assert alpha(high) == shape.eta

    def test_bounds_hold_for_samples(self, small_shapes):
        """Test gamma <= alpha <= eta on random valid functions"""
        for shape in small_shapes:
            for seed in range(5):
                count = alpha(sample_random(shape, seed))
                assert shape.gamma <= count <= shape.eta

    def test_extremes_need_negatives(self):
        """Test r = n is rejected"""
        with pytest.raises(ShapeError):
            minimizer(Shape(3, 3))

    def test_interpolate(self, shape_4_2):
        """Test the segment between the extremes"""
        low, high = minimizer(shape_4_2), maximizer(shape_4_2)
        assert interpolate(low, high, Fraction(0)) == low
        assert interpolate(low, high, Fraction(1)) == high
        assert is_valid(interpolate(low, high, Fraction(1, 3)))

    def test_sample_determinism(self, shape_6_2):
        """Test the same seed gives the same function"""
        assert sample_random(shape_6_2, 7) == sample_random(shape_6_2, 7)
        assert sample_random(shape_6_2, 7) != sample_random(shape_6_2, 8)

    @pytest.mark.parametrize("n,r", [(7, 1), (8, 7), (4, 4), (9, 4)])
    def test_samples_are_valid(self, n, r):
        """Test samples are valid for lopsided shapes"""
        for seed in range(5):
            wf = sample_random(Shape(n, r), seed)
            assert is_valid(wf), validate(wf)
            assert all(1000 % v.denominator == 0 for v in wf.values)


class TestSearch:
    """Tests for search_realizing"""

    def test_extreme_counts_found_immediately(self, shape_3_2):
        """Test gamma is served by the minimizer"""
        result = search_realizing(shape_3_2, shape_3_2.gamma)
        assert result.success
        assert result.attempts == 1
        assert result.found == minimizer(shape_3_2)

    def test_interior_count(self, shape_3_2):
        """Test q = 5 on (3,2) is found"""
        result = search_realizing(shape_3_2, 5, seed=1)
        assert result.success
        assert alpha(result.found) == 5
        assert is_valid(result.found)
        assert result.as_dict()["found"] is True

    def test_budget_exhausted(self, shape_3_2):
        """Test a miss reports the closest candidate"""
        result = search_realizing(shape_3_2, 5, budget=2)
        assert not result.success
        assert result.attempts == 2
        assert result.closest_alpha == 4
        assert result.as_dict()["closest_alpha"] == 4

    def test_out_of_range(self, shape_3_2):
        """Test q outside [gamma, eta]"""
        with pytest.raises(OutOfRangeError):
            search_realizing(shape_3_2, 3)
        with pytest.raises(OutOfRangeError):
            search_realizing(shape_3_2, 7)
