from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from betacover import (
    BOTTOM,
    TOP,
    EmptyFamilyError,
    IntervalValue,
    Relation,
    complement,
    family_join,
    family_meet,
    join,
    leq_bool,
    meet,
    relation,
)
from betacover.intervals import format_endpoint, parse_endpoint

from conftest import intervals, iv


class TestConstruction:
    def test_of_accepts_mixed_endpoint_types(self):
        a = IntervalValue.of("0.3", Fraction(3, 5))
        assert a.lo == Fraction(3, 10) and a.hi == Fraction(3, 5)

    def test_point_is_degenerate(self):
        assert IntervalValue.point("0.4").is_degenerate

    @pytest.mark.parametrize("lo,hi", [("0.7", "0.3"), ("-0.1", "0.5"), ("0", "1.5")])
    def test_invalid_endpoints_rejected(self, lo, hi):
        with pytest.raises(ValueError):
            IntervalValue.of(lo, hi)

    def test_parse_round_trip(self):
        for text in ["[0,1]", "[0.3,0.6]", "[1/3,2/3]", "[0.55,0.55]"]:
            assert IntervalValue.parse(text).text() == text

    def test_parse_rejects_garbage(self):
        for text in ["0.3,0.6", "[0.3;0.6]", "[0.7,0.3]", "[a,b]", "[0.3]"]:
            with pytest.raises(ValueError):
                IntervalValue.parse(text)


class TestEndpointText:
    def test_decimal_for_power_of_ten_denominators(self):
        assert format_endpoint(Fraction(11, 20)) == "0.55"
        assert format_endpoint(Fraction(1, 8)) == "0.125"
        assert format_endpoint(Fraction(1)) == "1"
        assert format_endpoint(Fraction(0)) == "0"

    def test_fraction_for_other_denominators(self):
        assert format_endpoint(Fraction(1, 3)) == "1/3"
        assert format_endpoint(Fraction(5, 12)) == "5/12"

    def test_parse_format_identity(self):
        for num in range(0, 21):
            v = Fraction(num, 20)
            assert parse_endpoint(format_endpoint(v)) == v

    def test_rational_and_decimal_agree(self):
        assert parse_endpoint("11/20") == parse_endpoint("0.55")


class TestOrder:
    def test_incomparable_pair(self):
        a, b = iv("[0.2,0.8]"), iv("[0.4,0.5]")
        assert not leq_bool(a, b) and not leq_bool(b, a)
        assert relation(a, b) is Relation.INCOMPARABLE

    def test_relation_cases(self):
        assert relation(iv("[0.3,0.4]"), iv("[0.3,0.4]")) is Relation.EQUAL
        assert relation(iv("[0.1,0.4]"), iv("[0.3,0.4]")) is Relation.LESS_OR_EQUAL
        assert relation(iv("[0.3,0.5]"), iv("[0.3,0.4]")) is Relation.GREATER_OR_EQUAL

    @given(intervals(), intervals())
    def test_leq_matches_relation(self, a, b):
        assert leq_bool(a, b) == (relation(a, b) in (Relation.EQUAL, Relation.LESS_OR_EQUAL))

    @given(intervals(), intervals(), intervals())
    def test_order_is_transitive(self, a, b, c):
        if leq_bool(a, b) and leq_bool(b, c):
            assert leq_bool(a, c)


class TestLattice:
    @given(intervals(), intervals())
    def test_meet_join_are_bounds(self, a, b):
        assert leq_bool(meet(a, b), a) and leq_bool(meet(a, b), b)
        assert leq_bool(a, join(a, b)) and leq_bool(b, join(a, b))

    @given(intervals(), intervals(), intervals())
    def test_distributivity(self, a, b, c):
        assert meet(a, join(b, c)) == join(meet(a, b), meet(a, c))
        assert join(a, meet(b, c)) == meet(join(a, b), join(a, c))

    @given(intervals(), intervals())
    def test_absorption_and_commutativity(self, a, b):
        assert meet(a, join(a, b)) == a
        assert join(a, meet(a, b)) == a
        assert meet(a, b) == meet(b, a) and join(a, b) == join(b, a)

    @given(intervals())
    def test_top_bottom_units(self, a):
        assert meet(a, TOP) == a and join(a, BOTTOM) == a

    @given(intervals(), intervals())
    def test_de_morgan(self, a, b):
        assert complement(meet(a, b)) == join(complement(a), complement(b))
        assert complement(join(a, b)) == meet(complement(a), complement(b))

    @given(intervals())
    def test_complement_is_involution_and_antitone(self, a):
        assert complement(complement(a)) == a

    @given(intervals(), intervals())
    def test_complement_reverses_order(self, a, b):
        if leq_bool(a, b):
            assert leq_bool(complement(b), complement(a))

    def test_worked_meet_join_complement(self):
        a, b = iv("[0.2,0.8]"), iv("[0.4,0.5]")
        assert meet(a, b) == iv("[0.2,0.5]")
        assert join(a, b) == iv("[0.4,0.8]")
        assert complement(a) == iv("[0.2,0.8]")
        assert complement(iv("[0.3,0.6]")) == iv("[0.4,0.7]")


class TestFamilies:
    def test_empty_family_rejected(self):
        with pytest.raises(EmptyFamilyError):
            family_meet([])
        with pytest.raises(EmptyFamilyError):
            family_join([])

    @given(st.lists(intervals(), min_size=1, max_size=6), intervals())
    def test_meet_is_greatest_lower_bound(self, family, probe):
        m = family_meet(family)
        assert all(leq_bool(m, i) for i in family)
        assert leq_bool(probe, m) == all(leq_bool(probe, i) for i in family)

    @given(st.lists(intervals(), min_size=1, max_size=6), intervals())
    def test_join_dominates_members(self, family, probe):
        j = family_join(family)
        assert all(leq_bool(i, j) for i in family)
        if any(leq_bool(probe, i) for i in family):
            assert leq_bool(probe, j)

    @given(
        st.lists(intervals(), min_size=1, max_size=5),
        st.lists(intervals(), max_size=3),
    )
    def test_bigger_family_smaller_meet(self, family, extra):
        assert leq_bool(family_meet(family + extra), family_meet(family))

    def test_family_meet_can_leave_the_family(self):
        # componentwise infimum of incomparable members
        result = family_meet([iv("[0.2,0.8]"), iv("[0.4,0.5]")])
        assert result == iv("[0.2,0.5]")
        assert result not in (iv("[0.2,0.8]"), iv("[0.4,0.5]"))
