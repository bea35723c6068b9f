import math

import pytest

import oracles
from conftest import random_nonzero_poly
from tightclosure.idealops import (IdealHandle, PresentedRing, RingFlags,
                                   bracket_power, colon, colon_ideal, combine,
                                   intersect, is_subset, madic_order)


class TestPresentedRing:
    def test_unit_relations_rejected(self):
        with pytest.raises(ValueError):
            PresentedRing.define(5, ["x", "y"], relations=["x + 1", "x"])

    def test_graded_reduced_requires_homogeneous(self):
        with pytest.raises(ValueError):
            PresentedRing.define(5, ["x", "y"], relations=["x^2 + y"],
                                 flags=RingFlags(graded_reduced=True))

    def test_flags_tristate(self):
        flags = RingFlags(domain=True, normal=None, cm=False)
        assert flags.asserted("domain")
        assert not flags.asserted("normal")
        assert not flags.asserted("domain", "cm")
        assert flags.asserted_names() == ["domain"]

    def test_regular_and_graded_detection(self, fermat5, regular5):
        assert regular5.is_regular and regular5.is_standard_graded
        assert not fermat5.is_regular
        assert fermat5.is_graded and fermat5.is_standard_graded
        W = PresentedRing.define(5, ["x", "y"], relations=["x^2 + y"],
                                 weights=[1, 2])
        assert W.is_graded and not W.is_standard_graded

    def test_filtration_gens(self, regular5):
        F2 = regular5.filtration(2)
        assert {str(g) for g in F2.gens} == {"x^2", "x*y", "y^2"}
        W = PresentedRing.define(5, ["x", "y"], weights=[1, 2])
        assert {str(g) for g in W.filtration(2).gens} == {"x^2", "y"}
        assert {str(g) for g in W.filtration(3).gens} == {"x^3", "x*y", "y^2"}

    def test_maximal_ideal(self, fermat5):
        m = fermat5.maximal_ideal()
        assert {str(g) for g in m.power(2).gens} == \
            {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}
        assert {str(g) for g in m.bracket(1).gens} == {"x^5", "y^5", "z^5"}


class TestBracketPower:
    def test_examples(self):
        R3 = PresentedRing.define(3, ["x", "y"])
        B = bracket_power(R3.ideal(["x", "y^2"]), 1)
        assert B == R3.ideal(["x^3", "y^6"])
        R2 = PresentedRing.define(2, ["x", "y"])
        assert bracket_power(R2.ideal(["x + y"]), 1) == R2.ideal(["x^2 + y^2"])
        I = R2.ideal(["x", "y"])
        assert bracket_power(I, 0) == I

    def test_iterated_equals_composed(self, rng):
        for p in (2, 3, 5):
            R = PresentedRing.define(p, ["x", "y"])
            for _ in range(6):
                I = R.ideal([random_nonzero_poly(rng, R.ambient, max_degree=2)
                             for _ in range(2)])
                assert bracket_power(bracket_power(I, 1), 1) == bracket_power(I, 2)

    def test_distributes_over_sum(self, rng):
        R = PresentedRing.define(3, ["x", "y"])
        for _ in range(8):
            I = R.ideal([random_nonzero_poly(rng, R.ambient, max_degree=2)])
            K = R.ideal([random_nonzero_poly(rng, R.ambient, max_degree=2)])
            assert bracket_power(combine(I, K, "sum"), 1) == \
                combine(bracket_power(I, 1), bracket_power(K, 1), "sum")

    def test_well_defined_on_generating_sets(self, fermat5):
        # same ideal, different generators
        pairs = [
            (fermat5.ideal(["x", "y"]), fermat5.ideal(["x", "x + y"])),
            (fermat5.ideal(["x", "y"]), fermat5.ideal(["x + 2*y", "y", "x"])),
            (fermat5.ideal(["x^2", "y"]), fermat5.ideal(["x^2 + y", "y"])),
        ]
        for I1, I2 in pairs:
            assert I1 == I2
            for e in (1, 2):
                assert bracket_power(I1, e) == bracket_power(I2, e)

    def test_rejects_negative(self, regular5):
        with pytest.raises(ValueError):
            bracket_power(regular5.ideal(["x"]), -1)


class TestColon:
    def test_monomial_example_against_oracle(self, regular5):
        I = regular5.ideal(["x^3", "y^3"])
        C = colon(I, "x*y")
        assert C == regular5.ideal(["x^2", "y^2"])
        expected = oracles.monomial_colon([(3, 0), (0, 3)], (1, 1))
        assert C == regular5.ideal([regular5.ambient.monomial(m)
                                    for m in expected])

    def test_colon_by_one(self, regular5):
        I = regular5.ideal(["x^2 + y^3", "x*y"])
        assert colon(I, "1") == I

    def test_quadric_example(self, quadric5):
        C = colon(quadric5.ideal(["x"]), "z")
        assert C == quadric5.ideal(["x", "z"])

    def test_rejects_zero_divisor_input(self, fermat5):
        with pytest.raises(ValueError):
            colon(fermat5.ideal(["x"]), "x^3 + y^3 + z^3")

    def test_colon_times_f_inside_ideal(self, rng):
        R = PresentedRing.define(5, ["x", "y"])
        for _ in range(10):
            I = R.ideal([random_nonzero_poly(rng, R.ambient, max_degree=3)
                         for _ in range(2)])
            f = random_nonzero_poly(rng, R.ambient, max_degree=2)
            C = colon(I, f)
            for g in C.gens:
                assert I.contains(g * f)

    def test_colon_by_ideal(self, regular5):
        I = regular5.ideal(["x^3", "y^3"])
        K = regular5.ideal(["x*y", "x^2"])
        C = colon_ideal(I, K)
        # (I : K) = (I : xy) cap (I : x^2)
        assert C == intersect(colon(I, "x*y"), colon(I, "x^2"))


class TestIntersect:
    def test_examples(self, regular5):
        assert intersect(regular5.ideal(["x"]), regular5.ideal(["y"])) == \
            regular5.ideal(["x*y"])
        I = regular5.ideal(["x^2 + y^3", "x*y"])
        assert intersect(I, I) == I
        assert intersect(regular5.ideal(["x + y"]), regular5.ideal(["x - y"])) \
            == regular5.ideal(["x^2 - y^2"])

    def test_contained_in_both(self, rng):
        R = PresentedRing.define(3, ["x", "y"])
        for _ in range(8):
            I1 = R.ideal([random_nonzero_poly(rng, R.ambient, max_degree=2)])
            I2 = R.ideal([random_nonzero_poly(rng, R.ambient, max_degree=2)])
            J = intersect(I1, I2)
            assert is_subset(J, I1) and is_subset(J, I2)

    def test_in_quotient_ring(self, quadric5):
        # z^2 = xy identifies the two principal ideals' intersection
        J = intersect(quadric5.ideal(["x"]), quadric5.ideal(["z^2"]))
        assert is_subset(J, quadric5.ideal(["x"]))
        assert J.contains("x*z^2")


class TestCombine:
    def test_product_example(self, regular5):
        m = regular5.maximal_ideal().handle()
        I = regular5.ideal(["x", "y"])
        assert combine(m, I, "product") == regular5.ideal(["x^2", "x*y", "y^2"])

    def test_sum_with_zero(self, regular5):
        I = regular5.ideal(["x^2", "y"])
        assert combine(I, regular5.zero_ideal(), "sum") == I

    def test_bracket_product_pairwise(self):
        R = PresentedRing.define(5, ["x", "y", "z"])
        mq = R.maximal_ideal().bracket(1)
        Iq = R.ideal(["x^5", "y^5"])
        prod = combine(mq, Iq, "product")
        expected = R.ideal(["x^10", "x^5*y^5", "x^5*z^5", "y^10", "y^5*z^5"])
        assert prod == expected

    def test_sum_contains_both(self, rng):
        R = PresentedRing.define(5, ["x", "y"])
        for _ in range(6):
            I1 = R.ideal([random_nonzero_poly(rng, R.ambient, max_degree=2)])
            I2 = R.ideal([random_nonzero_poly(rng, R.ambient, max_degree=2)])
            s = combine(I1, I2, "sum")
            assert is_subset(I1, s) and is_subset(I2, s)


class TestOrdersAndContainment:
    def test_madic_order_examples(self, fermat5):
        assert madic_order("z^2", fermat5) == 2
        # NF of x^3 + y^3 is -z^3
        assert fermat5.normal_form("x^3 + y^3") == fermat5.element("-z^3")
        assert madic_order("x^3 + y^3", fermat5) == 3
        assert madic_order("0", fermat5) == math.inf
        assert madic_order("x^3 + y^3 + z^3", fermat5) == math.inf

    def test_is_subset_examples(self, regular5, fermat5):
        I = fermat5.ideal(["x", "y"])
        mI = combine(fermat5.maximal_ideal().handle(), I, "product")
        assert is_subset(mI, I)
        assert is_subset(regular5.ideal(["x^2"]), regular5.ideal(["x"]))
        P33 = regular5.ideal(["x^2 + y^3", "x*y", "y^2 + x^3"])
        assert is_subset(regular5.maximal_ideal().power(3), P33)
        assert is_subset(regular5.maximal_ideal().power(4), P33)
        assert not is_subset(regular5.ideal(["x"]), regular5.ideal(["x^2"]))

    def test_ideal_madic_order(self, fermat5):
        assert fermat5.ideal(["x", "y"]).madic_order() == 1
        assert fermat5.maximal_ideal().power(2).madic_order() == 2
        assert fermat5.zero_ideal().madic_order() == math.inf

    def test_flatness_regular_ambient(self, rng):
        # colon commutes with Frobenius over a regular base
        for p in (2, 3, 5):
            R = PresentedRing.define(p, ["x", "y"])
            for _ in range(7):
                I = R.ideal([random_nonzero_poly(rng, R.ambient, max_degree=2)
                             for _ in range(2)])
                f = random_nonzero_poly(rng, R.ambient, max_degree=2)
                e = 1
                lhs = colon(bracket_power(I, e), f.frobenius(e))
                rhs = bracket_power(colon(I, f), e)
                assert lhs == rhs, (p, [str(g) for g in I.gens], str(f))

    def test_handle_equality_and_membership(self, fermat5):
        I = fermat5.ideal(["x", "y"])
        assert I.contains("x^3 + y^3 + z^3")   # the relation is zero in R
        assert I.contains("z^3")               # z^3 = -(x^3 + y^3) mod J
        assert not I.contains("z^2")
        assert fermat5.ideal(["x", "y", "z^3"]) == I
