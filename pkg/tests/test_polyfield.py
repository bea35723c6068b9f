import pytest

from conftest import random_poly, random_nonzero_poly
from tightclosure.polyfield import (ExponentOverflowError, MonomialOrder,
                                    ParseError, PolyRing, PrimeField, compare,
                                    frobenius_power, poly_arith)


class TestPrimeField:
    def test_rejects_composite_characteristic(self):
        for bad in (0, 1, 4, 6, 9, 15):
            with pytest.raises(ValueError):
                PrimeField(bad)

    @pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
    def test_fermat_fixed_points(self, p):
        F = PrimeField(p)
        for a in range(p):
            assert pow(a, p, p) == a % p
            if a:
                assert F.mul(a, F.inv(a)) == 1

    def test_inverse_of_zero(self):
        with pytest.raises(ZeroDivisionError):
            PrimeField(5).inv(0)


class TestArithmeticExamples:
    def test_difference_of_squares_f5(self):
        R = PolyRing(5, ["x", "y"])
        assert R.poly("x + y") * R.poly("x - y") == R.poly("x^2 + 4*y^2")

    def test_freshmans_dream_f2(self):
        R = PolyRing(2, ["x", "y"])
        assert R.poly("x + y") ** 2 == R.poly("x^2 + y^2")

    def test_zero_annihilates(self, rng):
        R = PolyRing(3, ["x", "y"])
        f = random_poly(rng, R)
        assert R.zero() * f == R.zero()

    def test_op_wrapper_and_mismatch(self):
        R = PolyRing(5, ["x", "y"])
        other = PolyRing(7, ["x", "y"])
        assert poly_arith(R.poly("x"), R.poly("y"), "add") == R.poly("x + y")
        with pytest.raises(ValueError):
            poly_arith(R.poly("x"), other.poly("x"), "mul")
        with pytest.raises(ValueError):
            poly_arith(R.poly("x"), PolyRing(5, ["x", "z"]).poly("x"), "sub")


class TestFrobenius:
    def test_examples(self):
        R3 = PolyRing(3, ["x", "y"])
        assert frobenius_power(R3.poly("x + y"), 1) == R3.poly("x^3 + y^3")
        R2 = PolyRing(2, ["x", "y"])
        assert frobenius_power(R2.poly("x^2*y"), 2) == R2.poly("x^8*y^4")
        R5 = PolyRing(5, ["x", "z"])
        assert frobenius_power(R5.poly("2*x + z^2"), 1) == R5.poly("2*x^5 + z^10")

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_additive_and_multiplicative(self, p, rng):
        R = PolyRing(p, ["x", "y", "z"])
        for _ in range(100):
            f = random_poly(rng, R)
            g = random_poly(rng, R)
            e = rng.randint(1, 2)
            assert (f + g).frobenius(e) == f.frobenius(e) + g.frobenius(e)
            assert (f * g).frobenius(e) == f.frobenius(e) * g.frobenius(e)

    def test_composition(self, rng):
        R = PolyRing(3, ["x", "y"])
        for _ in range(30):
            f = random_poly(rng, R)
            assert f.frobenius(3) == f.frobenius(1).frobenius(2)

    def test_matches_repeated_squaring(self, rng):
        R = PolyRing(3, ["x", "y"])
        for _ in range(20):
            f = random_poly(rng, R, max_degree=2, max_terms=3)
            assert f.frobenius(1) == f ** 3

    def test_overflow_is_hard_error(self):
        R = PolyRing(5, ["x"])
        with pytest.raises(ExponentOverflowError):
            R.poly("x").frobenius(64)


class TestMonomialOrders:
    def test_lex_example(self):
        R = PolyRing(5, ["x", "y"], order="lex")
        assert compare((1, 0), (0, 2), R.order) > 0  # x > y^2

    def test_degrevlex_examples(self):
        R = PolyRing(5, ["x", "y", "z"])
        assert compare((2, 1, 0), (1, 2, 0), R.order) > 0   # x^2 y > x y^2
        assert compare((0, 2, 0), (1, 0, 1), R.order) > 0   # y^2 > x z

    def test_trichotomy_and_multiplicativity(self, rng):
        R = PolyRing(5, ["x", "y", "z"])
        order = R.order
        mons = [tuple(rng.randint(0, 4) for _ in range(3)) for _ in range(60)]
        for m1 in mons[:20]:
            for m2 in mons[20:40]:
                c = compare(m1, m2, order)
                assert c in (-1, 0, 1)
                assert (c == 0) == (m1 == m2)
                assert compare(m2, m1, order) == -c
                for m in mons[40:44]:
                    prod1 = tuple(a + b for a, b in zip(m1, m))
                    prod2 = tuple(a + b for a, b in zip(m2, m))
                    assert compare(prod1, prod2, order) == c

    def test_one_is_minimal(self, rng):
        for kind in ("lex", "degrevlex"):
            R = PolyRing(3, ["x", "y"], order=kind)
            zero = (0, 0)
            for _ in range(30):
                m = tuple(rng.randint(0, 5) for _ in range(2))
                if m != zero:
                    assert compare(m, zero, R.order) > 0

    def test_weighted_degree(self):
        R = PolyRing(5, ["x", "y"], weights=[1, 2])
        assert R.order.degree((1, 1)) == 3
        assert R.poly("x*y").degree() == 3

    def test_bad_precedence_rejected(self):
        with pytest.raises(ValueError):
            MonomialOrder("degrevlex", (1, 1), precedence=[0, 0])


class TestAlgebraLaws:
    def test_associativity_distributivity(self, rng):
        R = PolyRing(5, ["x", "y", "z"])
        for _ in range(200):
            f = random_poly(rng, R, max_degree=2, max_terms=3)
            g = random_poly(rng, R, max_degree=2, max_terms=3)
            h = random_poly(rng, R, max_degree=2, max_terms=3)
            assert (f + g) + h == f + (g + h)
            assert (f * g) * h == f * (g * h)
            assert f * (g + h) == f * g + f * h

    def test_canonical_no_zero_terms(self, rng):
        R = PolyRing(3, ["x", "y"])
        for _ in range(50):
            f = random_poly(rng, R)
            g = f - f
            assert g.is_zero() and g.terms == {}
            assert all(c % 3 for c in (f + f + f).terms.values()) or (f + f + f).is_zero()


class TestTextGrammar:
    def test_examples(self):
        R = PolyRing(5, ["x", "y", "z"])
        f = R.poly("x^3 + y^3 + z^3")
        assert f.terms == {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1}
        g = R.poly("2*x*y^2 - z")
        assert g.terms == {(1, 2, 0): 2, (0, 0, 1): 4}

    def test_negative_maps_to_p_minus_c(self):
        R = PolyRing(7, ["x"])
        assert R.poly("-2*x") == R.poly("5*x")

    def test_optional_star_and_power_one(self):
        R = PolyRing(5, ["x", "y"])
        assert R.poly("2 x y^1") == R.poly("2*x*y")

    def test_unknown_variable(self):
        R = PolyRing(5, ["x", "y"])
        with pytest.raises(ParseError):
            R.poly("x + w")

    def test_round_trip(self, rng):
        for p in (2, 3, 5):
            R = PolyRing(p, ["x", "y", "z"])
            for _ in range(40):
                f = random_poly(rng, R)
                assert R.poly(R.format(f)) == f

    def test_format_is_order_sorted(self):
        R = PolyRing(5, ["x", "y", "z"])
        assert str(R.poly("z + x^2 + y")) == "x^2 + y + z"
        assert str(R.poly("2*x*y^2 - z")) == "2*x*y^2 - z"
        assert str(R.poly("-z")) == "-z"
        assert str(R.poly("4*z")) == "-z"
        assert str(R.poly("x + 3*z")) == "x - 2*z"

    def test_zero_formats(self):
        R = PolyRing(5, ["x"])
        assert str(R.zero()) == "0"
        assert R.poly("0") == R.zero()


class TestImmutability:
    def test_operations_do_not_mutate(self, rng):
        R = PolyRing(5, ["x", "y"])
        f = random_nonzero_poly(rng, R)
        snapshot = dict(f.terms)
        _ = f + f, f * f, -f, f.frobenius(1), f.monic()
        assert f.terms == snapshot
