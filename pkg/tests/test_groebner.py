import pytest

import oracles
from conftest import random_nonzero_poly
from tightclosure.groebner import (MacaulayMatrix, buchberger, degree_basis,
                                   eliminate, exact_divide, hilbert,
                                   ideal_member, macaulay_member_oracle,
                                   monomials_of_degree, normal_form, spoly)
from tightclosure.polyfield import PolyRing


def random_ideal(rng, ring, ngens=None, max_degree=4):
    n = ngens or rng.randint(1, 3)
    return [random_nonzero_poly(rng, ring, max_degree=max_degree, max_terms=3)
            for _ in range(n)]


class TestBuchberger:
    def test_already_reduced(self):
        R = PolyRing(5, ["x", "y"])
        gb = buchberger([R.poly("x"), R.poly("y")])
        assert [str(g) for g in gb] == ["y", "x"]

    def test_principal_made_monic(self):
        R = PolyRing(7, ["x", "y"])
        gb = buchberger([R.poly("3*x^2 + 3*y")])
        assert len(gb) == 1 and gb.generators[0] == R.poly("x^2 + y")

    def test_lex_example_f5(self):
        # hand Buchberger run, cross-checked below by the Macaulay oracle
        R = PolyRing(5, ["x", "y"], order="lex")
        gens = [R.poly("x^2 - y"), R.poly("x^3")]
        gb = buchberger(gens)
        assert {str(g) for g in gb} == {"x^2 - y", "x*y", "y^2"}
        oracle = MacaulayMatrix(gens, 6)
        for g in gb:
            assert oracle.member(g)

    def test_zero_generators_dropped(self):
        R = PolyRing(5, ["x", "y"])
        gb = buchberger([R.zero(), R.poly("x")])
        assert [str(g) for g in gb] == ["x"]
        assert buchberger([R.zero()]).is_zero_ideal()

    def test_spoly_criterion_on_random_ideals(self, rng):
        for p in (2, 3, 5):
            R = PolyRing(p, ["x", "y", "z"])
            for _ in range(8):
                gb = buchberger(random_ideal(rng, R, max_degree=3))
                if gb.is_zero_ideal():
                    continue
                gens = list(gb.generators)
                for i in range(len(gens)):
                    for j in range(i + 1, len(gens)):
                        s = spoly(gens[i], gens[j], gb.order)
                        assert normal_form(s, gb).is_zero()

    def test_deterministic_across_runs(self, rng):
        R = PolyRing(5, ["x", "y", "z"])
        gens = random_ideal(rng, R, ngens=3)
        first = buchberger(gens)
        for _ in range(3):
            assert buchberger(gens).generators == first.generators
        shuffled = list(reversed(gens))
        assert buchberger(shuffled).generators == first.generators

    def test_matches_sympy_reduced_basis(self, rng):
        for p in (2, 3, 5):
            for kind in ("degrevlex", "lex"):
                R = PolyRing(p, ["x", "y"], order=kind)
                for _ in range(6):
                    gens = random_ideal(rng, R, max_degree=3)
                    mine = list(buchberger(gens).generators)
                    theirs = oracles.sympy_groebner(gens, R)
                    assert mine == theirs, (p, kind, [str(g) for g in gens])


class TestNormalForm:
    def test_single_reduction(self):
        R = PolyRing(5, ["x", "y"])
        gb = buchberger([R.poly("x^2 - y")])
        assert normal_form(R.poly("x^2"), gb) == R.poly("y")

    def test_member_after_gb(self):
        R = PolyRing(5, ["x", "y"], order="lex")
        gb = buchberger([R.poly("x^2 - y"), R.poly("x^3")])
        assert normal_form(R.poly("x^3"), gb).is_zero()
        assert ideal_member(R.poly("x^3"), gb)

    def test_standard_support_unchanged(self):
        R = PolyRing(5, ["x", "y"])
        gb = buchberger([R.poly("x^2")])
        f = R.poly("x*y + y^3 + 1")
        assert normal_form(f, gb) == f

    def test_idempotent(self, rng):
        R = PolyRing(3, ["x", "y", "z"])
        for _ in range(25):
            gb = buchberger(random_ideal(rng, R, max_degree=3))
            if gb.is_zero_ideal():
                continue
            f = random_nonzero_poly(rng, R, max_degree=5)
            nf = normal_form(f, gb)
            assert normal_form(nf, gb) == nf

    def test_difference_lies_in_ideal(self, rng):
        R = PolyRing(5, ["x", "y"])
        for _ in range(10):
            gens = random_ideal(rng, R, max_degree=3)
            gb = buchberger(gens)
            if gb.is_zero_ideal() or gb.is_unit_ideal():
                continue
            f = random_nonzero_poly(rng, R, max_degree=4)
            diff = f - normal_form(f, gb)
            assert oracles.sympy_member(diff, gens, R)

    def test_trivial_membership(self):
        R = PolyRing(5, ["x", "y"])
        gb = buchberger([R.poly("x^2"), R.poly("y^2")])
        assert ideal_member(R.zero(), gb)
        assert not ideal_member(R.poly("x"), gb)


class TestEliminate:
    def test_tag_intersections(self):
        # (x) cap (y) = (xy) and (x^2) cap (x) = (x^2) via a tag variable
        Rt = PolyRing(5, ["t", "x", "y"])
        inter = eliminate([Rt.poly("t*x"), Rt.poly("y - t*y")], ["t"])
        assert [str(g) for g in inter] == ["x*y"]
        inter = eliminate([Rt.poly("t*x^2"), Rt.poly("x - t*x")], ["t"])
        assert [str(g) for g in inter] == ["x^2"]

    def test_distinct_principal_primes(self):
        Rt = PolyRing(5, ["t", "x", "y"])
        inter = eliminate([Rt.poly("t*x + t*y"), Rt.poly("x - y - t*x + t*y")],
                          ["t"])
        assert [str(g) for g in inter] == ["x^2 - y^2"]

    def test_no_drop_vars_in_result(self, rng):
        R = PolyRing(3, ["t", "x", "y"])
        for _ in range(10):
            gens = random_ideal(rng, R, max_degree=2)
            for g in eliminate(gens, ["t"]):
                assert all(m[0] == 0 for m in g.terms)


class TestExactDivide:
    def test_round_trip(self, rng):
        R = PolyRing(5, ["x", "y"])
        for _ in range(30):
            g = random_nonzero_poly(rng, R, max_degree=3)
            h = random_nonzero_poly(rng, R, max_degree=2)
            assert exact_divide(g * h, g) == h

    def test_rejects_non_divisible(self):
        R = PolyRing(5, ["x", "y"])
        with pytest.raises(ValueError):
            exact_divide(R.poly("x + 1"), R.poly("y"))


class TestHilbert:
    def test_free_ring(self):
        R = PolyRing(5, ["x", "y"])
        H = hilbert(buchberger([]), 8, R)
        assert H.hf == tuple(d + 1 for d in range(9))
        assert H.dimension == 2 and H.multiplicity == 1 and H.stabilized

    def test_fermat_cubic(self):
        # standard-monomial count: C(d+2,2) - C(d-1,2)
        R = PolyRing(5, ["x", "y", "z"])
        H = hilbert(buchberger([R.poly("x^3 + y^3 + z^3")]), 8)
        assert H.hf[:5] == (1, 3, 6, 9, 12)
        assert H.dimension == 2 and H.multiplicity == 3

    def test_quadric_cone(self):
        R = PolyRing(5, ["x", "y", "z"])
        H = hilbert(buchberger([R.poly("x*y - z^2")]), 8)
        assert H.hf[:4] == (1, 3, 5, 7)
        assert H.dimension == 2 and H.multiplicity == 2

    def test_rejects_inhomogeneous(self):
        R = PolyRing(5, ["x", "y"])
        with pytest.raises(ValueError):
            hilbert(buchberger([R.poly("x^2 + y")]), 6)

    def test_zero_dimensional_length(self):
        R = PolyRing(5, ["x", "y"])
        H = hilbert(buchberger([R.poly("x^2"), R.poly("y^2")]), 6)
        assert H.dimension == 0 and H.multiplicity == 4

    def test_degree_basis_matches_hf(self):
        R = PolyRing(5, ["x", "y", "z"])
        for rel in ("x^3 + y^3 + z^3", "x*y - z^2"):
            gb = buchberger([R.poly(rel)])
            H = hilbert(gb, 7)
            for d in range(8):
                assert len(degree_basis(gb, d)) == H.hf[d]

    def test_degree_basis_examples(self):
        R = PolyRing(5, ["x", "y", "z"])
        gb = buchberger([R.poly("x*y - z^2")])
        assert degree_basis(gb, 0) == [(0, 0, 0)]
        names = [R.format_monomial(m) for m in degree_basis(gb, 2)]
        assert names == ["x^2", "y^2", "x*z", "y*z", "z^2"]
        # regular ring: every monomial is standard
        R2 = PolyRing(3, ["x", "y"])
        gb2 = buchberger([R2.poly("y^5")])
        assert degree_basis(gb2, 4) == monomials_of_degree(R2, 4)
        assert len(monomials_of_degree(R2, 4)) == 5


class TestMacaulayOracle:
    def test_examples(self):
        R = PolyRing(5, ["x", "y"], order="lex")
        gens = [R.poly("x^2 - y"), R.poly("x^3")]
        assert macaulay_member_oracle(R.poly("x^3"), gens, 3)
        assert not macaulay_member_oracle(
            R.poly("x"), [R.poly("x^2"), R.poly("y^2")], 4)
        f = R.poly("x^2*y + 1")
        assert macaulay_member_oracle(f, [f], 3)

    def test_cap_too_small_reported(self):
        R = PolyRing(5, ["x", "y"])
        with pytest.raises(ValueError):
            macaulay_member_oracle(R.poly("x^5"), [R.poly("x")], 3)

    def test_agrees_with_groebner_membership(self, rng):
        # small version of the acceptance sweep
        for p in (2, 3, 5):
            R = PolyRing(p, ["x", "y"])
            for _ in range(4):
                gens = random_ideal(rng, R, max_degree=3)
                gb = buchberger(gens)
                oracle = MacaulayMatrix(gens, 8)
                for d in range(5):
                    for mexp in monomials_of_degree(R, d):
                        f = R.monomial(mexp)
                        assert ideal_member(f, gb) == oracle.member(f), \
                            (p, [str(g) for g in gens], str(f))
