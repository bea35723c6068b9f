"""Characteristic-p tight closure workbench.

Exact computational commutative algebra over prime fields: sparse
polynomial arithmetic, a deterministic Buchberger engine, ideal
arithmetic in presented quotient rings, and certificate-producing tight
closure / special tight closure tests built on Frobenius bracket powers.
"""

__version__ = "0.1.0"

from .polyfield import (MonomialOrder, ParseError, PolyRing, Polynomial,
                        PrimeField, compare, frobenius_power, poly_arith)
from .groebner import (GroebnerBasis, HilbertData, buchberger, degree_basis,
                       eliminate, hilbert, ideal_member,
                       macaulay_member_oracle, normal_form)
from .idealops import (IdealHandle, MaximalIdeal, PresentedRing, RingFlags,
                       bracket_power, colon, colon_ideal, combine, intersect,
                       is_subset, madic_order)
from .closure import (IN_AT_LEVEL, OUT_EVIDENCE, PROVEN_IN, PROVEN_OUT,
                      UNDETERMINED, ClosureVerdict, ColonChain, QLevel,
                      Witness, colon_chain, frobenius_member, graded_reduction,
                      hms_expected, key_lemma_witness, minimal_multiplicity,
                      sandwich_check, special_star_member, star_closure,
                      star_independent, star_member, star_reduce)
