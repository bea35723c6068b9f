"""Ideal arithmetic in a presented quotient ring R = S/J.

Every ideal of R is represented by a list of generator lifts in the
ambient polynomial ring S together with the defining ideal J; membership,
equality and all arithmetic reduce to Groebner computations on
``lift + J`` in S.  Handles are immutable and cache their reduced basis.

Ring flags (domain / normal / graded_reduced / cm) are tri-state and
never inferred: True or False only when the user asserted them, None
otherwise.  Downstream closure tests consult them to decide which
structural rules apply.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import groebner
from .polyfield import Polynomial, PolyLike, PolyRing

__all__ = [
    "RingFlags",
    "PresentedRing",
    "IdealHandle",
    "MaximalIdeal",
    "bracket_power",
    "colon",
    "colon_ideal",
    "intersect",
    "combine",
    "is_subset",
    "madic_order",
]

FLAG_NAMES = ("domain", "normal", "graded_reduced", "cm")


@dataclass(frozen=True)
class RingFlags:
    """User-asserted structural facts about the presented ring."""

    domain: bool | None = None
    normal: bool | None = None
    graded_reduced: bool | None = None
    cm: bool | None = None

    def asserted(self, *names: str) -> bool:
        """True when every named flag was asserted true by the user."""
        return all(getattr(self, nm) is True for nm in names)

    def asserted_names(self) -> list[str]:
        return [nm for nm in FLAG_NAMES if getattr(self, nm) is True]


class PresentedRing:
    """A quotient R = F_p[x_1..x_n] / J with weights, order and flags."""

    def __init__(self, ambient: PolyRing, relations: Sequence[PolyLike] = (),
                 flags: RingFlags | None = None):
        self.ambient = ambient
        rels = []
        for r in relations:
            f = ambient.poly(r)
            if not f.is_zero():
                rels.append(f)
        self.relations = tuple(rels)
        self.flags = flags or RingFlags()
        self._j_gb: groebner.GroebnerBasis | None = None
        if self.defining_basis().is_unit_ideal():
            raise ValueError("relations generate the unit ideal (zero ring)")
        if self.flags.graded_reduced is True and not self.is_graded:
            raise ValueError(
                "graded_reduced asserted but the defining ideal is not "
                "homogeneous for the declared weights")

    @classmethod
    def define(cls, p: int, names: Sequence[str],
               relations: Sequence[PolyLike] = (),
               weights: Sequence[int] | None = None,
               flags: RingFlags | None = None,
               order: str = "degrevlex") -> "PresentedRing":
        return cls(PolyRing(p, names, weights, order), relations, flags)

    # -- cached structure -------------------------------------------------------

    def defining_basis(self) -> groebner.GroebnerBasis:
        """Reduced Groebner basis of J, computed once."""
        if self._j_gb is None:
            self._j_gb = groebner.buchberger(self.relations, self.ambient.order)
        return self._j_gb

    @property
    def p(self) -> int:
        return self.ambient.field.p

    @property
    def is_regular(self) -> bool:
        """True when J = 0, i.e. R is the ambient polynomial ring itself."""
        return self.defining_basis().is_zero_ideal()

    @property
    def is_graded(self) -> bool:
        """True when J is homogeneous for the declared weights."""
        return all(g.is_homogeneous() for g in self.defining_basis())

    @property
    def is_standard_graded(self) -> bool:
        return self.is_graded and all(w == 1 for w in self.ambient.weights)

    # -- elements ----------------------------------------------------------------

    def element(self, source: PolyLike) -> Polynomial:
        return self.ambient.poly(source)

    def normal_form(self, f: PolyLike) -> Polynomial:
        f = self.element(f)
        if self.is_regular:
            return f
        return groebner.normal_form(f, self.defining_basis())

    def is_zero_element(self, f: PolyLike) -> bool:
        return self.normal_form(f).is_zero()

    def madic_order(self, f: PolyLike) -> int | float:
        """Largest k with f in the k-th piece of the degree filtration.

        Meaningful for graded presentations, where the k-th filtration
        piece consists of the elements of weighted order >= k; the order
        of f is the minimal degree of a term of NF(f mod J).  Returns
        math.inf for f = 0 in R.
        """
        nf = self.normal_form(f)
        if nf.is_zero():
            return math.inf
        return nf.min_degree()

    # -- distinguished ideals --------------------------------------------------------

    def maximal_ideal(self) -> "MaximalIdeal":
        return MaximalIdeal(self)

    def filtration(self, k: int) -> "IdealHandle":
        """The ideal of all elements of weighted order >= k.

        For an all-weights-1 ring this is the ordinary power m^k of the
        irrelevant maximal ideal, generated by the degree-k monomials.
        """
        if k <= 0:
            return IdealHandle(self, [self.ambient.one()])
        maxw = max(self.ambient.weights)
        gens = []
        for d in range(k, k + maxw):
            for m in groebner.monomials_of_degree(self.ambient, d):
                # minimal generators only: dividing by any present variable
                # must drop the degree below k
                if all((d - self.ambient.weights[i]) < k
                       for i, e in enumerate(m) if e):
                    gens.append(self.ambient.monomial(m))
        return IdealHandle(self, gens)

    def degree_piece(self, d: int) -> list[tuple[int, ...]]:
        """Standard monomials of weighted degree d (a basis of R_d)."""
        jgb = self.defining_basis()
        if jgb.is_zero_ideal():
            return groebner.monomials_of_degree(self.ambient, d)
        return groebner.degree_basis(jgb, d)

    def ideal(self, gens: Sequence[PolyLike]) -> "IdealHandle":
        return IdealHandle(self, gens)

    def zero_ideal(self) -> "IdealHandle":
        return IdealHandle(self, [])

    # -- dunder -------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, PresentedRing)
                and self.ambient == other.ambient
                and self.relations == other.relations
                and self.flags == other.flags)

    def __hash__(self) -> int:
        return hash((self.ambient, self.relations, self.flags))

    def __repr__(self) -> str:
        rel = ", ".join(str(r) for r in self.relations) or "0"
        return f"PresentedRing({self.ambient!r} / ({rel}))"


class IdealHandle:
    """An ideal of a presented ring, held as ambient generator lifts."""

    def __init__(self, ring: PresentedRing, gens: Sequence[PolyLike]):
        self.ring = ring
        lifted = []
        for g in gens:
            f = ring.element(g)
            if not f.is_zero():
                lifted.append(f)
        self.gens = tuple(lifted)
        self._gb: groebner.GroebnerBasis | None = None

    def basis(self) -> groebner.GroebnerBasis:
        """Reduced Groebner basis of lift + J, computed once."""
        if self._gb is None:
            self._gb = groebner.buchberger(
                list(self.gens) + list(self.ring.relations),
                self.ring.ambient.order)
        return self._gb

    def contains(self, f: PolyLike) -> bool:
        f = self.ring.element(f)
        gb = self.basis()
        if gb.is_zero_ideal():
            return f.is_zero()
        return groebner.ideal_member(f, gb)

    def normal_form(self, f: PolyLike) -> Polynomial:
        f = self.ring.element(f)
        gb = self.basis()
        if gb.is_zero_ideal():
            return f
        return groebner.normal_form(f, gb)

    def reduced_gens(self) -> list[Polynomial]:
        """Basis elements that are nonzero in R (i.e. not inside J)."""
        return [g for g in self.basis()
                if not self.ring.is_zero_element(g)]

    def is_zero_ideal(self) -> bool:
        return all(self.ring.is_zero_element(g) for g in self.gens)

    def is_unit_ideal(self) -> bool:
        return self.basis().is_unit_ideal()

    def madic_order(self) -> int | float:
        """Largest k with the whole ideal inside the order-k filtration."""
        orders = [self.ring.madic_order(g) for g in self.gens]
        orders = [o for o in orders if o != math.inf]
        return min(orders) if orders else math.inf

    def subset_of(self, other: "IdealHandle") -> bool:
        return is_subset(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IdealHandle):
            return NotImplemented
        if self.ring != other.ring:
            return False
        return self.basis().generators == other.basis().generators

    def __hash__(self) -> int:
        return hash((self.ring, self.basis().generators))

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.gens) or "0"
        return f"<ideal ({gens})>"


class MaximalIdeal:
    """The irrelevant maximal ideal m = (all variables) of the presentation."""

    def __init__(self, ring: PresentedRing):
        self.ring = ring

    def handle(self) -> IdealHandle:
        return IdealHandle(self.ring, self.ring.ambient.variables())

    def bracket(self, e: int) -> IdealHandle:
        """m^[p^e]: the ideal of p^e-th powers of the variables."""
        return IdealHandle(self.ring,
                           [v.frobenius(e) for v in self.ring.ambient.variables()])

    def power(self, k: int) -> IdealHandle:
        """Ordinary power m^k: all products of k variables."""
        if k <= 0:
            return IdealHandle(self.ring, [self.ring.ambient.one()])
        ring = self.ring.ambient
        n = ring.nvars
        gens = []

        def rec(i: int, remaining: int, prefix: list[int]):
            if i == n - 1:
                gens.append(ring.monomial(tuple(prefix + [remaining])))
                return
            for e in range(remaining, -1, -1):
                rec(i + 1, remaining - e, prefix + [e])

        rec(0, k, [])
        return IdealHandle(self.ring, gens)


# -- operations -----------------------------------------------------------------


def bracket_power(I: IdealHandle, e: int) -> IdealHandle:
    """Frobenius bracket power I^[p^e], generated by q-th generator powers.

    Independent of the chosen generating set as an ideal of R.
    """
    if e < 0:
        raise ValueError("bracket power exponent must be non-negative")
    return IdealHandle(I.ring, [g.frobenius(e) for g in I.gens])


def _fresh_tag(ring: PolyRing) -> str:
    for cand in ("t", "tt", "t0", "t1", "t2"):
        if cand not in ring.names:
            return cand
    i = 3
    while f"t{i}" in ring.names:
        i += 1
    return f"t{i}"


def _tagged_intersection_lifts(I1: IdealHandle, I2: IdealHandle) -> list[Polynomial]:
    """Generators of (I1+J) cap (I2+J) in the ambient ring, via tag elimination."""
    ring = I1.ring
    S = ring.ambient
    tag = _fresh_tag(S)
    ext = S.extended((tag,))
    t = ext.var(tag)
    one = ext.one()
    gens = [S.transport(r, ext) for r in ring.relations]
    gens += [t * S.transport(g, ext) for g in I1.gens]
    gens += [(one - t) * S.transport(g, ext) for g in I2.gens]
    eliminated = groebner.eliminate(gens, [tag])
    return [ext.transport(g, S) for g in eliminated]


def intersect(I1: IdealHandle, I2: IdealHandle) -> IdealHandle:
    """I1 cap I2 via the tag-variable elimination construction."""
    if I1.ring != I2.ring:
        raise ValueError("ideals from different rings")
    if I1.is_zero_ideal() or I2.is_zero_ideal():
        return IdealHandle(I1.ring, [])
    return IdealHandle(I1.ring, _tagged_intersection_lifts(I1, I2))


def colon(I: IdealHandle, f: PolyLike) -> IdealHandle:
    """The colon ideal (I : f) = {g in R : g*f in I}.

    Computed in the ambient ring as ((lift + J) cap (f)) / f, which maps
    onto the colon in R.  Rejects f = 0 in R.
    """
    ring = I.ring
    f = ring.element(f)
    if ring.is_zero_element(f):
        raise ValueError("colon by an element that is zero in R")
    principal = IdealHandle(ring, [f])
    # intersection of lift+J with (f)+J equals (lift+J) cap (f) up to J;
    # dividing generators of the former by f needs honest divisibility,
    # so intersect with the principal ideal (f) alone (no J on that side).
    S = ring.ambient
    tag = _fresh_tag(S)
    ext = S.extended((tag,))
    t = ext.var(tag)
    one = ext.one()
    gens = [t * S.transport(r, ext) for r in ring.relations]
    gens += [t * S.transport(g, ext) for g in I.gens]
    gens.append((one - t) * S.transport(f, ext))
    eliminated = groebner.eliminate(gens, [tag])
    quotients = []
    for g in eliminated:
        back = ext.transport(g, S)
        quotients.append(groebner.exact_divide(back, f))
    return IdealHandle(ring, quotients)


def colon_ideal(I: IdealHandle, K: IdealHandle) -> IdealHandle:
    """(I : K) as the intersection of (I : k) over generators k of K."""
    if I.ring != K.ring:
        raise ValueError("ideals from different rings")
    parts = [colon(I, k) for k in K.gens if not I.ring.is_zero_element(k)]
    if not parts:
        return IdealHandle(I.ring, [I.ring.ambient.one()])
    result = parts[0]
    for part in parts[1:]:
        result = intersect(result, part)
    return result


def combine(I1: IdealHandle, I2: IdealHandle, op: str) -> IdealHandle:
    """Sum (generator concatenation) or product (pairwise products)."""
    if I1.ring != I2.ring:
        raise ValueError("ideals from different rings")
    if op == "sum":
        return IdealHandle(I1.ring, list(I1.gens) + list(I2.gens))
    if op == "product":
        gens = []
        seen = set()
        for g in I1.gens:
            for h in I2.gens:
                gh = g * h
                if gh not in seen:
                    seen.add(gh)
                    gens.append(gh)
        return IdealHandle(I1.ring, gens)
    raise ValueError(f"unknown combine op {op!r}")


def is_subset(I1: IdealHandle, I2: IdealHandle) -> bool:
    """True iff I1 is contained in I2 (every generator reduces to zero)."""
    if I1.ring != I2.ring:
        raise ValueError("ideals from different rings")
    return all(I2.contains(g) for g in I1.gens)


def madic_order(f: PolyLike, ring: PresentedRing) -> int | float:
    """Module-level alias for :meth:`PresentedRing.madic_order`."""
    return ring.madic_order(f)
