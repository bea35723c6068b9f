"""Tight closure and special tight closure machinery with certificates.

Tight closure membership has no known general decision procedure, so the
verdicts form a lattice instead of a boolean:

* ``PROVEN_IN`` / ``PROVEN_OUT``: structural, independent of the checked
  Frobenius level (trivial membership, regular-ring flatness, a degree
  bound from asserted ring flags, or a sandwich certificate);
* ``IN_AT_LEVEL``: a concrete multiplier c was verified to push f into
  every bracket-power target over the checked exponent range;
* ``OUT_EVIDENCE``: every colon ideal in the chain sits inside the
  matching maximal-ideal bracket power, the signature of non-membership;
* ``UNDETERMINED``: the level was too shallow to say anything.

Leveled verdicts are never silently upgraded to structural ones.  All
searches are deterministic: candidate pools are sorted, capped and
replayable from the reported witness.

Membership targets: the star test uses the family I^[p^e]; the special
test uses m^[p^(e-e0)] * I^[p^e] for e >= e0 (base level q0 = p^e0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from . import linalg
from .groebner import monomials_of_degree, normal_form
from .idealops import (IdealHandle, PresentedRing, bracket_power, colon,
                       combine, intersect, is_subset)
from .polyfield import Polynomial, PolyLike

__all__ = [
    "PROVEN_IN", "PROVEN_OUT", "IN_AT_LEVEL", "OUT_EVIDENCE", "UNDETERMINED",
    "QLevel", "Witness", "ClosureVerdict", "ChainLevel", "ColonChain",
    "colon_chain", "frobenius_member", "star_member", "special_star_member",
    "key_lemma_witness", "star_independent", "IndependenceReport",
    "star_reduce", "star_closure", "StarClosureReport", "DegreeSearch",
    "sandwich_check", "SandwichResult", "graded_reduction",
    "GradedReductionReport", "minimal_multiplicity", "MultiplicityReport",
    "hms_expected", "HmsExpected", "closure_target", "verify_witness",
]

PROVEN_IN = "PROVEN_IN"
PROVEN_OUT = "PROVEN_OUT"
IN_AT_LEVEL = "IN_AT_LEVEL"
OUT_EVIDENCE = "OUT_EVIDENCE"
UNDETERMINED = "UNDETERMINED"

POOL_CAP = 20


@dataclass(frozen=True)
class QLevel:
    """A Frobenius level: base exponent e0 (q0 = p^e0) and cap e_max."""

    e0: int = 0
    e_max: int = 2

    def __post_init__(self):
        if not (0 <= self.e0 <= self.e_max):
            raise ValueError("need 0 <= e0 <= e_max")

    def exponents(self) -> range:
        return range(self.e0, self.e_max + 1)

    def q0(self, p: int) -> int:
        return p ** self.e0


@dataclass(frozen=True)
class Witness:
    """Replayable membership evidence: a multiplier and the checked range.

    ``kind`` records how the multiplier was found: "trivial" (c = 1 with
    plain ideal membership), "frobenius" (c = 1 with a bracket-power
    membership of f itself), or "colon_pool" (from the intersected colon
    chain).  ``key_lemma`` holds per-level results of the decomposition
    check c*f^q in c*I^[q] + m^(q/q0)*I^[q]; a failed level weakens the
    witness to colon-only strength but does not retract the membership
    computations themselves.
    """

    c: Polynomial
    kind: str
    checked: tuple[int, ...] = ()
    key_lemma: tuple[tuple[int, bool], ...] | None = None

    @property
    def key_lemma_ok(self) -> bool | None:
        if self.key_lemma is None:
            return None
        return all(ok for _, ok in self.key_lemma)


@dataclass
class ClosureVerdict:
    """Outcome of a closure membership test; see the module docstring."""

    kind: str
    test: str                       # "star" | "special"
    reason: str | None = None       # PROVEN_IN: trivial|frobenius;
                                    # PROVEN_OUT: degree_bound|regular_flatness|trivial
    witness: Witness | None = None
    e_max: int | None = None
    detail: dict = field(default_factory=dict)

    @property
    def is_in(self) -> bool:
        return self.kind in (PROVEN_IN, IN_AT_LEVEL)

    @property
    def is_structural(self) -> bool:
        return self.kind in (PROVEN_IN, PROVEN_OUT)


@dataclass
class ChainLevel:
    """One colon ideal J_e = (target_e : f^(p^e)) with its statistics."""

    e: int
    colon_ideal: IdealHandle
    order: int | float              # madic order of J_e (0 for the unit ideal)
    bracket_depth: int | float      # max d with J_e inside m^[p^d]; -1 if J_e = R

    def contained_in_bracket(self, base_e0: int) -> bool:
        return self.bracket_depth >= self.e - base_e0


@dataclass
class ColonChain:
    """The chain of colon ideals of one (f, I, level, test) quadruple."""

    test: str
    f: Polynomial
    ideal: IdealHandle
    level: QLevel
    levels: list[ChainLevel]
    _intersection: IdealHandle | None = None

    def intersection(self) -> IdealHandle:
        if self._intersection is None:
            handles = [lv.colon_ideal for lv in self.levels]
            acc = handles[0]
            for h in handles[1:]:
                acc = intersect(acc, h)
            self._intersection = acc
        return self._intersection

    def orders(self) -> list[tuple[int, int | float]]:
        return [(lv.e, lv.order) for lv in self.levels]

    def required_base(self) -> int | None:
        """Smallest e0' such that every J_e sits inside m^[p^(e-e0')].

        None when no admissible base exists within the chain.
        """
        req = 0
        for lv in self.levels:
            if lv.bracket_depth == math.inf:
                continue
            req = max(req, lv.e - int(lv.bracket_depth))
        if req > self.level.e_max:
            return None
        return req


def closure_target(I: IdealHandle, level: QLevel, e: int, test: str) -> IdealHandle:
    """The level-e membership target: I^[q] (star) or m^[q/q0]*I^[q] (special)."""
    target = bracket_power(I, e)
    if test == "special":
        if e < level.e0:
            raise ValueError("special target needs e >= e0")
        mb = I.ring.maximal_ideal().bracket(e - level.e0)
        target = combine(mb, target, "product")
    return target


def _bracket_depth(J: IdealHandle, cap: int) -> int | float:
    """Largest d <= cap with J inside m^[p^d]; -1 if J is the unit ideal."""
    if J.is_zero_ideal():
        return math.inf
    m = J.ring.maximal_ideal()
    depth = -1
    for d in range(cap + 1):
        if is_subset(J, m.bracket(d)):
            depth = d
        else:
            break
    return depth


def colon_chain(f: PolyLike, I: IdealHandle, level: QLevel = QLevel(),
                test: str = "star") -> ColonChain:
    """Compute J_e = (target_e : f^(p^e)) for e0 <= e <= e_max.

    Records the madic order of each colon ideal and how deep it sits in
    the bracket-power filtration of m.  Rejects f = 0 in R (the chain
    would be degenerate).
    """
    ring = I.ring
    f = ring.element(f)
    if ring.is_zero_element(f):
        raise ValueError("degenerate chain: f is zero in R")
    levels = []
    for e in level.exponents():
        target = closure_target(I, level, e, test)
        J_e = colon(target, f.frobenius(e))
        levels.append(ChainLevel(
            e=e,
            colon_ideal=J_e,
            order=J_e.madic_order() if not J_e.is_unit_ideal() else 0,
            bracket_depth=_bracket_depth(J_e, e + 1),
        ))
    return ColonChain(test, f, I, level, levels)


def frobenius_member(f: PolyLike, I: IdealHandle,
                     level: QLevel = QLevel()) -> int | None:
    """Smallest e <= e_max with f^(p^e) in I^[p^e], else None.

    Success implies tight closure membership with multiplier 1 (the
    membership propagates to every higher bracket power).
    """
    ring = I.ring
    f = ring.element(f)
    for e in range(level.e_max + 1):
        if bracket_power(I, e).contains(f.frobenius(e)):
            return e
    return None


def _r0_certifiable(ring: PresentedRing,
                    minimal_primes: Sequence[IdealHandle] | None) -> bool:
    return ring.is_regular or ring.flags.asserted("domain") or minimal_primes is not None


def _in_r0(c: Polynomial, ring: PresentedRing,
           minimal_primes: Sequence[IdealHandle] | None) -> bool:
    """Is c outside every minimal prime?  Only called when certifiable."""
    if ring.is_zero_element(c):
        return False
    if ring.is_regular or ring.flags.asserted("domain"):
        return True
    return all(not P.contains(c) for P in minimal_primes or ())


def _candidate_pool(chain: ColonChain,
                    minimal_primes: Sequence[IdealHandle] | None) -> list[Polynomial]:
    """Multiplier candidates: minimal-order elements of the chain intersection.

    A genuine witness keeps a fixed order while junk multipliers sink with
    the level, so candidates at or below order p^(e_max - e0) of the
    ordinary power filtration are discarded.  Sorted by leading monomial
    in the active order (smallest first) and capped.
    """
    ring = chain.ideal.ring
    level = chain.level
    if not _r0_certifiable(ring, minimal_primes):
        return []
    inter = chain.intersection()
    depth_cap = ring.p ** (level.e_max - level.e0)
    cands = []
    for g in inter.basis():
        nf = ring.normal_form(g)
        if nf.is_zero():
            continue
        o = nf.min_degree()
        if o >= depth_cap:
            continue
        if not _in_r0(nf, ring, minimal_primes):
            continue
        cands.append((o, nf.monic()))
    if not cands:
        return []
    omin = min(o for o, _ in cands)
    order_key = ring.ambient.order.key
    pool = sorted((c for o, c in cands if o == omin),
                  key=lambda c: order_key(c.leading_monomial()))
    # dedupe while preserving the sort
    seen, unique = set(), []
    for c in pool:
        if c not in seen:
            seen.add(c)
            unique.append(c)
    return unique[:POOL_CAP]


def key_lemma_witness(f: PolyLike, I: IdealHandle, c: PolyLike,
                      level: QLevel = QLevel(),
                      exponents: Sequence[int] | None = None) -> tuple[tuple[int, bool], ...]:
    """Per-level decomposition evidence for a multiplier c.

    Level e checks c*f^q in (c*g_i^q : generators g_i) + m^(q/q0)*I^[q]
    with q = p^e; the maximal-ideal factor uses ordinary powers.  The
    checked exponents default to the whole level range.
    """
    ring = I.ring
    f = ring.element(f)
    c = ring.element(c)
    if ring.is_zero_element(c):
        raise ValueError("key-lemma multiplier is zero in R")
    if exponents is None:
        exponents = list(level.exponents())
    if any(e < level.e0 for e in exponents):
        raise ValueError("key-lemma exponents must not drop below e0")
    m = ring.maximal_ideal()
    out = []
    for e in exponents:
        if c.is_constant():
            # a unit multiplier absorbs the deep part: the target collapses
            # to the bracket power itself
            target = bracket_power(I, e)
        else:
            k = ring.p ** (e - level.e0)
            scaled = [c * g.frobenius(e) for g in I.gens]
            deep = combine(m.power(k), bracket_power(I, e), "product")
            target = IdealHandle(ring, scaled + list(deep.gens))
        out.append((e, target.contains(c * f.frobenius(e))))
    return tuple(out)


def _verified_witness(f: Polynomial, I: IdealHandle, c: Polynomial, kind: str,
                      level: QLevel, test: str,
                      exponents: Sequence[int]) -> Witness | None:
    """Check c * f^(p^e) in target_e over the given exponents; None on failure."""
    checked = []
    for e in exponents:
        target = closure_target(I, level, e, test)
        if not target.contains(c * f.frobenius(e)):
            return None
        checked.append(e)
    lemma = key_lemma_witness(f, I, c, level, exponents=checked) \
        if checked else None
    return Witness(c=c, kind=kind, checked=tuple(checked), key_lemma=lemma)


def _search_verdict(chain: ColonChain, test: str,
                    minimal_primes: Sequence[IdealHandle] | None) -> ClosureVerdict:
    """Rules (d)-(f): candidate pool, containment evidence, undetermined."""
    level = chain.level
    I, f = chain.ideal, chain.f
    pool = _candidate_pool(chain, minimal_primes)
    for c in pool:
        witness = _verified_witness(f, I, c, "colon_pool", level, test,
                                    list(level.exponents()))
        if witness is not None:
            return ClosureVerdict(
                kind=IN_AT_LEVEL, test=test, witness=witness,
                e_max=level.e_max,
                detail={"pool_size": len(pool),
                        "chain_orders": chain.orders()})
    detail = {
        "chain_orders": chain.orders(),
        "pool_size": len(pool),
    }
    if len(chain.levels) >= 2:
        req = chain.required_base()
        if req is not None and req <= level.e_max - 1:
            o_first = chain.levels[0].order
            o_last = chain.levels[-1].order
            if o_last == math.inf or o_first == math.inf:
                rate = math.inf
            else:
                rate = o_last / max(o_first, 1)
            detail.update({"required_e0": req, "order_growth_rate": rate})
            return ClosureVerdict(kind=OUT_EVIDENCE, test=test,
                                  e_max=level.e_max, detail=detail)
    return ClosureVerdict(kind=UNDETERMINED, test=test,
                          e_max=level.e_max, detail=detail)


def star_member(f: PolyLike, I: IdealHandle, level: QLevel = QLevel(),
                minimal_primes: Sequence[IdealHandle] | None = None) -> ClosureVerdict:
    """Tight closure membership verdict for f against I.

    Rule order: trivial membership; zero ideal in a domain; regular-ring
    flatness; bracket-power membership of f itself (multiplier 1); the
    degree-bound exclusion when normal + graded_reduced are asserted; then
    the leveled colon-chain search.
    """
    ring = I.ring
    f = ring.element(f)
    level = level or QLevel()

    if I.contains(f):
        witness = Witness(c=ring.ambient.one(), kind="trivial")
        return ClosureVerdict(kind=PROVEN_IN, test="star", reason="trivial",
                              witness=witness)

    if I.is_zero_ideal() and (ring.is_regular or ring.flags.asserted("domain")):
        return ClosureVerdict(kind=PROVEN_OUT, test="star", reason="trivial",
                              detail={"note": "the zero ideal is tightly closed in a domain"})

    if ring.is_regular:
        return ClosureVerdict(kind=PROVEN_OUT, test="star",
                              reason="regular_flatness")

    e_f = frobenius_member(f, I, level)
    if e_f is not None:
        witness = _verified_witness(f, I, ring.ambient.one(), "frobenius",
                                    level, "star",
                                    list(range(e_f, level.e_max + 1)))
        return ClosureVerdict(kind=IN_AT_LEVEL, test="star", witness=witness,
                              e_max=level.e_max,
                              detail={"frobenius_level": e_f})

    if ring.flags.asserted("normal", "graded_reduced") and ring.is_graded:
        k = I.madic_order()
        if k != math.inf and k >= 1:
            window = combine(I, ring.filtration(int(k) + 1), "sum")
            if not window.contains(f):
                return ClosureVerdict(kind=PROVEN_OUT, test="star",
                                      reason="degree_bound",
                                      detail={"k": int(k)})

    chain = colon_chain(f, I, level, "star")
    return _search_verdict(chain, "star", minimal_primes)


def special_star_member(f: PolyLike, I: IdealHandle, level: QLevel = QLevel(),
                        strategy: str = "direct",
                        minimal_primes: Sequence[IdealHandle] | None = None) -> ClosureVerdict:
    """Special tight closure membership at base level q0 = p^e0.

    The direct strategy runs the colon-chain machinery against the target
    family m^[p^(e-e0)] * I^[p^e].  The equivalent formulation via the
    ordinary tight closure of m*I^[q0] is available as strategy
    "via_star", which delegates to :func:`star_member` on f^q0.
    """
    ring = I.ring
    f = ring.element(f)

    if strategy == "via_star":
        base = combine(ring.maximal_ideal().handle(),
                       bracket_power(I, level.e0), "product")
        sub = star_member(f.frobenius(level.e0), base,
                          QLevel(0, level.e_max - level.e0), minimal_primes)
        sub = replace(sub, test="special")
        sub.detail = dict(sub.detail)
        sub.detail["strategy"] = "via_star"
        return sub
    if strategy != "direct":
        raise ValueError(f"unknown strategy {strategy!r}")

    one = ring.ambient.one()
    if ring.is_zero_element(f):
        return ClosureVerdict(kind=PROVEN_IN, test="special", reason="trivial",
                              witness=Witness(c=one, kind="trivial"))

    base_target = closure_target(I, level, level.e0, "special")
    if base_target.contains(f.frobenius(level.e0)):
        # f^q0 in m*I^[q0] persists under Frobenius to every q >= q0
        witness = _verified_witness(f, I, one, "trivial", level, "special",
                                    list(level.exponents()))
        return ClosureVerdict(kind=PROVEN_IN, test="special", reason="trivial",
                              witness=witness)

    if I.is_zero_ideal() and (ring.is_regular or ring.flags.asserted("domain")):
        return ClosureVerdict(kind=PROVEN_OUT, test="special", reason="trivial",
                              detail={"note": "the zero ideal is tightly closed in a domain"})

    if ring.is_regular:
        return ClosureVerdict(kind=PROVEN_OUT, test="special",
                              reason="regular_flatness")

    for e in range(level.e0 + 1, level.e_max + 1):
        if closure_target(I, level, e, "special").contains(f.frobenius(e)):
            witness = _verified_witness(f, I, one, "frobenius", level, "special",
                                        list(range(e, level.e_max + 1)))
            return ClosureVerdict(kind=IN_AT_LEVEL, test="special",
                                  witness=witness, e_max=level.e_max,
                                  detail={"frobenius_level": e})

    if ring.flags.asserted("normal", "graded_reduced") and ring.is_graded:
        k = I.madic_order()
        if k != math.inf and k >= 1:
            if not ring.filtration(int(k) + 1).contains(f):
                return ClosureVerdict(kind=PROVEN_OUT, test="special",
                                      reason="degree_bound",
                                      detail={"k": int(k)})

    chain = colon_chain(f, I, level, "special")
    return _search_verdict(chain, "special", minimal_primes)


def verify_witness(f: PolyLike, I: IdealHandle, witness: Witness,
                   level: QLevel, test: str) -> bool:
    """Replay a witness: re-run the membership checks it claims."""
    ring = I.ring
    f = ring.element(f)
    if ring.is_zero_element(witness.c) and not ring.is_zero_element(f):
        return False
    if witness.kind == "trivial" and test == "star":
        return I.contains(f)
    if witness.kind == "trivial" and test == "special":
        return (ring.is_zero_element(f)
                or closure_target(I, level, level.e0, "special")
                .contains(f.frobenius(level.e0)))
    for e in witness.checked:
        target = closure_target(I, level, e, test)
        if not target.contains(ring.element(witness.c) * f.frobenius(e)):
            return False
    return bool(witness.checked)


# -- *-independence and generator reduction ------------------------------------------


@dataclass
class IndependenceReport:
    """Per-generator star verdicts plus an aggregate."""

    generators: list[Polynomial]
    verdicts: list[ClosureVerdict]
    aggregate: str                 # "Independent" | "NotIndependent" | "Undetermined"
    minimality_warning: str | None = None


def star_independent(ring: PresentedRing, gens: Sequence[PolyLike],
                     level: QLevel = QLevel(),
                     minimal_primes: Sequence[IdealHandle] | None = None) -> IndependenceReport:
    """Check that no generator lies in the tight closure of the others.

    The input should be a minimal generating set; minimality is checked
    (linear independence of the images modulo m times the ideal) and a
    failure is reported as a warning, not an error.
    """
    gens = [ring.element(g) for g in gens]
    gens = [g for g in gens if not ring.is_zero_element(g)]
    I = IdealHandle(ring, gens)
    warning = None
    m = ring.maximal_ideal()
    if any(ring.madic_order(g) == 0 for g in gens):
        warning = "a generator is a unit locally at m; minimality check skipped"
    else:
        mI = combine(m.handle(), I, "product")
        for i, g in enumerate(gens):
            others = IdealHandle(ring, gens[:i] + gens[i + 1:])
            if combine(others, mI, "sum").contains(g):
                warning = (f"generators are not minimal: generator {i + 1} is "
                           "redundant modulo m times the ideal")
                break
    verdicts = []
    for i, g in enumerate(gens):
        others = IdealHandle(ring, gens[:i] + gens[i + 1:])
        verdicts.append(star_member(g, others, level, minimal_primes))
    if any(v.is_in for v in verdicts):
        aggregate = "NotIndependent"
    elif all(v.kind == PROVEN_OUT for v in verdicts):
        aggregate = "Independent"
    else:
        aggregate = "Undetermined"
    return IndependenceReport(gens, verdicts, aggregate, warning)


def star_reduce(ring: PresentedRing, gens: Sequence[PolyLike],
                level: QLevel = QLevel(),
                minimal_primes: Sequence[IdealHandle] | None = None) -> list[Polynomial]:
    """Greedily drop generators inside the tight closure of the rest.

    Deterministic: generators are considered in input order and the first
    removable one is removed first; a removal never re-enables an earlier
    removal, so one pass suffices.
    """
    current = [ring.element(g) for g in gens]
    current = [g for g in current if not ring.is_zero_element(g)]
    i = 0
    while i < len(current):
        others = IdealHandle(ring, current[:i] + current[i + 1:])
        v = star_member(current[i], others, level, minimal_primes)
        if v.is_in:
            current.pop(i)
        else:
            i += 1
    return current


# -- sandwich test and degree-window closure search ------------------------------------


@dataclass
class SandwichResult:
    status: str                     # "TightlyClosed" | "NotApplicable"
    k: int | None = None
    reason: str | None = None


def sandwich_check(I: IdealHandle) -> SandwichResult:
    """Certify I as tightly closed when F_(k+1) <= I <= F_k for some k.

    Needs the normal and graded_reduced flags asserted; searches k
    upward and returns the smallest certificate.
    """
    ring = I.ring
    if not ring.flags.asserted("normal", "graded_reduced"):
        return SandwichResult("NotApplicable", reason="flags")
    if not ring.is_graded:
        return SandwichResult("NotApplicable", reason="non-graded presentation")
    kmax = I.madic_order()
    if kmax == math.inf or kmax < 1:
        return SandwichResult("NotApplicable", reason="no filtration window")
    for k in range(1, int(kmax) + 1):
        if is_subset(ring.filtration(k + 1), I):
            return SandwichResult("TightlyClosed", k=k)
    return SandwichResult("NotApplicable", reason="no sandwich level")


@dataclass
class DegreeSearch:
    degree: int
    space_dim: int                  # dim of the degree-d piece of R
    new_dim: int                    # dim modulo (I + F_(d+1))
    candidates: list[Polynomial]
    saturated: bool


@dataclass
class StarClosureReport:
    """Search report for closure candidates above an ideal."""

    ideal: IdealHandle
    level: QLevel
    window_start: int
    degree_cap: int
    window_from_flags: bool
    warning: str | None
    pool: list[Polynomial]
    per_degree: list[DegreeSearch]
    additions_certified: list[tuple[Polynomial, ClosureVerdict]]
    additions_leveled: list[tuple[Polynomial, ClosureVerdict]]
    complete: bool
    certified_empty: str | None     # "regular_ring" | "sandwich" | None

    def additions(self) -> list[Polynomial]:
        return ([f for f, _ in self.additions_certified]
                + [f for f, _ in self.additions_leveled])


def _vector_space(ring: PresentedRing, polys: list[Polynomial],
                  index: dict) -> np.ndarray:
    rows = np.zeros((len(polys), len(index)), dtype=np.int64)
    for r, f in enumerate(polys):
        for mexp, coeff in f.terms.items():
            rows[r, index[mexp]] = coeff
    return rows


def _reduce_against(v: np.ndarray, rows: np.ndarray, pivots: list[int],
                    p: int) -> np.ndarray:
    v = v.copy()
    for row, c in zip(rows, pivots):
        if v[c]:
            v = (v - v[c] * row) % p
    return v


def star_closure(I: IdealHandle, degree_cap: int,
                 level: QLevel = QLevel(),
                 minimal_primes: Sequence[IdealHandle] | None = None) -> StarClosureReport:
    """Search for homogeneous closure candidates degree by degree.

    For each degree d in the window, the coefficient space of degree-d
    forms modulo (I + F_(d+1))-redundancy is scanned: for each candidate
    multiplier c from the colon-intersection pool and each admissible
    tail window of exponents, the conditions c*f^(p^e) in I^[p^e] are
    linear in f's coefficients over F_p, so the solution space is exact.
    Every surviving class representative is cross-checked individually
    through :func:`star_member`; only In-verdicts count as additions.

    Without the normal + graded_reduced flags the structural window is
    unavailable and all degrees from 1 are searched (with a warning).
    """
    ring = I.ring
    if not ring.is_graded:
        raise ValueError("closure search requires a graded presentation")
    p = ring.p

    def report(window_start, window_from_flags, warning=None, pool=(),
               per_degree=(), certified=(), leveled=(), complete=False,
               certified_empty=None):
        return StarClosureReport(
            ideal=I, level=level, window_start=window_start,
            degree_cap=degree_cap, window_from_flags=window_from_flags,
            warning=warning, pool=list(pool), per_degree=list(per_degree),
            additions_certified=list(certified),
            additions_leveled=list(leveled),
            complete=complete, certified_empty=certified_empty)

    if ring.is_regular:
        return report(1, False, complete=True, certified_empty="regular_ring")

    if I.is_zero_ideal():
        if ring.flags.asserted("domain"):
            return report(1, False, complete=True,
                          certified_empty="zero_ideal_domain")
        raise ValueError("closure search over the zero ideal needs the domain flag")

    k = I.madic_order()
    if k == 0:
        if I.is_unit_ideal():
            return report(1, False, complete=True, certified_empty="unit_ideal")
        raise ValueError("closure search expects generators inside the "
                         "maximal ideal")
    flags_ok = ring.flags.asserted("normal", "graded_reduced")
    warning = None
    if flags_ok:
        start = int(k) + 1
    else:
        start = 1
        warning = ("normal and graded_reduced flags not asserted: the "
                   "structural degree window is unavailable, searching the "
                   "full window from degree 1")
    if degree_cap < start:
        raise ValueError(f"degree cap {degree_cap} below the search window "
                         f"start {start}")

    sandwich = sandwich_check(I)
    if sandwich.status == "TightlyClosed":
        return report(start, flags_ok, warning, complete=True,
                      certified_empty="sandwich")

    bracket_cache = {e: bracket_power(I, e) for e in range(level.e_max + 1)}
    pool_all: list[Polynomial] = [ring.ambient.one()]
    per_degree: list[DegreeSearch] = []
    leveled: list[tuple[Polynomial, ClosureVerdict]] = []
    certified: list[tuple[Polynomial, ClosureVerdict]] = []
    complete = False

    for d in range(start, degree_cap + 1):
        basis_d = ring.degree_piece(d)
        if not basis_d:
            continue
        mono_polys = [ring.ambient.monomial(m) for m in basis_d]
        redundancy = combine(I, ring.filtration(d + 1), "sum")
        nf_polys = [redundancy.normal_form(mu) for mu in mono_polys]
        support = sorted({m for f in nf_polys for m in f.terms},
                         key=ring.ambient.order.key)
        index = {m: i for i, m in enumerate(support)}
        V = _vector_space(ring, nf_polys, index).T if support else \
            np.zeros((0, len(basis_d)), dtype=np.int64)
        W_rows = linalg.nullspace(V, p)
        W_rref, W_pivots = linalg.rref(W_rows, p) if len(W_rows) else \
            (np.zeros((0, len(basis_d)), dtype=np.int64), [])
        W_rref = W_rref[:len(W_pivots)]
        new_dim = len(basis_d) - len(W_pivots)
        if new_dim == 0:
            per_degree.append(DegreeSearch(d, len(basis_d), 0, [], True))
            complete = True
            break

        # representative monomials for the quotient classes, smallest first
        reps: list[int] = []
        span_rows, span_pivots = W_rref.copy(), list(W_pivots)
        for idx in range(len(basis_d) - 1, -1, -1):
            v = np.zeros(len(basis_d), dtype=np.int64)
            v[idx] = 1
            r = _reduce_against(v, span_rows, span_pivots, p)
            if r.any():
                reps.append(idx)
                pivot = int(np.nonzero(r)[0][0])
                r = (r * pow(int(r[pivot]), p - 2, p)) % p
                span_rows = np.vstack([span_rows, r])
                span_pivots.append(pivot)

        # extend the multiplier pool with chain candidates of the representatives
        for idx in reps:
            chain = colon_chain(mono_polys[idx], I, level, "star")
            for c in _candidate_pool(chain, minimal_primes):
                if c not in pool_all:
                    pool_all.append(c)
        pool_all = pool_all[:POOL_CAP]

        # solve the linear conditions per multiplier and tail window
        found: list[Polynomial] = []
        seen_classes: set[tuple[int, ...]] = set()
        windows = range(level.e0, max(level.e0, level.e_max - 1) + 1)
        for c in pool_all:
            for e_start in windows:
                blocks = []
                for e in range(e_start, level.e_max + 1):
                    gb_e = bracket_cache[e].basis()
                    conds = [normal_form(c * mu.frobenius(e), gb_e)
                             for mu in mono_polys]
                    supp = sorted({m for f in conds for m in f.terms},
                                  key=ring.ambient.order.key)
                    cidx = {m: i for i, m in enumerate(supp)}
                    blocks.append(_vector_space(ring, conds, cidx).T
                                  if supp else
                                  np.zeros((0, len(basis_d)), dtype=np.int64))
                system = np.vstack(blocks) if blocks else \
                    np.zeros((0, len(basis_d)), dtype=np.int64)
                for sol in linalg.nullspace(system, p):
                    r = _reduce_against(sol, W_rref, W_pivots, p)
                    if not r.any():
                        continue
                    pivot = int(np.nonzero(r)[0][0])
                    r = (r * pow(int(r[pivot]), p - 2, p)) % p
                    klass = tuple(int(a) for a in r)
                    if klass in seen_classes:
                        continue
                    seen_classes.add(klass)
                    cand = ring.ambient.zero()
                    for a, mu in zip(r, mono_polys):
                        if a:
                            cand = cand + mu.scale(int(a))
                    found.append(cand)

        accepted: list[Polynomial] = []
        for cand in found:
            known = IdealHandle(ring, list(I.gens)
                                + [f for f, _ in certified + leveled]
                                + list(ring.filtration(d + 1).gens))
            if known.contains(cand):
                continue
            verdict = star_member(cand, I, level, minimal_primes)
            if verdict.kind == PROVEN_IN:
                certified.append((cand, verdict))
                accepted.append(cand)
            elif verdict.kind == IN_AT_LEVEL:
                leveled.append((cand, verdict))
                accepted.append(cand)
        per_degree.append(DegreeSearch(d, len(basis_d), new_dim, accepted, False))

    return report(start, flags_ok, warning, pool_all, per_degree,
                  certified, leveled, complete, None)


# -- graded reduction of non-homogeneous ideals ---------------------------------------


@dataclass
class GradedReductionReport:
    status: str                     # "TightlyClosed" | "Inconclusive" | "NotApplicable"
    n: int
    initial_ideal: IdealHandle | None = None
    premises: dict = field(default_factory=dict)
    closure_report: StarClosureReport | None = None
    closing_remark: dict = field(default_factory=dict)
    reason: str | None = None


def graded_reduction(I: IdealHandle, n: int, level: QLevel = QLevel(),
                     degree_cap: int | None = None) -> GradedReductionReport:
    """Reduce tight-closedness of I to its ideal of degree-n initial forms.

    Requires a standard-graded presentation with the normal and domain
    flags asserted.  Premises: F_(n+2) <= I <= F_n.  Generators of order
    exactly n split as (initial form) + (higher tail); the initial forms
    generate I_0.  A structural certificate that I_0 is tightly closed
    transfers to I; leveled-only evidence yields Inconclusive.
    """
    ring = I.ring
    if not ring.is_standard_graded:
        raise ValueError("graded reduction needs a standard-graded presentation")
    if n < 1:
        raise ValueError("need n >= 1")
    if not (ring.flags.asserted("normal", "domain")):
        return GradedReductionReport(
            "NotApplicable", n, reason="normal and domain flags required")

    gens = [ring.normal_form(g) for g in I.gens]
    gens = [g for g in gens if not g.is_zero()]
    upper_ok = all(g.min_degree() >= n for g in gens)
    lower_ok = is_subset(ring.filtration(n + 2), I)
    premises = {"I_in_F_n": upper_ok, "F_n2_in_I": lower_ok}
    if not (upper_ok and lower_ok):
        return GradedReductionReport("NotApplicable", n, premises=premises,
                                     reason="filtration premises fail")

    initials = []
    deep = []
    for g in gens:
        if g.min_degree() >= n + 1:
            deep.append(g)
        else:
            initials.append(g.homogeneous_component(n))
    I0 = IdealHandle(ring, initials)
    cap = degree_cap if degree_cap is not None else n + 2
    closure_report = star_closure(I0, cap, level)
    closing_remark = {
        "bound": "I* is contained in I + (special tight closure of I_0)",
        "requires": "graded normal domain with the degree filtration",
        "initial_forms": [str(g) for g in I0.gens],
    }
    if closure_report.certified_empty is not None:
        status = "TightlyClosed"
    else:
        status = "Inconclusive"
    return GradedReductionReport(status, n, I0, premises, closure_report,
                                 closing_remark)


# -- minimal multiplicity / F-rationality ----------------------------------------------


@dataclass
class MultiplicityReport:
    status: str                     # "FRational" | "False" | "NotApplicable"
    multiplicity: int | None = None
    edim: int | None = None
    dim: int | None = None
    caveat: str | None = None
    reason: str | None = None


def minimal_multiplicity(ring: PresentedRing, level: QLevel | None = None,
                         degree_cap: int = 10) -> MultiplicityReport:
    """Check e(R) = edim(R) - dim(R) + 1 and conclude F-rationality.

    Needs the normal, cm and graded_reduced flags asserted (a regular
    presentation counts automatically) on a standard-graded ring.  The
    underlying theorem also assumes an infinite residue field, which a
    prime field is not; the conclusion carries that caveat.
    """
    from .groebner import hilbert

    if not (ring.is_regular or ring.flags.asserted("normal", "cm", "graded_reduced")):
        return MultiplicityReport("NotApplicable",
                                  reason="normal, cm and graded_reduced flags required")
    if not ring.is_standard_graded:
        return MultiplicityReport("NotApplicable",
                                  reason="standard-graded presentation required")
    H = hilbert(ring.defining_basis(), degree_cap, ring.ambient)
    if not H.stabilized:
        H = hilbert(ring.defining_basis(), 2 * degree_cap, ring.ambient)
    if not H.stabilized:
        raise ValueError("Hilbert function did not stabilize below the degree cap")
    e = H.multiplicity
    edim = H.embedding_dimension()
    dim = H.dimension
    caveat = ("conclusion holds up to the infinite-residue-field hypothesis "
              "of the underlying theorem; F_p is finite")
    status = "FRational" if e == edim - dim + 1 else "False"
    return MultiplicityReport(status, e, edim, dim, caveat)


# -- expected-closure oracle -------------------------------------------------------------


@dataclass
class HmsExpected:
    """Oracle-expected closure of a parameter ideal; never a verdict."""

    expected: IdealHandle
    degree_sum: int
    label: str = "ORACLE-EXPECTED"
    hypotheses: str = ("Cohen-Macaulay graded ring, isolated singularity, "
                       "large characteristic; user-asserted, not checked")


def hms_expected(params: Sequence[PolyLike], ring: PresentedRing) -> HmsExpected:
    """Expected closure of a homogeneous parameter ideal: I plus all forms
    of degree at least the sum of the parameter degrees."""
    elems = [ring.element(f) for f in params]
    degrees = []
    for f in elems:
        nf = ring.normal_form(f)
        if nf.is_zero():
            raise ValueError("zero parameter")
        if not nf.is_homogeneous():
            raise ValueError("parameters must be homogeneous")
        degrees.append(nf.degree())
    D = sum(degrees)
    expected = combine(IdealHandle(ring, elems), ring.filtration(D), "sum")
    return HmsExpected(expected, D)
