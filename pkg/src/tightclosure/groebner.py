"""Buchberger's algorithm, normal forms, elimination and Hilbert data.

Everything here is deterministic: the reduced Groebner basis of an ideal
under a fixed order is unique, pair selection follows the normal strategy
(lowest weighted lcm degree first, ties broken by the order itself), and
output generators are sorted by leading monomial.  No randomness, no
parallelism, so repeated runs are bit-identical.

The Macaulay-matrix membership oracle at the bottom is an independent
cross-check for ideal membership: it never touches the division-based
code paths and decides membership by exact linear algebra over F_p on a
degree-truncated multiplication matrix.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .polyfield import MonomialOrder, Polynomial, PolyRing

__all__ = [
    "GroebnerBasis",
    "HilbertData",
    "spoly",
    "normal_form",
    "buchberger",
    "ideal_member",
    "eliminate",
    "exact_divide",
    "degree_basis",
    "monomials_of_degree",
    "hilbert",
    "MacaulayMatrix",
    "macaulay_member_oracle",
]


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis: monic generators, fully interreduced.

    ``generators`` are sorted by increasing leading monomial, which makes
    the basis a canonical form for the (ideal, order) pair.
    """

    generators: tuple[Polynomial, ...]
    order: MonomialOrder
    reduced: bool = True

    @property
    def ring(self) -> PolyRing:
        if not self.generators:
            raise ValueError("empty basis has no ring")
        return self.generators[0].ring

    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [g.leading_monomial(self.order) for g in self.generators]

    def is_zero_ideal(self) -> bool:
        return not self.generators

    def is_unit_ideal(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


def spoly(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """S-polynomial of f and g under the given order."""
    ring = f.ring
    lmf, lmg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = _lcm(lmf, lmg)
    cf = ring.field.inv(f.leading_coefficient(order))
    cg = ring.field.inv(g.leading_coefficient(order))
    mf = ring.monomial(tuple(l - a for l, a in zip(lcm, lmf)), cf)
    mg = ring.monomial(tuple(l - a for l, a in zip(lcm, lmg)), cg)
    return mf * f - mg * g


def normal_form(f: Polynomial,
                basis: "GroebnerBasis | Sequence[Polynomial]",
                order: MonomialOrder | None = None) -> Polynomial:
    """Full remainder of f on division by the basis.

    Against a reduced Groebner basis the result is the unique normal
    form: no remaining term is divisible by any leading monomial, and
    f - NF(f) lies in the ideal.
    """
    if isinstance(basis, GroebnerBasis):
        order = basis.order
        polys = basis.generators
    else:
        polys = [g for g in basis if not g.is_zero()]
        if order is None:
            order = f.ring.order
    if not polys:
        return f
    ring = f.ring
    p = ring.field.p
    key = order.key
    divisors = [(g.leading_monomial(order),
                 ring.field.inv(g.leading_coefficient(order)),
                 g) for g in polys]
    work = dict(f.terms)
    remainder: dict[tuple[int, ...], int] = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for lm, lcinv, g in divisors:
            if _divides(lm, m):
                factor = (c * lcinv) % p
                shift = tuple(a - b for a, b in zip(m, lm))
                for gm, gc in g.terms.items():
                    if gm == lm:
                        continue
                    mm = tuple(a + b for a, b in zip(gm, shift))
                    v = (work.get(mm, 0) - factor * gc) % p
                    if v:
                        work[mm] = v
                    else:
                        work.pop(mm, None)
                break
        else:
            remainder[m] = c
    return Polynomial._raw(ring, remainder)


def _reduce_mutually(polys: list[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    """Ideal-preserving interreduction: replace each g by NF(g, rest).

    Safe on arbitrary generating sets (a generator is only dropped when
    the others reduce it to zero).
    """
    polys = sorted((g.monic(order) for g in polys if not g.is_zero()),
                   key=lambda g: order.key(g.leading_monomial(order)))
    changed = True
    while changed:
        changed = False
        for i in range(len(polys)):
            g = polys[i]
            if g is None:
                continue
            others = [h for j, h in enumerate(polys) if j != i and h is not None]
            r = normal_form(g, others, order)
            if r.is_zero():
                polys[i] = None
                changed = True
            elif r != g:
                polys[i] = r.monic(order)
                changed = True
        polys = [g for g in polys if g is not None]
    polys.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return polys


def _interreduce(polys: list[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    """Turn a basis with the full set of leading terms into the reduced GB.

    Only valid once ``polys`` is already a Groebner basis: minimization by
    leading-term divisibility would change the ideal otherwise.
    """
    polys = sorted((g.monic(order) for g in polys if not g.is_zero()),
                   key=lambda g: order.key(g.leading_monomial(order)))
    minimal: list[Polynomial] = []
    lts: list[tuple[int, ...]] = []
    for g in polys:
        lm = g.leading_monomial(order)
        if not any(_divides(t, lm) for t in lts):
            minimal.append(g)
            lts.append(lm)
    # tail-reduce to a fixpoint
    changed = True
    while changed:
        changed = False
        for i in range(len(minimal)):
            others = minimal[:i] + minimal[i + 1:]
            h = normal_form(minimal[i], others, order).monic(order)
            if h != minimal[i]:
                minimal[i] = h
                changed = True
    minimal.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return minimal


def buchberger(gens: Iterable[Polynomial],
               order: MonomialOrder | None = None) -> GroebnerBasis:
    """Unique reduced Groebner basis of the ideal generated by ``gens``.

    Zero generators are dropped; an all-zero input yields the empty basis
    of the zero ideal.  Pair selection: normal strategy.  Buchberger's
    coprime-lcm and chain criteria prune useless pairs.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return GroebnerBasis((), order or MonomialOrder("degrevlex", ()))
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators from different rings")
    if order is None:
        order = ring.order
    basis = _reduce_mutually(list(gens), order)
    if not basis:
        return GroebnerBasis((), order)
    lms = [g.leading_monomial(order) for g in basis]
    deg = order.degree

    heap: list[tuple] = []
    pending: set[tuple[int, int]] = set()

    def push_pair(i: int, j: int):
        # the S-polynomial of two monomials vanishes identically, so such
        # pairs are never queued (equivalent to an instant zero reduction)
        if len(basis[i].terms) == 1 and len(basis[j].terms) == 1:
            return
        lcm = _lcm(lms[i], lms[j])
        heapq.heappush(heap, (deg(lcm), order.key(lcm), i, j))
        pending.add((i, j))

    for j in range(len(basis)):
        for i in range(j):
            push_pair(i, j)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        lcm = _lcm(lms[i], lms[j])
        # coprime criterion
        if lcm == tuple(a + b for a, b in zip(lms[i], lms[j])):
            continue
        # chain criterion: some k with LT_k | lcm and both (i,k), (j,k) done
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not _divides(lms[k], lcm):
                continue
            if (min(i, k), max(i, k)) not in pending and \
               (min(j, k), max(j, k)) not in pending:
                skip = True
                break
        if skip:
            continue
        h = normal_form(spoly(basis[i], basis[j], order), basis, order)
        if h.is_zero():
            continue
        h = h.monic(order)
        basis.append(h)
        lms.append(h.leading_monomial(order))
        new = len(basis) - 1
        for k in range(new):
            push_pair(k, new)

    return GroebnerBasis(tuple(_interreduce(basis, order)), order)


def ideal_member(f: Polynomial, gb: GroebnerBasis) -> bool:
    """True iff f lies in the ideal: NF(f, gb) == 0."""
    return normal_form(f, gb).is_zero()


def eliminate(gens: Sequence[Polynomial], drop_names: Sequence[str]) -> list[Polynomial]:
    """Generators of the elimination ideal without the dropped variables.

    Uses a block order (lex on the dropped variables over the ring's
    order on the rest).  The returned polynomials still live in the same
    ring but involve none of the dropped variables.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring
    drop_idx = tuple(ring.variable_index(nm) for nm in drop_names)
    block_order = ring.order.with_block(drop_idx)
    gb = buchberger(gens, block_order)
    out = []
    for g in gb:
        if all(all(m[i] == 0 for i in drop_idx) for m in g.terms):
            out.append(g)
    return out


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient f/g when g divides f exactly; raises otherwise."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    order = ring.order
    p = ring.field.p
    lm = g.leading_monomial(order)
    lcinv = ring.field.inv(g.leading_coefficient(order))
    work = dict(f.terms)
    quot: dict[tuple[int, ...], int] = {}
    while work:
        m = max(work, key=order.key)
        c = work.pop(m)
        if not _divides(lm, m):
            raise ValueError("not exactly divisible")
        shift = tuple(a - b for a, b in zip(m, lm))
        factor = (c * lcinv) % p
        quot[shift] = factor
        for gm, gc in g.terms.items():
            if gm == lm:
                continue
            mm = tuple(a + b for a, b in zip(gm, shift))
            v = (work.get(mm, 0) - factor * gc) % p
            if v:
                work[mm] = v
            else:
                work.pop(mm, None)
    return Polynomial._raw(ring, quot)


# -- monomial enumeration and Hilbert data -------------------------------------


def monomials_of_degree(ring: PolyRing, d: int) -> list[tuple[int, ...]]:
    """All exponent tuples of weighted degree exactly d, descending order."""
    weights = ring.weights
    n = ring.nvars
    out: list[tuple[int, ...]] = []

    def rec(i: int, remaining: int, prefix: list[int]):
        if i == n - 1:
            w = weights[i]
            if remaining % w == 0:
                out.append(tuple(prefix + [remaining // w]))
            return
        w = weights[i]
        for e in range(remaining // w, -1, -1):
            rec(i + 1, remaining - e * w, prefix + [e])

    if d >= 0:
        rec(0, d, [])
    out.sort(key=ring.order.key, reverse=True)
    return out


def degree_basis(gb: GroebnerBasis, d: int) -> list[tuple[int, ...]]:
    """Standard monomials of weighted degree exactly d.

    A monomial is standard when no leading term of the basis divides it;
    their classes form an F_p-basis of the quotient in that degree.
    """
    if gb.is_zero_ideal():
        raise ValueError("need a ring context; zero-ideal basis has none")
    ring = gb.ring
    lts = gb.leading_monomials()
    return [m for m in monomials_of_degree(ring, d)
            if not any(_divides(t, m) for t in lts)]


def _standard_count(ring: PolyRing, lts: list[tuple[int, ...]], d: int) -> int:
    return sum(1 for m in monomials_of_degree(ring, d)
               if not any(_divides(t, m) for t in lts))


@dataclass(frozen=True)
class HilbertData:
    """Hilbert function values, Krull dimension and multiplicity.

    ``hf[d]`` counts standard monomials of degree d for d <= degree_cap.
    ``multiplicity`` is the stabilized leading difference of the Hilbert
    function (the normalized leading coefficient); it is None with
    ``stabilized`` False when the cap was too small to see stabilization.
    """

    hf: tuple[int, ...]
    dimension: int
    multiplicity: int | None
    stabilized: bool

    def embedding_dimension(self) -> int:
        return self.hf[1] if len(self.hf) > 1 else 0


def hilbert(gb: GroebnerBasis, degree_cap: int, ring: PolyRing | None = None) -> HilbertData:
    """Hilbert data of the quotient by a homogeneous ideal.

    Dimension is read combinatorially off the initial ideal: the size of
    the largest variable subset touching no leading-term support.  The
    multiplicity comes from stabilization of iterated differences of the
    Hilbert function; three equal trailing values are required.
    """
    if gb.is_zero_ideal():
        if ring is None:
            raise ValueError("zero ideal needs an explicit ring")
    else:
        ring = gb.ring
        for g in gb:
            if not g.is_homogeneous():
                raise ValueError("hilbert requires a homogeneous ideal")
    lts = gb.leading_monomials() if not gb.is_zero_ideal() else []
    n = ring.nvars

    if any(all(e == 0 for e in t) for t in lts):  # unit ideal: zero ring
        return HilbertData((0,) * (degree_cap + 1), -1, 0, True)

    hf = tuple(_standard_count(ring, lts, d) for d in range(degree_cap + 1))

    supports = [frozenset(i for i, e in enumerate(t) if e) for t in lts]
    dimension = 0
    for mask in range(2 ** n):
        subset = frozenset(i for i in range(n) if mask >> i & 1)
        if any(s <= subset for s in supports):
            continue
        dimension = max(dimension, len(subset))

    if dimension == 0:
        stabilized = len(hf) >= 2 and hf[-1] == 0 and hf[-2] == 0
        mult = sum(hf) if stabilized else None
        return HilbertData(hf, 0, mult, stabilized)

    values = list(hf)
    for _ in range(dimension - 1):
        values = [b - a for a, b in zip(values, values[1:])]
    stabilized = (len(values) >= 3
                  and values[-1] == values[-2] == values[-3]
                  and values[-1] >= 1)
    mult = values[-1] if stabilized else None
    return HilbertData(hf, dimension, mult, stabilized)


# -- independent membership oracle ----------------------------------------------


class MacaulayMatrix:
    """Degree-truncated multiplication matrix for membership queries.

    Columns are spanned by all products (monomial * generator) whose
    degree stays within the cap; a polynomial f of degree <= cap lies in
    the span iff it admits a representation sum h_i g_i with
    deg h_i <= cap - deg g_i.  Used only as a test oracle: membership
    beyond the cap is reported as inconclusive by raising ValueError.
    """

    def __init__(self, gens: Sequence[Polynomial], degree_cap: int):
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            raise ValueError("need at least one nonzero generator")
        ring = gens[0].ring
        self.ring = ring
        self.degree_cap = degree_cap
        self.p = ring.field.p
        monomials: list[tuple[int, ...]] = []
        for d in range(degree_cap + 1):
            monomials.extend(monomials_of_degree(ring, d))
        self._index = {m: i for i, m in enumerate(monomials)}
        rows = []
        for g in gens:
            gdeg = g.degree()
            budget = degree_cap - gdeg
            if budget < 0:
                continue
            for d in range(budget + 1):
                for mu in monomials_of_degree(ring, d):
                    prod = ring.monomial(mu) * g
                    rows.append(self._vector(prod))
        if not rows:
            rows = [np.zeros(len(monomials), dtype=np.int64)]
        matrix = np.array(rows, dtype=np.int64)
        R, pivots = linalg.rref(matrix, self.p)
        self._rows = R[:len(pivots)]
        self._pivots = pivots

    def _vector(self, f: Polynomial) -> np.ndarray:
        v = np.zeros(len(self._index), dtype=np.int64)
        for m, c in f.terms.items():
            v[self._index[m]] = c
        return v

    def member(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        if f.degree() > self.degree_cap:
            raise ValueError(
                f"degree cap {self.degree_cap} too small for a degree-"
                f"{f.degree()} query; result would be inconclusive")
        v = self._vector(f)
        for row, c in zip(self._rows, self._pivots):
            if v[c]:
                v = (v - v[c] * row) % self.p
        return not v.any()


def macaulay_member_oracle(f: Polynomial, gens: Sequence[Polynomial],
                           degree_cap: int) -> bool:
    """One-shot membership query; see :class:`MacaulayMatrix`."""
    return MacaulayMatrix(gens, degree_cap).member(f)
