"""Sparse multivariate polynomial arithmetic over prime fields F_p.

Polynomials live in an ambient ring F_p[x_1, ..., x_n] described by a
:class:`PolyRing`: a prime characteristic, variable names with positive
integer weights (default weight 1), and an active monomial order.

Representation conventions:

* coefficients are plain Python integers reduced to the range [0, p);
* monomials are tuples of non-negative integer exponents, one slot per
  ring variable, in declaration order;
* a polynomial is a finite map ``exponent tuple -> coefficient`` with no
  zero coefficients stored; the zero polynomial has an empty term map.

All values are immutable after construction and safe to share between
threads; every operation returns a fresh canonical polynomial.

The text grammar accepted by :meth:`PolyRing.poly` and produced by
:meth:`PolyRing.format`: terms joined by ``+`` or ``-``; a term is an
optional integer coefficient and ``*``-separated powers ``var^k``; ``^1``
and ``*`` may be omitted; coefficients are reduced mod p and ``-c`` maps
to ``p - c``.  Examples: ``x^3 + y^3 + z^3``, ``2*x*y^2 - z``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence, Union

__all__ = [
    "MAX_EXPONENT",
    "ExponentOverflowError",
    "ParseError",
    "PrimeField",
    "MonomialOrder",
    "Polynomial",
    "PolyRing",
    "poly_arith",
    "frobenius_power",
    "compare",
]

# Exponents are kept well inside a machine word so that exponent scaling
# can be checked for overflow explicitly instead of silently growing.
MAX_EXPONENT = 2**31 - 1


class ExponentOverflowError(OverflowError):
    """Raised when exponent scaling would exceed MAX_EXPONENT."""


class ParseError(ValueError):
    """Syntax or validation error in polynomial / session text.

    Carries 1-based ``line`` and ``column`` of the offending token when
    known (0 when not applicable).
    """

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        if line:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """Arithmetic of the prime field F_p on canonical int representatives."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p}")
        self.p = p

    def reduce(self, a: int) -> int:
        return a % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return pow(a, self.p - 2, self.p)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


class MonomialOrder:
    """A global monomial order on exponent tuples.

    ``kind`` is ``"lex"`` or ``"degrevlex"``; ``precedence`` lists variable
    indices from highest to lowest (default: declaration order, so the
    first declared variable is largest).  ``block`` is an optional tuple of
    variable indices compared first and lexicographically, which makes the
    order an elimination order for those variables; it is used internally
    by elimination and not part of the public session surface.

    Degrees are weighted by the ring's variable weights, so degrevlex is
    degree-compatible with respect to the declared grading.
    """

    __slots__ = ("kind", "weights", "precedence", "block")

    def __init__(self, kind: str, weights: Sequence[int],
                 precedence: Sequence[int] | None = None,
                 block: Sequence[int] = ()):
        if kind not in ("lex", "degrevlex"):
            raise ValueError(f"unknown monomial order kind {kind!r}")
        self.kind = kind
        self.weights = tuple(weights)
        n = len(self.weights)
        if precedence is None:
            precedence = range(n)
        self.precedence = tuple(precedence)
        if sorted(self.precedence) != list(range(n)):
            raise ValueError("precedence must be a permutation of the variables")
        self.block = tuple(block)

    def degree(self, exps: tuple[int, ...]) -> int:
        """Weighted total degree of a monomial."""
        w = self.weights
        return sum(e * w[i] for i, e in enumerate(exps) if e)

    def key(self, exps: tuple[int, ...]):
        """Sort key: key(m1) > key(m2) iff m1 > m2 in this order."""
        if self.kind == "lex":
            main = tuple(exps[i] for i in self.precedence)
        else:
            main = (self.degree(exps),
                    tuple(-exps[i] for i in reversed(self.precedence)))
        if self.block:
            return (tuple(exps[i] for i in self.block), main)
        return main

    def compare(self, e1: tuple[int, ...], e2: tuple[int, ...]) -> int:
        k1, k2 = self.key(e1), self.key(e2)
        return (k1 > k2) - (k1 < k2)

    def with_block(self, block: Sequence[int]) -> "MonomialOrder":
        return MonomialOrder(self.kind, self.weights, self.precedence, block)

    def __eq__(self, other) -> bool:
        return (isinstance(other, MonomialOrder)
                and self.kind == other.kind
                and self.weights == other.weights
                and self.precedence == other.precedence
                and self.block == other.block)

    def __hash__(self) -> int:
        return hash((self.kind, self.weights, self.precedence, self.block))

    def __repr__(self) -> str:
        extra = f", block={self.block}" if self.block else ""
        return f"MonomialOrder({self.kind!r}{extra})"


PolyLike = Union["Polynomial", str, int, Mapping[tuple[int, ...], int]]


class Polynomial:
    """Immutable sparse polynomial bound to a :class:`PolyRing`.

    Supports ``+``, ``-``, ``*``, ``**`` against polynomials of the same
    ring (and plain integers, coerced to constants).
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: "PolyRing", terms: Mapping[tuple[int, ...], int]):
        clean = {}
        for exps, c in terms.items():
            c %= ring.field.p
            if c:
                clean[tuple(exps)] = c
        self.ring = ring
        self.terms = clean
        self._hash = None

    # -- construction helpers ------------------------------------------------

    @classmethod
    def _raw(cls, ring: "PolyRing", terms: dict) -> "Polynomial":
        # internal: terms already canonical (reduced, no zeros, tuple keys)
        self = object.__new__(cls)
        self.ring = ring
        self.terms = terms
        self._hash = None
        return self

    # -- basic queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        zero = (0,) * self.ring.nvars
        return not self.terms or set(self.terms) == {zero}

    def constant_coefficient(self) -> int:
        return self.terms.get((0,) * self.ring.nvars, 0)

    def monomials(self) -> list[tuple[int, ...]]:
        """Monomials in descending active order."""
        order = self.ring.order
        return sorted(self.terms, key=order.key, reverse=True)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return [(m, self.terms[m]) for m in self.monomials()]

    def leading_monomial(self, order: MonomialOrder | None = None) -> tuple[int, ...]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        order = order or self.ring.order
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder | None = None) -> int:
        return self.terms[self.leading_monomial(order)]

    def degree(self) -> int:
        """Maximal weighted degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        deg = self.ring.order.degree
        return max(deg(m) for m in self.terms)

    def min_degree(self) -> int:
        """Minimal weighted degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        deg = self.ring.order.degree
        return min(deg(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        deg = self.ring.order.degree
        degrees = {deg(m) for m in self.terms}
        return len(degrees) == 1

    def homogeneous_component(self, d: int) -> "Polynomial":
        deg = self.ring.order.degree
        return Polynomial._raw(
            self.ring, {m: c for m, c in self.terms.items() if deg(m) == d})

    # -- arithmetic ------------------------------------------------------------

    def _coerce(self, other: PolyLike) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and other.ring != self.ring:
                raise ValueError("polynomials belong to different rings")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: PolyLike) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.ring.field.p
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = (terms.get(m, 0) + c) % p
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial._raw(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        p = self.ring.field.p
        return Polynomial._raw(self.ring, {m: p - c for m, c in self.terms.items()})

    def __sub__(self, other: PolyLike) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: PolyLike) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other: PolyLike) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.ring.field.p
        out: dict[tuple[int, ...], int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = (out.get(m, 0) + c1 * c2) % p
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative exponents are not supported")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c: int) -> "Polynomial":
        p = self.ring.field.p
        c %= p
        if c == 0:
            return self.ring.zero()
        if c == 1:
            return self
        return Polynomial._raw(self.ring, {m: (c * v) % p for m, v in self.terms.items()})

    def monic(self, order: MonomialOrder | None = None) -> "Polynomial":
        if not self.terms:
            return self
        inv = self.ring.field.inv(self.leading_coefficient(order))
        return self.scale(inv)

    def frobenius(self, e: int) -> "Polynomial":
        """Return f**(p**e).  Over F_p this scales every exponent by p**e."""
        if e < 0:
            raise ValueError("Frobenius exponent must be non-negative")
        if e == 0:
            return self
        q = self.ring.field.p ** e
        out = {}
        for m, c in self.terms.items():
            scaled = tuple(a * q for a in m)
            if any(a > MAX_EXPONENT for a in scaled):
                raise ExponentOverflowError(
                    f"exponent overflow scaling monomial by p^{e}")
            out[scaled] = c  # c**q == c in F_p (Fermat)
        return Polynomial._raw(self.ring, out)

    # -- comparisons & hashing ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == self.ring.const(other)
        return (isinstance(other, Polynomial)
                and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring.field.p, self.ring.names,
                               frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        return self.ring.format(self)

    def __repr__(self) -> str:
        return f"<{self.ring.format(self)} over F_{self.ring.field.p}>"


class PolyRing:
    """Ambient ring F_p[x_1, ..., x_n] with weights and an active order.

    Rings compare equal when characteristic, variables, weights and order
    agree, so polynomials from two equal ring objects interoperate.
    """

    __slots__ = ("field", "names", "weights", "order", "_index")

    def __init__(self, p: int, names: Sequence[str],
                 weights: Sequence[int] | None = None,
                 order: str | MonomialOrder = "degrevlex",
                 precedence: Sequence[int] | None = None):
        self.field = PrimeField(p)
        names = tuple(names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        for nm in names:
            if not nm.isidentifier():
                raise ValueError(f"invalid variable name {nm!r}")
        self.names = names
        if weights is None:
            weights = (1,) * len(names)
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(names) or any(w <= 0 for w in weights):
            raise ValueError("weights must be positive integers, one per variable")
        self.weights = weights
        if isinstance(order, str):
            order = MonomialOrder(order, weights, precedence)
        elif order.weights != weights:
            raise ValueError("order weights disagree with ring weights")
        self.order = order
        self._index = {nm: i for i, nm in enumerate(names)}

    # -- properties ---------------------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.names)

    def variable_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ParseError(f"unknown variable {name!r}") from None

    # -- element constructors -------------------------------------------------------

    def zero(self) -> Polynomial:
        return Polynomial._raw(self, {})

    def one(self) -> Polynomial:
        return self.const(1)

    def const(self, c: int) -> Polynomial:
        c %= self.field.p
        if c == 0:
            return self.zero()
        return Polynomial._raw(self, {(0,) * self.nvars: c})

    def var(self, name: str) -> Polynomial:
        i = self.variable_index(name)
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial._raw(self, {exps: 1})

    def variables(self) -> list[Polynomial]:
        return [self.var(nm) for nm in self.names]

    def monomial(self, exps: Sequence[int], coeff: int = 1) -> Polynomial:
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent tuple {exps}")
        return Polynomial(self, {exps: coeff})

    def poly(self, source: PolyLike) -> Polynomial:
        """Coerce text, an int, a term mapping or a Polynomial into this ring."""
        if isinstance(source, Polynomial):
            if source.ring != self:
                raise ValueError("polynomial from a different ring")
            return source
        if isinstance(source, int):
            return self.const(source)
        if isinstance(source, str):
            return self._parse(source)
        return Polynomial(self, source)

    # -- variants ----------------------------------------------------------------

    def with_order(self, order: str | MonomialOrder,
                   precedence: Sequence[int] | None = None) -> "PolyRing":
        """Same variables, different active order (explicit re-sort point)."""
        return PolyRing(self.field.p, self.names, self.weights, order, precedence)

    def extended(self, extra_names: Sequence[str],
                 extra_weights: Sequence[int] | None = None) -> "PolyRing":
        """Ring with additional variables appended (used for tag variables)."""
        if extra_weights is None:
            extra_weights = (1,) * len(extra_names)
        return PolyRing(self.field.p, self.names + tuple(extra_names),
                        self.weights + tuple(extra_weights),
                        self.order.kind)

    def transport(self, f: Polynomial, target: "PolyRing") -> Polynomial:
        """Re-home f into target, matching variables by name.

        Variables of f absent from target must not occur in f; fresh
        variables of target get exponent 0.
        """
        positions = []
        for i, nm in enumerate(self.names):
            positions.append(target._index.get(nm, -1))
        out: dict[tuple[int, ...], int] = {}
        for m, c in f.terms.items():
            exps = [0] * target.nvars
            for i, e in enumerate(m):
                if not e:
                    continue
                j = positions[i]
                if j < 0:
                    raise ValueError(
                        f"variable {self.names[i]!r} does not exist in target ring")
                exps[j] = e
            out[tuple(exps)] = c
        return Polynomial(target, out)

    # -- text I/O -------------------------------------------------------------------

    _TOKEN_CHARS = set("+-*^()")

    def _tokenize(self, text: str, line: int = 0) -> Iterator[tuple[str, str, int]]:
        i, n = 0, len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            col = i + 1
            if ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                yield ("int", text[i:j], col)
                i = j
            elif ch.isalpha() or ch == "_":
                j = i
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                yield ("name", text[i:j], col)
                i = j
            elif ch in self._TOKEN_CHARS:
                yield ("op", ch, col)
                i += 1
            else:
                raise ParseError(f"unexpected character {ch!r}", line, col)

    def _parse(self, text: str, line: int = 0) -> Polynomial:
        tokens = list(self._tokenize(text, line))
        if not tokens:
            raise ParseError("empty polynomial", line, 1)
        result: dict[tuple[int, ...], int] = {}
        p = self.field.p
        pos = 0

        def term_error(msg, at):
            return ParseError(msg, line, at)

        sign = 1
        while pos < len(tokens):
            kind, val, col = tokens[pos]
            # leading / separating sign
            if kind == "op" and val in "+-":
                sign = 1 if val == "+" else -1
                pos += 1
                if pos >= len(tokens):
                    raise term_error("dangling sign", col)
            coeff = 1
            exps = [0] * self.nvars
            saw_factor = False
            expect_factor = True
            while pos < len(tokens):
                kind, val, col = tokens[pos]
                if kind == "op" and val in "+-":
                    break
                if kind == "op" and val == "*":
                    if not saw_factor:
                        raise term_error("'*' without preceding factor", col)
                    pos += 1
                    expect_factor = True
                    continue
                if kind == "int":
                    coeff = coeff * int(val)
                    pos += 1
                elif kind == "name":
                    i = self._index.get(val)
                    if i is None:
                        raise term_error(f"unknown variable {val!r}", col)
                    power = 1
                    pos += 1
                    if pos < len(tokens) and tokens[pos][:2] == ("op", "^"):
                        pos += 1
                        if pos >= len(tokens) or tokens[pos][0] != "int":
                            raise term_error("expected integer after '^'", col)
                        power = int(tokens[pos][1])
                        pos += 1
                    exps[i] += power
                else:
                    raise term_error(f"unexpected token {val!r}", col)
                saw_factor = True
                expect_factor = False
            if expect_factor and not saw_factor:
                raise term_error("empty term", col)
            key = tuple(exps)
            result[key] = (result.get(key, 0) + sign * coeff) % p
            sign = 1
        return Polynomial(self, result)

    def format_monomial(self, exps: tuple[int, ...]) -> str:
        parts = [f"{nm}^{e}" if e > 1 else nm
                 for nm, e in zip(self.names, exps) if e]
        return "*".join(parts) if parts else "1"

    def format(self, f: Polynomial) -> str:
        """Canonical text: terms descending in the active order."""
        if not f.terms:
            return "0"
        p = self.field.p
        pieces = []
        for m, c in f.sorted_terms():
            negative = p > 2 and c > p - c
            mag = p - c if negative else c
            mono = self.format_monomial(m)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if negative else "+", body))
        sign, body = pieces[0]
        text = body if sign == "+" else f"-{body}"
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    # -- dunder ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, PolyRing)
                and self.field == other.field
                and self.names == other.names
                and self.weights == other.weights
                and self.order == other.order)

    def __hash__(self) -> int:
        return hash((self.field.p, self.names, self.weights, self.order))

    def __repr__(self) -> str:
        vars_ = ", ".join(f"{nm}({w})" for nm, w in zip(self.names, self.weights))
        return f"PolyRing(F_{self.field.p}[{vars_}], {self.order.kind})"


# -- module-level operation wrappers (contract surface) ----------------------------


def poly_arith(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    """Ring operation on two polynomials of the same ambient ring.

    ``op`` is one of ``add``, ``sub``, ``mul``.
    """
    if f.ring != g.ring:
        raise ValueError("characteristic or variable-set mismatch")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def frobenius_power(f: Polynomial, e: int) -> Polynomial:
    """f**(p**e) via exponent scaling (coefficients are Frobenius-fixed)."""
    return f.frobenius(e)


def compare(m1: tuple[int, ...], m2: tuple[int, ...], order: MonomialOrder) -> int:
    """Trichotomous comparison of two exponent tuples: -1, 0 or 1."""
    if len(m1) != len(m2):
        raise ValueError("monomials over different variable sets")
    return order.compare(tuple(m1), tuple(m2))
