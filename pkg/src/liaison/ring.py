"""Standard-graded polynomial rings over GF(p).

Monomials are dense exponent tuples (desk scale: at most 8 variables), and a
polynomial is an immutable sequence of (exponent, coefficient) terms kept
strictly descending in graded reverse lexicographic order.  A RingDescriptor
bundles the characteristic, the variable names, an optional hypersurface
modulus f (so the descriptor can stand for the coordinate ring P/(f)), and a
seed for any "sufficiently general" choices made downstream.
"""
from __future__ import annotations

import itertools
import random
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .errors import UsageError
from .field import DEFAULT_PRIME, PrimeField

Exp = tuple  # exponent tuple, one slot per variable

MAX_VARIABLES = 8


# ---------------------------------------------------------------------------
# exponent-tuple helpers

def exp_degree(e: Exp) -> int:
    return sum(e)


def exp_add(a: Exp, b: Exp) -> Exp:
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a: Exp, b: Exp) -> Exp:
    """a - b, valid when b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def exp_divides(a: Exp, b: Exp) -> bool:
    """Does x^a divide x^b?"""
    return all(x <= y for x, y in zip(a, b))


def exp_lcm(a: Exp, b: Exp) -> Exp:
    return tuple(max(x, y) for x, y in zip(a, b))


def exp_coprime(a: Exp, b: Exp) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def grevlex_key(e: Exp):
    """Sort key: bigger key = bigger monomial in grevlex."""
    return (sum(e), tuple(-x for x in reversed(e)))


@lru_cache(maxsize=None)
def monomial_exponents(nvars: int, degree: int) -> tuple:
    """All exponent tuples of the given total degree, grevlex descending."""
    if degree < 0:
        return ()
    exps = []
    for bars in itertools.combinations(range(degree + nvars - 1), nvars - 1):
        prev = -1
        e = []
        for b in bars:
            e.append(b - prev - 1)
            prev = b
        e.append(degree + nvars - 1 - prev - 1)
        exps.append(tuple(e))
    exps.sort(key=grevlex_key, reverse=True)
    return tuple(exps)


class Monomial(NamedTuple):
    """Exponent vector with its cached total degree."""

    exponents: Exp
    degree: int

    @classmethod
    def make(cls, exponents: Iterable[int]) -> "Monomial":
        e = tuple(int(x) for x in exponents)
        if any(x < 0 for x in e):
            raise UsageError("monomial exponents must be non-negative")
        return cls(e, sum(e))


# ---------------------------------------------------------------------------
# ring descriptor

class RingDescriptor:
    """Characteristic, variables, optional hypersurface modulus, rng seed."""

    __slots__ = ("field", "variables", "modulus", "seed", "_varindex")

    def __init__(self, characteristic: int = DEFAULT_PRIME,
                 variables: Sequence[str] = ("x0", "x1", "x2", "x3"),
                 modulus: "Polynomial | str | None" = None,
                 seed: int = 0):
        self.field = PrimeField(characteristic)
        vs = tuple(variables)
        if len(vs) != len(set(vs)):
            raise UsageError("variable names must be distinct")
        if not vs:
            raise UsageError("at least one variable required")
        if len(vs) > MAX_VARIABLES:
            raise UsageError(f"dense exponents support at most {MAX_VARIABLES} variables")
        self.variables = vs
        self._varindex = {v: i for i, v in enumerate(vs)}
        self.seed = seed
        self.modulus = None if modulus is None else self._check_modulus(modulus)

    def _check_modulus(self, f):
        if isinstance(f, str):
            f = parse_polynomial(self, f)
        if not isinstance(f, Polynomial):
            raise UsageError("modulus must be a polynomial")
        if not self.compatible(f.ring):
            raise UsageError("modulus lives in a different ring")
        if f.is_zero():
            raise UsageError("modulus must be nonzero")
        d = f.homogeneous_degree
        if d is None or d < 2:
            raise UsageError("modulus must be homogeneous of degree >= 2")
        return f

    # descriptors are compared by characteristic and variables; the modulus
    # is context (the same polynomials serve P and P/(f))
    def key(self):
        return (self.field.p, self.variables)

    def compatible(self, other: "RingDescriptor") -> bool:
        return self.key() == other.key()

    @property
    def characteristic(self) -> int:
        return self.field.p

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def ambient(self) -> "RingDescriptor":
        if self.modulus is None:
            return self
        return RingDescriptor(self.field.p, self.variables, None, self.seed)

    def with_modulus(self, f) -> "RingDescriptor":
        return RingDescriptor(self.field.p, self.variables, f, self.seed)

    def with_seed(self, seed: int) -> "RingDescriptor":
        return RingDescriptor(self.field.p, self.variables, self.modulus, seed)

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return Polynomial(self, (((0,) * self.nvars, 1),))

    def constant(self, c: int) -> "Polynomial":
        c = self.field.normalize(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, (((0,) * self.nvars, c),))

    def variable(self, i) -> "Polynomial":
        if isinstance(i, str):
            i = self._varindex[i]
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, ((tuple(e), 1),))

    def monomial(self, exponents: Iterable[int], coeff: int = 1) -> "Polynomial":
        e = tuple(int(x) for x in exponents)
        if len(e) != self.nvars:
            raise UsageError("exponent length does not match variable count")
        c = self.field.normalize(coeff)
        return Polynomial(self, ((e, c),) if c else ())

    def monomials_of_degree(self, d: int) -> tuple:
        return monomial_exponents(self.nvars, d)

    def poly(self, text: str) -> "Polynomial":
        return parse_polynomial(self, text)

    def rng(self, offset: int = 0) -> random.Random:
        return random.Random(self.seed * 1_000_003 + offset)

    def __eq__(self, other):
        return (isinstance(other, RingDescriptor) and self.key() == other.key()
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.key(), self.modulus))

    def __repr__(self):
        mod = f", modulus={self.modulus}" if self.modulus is not None else ""
        return f"GF({self.field.p})[{', '.join(self.variables)}]{mod}"


# ---------------------------------------------------------------------------
# polynomials

class Polynomial:
    """Immutable multivariate polynomial with terms grevlex-descending."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingDescriptor, terms):
        self.ring = ring
        self.terms = tuple(terms)
        self._hash = None

    @classmethod
    def from_dict(cls, ring: RingDescriptor, data: dict) -> "Polynomial":
        p = ring.field.p
        items = [(e, c % p) for e, c in data.items() if c % p]
        items.sort(key=lambda t: grevlex_key(t[0]), reverse=True)
        return cls(ring, items)

    # -- structure ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(exp_degree(e) for e, _ in self.terms)

    @property
    def homogeneous_degree(self):
        """The common degree of all terms, or None (zero or mixed)."""
        degs = {exp_degree(e) for e, _ in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_homogeneous(self) -> bool:
        return len({exp_degree(e) for e, _ in self.terms}) <= 1

    def leading(self):
        """(exponent, coefficient) of the grevlex leading term."""
        if not self.terms:
            raise UsageError("zero polynomial has no leading term")
        return self.terms[0]

    def coefficient_of(self, exponents) -> int:
        e = tuple(exponents)
        for ee, c in self.terms:
            if ee == e:
                return c
        return 0

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        c = self.terms[0][1]
        if c == 1:
            return self
        inv = self.ring.field.inv(c)
        p = self.ring.field.p
        return Polynomial(self.ring, tuple((e, (cc * inv) % p) for e, cc in self.terms))

    def as_dict(self) -> dict:
        return dict(self.terms)

    # -- arithmetic ---------------------------------------------------------
    def _require_same_ring(self, other: "Polynomial"):
        if not self.ring.compatible(other.ring):
            raise UsageError("polynomials from different rings")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        self._require_same_ring(other)
        p = self.ring.field.p
        acc = dict(self.terms)
        for e, c in other.terms:
            v = (acc.get(e, 0) + c) % p
            if v:
                acc[e] = v
            elif e in acc:
                del acc[e]
        return Polynomial.from_dict(self.ring, acc)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.field.p
        return Polynomial(self.ring, tuple((e, p - c) for e, c in self.terms))

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            c = self.ring.field.normalize(other)
            if c == 0:
                return self.ring.zero()
            p = self.ring.field.p
            return Polynomial(self.ring, tuple((e, (cc * c) % p) for e, cc in self.terms))
        self._require_same_ring(other)
        p = self.ring.field.p
        acc: dict = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = exp_add(e1, e2)
                v = (acc.get(e, 0) + c1 * c2) % p
                if v:
                    acc[e] = v
                elif e in acc:
                    del acc[e]
        return Polynomial.from_dict(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise UsageError("negative polynomial powers are not defined")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def evaluate(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute images[i] for variable i (ring homomorphism)."""
        if len(images) != self.ring.nvars:
            raise UsageError("need one image per variable")
        if not images:
            raise UsageError("empty substitution")
        target = images[0].ring
        out = target.zero()
        for e, c in self.terms:
            term = target.constant(c)
            for i, k in enumerate(e):
                if k:
                    term = term * (images[i] ** k)
            out = out + term
        return out

    # -- comparisons ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring.compatible(other.ring) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.key(), self.terms))
        return self._hash

    # -- display -------------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        field = self.ring.field
        chunks = []
        for e, c in self.terms:
            cs = field.lift_symmetric(c)
            sign = "-" if cs < 0 else "+"
            mag = abs(cs)
            factors = []
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(self.ring.variables[i])
                elif k > 1:
                    factors.append(f"{self.ring.variables[i]}^{k}")
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            out += f" {sign} {body}"
        return out

    __repr__ = __str__


# ---------------------------------------------------------------------------
# spec operation surfaces

def poly_arith(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    raise UsageError(f"unknown polynomial operation {op!r}")


def random_homogeneous(ring: RingDescriptor, degree: int,
                       rng: random.Random) -> Polynomial:
    """Uniform coefficients on every monomial of the given degree."""
    if degree < 0:
        raise UsageError("degree must be non-negative")
    p = ring.field.p
    data = {}
    for e in ring.monomials_of_degree(degree):
        c = rng.randrange(p)
        if c:
            data[e] = c
    return Polynomial.from_dict(ring, data)


# ---------------------------------------------------------------------------
# tiny infix parser: names, integers, + - * ^ and parentheses

class PolyParseError(UsageError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at column {pos + 1})")
        self.pos = pos


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*^()":
            tokens.append((ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append((("int", int(text[i:j])), i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append((("name", text[i:j]), i))
            i = j
            continue
        raise PolyParseError(f"unexpected character {ch!r}", i)
    return tokens


def parse_polynomial(ring: RingDescriptor, text: str) -> Polynomial:
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos][0] if pos < len(tokens) else None

    def where():
        return tokens[pos][1] if pos < len(tokens) else len(text)

    def expect(tok):
        nonlocal pos
        if peek() != tok:
            raise PolyParseError(f"expected {tok!r}", where())
        pos += 1

    def parse_expr():
        nonlocal pos
        sign = 1
        while peek() in ("+", "-"):
            if peek() == "-":
                sign = -sign
            pos += 1
        acc = parse_term() * sign
        while peek() in ("+", "-"):
            op = peek()
            pos += 1
            rhs = parse_term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def parse_term():
        nonlocal pos
        acc = parse_factor()
        while peek() == "*":
            pos += 1
            acc = acc * parse_factor()
        return acc

    def parse_factor():
        nonlocal pos
        base = parse_base()
        if peek() == "^":
            pos += 1
            tok = peek()
            if not (isinstance(tok, tuple) and tok[0] == "int"):
                raise PolyParseError("exponent must be an integer", where())
            pos += 1
            base = base ** tok[1]
        return base

    def parse_base():
        nonlocal pos
        tok = peek()
        if tok == "(":
            pos += 1
            inner = parse_expr()
            expect(")")
            return inner
        if tok == "-":
            pos += 1
            return -parse_base()
        if isinstance(tok, tuple) and tok[0] == "int":
            pos += 1
            return ring.constant(tok[1])
        if isinstance(tok, tuple) and tok[0] == "name":
            if tok[1] not in ring._varindex:
                raise PolyParseError(f"unknown variable {tok[1]!r}", where())
            pos += 1
            return ring.variable(tok[1])
        raise PolyParseError("expected a variable, number or parenthesis", where())

    if not tokens:
        raise PolyParseError("empty polynomial", 0)
    result = parse_expr()
    if pos != len(tokens):
        raise PolyParseError("trailing input", where())
    return result
