"""Arithmetic in the prime field GF(p).

Scalars are plain Python ints held fully reduced in [0, p); the modulus
lives on the ring descriptor, not on the element.  The default field is
GF(32003), a common exact-computation choice that keeps "general position"
draws overwhelmingly likely to succeed.
"""
from __future__ import annotations

from .errors import DomainError, UsageError

DEFAULT_PRIME = 32003


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """GF(p) with p an odd prime > 3 (squares are needed downstream)."""

    __slots__ = ("p",)

    def __init__(self, p: int = DEFAULT_PRIME):
        if p <= 3:
            raise UsageError(f"characteristic must exceed 3, got {p}")
        if not is_prime(p):
            raise UsageError(f"characteristic {p} is not prime")
        self.p = p

    def normalize(self, a: int) -> int:
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
        r = a % self.p
        if r == 0:
            raise DomainError("cannot invert zero in GF(p)")
        return pow(r, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return (a * self.inv(b)) % self.p

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a % self.p, e, self.p)

    def lift_symmetric(self, a: int) -> int:
        """Representative in (-p/2, p/2], nicer for printing small negatives."""
        r = a % self.p
        return r - self.p if r > self.p // 2 else r

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"GF({self.p})"


def field_arith(field: PrimeField, op: str, a: int, b: int | None = None) -> int:
    """Dispatch surface for the three base field operations."""
    if op == "add":
        return field.add(a, b)
    if op == "mul":
        return field.mul(a, b)
    if op == "inv":
        return field.inv(a)
    raise UsageError(f"unknown field operation {op!r}")
