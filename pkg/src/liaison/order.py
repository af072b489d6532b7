"""Monomial and module term orders.

The base order on ring monomials is graded reverse lexicographic.  Module
terms are pairs (component, exponents); the standard order is a degree-graded
term-over-position refinement that respects the generator degrees of the
ambient twisted free module.  Block orders (position blocks for syzygy and
lifting computations, variable blocks for elimination) are built on top.

Every order here is global (1 is minimal in each component), multiplicative,
and total, which is exactly what Buchberger's algorithm needs.
"""
from __future__ import annotations

from .ring import Exp, exp_degree, grevlex_key

Term = tuple  # (component index, exponent tuple)


class TermOrder:
    """Order on module terms via a sort key: bigger key = bigger term."""

    def key(self, term: Term):
        raise NotImplementedError

    def max_term(self, vec: dict) -> Term:
        return max(vec, key=self.key)


class GradedTOP(TermOrder):
    """Degree first (respecting generator degrees), then grevlex, then position."""

    __slots__ = ("degrees",)

    def __init__(self, degrees):
        self.degrees = tuple(degrees)

    def key(self, term: Term):
        comp, e = term
        return (exp_degree(e) + self.degrees[comp],
                tuple(-x for x in reversed(e)),
                -comp)


class PositionBlockOrder(TermOrder):
    """Components below `split` dominate; GradedTOP inside each block.

    Used as an elimination order on augmented modules: Groebner elements
    supported entirely on the trailing block generate the intersection with
    that block (syzygies, lifts, membership all fall out of one basis).
    """

    __slots__ = ("split", "degrees")

    def __init__(self, split: int, degrees):
        self.split = split
        self.degrees = tuple(degrees)

    def key(self, term: Term):
        comp, e = term
        flag = 1 if comp < self.split else 0
        return (flag,
                exp_degree(e) + self.degrees[comp],
                tuple(-x for x in reversed(e)),
                -comp)


class VariableElimOrder(TermOrder):
    """Rank-one elimination order: the masked variables dominate."""

    __slots__ = ("mask",)

    def __init__(self, mask):
        self.mask = tuple(bool(b) for b in mask)

    def key(self, term: Term):
        comp, e = term
        elim = tuple(x for x, m in zip(e, self.mask) if m)
        keep = tuple(x for x, m in zip(e, self.mask) if not m)
        return (sum(elim), tuple(-x for x in reversed(elim)),
                sum(keep), tuple(-x for x in reversed(keep)),
                -comp)


def ideal_order() -> GradedTOP:
    """The fixed grevlex order used for all rank-one ideal bases."""
    return GradedTOP((0,))


def monomial_key(e: Exp):
    return grevlex_key(e)
