"""Sparse Gaussian elimination over GF(p) keyed by ordered terms.

A SpanBasis is a row space in echelon form: each stored row is monic with a
pivot term maximal for the supplied order key, and no two rows share a pivot.
This is the workhorse behind degree-piece computations (Hilbert function
brute force, minimal generators, random coset draws) where full Groebner
machinery would be overkill.
"""
from __future__ import annotations


class SpanBasis:
    def __init__(self, p: int, keyfunc):
        self.p = p
        self.keyfunc = keyfunc
        self.rows: dict = {}  # pivot term -> monic row (dict term -> coeff)

    def reduce(self, vec: dict) -> dict:
        """Fully reduce vec against the span; returns a new dict."""
        p = self.p
        work = {t: c % p for t, c in vec.items() if c % p}
        out: dict = {}
        while work:
            t = max(work, key=self.keyfunc)
            c = work.pop(t)
            row = self.rows.get(t)
            if row is None:
                out[t] = c
                continue
            for tt, cc in row.items():
                if tt == t:
                    continue
                v = (work.get(tt, 0) - c * cc) % p
                if v:
                    work[tt] = v
                elif tt in work:
                    del work[tt]
        return out

    def add(self, vec: dict) -> bool:
        """Insert vec; True if it enlarged the span."""
        r = self.reduce(vec)
        if not r:
            return False
        t = max(r, key=self.keyfunc)
        inv = pow(r[t], self.p - 2, self.p)
        self.rows[t] = {tt: (cc * inv) % self.p for tt, cc in r.items()}
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def copy(self) -> "SpanBasis":
        dup = SpanBasis(self.p, self.keyfunc)
        dup.rows = {t: dict(r) for t, r in self.rows.items()}
        return dup
