"""Buchberger engine for ideals and submodules of twisted free modules.

Vectors are sparse dicts mapping module terms (component, exponents) to
nonzero coefficients in GF(p).  The same loop serves rank-one ideals and
modules; the pair queue strategy is pluggable ("normal" degree selection or
"first" insertion order) and both must converge to the identical reduced
basis, which the test suite asserts on randomized inputs.

Syzygies, membership and lifting all come from one augmented-module basis:
for columns v_1..v_r of a map into F, compute a Groebner basis of the
vectors v_j + e_j inside F + R^r under a position-block elimination order.
Elements supported in the trailing block are exactly the syzygies, and
reducing (v, 0) decides membership of v and produces an explicit lift.
"""
from __future__ import annotations

import heapq
from concurrent.futures import ThreadPoolExecutor

from .errors import UsageError
from .order import GradedTOP, PositionBlockOrder, TermOrder
from .ring import exp_add, exp_coprime, exp_degree, exp_divides, exp_lcm, exp_sub

Term = tuple  # (component, exponents)
Vec = dict    # Term -> coefficient


# ---------------------------------------------------------------------------
# vector helpers

def vec_degree(v: Vec, degrees) -> int:
    """Degree of a homogeneous vector relative to generator degrees."""
    if not v:
        return -1
    comp, e = next(iter(v))
    return exp_degree(e) + degrees[comp]


def vec_is_homogeneous(v: Vec, degrees) -> bool:
    degs = {exp_degree(e) + degrees[c] for c, e in v}
    return len(degs) <= 1


def vec_monic(v: Vec, lt: Term, p: int) -> Vec:
    c = v[lt]
    if c == 1:
        return v
    inv = pow(c, p - 2, p)
    return {t: (cc * inv) % p for t, cc in v.items()}


def vec_scale_shift(v: Vec, c: int, e, p: int) -> Vec:
    return {(t[0], exp_add(t[1], e)): (cc * c) % p for t, cc in v.items()}


def vec_canon_token(v: Vec):
    return tuple(sorted(v.items()))


class GBElement:
    __slots__ = ("vec", "lt")

    def __init__(self, vec: Vec, order: TermOrder):
        self.vec = vec
        self.lt = order.max_term(vec)


def _full_reduce(v: Vec, by_comp: dict, order: TermOrder, p: int) -> Vec:
    """Complete normal form of v against a list of monic GB elements."""
    if not v:
        return {}
    key = order.key
    work = dict(v)
    out: Vec = {}
    while work:
        t = max(work, key=key)
        c = work.pop(t)
        reducer = None
        for g in by_comp.get(t[0], ()):
            if exp_divides(g.lt[1], t[1]):
                reducer = g
                break
        if reducer is None:
            out[t] = c
            continue
        shift = exp_sub(t[1], reducer.lt[1])
        for tt, cc in reducer.vec.items():
            if tt == reducer.lt:
                continue
            nt = (tt[0], exp_add(tt[1], shift))
            nv = (work.get(nt, 0) - c * cc) % p
            if nv:
                work[nt] = nv
            elif nt in work:
                del work[nt]
    return out


def _spair(f: GBElement, g: GBElement, p: int) -> Vec:
    L = exp_lcm(f.lt[1], g.lt[1])
    sf = exp_sub(L, f.lt[1])
    sg = exp_sub(L, g.lt[1])
    s: Vec = {}
    for t, c in f.vec.items():
        nt = (t[0], exp_add(t[1], sf))
        s[nt] = c
    for t, c in g.vec.items():
        nt = (t[0], exp_add(t[1], sg))
        nv = (s.get(nt, 0) - c) % p
        if nv:
            s[nt] = nv
        elif nt in s:
            del s[nt]
    return s


def buchberger(vectors, order: TermOrder, p: int, strategy: str = "normal",
               parallel: bool = False) -> list:
    """Unique reduced Groebner basis of the submodule generated by `vectors`.

    strategy "normal" picks the pair with the smallest lcm degree (then order
    key); "first" processes pairs in insertion order.  Both reach the same
    reduced basis; only the route differs.
    """
    if strategy not in ("normal", "first"):
        raise UsageError(f"unknown pair strategy {strategy!r}")
    key = order.key

    items = []
    seen = set()
    for v in vectors:
        w = {t: c % p for t, c in v.items() if c % p}
        if not w:
            continue
        lt = order.max_term(w)
        w = vec_monic(w, lt, p)
        tok = vec_canon_token(w)
        if tok not in seen:
            seen.add(tok)
            items.append(w)
    items.sort(key=lambda w: (key(order.max_term(w)), vec_canon_token(w)))

    G: list[GBElement] = []
    by_comp: dict[int, list[GBElement]] = {}
    rank_one = all(t[0] == 0 for w in items for t in w)

    pairs: list = []
    counter = 0
    done: set = set()

    def push_pair(i: int, j: int):
        nonlocal counter
        gi, gj = G[i], G[j]
        if gi.lt[0] != gj.lt[0]:
            return
        L = exp_lcm(gi.lt[1], gj.lt[1])
        if strategy == "normal":
            entry = ((exp_degree(L), key((gi.lt[0], L)), i, j), (i, j, L))
        else:
            entry = ((counter,), (i, j, L))
            counter += 1
        heapq.heappush(pairs, entry)

    def add_element(w: Vec):
        el = GBElement(w, order)
        idx = len(G)
        G.append(el)
        by_comp.setdefault(el.lt[0], []).append(el)
        for k in range(idx):
            push_pair(k, idx)
        return idx

    for w in items:
        r = _full_reduce(w, by_comp, order, p)
        if r:
            r = vec_monic(r, order.max_term(r), p)
            add_element(r)

    def chain_skip(i: int, j: int, L) -> bool:
        for k in range(len(G)):
            if k == i or k == j:
                continue
            lt = G[k].lt
            if lt[0] == G[i].lt[0] and exp_divides(lt[1], L):
                if frozenset((i, k)) in done and frozenset((j, k)) in done:
                    return True
        return False

    def process_one(i: int, j: int, L) -> Vec:
        s = _spair(G[i], G[j], p)
        return _full_reduce(s, by_comp, order, p)

    while pairs:
        if parallel and strategy == "normal":
            batch = [heapq.heappop(pairs)]
            d0 = batch[0][0][0]
            while pairs and pairs[0][0][0] == d0:
                batch.append(heapq.heappop(pairs))
            todo = []
            for _, (i, j, L) in batch:
                done.add(frozenset((i, j)))
                if rank_one and exp_coprime(G[i].lt[1], G[j].lt[1]):
                    continue
                if chain_skip(i, j, L):
                    continue
                todo.append((i, j, L))
            if not todo:
                continue
            with ThreadPoolExecutor(max_workers=min(4, len(todo))) as pool:
                results = list(pool.map(lambda a: process_one(*a), todo))
            results = [r for r in results if r]
            results.sort(key=lambda r: (key(order.max_term(r)), vec_canon_token(r)))
            for r in results:
                r2 = _full_reduce(r, by_comp, order, p)
                if r2:
                    add_element(vec_monic(r2, order.max_term(r2), p))
            continue

        _, (i, j, L) = heapq.heappop(pairs)
        done.add(frozenset((i, j)))
        if rank_one and exp_coprime(G[i].lt[1], G[j].lt[1]):
            continue
        if chain_skip(i, j, L):
            continue
        r = process_one(i, j, L)
        if r:
            add_element(vec_monic(r, order.max_term(r), p))

    # interreduce: minimal leading terms, then fully reduced tails
    G.sort(key=lambda g: key(g.lt))
    minimal: list[GBElement] = []
    for g in G:
        if not any(h.lt[0] == g.lt[0] and exp_divides(h.lt[1], g.lt[1])
                   for h in minimal):
            minimal.append(g)
    final: list[GBElement] = []
    by_comp2: dict[int, list[GBElement]] = {}
    for g in minimal:
        by_comp2.setdefault(g.lt[0], []).append(g)
    for g in minimal:
        by_comp2[g.lt[0]].remove(g)
        r = _full_reduce(g.vec, by_comp2, order, p)
        el = GBElement(vec_monic(r, order.max_term(r), p), order)
        by_comp2[el.lt[0]].append(el)
        final.append(el)
    final.sort(key=lambda g: key(g.lt))
    return [g.vec for g in final]


def normal_form(v: Vec, basis, order: TermOrder, p: int) -> Vec:
    """Unique remainder of v modulo a Groebner basis."""
    by_comp: dict[int, list[GBElement]] = {}
    for g in basis:
        el = g if isinstance(g, GBElement) else GBElement(g, order)
        by_comp.setdefault(el.lt[0], []).append(el)
    return _full_reduce(v, by_comp, order, p)


# ---------------------------------------------------------------------------
# augmented-module machinery: syzygies, membership, lifts

class ColumnSpan:
    """Groebner data for the submodule spanned by fixed columns of a map.

    Columns live in a free module with generator degrees `target_degrees`;
    `column_degrees` are their (homogeneous) degrees.  One augmented basis
    answers membership, produces lifts, and yields the full first syzygy
    module of the columns.
    """

    def __init__(self, cols, target_degrees, column_degrees, nvars: int, p: int,
                 strategy: str = "normal"):
        self.cols = [dict(c) for c in cols]
        self.target_degrees = tuple(target_degrees)
        self.column_degrees = tuple(column_degrees)
        self.nvars = nvars
        self.p = p
        self.rank = len(self.target_degrees)
        zero = (0,) * nvars
        aug = []
        for j, c in enumerate(self.cols):
            v = dict(c)
            v[(self.rank + j, zero)] = 1
            aug.append(v)
        self.order = PositionBlockOrder(self.rank,
                                        self.target_degrees + self.column_degrees)
        self.basis = buchberger(aug, self.order, p, strategy=strategy)
        self._by_comp: dict[int, list[GBElement]] = {}
        for g in self.basis:
            el = GBElement(g, self.order)
            self._by_comp.setdefault(el.lt[0], []).append(el)

    def syzygies(self) -> list:
        """Generators (in fact a Groebner basis) of the syzygy module."""
        out = []
        for g in self.basis:
            if all(t[0] >= self.rank for t in g):
                out.append({(t[0] - self.rank, t[1]): c for t, c in g.items()})
        return out

    def _reduce_augmented(self, v: Vec) -> Vec:
        return _full_reduce(v, self._by_comp, self.order, self.p)

    def lift(self, v: Vec):
        """Coefficients c with sum_j c_j col_j = v, or None if not a member."""
        r = self._reduce_augmented(dict(v))
        if any(t[0] < self.rank for t in r):
            return None
        p = self.p
        return {(t[0] - self.rank, t[1]): (p - c) % p for t, c in r.items()}

    def contains(self, v: Vec) -> bool:
        return self.lift(v) is not None

    def residual(self, v: Vec) -> Vec:
        """First-block remainder (zero iff v lies in the column span)."""
        r = self._reduce_augmented(dict(v))
        return {t: c for t, c in r.items() if t[0] < self.rank}


def syzygy_generators(cols, target_degrees, column_degrees, nvars, p) -> list:
    return ColumnSpan(cols, target_degrees, column_degrees, nvars, p).syzygies()
