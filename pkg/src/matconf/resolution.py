"""Graded Betti numbers of monomial ideals over the rationals.

For a multidegree ``a`` the upper Koszul complex is

    K^a(I) = { squarefree b <= a : x^(a-b) in I }.

A face b lies in K^a exactly when some generator g dividing x^a also
divides x^(a-b), i.e. when b avoids every coordinate where g_i = a_i.  So
K^a is generated by the "slack sets" {i : g_i < a_i} of the generators
dividing x^a, which is how it is built here.

Homological indices refer to the resolution of the quotient S/I, so
beta_{0,0} = 1 and beta_{i,a}(S/I) = dim H~_{i-2}(K^a(I)) for i >= 1.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import gcd

from .ideals import BudgetExceeded, MonomialIdeal, codimension, lcm

DEFAULT_LATTICE_BUDGET = 200_000


# exact linear algebra ------------------------------------------------------

def rank_over_q(rows) -> int:
    """Rank of a sparse integer matrix given as a list of {col: value} dicts.

    Fraction-free elimination: rows are combined with integer multipliers
    and divided by their content, so entries stay small and exact.
    """
    rows = [dict(r) for r in rows if r]
    rank = 0
    while rows:
        pivot_row = min(rows, key=len)
        rows.remove(pivot_row)
        col = min(pivot_row)
        pv = pivot_row[col]
        rank += 1
        remaining = []
        for r in rows:
            rv = r.get(col)
            if rv is None:
                remaining.append(r)
                continue
            new = {}
            for k, v in r.items():
                new[k] = v * pv
            for k, v in pivot_row.items():
                x = new.get(k, 0) - v * rv
                if x:
                    new[k] = x
                else:
                    new.pop(k, None)
            if new:
                g = 0
                for v in new.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    new = {k: v // g for k, v in new.items()}
                remaining.append(new)
        rows = remaining
    return rank


def _bits(m: int) -> list:
    out, i = [], 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return out


def reduced_homology(facets) -> dict:
    """Reduced rational homology ranks {dim: rank} of the complex generated
    by the given bitmask facets (the empty face counts in dimension -1)."""
    faces = set()
    for f in facets:
        sub = f
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    by_dim: dict = {}
    for f in faces:
        by_dim.setdefault(bin(f).count("1") - 1, []).append(f)
    index = {d: {f: k for k, f in enumerate(sorted(fs))} for d, fs in by_dim.items()}
    ranks = {}
    top = max(by_dim)
    for d in range(0, top + 1):
        rows = []
        for f in by_dim.get(d, ()):
            row = {}
            for sign_pos, v in enumerate(_bits(f)):
                row[index[d - 1][f & ~(1 << v)]] = -1 if sign_pos & 1 else 1
            rows.append(row)
        ranks[d] = rank_over_q(rows)
    out = {}
    for d in range(-1, top + 1):
        h = len(by_dim.get(d, ())) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


# Koszul complexes ------------------------------------------------------------

def upper_koszul_facets(gens, a) -> list:
    """Facets (bitmasks over variable indices) of K^a for generators ``gens``."""
    facets = []
    for g in gens:
        if all(x <= y for x, y in zip(g, a)):
            m = 0
            for i, (x, y) in enumerate(zip(g, a)):
                if x < y:
                    m |= 1 << i
            facets.append(m)
    return facets


def _is_cone(facets) -> bool:
    common = -1
    for f in facets:
        common &= f
    return bool(facets) and common != 0


def collapse_twins(facets) -> list:
    """Keep one vertex from each class of vertices lying in exactly the same
    facets.  Contracting such a pair is a homotopy equivalence, so reduced
    homology is unchanged; flat substitutions by products create many."""
    signature: dict = {}
    for k, f in enumerate(facets):
        for v in _bits(f):
            signature[v] = signature.get(v, 0) | 1 << k
    keep, seen = 0, set()
    for v in sorted(signature):
        if signature[v] not in seen:
            seen.add(signature[v])
            keep |= 1 << v
    if keep == sum(1 << v for v in signature):
        return facets
    return sorted({f & keep for f in facets})


def koszul_homology(gens, a) -> dict:
    facets = upper_koszul_facets(gens, a)
    if not facets or _is_cone(facets):
        return {}
    return reduced_homology(collapse_twins(facets))


def lcm_lattice(I: MonomialIdeal, budget: int = DEFAULT_LATTICE_BUDGET) -> set:
    lattice: set = set()
    for g in I.generators:
        lattice |= {lcm(x, g) for x in lattice}
        lattice.add(g)
        if budget is not None and len(lattice) > budget:
            raise BudgetExceeded(f"lcm-lattice exceeds budget {budget}", len(lattice))
    return lattice


def multigraded_betti(I: MonomialIdeal, budget: int = DEFAULT_LATTICE_BUDGET,
                      workers: int = 1) -> dict:
    """{(i, a): rank} for S/I, i >= 1, with a ranging over the lcm-lattice."""
    if I.is_zero or I.is_unit:
        raise ValueError("Betti tables need a proper nonzero ideal")
    gens = I.generators
    points = sorted(lcm_lattice(I, budget))
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            homologies = dict(zip(points, pool.map(lambda a: koszul_homology(gens, a), points)))
    else:
        homologies = {a: koszul_homology(gens, a) for a in points}
    out = {}
    for a in points:
        for d, h in homologies[a].items():
            out[(d + 2, a)] = h
    return out


@dataclass
class BettiTable:
    entries: dict
    codim: int
    pd: int
    multigraded: dict = field(default_factory=dict, repr=False)

    def totals(self) -> list:
        t = [0] * (self.pd + 1)
        for (i, _), r in self.entries.items():
            t[i] += r
        return t

    def alternating_sum(self) -> list:
        top = max(j for _, j in self.entries)
        p = [0] * (top + 1)
        for (i, j), r in self.entries.items():
            p[j] += (-1) ** i * r
        while len(p) > 1 and p[-1] == 0:
            p.pop()
        return p

    def to_json(self) -> dict:
        return {
            "entries": [[i, j, r] for (i, j), r in sorted(self.entries.items())],
            "codim": self.codim,
            "pd": self.pd,
        }

    def render(self) -> str:
        """Macaulay-style diagram: row j-i, column i."""
        cols = range(self.pd + 1)
        rows = sorted({j - i for i, j in self.entries})
        lo, hi = rows[0], rows[-1]
        cells = {(j - i, i): r for (i, j), r in self.entries.items()}
        width = max(len(str(x)) for x in list(self.entries.values()) + self.totals()) + 1
        label_w = max(len(f"{hi}:"), len("total:"))
        lines = [" " * label_w + "".join(f"{i:>{width}}" for i in cols),
                 f"{'total:':>{label_w}}" + "".join(f"{t:>{width}}" for t in self.totals())]
        for k in range(lo, hi + 1):
            lines.append(f"{str(k) + ':':>{label_w}}" + "".join(
                f"{cells.get((k, i), '.'):>{width}}" for i in cols))
        return "\n".join(lines)


def betti_table(I: MonomialIdeal, budget: int = DEFAULT_LATTICE_BUDGET,
                workers: int = 1) -> BettiTable:
    multi = multigraded_betti(I, budget, workers)
    entries: Counter = Counter({(0, 0): 1})
    for (i, a), r in multi.items():
        entries[(i, I.context.degree(a))] += r
    pd = max(i for i, _ in entries)
    return BettiTable(dict(entries), codimension(I), pd, multi)


def projective_dimension(I: MonomialIdeal, budget: int = DEFAULT_LATTICE_BUDGET) -> int:
    """Projective dimension of S/I."""
    return betti_table(I, budget).pd


def is_cohen_macaulay(I: MonomialIdeal, budget: int = DEFAULT_LATTICE_BUDGET) -> bool:
    return projective_dimension(I, budget) == codimension(I)
