"""Symbolic powers of matroid ideals, containment, Waldschmidt constants
and resurgence searches.

For a matroid the m-th symbolic power of its Stanley-Reisner ideal is the
intersection of the m-th powers of the facet-complement primes.  Weights on
the variable context stand in for the degrees of the forms substituted for
the variables, so weighted initial degrees are initial degrees of the
specialized ideal.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .complexes import MatroidComplex, facet_primes, stanley_reisner
from .ideals import (
    BudgetExceeded,
    MonomialIdeal,
    VariableContext,
    intersect_all,
    power,
    weighted_alpha,
)


def _context(mat: MatroidComplex, weights=None) -> VariableContext:
    return VariableContext(mat.vertex_count, None, weights)


def uniform_parameters(mat: MatroidComplex):
    """(s, c) if ``mat`` is a uniform matroid, else None."""
    from math import comb

    s, c = mat.vertex_count, mat.codim
    facets = mat.complex.facet_masks
    if len(facets) == comb(s, s - c) and all(bin(f).count("1") == s - c for f in facets):
        return s, c
    return None


@lru_cache(maxsize=512)
def _symbolic_power_cached(mat: MatroidComplex, m: int, weights) -> MonomialIdeal:
    ctx = _context(mat, weights)
    primes = facet_primes(mat, ctx)
    if m == 1:
        return intersect_all(primes)
    return intersect_all([power(P, m) for P in primes])


def symbolic_power(mat: MatroidComplex, m: int, weights=None) -> MonomialIdeal:
    if m < 1:
        raise ValueError("symbolic powers need m >= 1")
    if weights is not None:
        weights = tuple(weights)
        if len(weights) != mat.vertex_count:
            raise ValueError("one weight per vertex is required")
    return _symbolic_power_cached(mat, m, weights)


@lru_cache(maxsize=512)
def _ordinary_power(mat: MatroidComplex, r: int) -> MonomialIdeal:
    return power(stanley_reisner(mat), r)


def in_symbolic_power_uniform(exponents, c: int, m: int) -> bool:
    """Membership oracle for I_{s,c}^(m): every c-subset of variables
    carries total degree at least m.  The tightest c-subset is the one
    with the c smallest exponents."""
    return sum(sorted(exponents)[:c]) >= m


@dataclass(frozen=True)
class ContainmentCertificate:
    m: int
    r: int
    contained: bool
    witness: Optional[tuple] = None

    def __post_init__(self):
        if self.contained != (self.witness is None):
            raise ValueError("a witness is present exactly when containment fails")

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "r": self.r,
            "contained": self.contained,
            "witness": None if self.witness is None else " ".join(map(str, self.witness)),
        }


def is_contained(mat: MatroidComplex, m: int, r: int, counter=None) -> ContainmentCertificate:
    if m < 1 or r < 1:
        raise ValueError("m and r must be positive")
    sym = symbolic_power(mat, m)
    ordinary = _ordinary_power(mat, r)
    for g in sym.generators:
        if counter is not None:
            counter.spend()
        if not ordinary.contains(g):
            return ContainmentCertificate(m, r, False, g)
    return ContainmentCertificate(m, r, True)


def validate_certificate(mat: MatroidComplex, cert: ContainmentCertificate) -> bool:
    if cert.contained:
        return is_contained(mat, cert.m, cert.r).contained
    w = cert.witness
    return symbolic_power(mat, cert.m).contains(w) and not _ordinary_power(mat, cert.r).contains(w)


# Waldschmidt constants -------------------------------------------------------

def _rationalize(values, denom=10**6):
    return [Fraction(v).limit_denominator(denom) for v in values]


def waldschmidt_lp_bounds(mat: MatroidComplex, weights):
    """Exact rational bracket for the Waldschmidt constant from the LP

        minimize w.a  subject to  sum_{i in P} a_i >= 1 for each facet prime P,  a >= 0,

    whose optimum is the Waldschmidt constant of a monomial ideal given as an
    intersection of prime powers.  scipy finds approximate primal and dual
    optima; both are rounded to rationals and re-checked exactly, so a
    feasible primal point gives an upper bound and a feasible dual point a
    lower bound.  Returns (lower, upper); either may be None if rounding
    breaks feasibility.
    """
    import numpy as np
    from scipy.optimize import linprog

    supports = [[j for g in P.generators for j, e in enumerate(g) if e]
                for P in facet_primes(mat)]
    n = mat.vertex_count
    w = [int(x) for x in weights]
    A = np.zeros((len(supports), n))
    for row, sup in enumerate(supports):
        A[row, sup] = 1.0
    primal = linprog(w, A_ub=-A, b_ub=-np.ones(len(supports)), bounds=[(0, None)] * n,
                     method="highs")
    dual = linprog(-np.ones(len(supports)), A_ub=A.T, b_ub=np.array(w, dtype=float),
                   bounds=[(0, None)] * len(supports), method="highs")
    upper = lower = None
    if primal.status == 0:
        a = _rationalize(primal.x)
        if all(x >= 0 for x in a) and all(sum(a[j] for j in sup) >= 1 for sup in supports):
            upper = sum(wi * ai for wi, ai in zip(w, a))
    if dual.status == 0:
        z = _rationalize(dual.x)
        if all(x >= 0 for x in z) and all(
                sum(z[row] for row, sup in enumerate(supports) if j in sup) <= w[j]
                for j in range(n)):
            lower = sum(z)
    return lower, upper


@dataclass
class WaldschmidtReport:
    s: int
    c: int
    weights: tuple
    samples: list
    lower: Fraction
    upper: Fraction
    closed_form: Optional[Fraction] = None
    lp_upper: Optional[Fraction] = None

    @property
    def exact(self) -> Optional[Fraction]:
        return self.lower if self.lower == self.upper else None

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "c": self.c,
            "weights": list(self.weights),
            "samples": [[m, a] for m, a in self.samples],
            "lower": str(self.lower),
            "upper": str(self.upper),
            "closed_form": None if self.closed_form is None else str(self.closed_form),
        }


def waldschmidt(mat: MatroidComplex, weights=None, m_max: int = 8) -> WaldschmidtReport:
    """Sample alpha(I^(m)) for m = 1..m_max and bracket the limit.

    The upper bound is min alpha_m / m over the samples; the lower bound is
    an exactly verified dual LP value.  A closed form d*s/c is attached only
    for uniform matroids with all weights equal to d.
    """
    if m_max < 2:
        raise ValueError("m_max must be at least 2")
    n = mat.vertex_count
    weights = (1,) * n if weights is None else tuple(int(w) for w in weights)
    if len(weights) != n:
        raise ValueError("one weight per vertex is required")
    samples = []
    for m in range(1, m_max + 1):
        samples.append((m, weighted_alpha(symbolic_power(mat, m, weights))))
    upper = min(Fraction(a, m) for m, a in samples)
    lower, lp_upper = waldschmidt_lp_bounds(mat, weights)
    if lower is None:
        lower = Fraction(0)
    assert lower <= upper, (lower, upper)
    closed = None
    params = uniform_parameters(mat)
    if params is not None and len(set(weights)) == 1:
        s, c = params
        closed = Fraction(weights[0] * s, c)
        assert lower <= closed <= upper, (lower, closed, upper)
    return WaldschmidtReport(n, mat.codim, weights, samples, lower, upper, closed, lp_upper)


# Resurgence ----------------------------------------------------------------

class Budget:
    """Caps the number of generator-membership checks; ``None`` means no cap."""

    def __init__(self, limit=None):
        self.limit = limit
        self.spent = 0

    def spend(self, k: int = 1):
        self.spent += k
        if self.limit is not None and self.spent > self.limit:
            raise BudgetExceeded(f"budget of {self.limit} membership checks exhausted",
                                 self.spent)


@dataclass
class ResurgenceReport:
    s: int
    c: int
    certificates: list
    max_ratio_not_contained: Optional[Fraction]
    formula: Optional[Fraction] = None
    truncated: bool = False
    checks: int = 0
    grid: tuple = field(default=(0, 0))

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "c": self.c,
            "weights": [1] * self.s,
            "samples": [],
            "certificates": [c.to_json() for c in self.certificates],
            "max_ratio_not_contained": (None if self.max_ratio_not_contained is None
                                        else str(self.max_ratio_not_contained)),
            "formula": None if self.formula is None else str(self.formula),
            "truncated": self.truncated,
            "checks": self.checks,
        }


def resurgence_search(mat: MatroidComplex, m_max: int, r_max: int, budget=None,
                      workers: int = 1, on_certificate=None) -> ResurgenceReport:
    """Evaluate is_contained on the whole (m, r) grid, row-major by r then m.

    Results are aggregated in grid order regardless of how cells are
    scheduled.  With a budget, the search stops at the first cell that
    would exceed it and marks the report truncated.
    """
    if m_max < 1 or r_max < 1:
        raise ValueError("grid bounds must be positive")
    cells = [(m, r) for r in range(1, r_max + 1) for m in range(1, m_max + 1)]
    counter = Budget(budget)
    certs, truncated = [], False
    if workers > 1 and budget is None:
        # prime the caches serially so threads only read
        for m in range(1, m_max + 1):
            symbolic_power(mat, m)
        for r in range(1, r_max + 1):
            _ordinary_power(mat, r)
        def evaluate(cell):
            local = Budget()
            return is_contained(mat, *cell, local), local.spent

        with ThreadPoolExecutor(workers) as pool:
            results = dict(zip(cells, pool.map(evaluate, cells)))
        certs = [results[cell][0] for cell in cells]
        counter.spent = sum(results[cell][1] for cell in cells)
        if on_certificate:
            for c in certs:
                on_certificate(c)
    else:
        for m, r in cells:
            try:
                cert = is_contained(mat, m, r, counter)
            except BudgetExceeded:
                truncated = True
                break
            certs.append(cert)
            if on_certificate:
                on_certificate(cert)
    bad = [Fraction(c.m, c.r) for c in certs if not c.contained]
    best = max(bad) if bad else None
    formula = None
    params = uniform_parameters(mat)
    if params is not None:
        s, c = params
        formula = Fraction(c * (s - c + 1), s)
        if best is not None:
            assert best <= formula, (best, formula)
    return ResurgenceReport(mat.vertex_count, mat.codim, certs, best, formula, truncated,
                            counter.spent, (m_max, r_max))
