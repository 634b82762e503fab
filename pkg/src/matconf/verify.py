"""Invariant suites behind ``matconf verify``.

Each check returns ``(ok, detail)``.  ``scale`` is "quick" (seconds) or
"full" (the sizes used by the acceptance tests, minutes).
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, product

from . import complexes as cx
from .configurations import (
    HypergraphSpec,
    hypergraph_equals_lambda,
    lambda_config_ideal,
    power_substitution,
    specialize,
    tetrahedral_is_acm,
    tetrahedral_oracle,
)
from .hilbert import h_vector, hilbert_function, lambda_degree, lambda_hvector
from .ideals import MonomialIdeal, VariableContext, ideal_sum, intersect, product as iprod
from .resolution import betti_table, is_cohen_macaulay
from .symbolic import (
    in_symbolic_power_uniform,
    resurgence_search,
    symbolic_power,
    validate_certificate,
    waldschmidt,
)


def _random_ideal(rng, n, max_gens, max_exp):
    ctx = VariableContext(n)
    gens = [tuple(rng.randint(0, max_exp) for _ in range(n)) for _ in range(rng.randint(1, max_gens))]
    gens = [g for g in gens if any(g)] or [ctx.var(0)]
    return MonomialIdeal(ctx, gens)


def check_ideal_lattice(scale):
    rng = random.Random(7)
    trials = 200 if scale == "quick" else 2000
    for _ in range(trials):
        I = _random_ideal(rng, 3, 4, 3)
        J = _random_ideal(rng, 3, 4, 3)
        K = intersect(I, J)
        for m in product(range(4), repeat=3):
            if K.contains(m) != (I.contains(m) and J.contains(m)):
                return False, f"intersection membership fails for {I} and {J} at {m}"
    return True, f"{trials} random pairs"


def check_bdl(scale):
    s_max = 4 if scale == "quick" else 6
    count = 0
    for s in range(2, s_max + 1):
        for mat in (cx.all_matroids(s) if s <= 5 else cx.matroid_classes(s)):
            I = cx.stanley_reisner(mat)
            for j in range(1, s + 1):
                if not mat.complex.has_face((j,)):
                    continue
                lk, mapping = cx.link(mat, j)
                dl, _ = cx.deletion(mat, j)
                lift = _lift(mapping, s)
                rebuilt = ideal_sum(
                    iprod(MonomialIdeal.prime(I.context, [j - 1]), lift(cx.stanley_reisner(lk))),
                    lift(cx.stanley_reisner(dl)))
                if rebuilt != I:
                    return False, f"decomposition fails for {mat.facets} at vertex {j}"
                count += 1
    return True, f"{count} (matroid, vertex) pairs"


def _lift(mapping, s):
    inverse = {new: old for old, new in mapping.items()}
    ctx = VariableContext(s)

    def lift(J):
        gens = []
        for g in J.generators:
            m = [0] * s
            for new_idx, e in enumerate(g):
                m[inverse[new_idx + 1] - 1] = e
            gens.append(tuple(m))
        return MonomialIdeal(ctx, gens)

    return lift


def check_matroid_methods(scale):
    s_max = 4 if scale == "quick" else 5
    count = 0
    for s in range(1, s_max + 1):
        faces = [sum(1 << i for i in c) for k in range(s + 1) for c in combinations(range(s), k)]
        # all antichains would be too many at s=5; pure families plus unions of two sizes
        families = []
        for k in range(s + 1):
            layer = [f for f in faces if bin(f).count("1") == k]
            for choice in range(1, 1 << len(layer)):
                families.append(tuple(layer[i] for i in range(len(layer)) if choice >> i & 1))
        for fam in families:
            c = cx.SimplicialComplex(s, fam)
            if cx.is_matroid(c) != cx.is_matroid(c, "restriction"):
                return False, f"methods disagree on {c.facets}"
            count += 1
    return True, f"{count} complexes"


def check_symbolic_oracle(scale):
    cases = [(3, 2), (4, 2), (4, 3)]
    m_max = 2 if scale == "quick" else 4
    for s, c in cases:
        mat = cx.uniform_matroid(s, c)
        for m in range(1, m_max + 1):
            sym = symbolic_power(mat, m)
            for a in product(range(m + 2), repeat=s):
                if sym.contains(a) != in_symbolic_power_uniform(a, c, m):
                    return False, f"U({s},{c}) m={m} disagrees at {a}"
    return True, f"(s,c) in {cases}, m <= {m_max}"


def check_hilbert_cross_path(scale):
    s_max = 4 if scale == "quick" else 5
    d_max = 2 if scale == "quick" else 3
    count = 0
    for s in range(1, s_max + 1):
        for lam in product(range(1, d_max + 1), repeat=s):
            for c in range(1, s + 1):
                h = lambda_hvector((lam, c))
                if h != h_vector(lambda_config_ideal((lam, c))):
                    return False, f"lambda={lam}, c={c}"
                if sum(h) != lambda_degree((lam, c)):
                    return False, f"degree mismatch at lambda={lam}, c={c}"
                count += 1
    return True, f"{count} configurations"


def check_hilbert_counting(scale):
    rng = random.Random(11)
    trials = 30 if scale == "quick" else 200
    for _ in range(trials):
        I = _random_ideal(rng, rng.randint(1, 4), 5, 3)
        if I.is_unit:
            continue
        hf = hilbert_function(I, 8)
        n = I.context.count
        for d in range(9):
            count = sum(1 for a in product(range(d + 1), repeat=n)
                        if sum(a) == d and not I.contains(a))
            if count != hf[d]:
                return False, f"{I} degree {d}: {count} != {hf[d]}"
    return True, f"{trials} random ideals"


def check_betti_transfer(scale):
    s_max = 4 if scale == "quick" else 5
    count = 0
    for s in range(1, s_max + 1):
        for mat in cx.matroid_classes(s):
            I = cx.stanley_reisner(mat)
            base = betti_table(I)
            for w in product(range(1, 4), repeat=s):
                sub = power_substitution(w)
                spec = betti_table(specialize(I, sub))
                mapped = {(i, sub.apply(a)): r for (i, a), r in base.multigraded.items()}
                if mapped != spec.multigraded or base.totals() != spec.totals():
                    return False, f"{mat.facets} weights {w}"
                count += 1
    return True, f"{count} specializations"


def check_symbolic_cm(scale):
    s_max = 4 if scale == "quick" else 5
    count = 0
    for s in range(1, s_max + 1):
        for mat in cx.matroid_classes(s):
            for m in (1, 2, 3):
                if not is_cohen_macaulay(symbolic_power(mat, m)):
                    return False, f"{mat.facets} m={m}"
                count += 1
    return True, f"{count} symbolic powers"


def check_waldschmidt(scale):
    r = waldschmidt(cx.uniform_matroid(3, 2), None, 8)
    if not (r.lower == r.upper == r.closed_form == Fraction(3, 2)):
        return False, "U(3,2)"
    r = waldschmidt(cx.uniform_matroid(4, 3), (1, 1, 1, 2), 6)
    if dict(r.samples)[6] != 9 or r.upper != Fraction(3, 2):
        return False, "U(4,3) weights (1,1,1,2)"
    return True, "closed forms and samples"


def check_resurgence(scale):
    cases = [(3, 2), (4, 2)] if scale == "quick" else [(3, 2), (4, 2), (4, 3), (5, 2)]
    for s, c in cases:
        mat = cx.uniform_matroid(s, c)
        rep = resurgence_search(mat, 6, 4)
        if rep.max_ratio_not_contained is not None and rep.max_ratio_not_contained > rep.formula:
            return False, f"U({s},{c}) ratio exceeds formula"
        if not all(validate_certificate(mat, cert) for cert in rep.certificates):
            return False, f"U({s},{c}) certificate fails to re-validate"
    return True, f"{cases}"


def check_tetrahedral(scale):
    top = 2 if scale == "quick" else 3
    count = 0
    for p in product(range(top), repeat=6):
        if any(p):
            if tetrahedral_is_acm(p) != tetrahedral_oracle(p):
                return False, f"p={p}"
            count += 1
    return True, f"{count} exponent vectors"


def check_hypergraph(scale):
    total = 6 if scale == "quick" else 8
    count = 0
    for blocks in _compositions(total):
        for c in range(1, len(blocks) + 1):
            if not hypergraph_equals_lambda(HypergraphSpec(blocks, c)):
                return False, f"blocks {blocks}, c={c}"
            count += 1
    return True, f"{count} hypergraphs"


def _compositions(total):
    """All block lists with sum at most total."""
    out = []

    def rec(prefix, left):
        if prefix:
            out.append(tuple(prefix))
        for e in range(1, left + 1):
            rec(prefix + [e], left - e)

    rec([], total)
    return out


CHECKS = [
    ("ideal lattice", check_ideal_lattice),
    ("matroid exchange vs restriction", check_matroid_methods),
    ("basic double link decomposition", check_bdl),
    ("symbolic power oracle", check_symbolic_oracle),
    ("hilbert cross path", check_hilbert_cross_path),
    ("hilbert function counting", check_hilbert_counting),
    ("betti transfer", check_betti_transfer),
    ("symbolic powers cohen-macaulay", check_symbolic_cm),
    ("waldschmidt", check_waldschmidt),
    ("resurgence", check_resurgence),
    ("tetrahedral classifier", check_tetrahedral),
    ("hypergraph identity", check_hypergraph),
]


def run_all(scale="quick"):
    results = []
    for name, fn in CHECKS:
        ok, detail = fn(scale)
        results.append((name, ok, detail))
    return results
