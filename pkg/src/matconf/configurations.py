"""Flat monomial specializations and the configurations built from them:
hypersurface configurations, complete multipartite hypergraph ideals and
tetrahedral curves.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product as cartesian

from .complexes import uniform_matroid, stanley_reisner
from .hilbert import LambdaConfig
from .ideals import (
    DimensionMismatch,
    MonomialIdeal,
    VariableContext,
    intersect_all,
    power,
)


class SubstitutionError(ValueError):
    pass


@dataclass(frozen=True)
class MonomialSubstitution:
    """y_i -> images[i], each image a monomial in the target context."""

    source: VariableContext
    target: VariableContext
    images: tuple

    def __post_init__(self):
        images = tuple(tuple(int(e) for e in im) for im in self.images)
        if len(images) != self.source.count:
            raise DimensionMismatch(f"{len(images)} images for {self.source.count} variables")
        used = set()
        for im in images:
            if len(im) != self.target.count:
                raise DimensionMismatch(f"image {im} does not live in {self.target.count} variables")
            if not any(im):
                raise SubstitutionError("images must be non-units")
            sup = {k for k, e in enumerate(im) if e}
            if sup & used:
                raise SubstitutionError("image supports overlap; only flat substitutions are allowed")
            used |= sup
        object.__setattr__(self, "images", images)

    @property
    def degrees(self) -> tuple:
        return tuple(self.target.degree(im) for im in self.images)

    def apply(self, a) -> tuple:
        out = [0] * self.target.count
        for e, im in zip(a, self.images):
            if e:
                for k, x in enumerate(im):
                    out[k] += e * x
        return tuple(out)


def power_substitution(degrees, source: VariableContext = None) -> MonomialSubstitution:
    """y_i -> x_{i-1}^{d_i} in s target variables x0..x_{s-1}."""
    s = len(degrees)
    source = source or VariableContext(s)
    target = VariableContext.standard(s, "x", 0)
    return MonomialSubstitution(source, target, tuple(target.var(i, d) for i, d in enumerate(degrees)))


def _block_context(block_sizes) -> VariableContext:
    if sum(block_sizes) > 9 or max(block_sizes) > 9:
        names = [f"x{i + 1}_{j + 1}" for i, e in enumerate(block_sizes) for j in range(e)]
    else:
        names = [f"x{i + 1}{j + 1}" for i, e in enumerate(block_sizes) for j in range(e)]
    return VariableContext(sum(block_sizes), tuple(names))


def product_substitution(block_sizes, source: VariableContext = None) -> MonomialSubstitution:
    """y_i -> product of the e_i variables in block i."""
    s = len(block_sizes)
    source = source or VariableContext(s)
    target = _block_context(block_sizes)
    images, start = [], 0
    for e in block_sizes:
        im = [0] * target.count
        for k in range(start, start + e):
            im[k] = 1
        images.append(tuple(im))
        start += e
    return MonomialSubstitution(source, target, tuple(images))


def specialize(I: MonomialIdeal, sub: MonomialSubstitution) -> MonomialIdeal:
    if I.context.count != sub.source.count:
        raise DimensionMismatch(
            f"ideal in {I.context.count} variables, substitution from {sub.source.count}")
    J = MonomialIdeal(sub.target, tuple(sub.apply(g) for g in I.generators))
    assert len(J) == len(I), "a flat substitution must map an antichain to an antichain"
    return J


# hypersurface configurations -------------------------------------------------

def lambda_config_ideal(cfg) -> MonomialIdeal:
    """Products of s-c+1 of the forms x_{i-1}^{d_i}."""
    if not isinstance(cfg, LambdaConfig):
        cfg = LambdaConfig(*cfg)
    s, c = cfg.s, cfg.c
    sub = power_substitution(cfg.degrees)
    gens = []
    for combo in combinations(range(s), s - c + 1):
        g = [0] * s
        for i in combo:
            g[i] = cfg.degrees[i]
        gens.append(tuple(g))
    I = MonomialIdeal(sub.target, tuple(gens))
    assert I == specialize(stanley_reisner(uniform_matroid(s, c)), sub)
    return I


# hypergraphs -------------------------------------------------------------------

@dataclass(frozen=True)
class HypergraphSpec:
    block_sizes: tuple
    c: int

    def __post_init__(self):
        sizes = tuple(int(e) for e in self.block_sizes)
        if not sizes or any(e < 1 for e in sizes):
            raise ValueError("block sizes must be positive")
        if not 1 <= self.c <= len(sizes):
            raise ValueError(f"c={self.c} outside 1..{len(sizes)}")
        object.__setattr__(self, "block_sizes", sizes)

    @classmethod
    def parse(cls, text: str) -> "HypergraphSpec":
        blocks, c = text.split(";")
        return cls(tuple(int(e) for e in blocks.split(",")), int(c))


def hypergraph_ideal(spec: HypergraphSpec) -> MonomialIdeal:
    """Intersection of the primes (x_{i1,j1}, ..., x_{ic,jc}) over c distinct
    blocks and one vertex from each."""
    ctx = _block_context(spec.block_sizes)
    offsets, start = [], 0
    for e in spec.block_sizes:
        offsets.append(start)
        start += e
    primes = []
    for blocks in combinations(range(len(spec.block_sizes)), spec.c):
        for js in cartesian(*(range(spec.block_sizes[i]) for i in blocks)):
            primes.append(MonomialIdeal.prime(ctx, [offsets[i] + j for i, j in zip(blocks, js)]))
    return intersect_all(primes)


def hypergraph_equals_lambda(spec: HypergraphSpec) -> bool:
    s = len(spec.block_sizes)
    sub = product_substitution(spec.block_sizes)
    via_lambda = specialize(stanley_reisner(uniform_matroid(s, spec.c)), sub)
    return via_lambda == hypergraph_ideal(spec)


# tetrahedral curves --------------------------------------------------------------

# Pair order (x0x1, x0x2, x0x3, x1x2, x1x3, x2x3); positions k and 5-k are
# the opposite pairs.
PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def _permuted(p, sigma) -> tuple:
    """Exponents after renaming x_v -> x_sigma[v]."""
    out = [0] * 6
    for k, (u, v) in enumerate(PAIRS):
        image = tuple(sorted((sigma[u], sigma[v])))
        out[PAIRS.index(image)] = p[k]
    return tuple(out)


@dataclass(frozen=True)
class TetrahedralExponents:
    p: tuple

    def __post_init__(self):
        p = tuple(int(x) for x in self.p)
        if len(p) != 6 or any(x < 0 for x in p):
            raise ValueError("need six non-negative exponents")
        if not any(p):
            raise ValueError("the all-zero exponent vector defines the empty scheme")
        object.__setattr__(self, "p", p)

    @classmethod
    def parse(cls, text: str) -> "TetrahedralExponents":
        return cls(tuple(int(x) for x in text.split(",")))

    def normalized(self):
        """(q, sigma): q = p after a variable renaming sigma that makes the
        opposite pair (x0x1, x2x3) carry the largest sum."""
        p = self.p
        sums = [p[0] + p[5], p[1] + p[4], p[2] + p[3]]
        best = max(sums)
        if sums[0] == best:
            sigma = (0, 1, 2, 3)
        elif sums[1] == best:
            sigma = (0, 2, 1, 3)  # swap x1 <-> x2
        else:
            sigma = (0, 3, 2, 1)  # swap x1 <-> x3
        return _permuted(p, sigma), sigma


def tetrahedral_ideal(p) -> MonomialIdeal:
    if not isinstance(p, TetrahedralExponents):
        p = TetrahedralExponents(tuple(p))
    ctx = VariableContext.standard(4, "x", 0)
    parts = [power(MonomialIdeal.prime(ctx, pair), e) for pair, e in zip(PAIRS, p.p) if e]
    return intersect_all(parts)


def tetrahedral_conditions(p) -> dict:
    """Evaluate conditions (i)-(iv) on the normalized exponents."""
    if not isinstance(p, TetrahedralExponents):
        p = TetrahedralExponents(tuple(p))
    q, sigma = p.normalized()
    p1, p2, p3, p4, p5, p6 = q
    cond_i = p1 == 0 or p6 == 0
    cond_ii = p1 + p6 - max(p2 + p5, p3 + p4) in (0, 1)
    cond_iii = (2 * p1 < p2 + p3 + 3 - p6 or 2 * p1 < p4 + p5 + 3 - p6
                or 2 * p6 < p2 + p4 + 3 - p1 or 2 * p6 < p3 + p5 + 3 - p1)
    cond_iv = (not cond_iii and p1 + p6 == 2 + p2 + p5 == 2 + p3 + p4
               and (p1 + p3 + p5) % 2 == 0)
    return {"normalized": q, "permutation": sigma,
            "i": cond_i, "ii": cond_ii, "iii": cond_iii, "iv": cond_iv}


def tetrahedral_is_acm(p) -> bool:
    c = tetrahedral_conditions(p)
    return c["i"] or c["ii"] or c["iii"] or c["iv"]


def tetrahedral_oracle(p, budget=None) -> bool:
    from .resolution import is_cohen_macaulay, DEFAULT_LATTICE_BUDGET

    return is_cohen_macaulay(tetrahedral_ideal(p), budget or DEFAULT_LATTICE_BUDGET)
