"""Monomials and monomial ideals over a fixed, ordered variable list.

Monomials are plain tuples of non-negative exponents.  A
:class:`MonomialIdeal` always stores its minimal generators in a canonical
order (weighted degree, then lexicographic on exponents), so two ideals are
equal exactly when their generator tuples are equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

Monomial = tuple  # tuple[int, ...]

INT64_MAX = 2**63 - 1


class DimensionMismatch(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """A configured work limit was hit; ``spent`` says how much was used."""

    def __init__(self, message, spent=None):
        super().__init__(message)
        self.spent = spent


@dataclass(frozen=True)
class VariableContext:
    count: int
    names: tuple = None
    weights: tuple = None

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("a variable context needs at least one variable")
        names = self.names
        if names is None:
            names = tuple(f"y{i + 1}" for i in range(self.count))
        weights = self.weights
        if weights is None:
            weights = (1,) * self.count
        names, weights = tuple(names), tuple(int(w) for w in weights)
        if len(names) != self.count or len(set(names)) != self.count:
            raise ValueError("variable names must be distinct, one per variable")
        if len(weights) != self.count or any(w < 1 for w in weights):
            raise ValueError("weights must be positive integers, one per variable")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def standard(cls, count: int, prefix: str = "y", start: int = 1, weights=None):
        return cls(count, tuple(f"{prefix}{i + start}" for i in range(count)), weights)

    def with_weights(self, weights) -> "VariableContext":
        return VariableContext(self.count, self.names, tuple(weights))

    @property
    def unit_weights(self) -> bool:
        return all(w == 1 for w in self.weights)

    def degree(self, m: Monomial) -> int:
        d = sum(e * w for e, w in zip(m, self.weights))
        if d > INT64_MAX:
            raise OverflowError(f"weighted degree {d} exceeds the 64-bit range")
        return d

    def one(self) -> Monomial:
        return (0,) * self.count

    def var(self, i: int, e: int = 1) -> Monomial:
        m = [0] * self.count
        m[i] = e
        return tuple(m)

    def format(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) or "1"


def _check_monomial(m, n: int) -> Monomial:
    m = tuple(int(e) for e in m)
    if len(m) != n:
        raise DimensionMismatch(f"monomial {m} has {len(m)} exponents, expected {n}")
    for e in m:
        if e < 0:
            raise ValueError(f"negative exponent in {m}")
        if e > INT64_MAX:
            raise OverflowError(f"exponent {e} exceeds the 64-bit range")
    return m


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x < y else y for x, y in zip(a, b))


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """a / gcd(a, b)."""
    return tuple(x - y if x > y else 0 for x, y in zip(a, b))


def support(m: Monomial) -> frozenset:
    return frozenset(i for i, e in enumerate(m) if e)


def _antichain(gens: Iterable[Monomial]) -> list:
    # Sorting by total exponent first means a divisor is always seen before
    # its multiples, so one pass against the kept list suffices.
    cands = sorted(set(gens), key=lambda g: (sum(g), g))
    kept: list = []
    for g in cands:
        for h in kept:
            if all(x <= y for x, y in zip(h, g)):
                break
        else:
            kept.append(g)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    context: VariableContext
    generators: tuple = field(default=())

    def __post_init__(self):
        n = self.context.count
        gens = [_check_monomial(g, n) for g in self.generators]
        for g in gens:
            self.context.degree(g)
        gens = _antichain(gens)
        gens.sort(key=lambda g: (self.context.degree(g), g))
        object.__setattr__(self, "generators", tuple(gens))

    # Construction helpers -------------------------------------------------

    @classmethod
    def zero(cls, ctx: VariableContext) -> "MonomialIdeal":
        return cls(ctx, ())

    @classmethod
    def unit(cls, ctx: VariableContext) -> "MonomialIdeal":
        return cls(ctx, (ctx.one(),))

    @classmethod
    def from_supports(cls, ctx: VariableContext, supports) -> "MonomialIdeal":
        """Squarefree ideal with one generator per (0-based) index set."""
        gens = []
        for s in supports:
            m = [0] * ctx.count
            for i in s:
                m[i] = 1
            gens.append(tuple(m))
        return cls(ctx, gens)

    @classmethod
    def prime(cls, ctx: VariableContext, indices) -> "MonomialIdeal":
        return cls(ctx, [ctx.var(i) for i in indices])

    # Basic predicates -----------------------------------------------------

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.generators)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.generators for e in g)

    def contains(self, m: Monomial) -> bool:
        m = _check_monomial(m, self.context.count)
        for g in self.generators:
            if all(x <= y for x, y in zip(g, m)):
                return True
        return False

    __contains__ = contains

    def issubset(self, other: "MonomialIdeal") -> bool:
        _same(self, other)
        return all(other.contains(g) for g in self.generators)

    def with_weights(self, weights) -> "MonomialIdeal":
        return MonomialIdeal(self.context.with_weights(weights), self.generators)

    def __str__(self):
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(self.context.format(g) for g in self.generators) + ")"

    # Serialization -------------------------------------------------------

    def dumps(self) -> str:
        ctx = self.context
        lines = [f"vars={ctx.count} weights={','.join(map(str, ctx.weights))}"]
        lines += [" ".join(map(str, g)) for g in self.generators]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str, names=None) -> "MonomialIdeal":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty ideal text")
        header = dict(tok.split("=", 1) for tok in lines[0].split())
        n = int(header["vars"])
        weights = tuple(int(w) for w in header["weights"].split(","))
        ctx = VariableContext(n, names, weights)
        gens = [tuple(int(e) for e in ln.split()) for ln in lines[1:]]
        return cls(ctx, gens)


def _same(I: MonomialIdeal, J: MonomialIdeal):
    if I.context.count != J.context.count:
        raise DimensionMismatch(
            f"ideals live in {I.context.count} and {J.context.count} variables")


def minimalize(gens: Sequence[Monomial], ctx: VariableContext) -> MonomialIdeal:
    return MonomialIdeal(ctx, tuple(gens))


def contains(I: MonomialIdeal, m: Monomial) -> bool:
    return I.contains(m)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same(I, J)
    return MonomialIdeal(I.context, I.generators + J.generators)


def intersect(I: MonomialIdeal, *others: MonomialIdeal) -> MonomialIdeal:
    result = I
    for J in others:
        _same(result, J)
        result = MonomialIdeal(
            result.context,
            tuple(lcm(g, h) for g in result.generators for h in J.generators))
    return result


def intersect_all(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    if not ideals:
        raise ValueError("cannot intersect an empty family")
    # Smallest ideals first keeps intermediate generator sets small.
    ordered = sorted(ideals, key=len)
    return intersect(ordered[0], *ordered[1:])


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same(I, J)
    return MonomialIdeal(
        I.context, tuple(mul(g, h) for g in I.generators for h in J.generators))


def power(I: MonomialIdeal, r: int) -> MonomialIdeal:
    if r < 1:
        raise ValueError("power requires r >= 1")
    # Square-and-multiply on ideals; each step is minimalized.
    result, base = None, I
    while r:
        if r & 1:
            result = base if result is None else product(result, base)
        r >>= 1
        if r:
            base = product(base, base)
    return result


def colon(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    m = _check_monomial(m, I.context.count)
    return MonomialIdeal(I.context, tuple(quotient(g, m) for g in I.generators))


def weighted_alpha(I: MonomialIdeal) -> int:
    if I.is_zero:
        raise ValueError("alpha of the zero ideal is undefined")
    return min(I.context.degree(g) for g in I.generators)


def squarefree_subsets(ctx: VariableContext, size: int) -> MonomialIdeal:
    """All squarefree monomials of the given degree."""
    return MonomialIdeal.from_supports(ctx, combinations(range(ctx.count), size))


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.context, tuple(tuple(min(e, 1) for e in g) for g in I.generators))


def minimal_primes(I: MonomialIdeal) -> list:
    """Minimal primes as sorted tuples of variable indices.

    Minimal vertex covers of the support hypergraph, found by branching on
    an uncovered generator's support and pruning non-minimal covers.
    """
    if I.is_zero:
        return [()]
    if I.is_unit:
        raise ValueError("the unit ideal has no primes")
    supports = sorted({support(g) for g in radical(I).generators}, key=len)
    covers = set()

    def branch(chosen: frozenset, k: int):
        while k < len(supports) and supports[k] & chosen:
            k += 1
        if k == len(supports):
            covers.add(chosen)
            return
        for v in sorted(supports[k]):
            branch(chosen | {v}, k + 1)

    branch(frozenset(), 0)
    minimal = [c for c in covers if not any(o < c for o in covers)]
    return sorted(tuple(sorted(c)) for c in minimal)


def codimension(I: MonomialIdeal) -> int:
    return min(len(p) for p in minimal_primes(I))
