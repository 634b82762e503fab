"""Hilbert series numerators, h-vectors, and the hypersurface-configuration
h-vector recursion.

Polynomials in t are coefficient lists, lowest degree first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .ideals import MonomialIdeal, codimension, quotient

DEBUG = False


class WeightedGradingError(ValueError):
    pass


class HVectorDivisionError(ArithmeticError):
    def __init__(self, degree, remainder):
        super().__init__(f"numerator not divisible by (1-t) at step {degree}: remainder {remainder}")
        self.degree = degree
        self.remainder = remainder


# polynomial helpers ---------------------------------------------------------

def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p or [0]


def poly_add(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def poly_sub(a, b):
    return poly_add(a, [-x for x in b])


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def shift(a, d):
    return _trim([0] * d + list(a))


def one_minus_t_power(d):
    return [1] + [0] * (d - 1) + [-1] if d else [0]


def t_integer(d):
    """1 + t + ... + t^(d-1)."""
    return [1] * d


def poly_eval(p, x):
    return sum(c * x**i for i, c in enumerate(p))


# Hilbert numerator -----------------------------------------------------------

def _deg(g):
    return sum(g)


def _coprime(a, b):
    return not any(x and y for x, y in zip(a, b))


def _numerator(gens: tuple, strategy: str, cache: dict):
    if gens in cache:
        return cache[gens]
    if not gens:
        return [1]
    # a generator coprime to all others is a non-zero-divisor modulo them
    for k, g in enumerate(gens):
        if all(_coprime(g, h) for j, h in enumerate(gens) if j != k):
            rest = gens[:k] + gens[k + 1:]
            res = poly_mul(_numerator(rest, strategy, cache), one_minus_t_power(_deg(g)))
            cache[gens] = res
            return res
    k = len(gens) - 1 if strategy == "last" else 0
    g = gens[k]
    rest = gens[:k] + gens[k + 1:]
    col = _canonical(quotient(h, g) for h in rest)
    res = poly_sub(_numerator(rest, strategy, cache),
                   shift(_numerator(col, strategy, cache), _deg(g)))
    cache[gens] = res
    return res


def _canonical(gens) -> tuple:
    gens = sorted(set(gens), key=lambda g: (sum(g), g))
    kept = []
    for g in gens:
        if not any(all(x <= y for x, y in zip(h, g)) for h in kept):
            kept.append(g)
    return tuple(kept)


def hilbert_numerator(I: MonomialIdeal, strategy: str = "last") -> list:
    """K-polynomial of S/I in the standard grading, by generator pivoting:

        K(J + (g)) = K(J) - t^deg(g) K(J : g).
    """
    if not I.context.unit_weights:
        raise WeightedGradingError("Hilbert data is computed in the standard grading only")
    if I.is_unit:
        raise ValueError("the unit ideal has no Hilbert series")
    res = _numerator(I.generators, strategy, {})
    if DEBUG:
        other = "first" if strategy == "last" else "last"
        assert res == _numerator(I.generators, other, {})
    return res


def hilbert_function(I: MonomialIdeal, upto: int) -> list:
    """Values h(0..upto) obtained from the numerator over (1-t)^n."""
    num = hilbert_numerator(I)
    series = list(num) + [0] * max(0, upto + 1 - len(num))
    series = series[: upto + 1]
    for _ in range(I.context.count):
        acc = 0
        for i in range(len(series)):
            acc += series[i]
            series[i] = acc
    return series


def divide_one_minus_t(p, times: int) -> list:
    p = list(p)
    for step in range(times):
        q, acc = [], 0
        for c in p:
            acc += c
            q.append(acc)
        if q[-1] != 0:
            raise HVectorDivisionError(step, q[-1])
        p = _trim(q[:-1]) if len(q) > 1 else [0]
    return p


def _strip(v):
    v = list(v)
    while v and v[-1] == 0:
        v.pop()
    return tuple(v)


def h_vector(I: MonomialIdeal) -> tuple:
    num = hilbert_numerator(I)
    c = codimension(I)
    return _strip(divide_one_minus_t(num, c))


# Hypersurface configurations -----------------------------------------------

@dataclass(frozen=True)
class LambdaConfig:
    degrees: tuple
    c: int

    def __post_init__(self):
        degrees = tuple(int(d) for d in self.degrees)
        if not degrees or any(d < 1 for d in degrees):
            raise ValueError("degrees must be positive integers")
        if not 1 <= self.c <= len(degrees):
            raise ValueError(f"codimension {self.c} outside 1..{len(degrees)}")
        object.__setattr__(self, "degrees", degrees)

    @property
    def s(self):
        return len(self.degrees)


@dataclass(frozen=True)
class RecursionStep:
    degrees: tuple
    c: int
    kind: str  # "complete intersection", "hypersurface" or "link"
    result: tuple
    section: tuple = ()
    shifted: tuple = ()
    shift: int = 0


@lru_cache(maxsize=None)
def _lambda_h(degrees: tuple, c: int) -> tuple:
    return _lambda_step(degrees, c).result


def _lambda_step(degrees: tuple, c: int) -> RecursionStep:
    s = len(degrees)
    if c == s:
        h = [1]
        for d in degrees:
            h = poly_mul(h, t_integer(d))
        return RecursionStep(degrees, c, "complete intersection", _strip(h))
    if c == 1:
        return RecursionStep(degrees, c, "hypersurface", _strip(t_integer(sum(degrees))))
    head, d = degrees[:-1], degrees[-1]
    section = poly_mul(list(_lambda_h(head, c - 1)), t_integer(d))
    previous = _lambda_h(head, c)
    h = poly_add(section, shift(list(previous), d))
    return RecursionStep(degrees, c, "link", _strip(h), _strip(section), previous, d)


def lambda_hvector(cfg) -> tuple:
    """h-vector of the codimension-c configuration of hypersurfaces of the
    given degrees, computed from the degrees alone by peeling the last one:

        h(lambda, c) = h(lambda', c-1) * (1 + t + ... + t^(d-1)) + t^d h(lambda', c).
    """
    if not isinstance(cfg, LambdaConfig):
        cfg = LambdaConfig(*cfg)
    return _lambda_h(cfg.degrees, cfg.c)


def lambda_trace(cfg) -> list:
    """Every recursion step needed for cfg, children before parents."""
    if not isinstance(cfg, LambdaConfig):
        cfg = LambdaConfig(*cfg)
    steps, seen = [], set()

    def visit(degrees, c):
        if (degrees, c) in seen:
            return
        seen.add((degrees, c))
        if 1 < c < len(degrees):
            visit(degrees[:-1], c - 1)
            visit(degrees[:-1], c)
        steps.append(_lambda_step(degrees, c))

    visit(cfg.degrees, cfg.c)
    return steps


def elementary_symmetric(values, k: int) -> int:
    e = [1] + [0] * k
    for v in values:
        for j in range(k, 0, -1):
            e[j] += e[j - 1] * v
    return e[k]


def lambda_degree(cfg) -> int:
    if not isinstance(cfg, LambdaConfig):
        cfg = LambdaConfig(*cfg)
    return elementary_symmetric(cfg.degrees, cfg.c)


def lambda_degree_bruteforce(cfg) -> int:
    if not isinstance(cfg, LambdaConfig):
        cfg = LambdaConfig(*cfg)
    total = 0
    for combo in combinations(cfg.degrees, cfg.c):
        p = 1
        for d in combo:
            p *= d
        total += p
    return total
