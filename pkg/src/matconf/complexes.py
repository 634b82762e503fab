"""Simplicial complexes on [s], matroid checks and Stanley-Reisner ideals.

Vertices are labelled 1..s as in the usual combinatorial notation; faces
are stored as bitmasks with bit ``v - 1`` standing for vertex ``v``.  The
Stanley-Reisner ideal of a complex on [s] lives in s variables, vertex
``v`` corresponding to variable index ``v - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .ideals import MonomialIdeal, VariableContext, DimensionMismatch, intersect_all

DEBUG = False


def _mask(face) -> int:
    m = 0
    for v in face:
        m |= 1 << (v - 1)
    return m


def _face(mask: int) -> tuple:
    out, v = [], 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _popcount(m: int) -> int:
    return bin(m).count("1")


def _maximal(masks) -> tuple:
    masks = sorted(set(masks), key=lambda m: (-_popcount(m), m))
    kept = []
    for m in masks:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=lambda m: (_popcount(m), _face(m))))


@dataclass(frozen=True)
class SimplicialComplex:
    vertex_count: int
    facet_masks: tuple

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("vertex_count must be positive")
        full = (1 << self.vertex_count) - 1
        if not self.facet_masks:
            raise ValueError("the void complex is not allowed")
        for m in self.facet_masks:
            if m & ~full:
                raise ValueError(f"facet {_face(m)} uses a vertex outside [{self.vertex_count}]")
        object.__setattr__(self, "facet_masks", _maximal(self.facet_masks))

    @classmethod
    def from_facets(cls, s: int, facets) -> "SimplicialComplex":
        facets = [tuple(f) for f in facets]
        for f in facets:
            for v in f:
                if not 1 <= v <= s:
                    raise ValueError(f"vertex {v} out of range 1..{s}")
        return cls(s, tuple(_mask(f) for f in facets))

    @property
    def facets(self) -> list:
        return [_face(m) for m in self.facet_masks]

    @property
    def dimension(self) -> int:
        return max(_popcount(m) for m in self.facet_masks) - 1

    @property
    def is_pure(self) -> bool:
        return len({_popcount(m) for m in self.facet_masks}) == 1

    def has_face(self, face) -> bool:
        m = face if isinstance(face, int) else _mask(face)
        return any(m & f == m for f in self.facet_masks)

    def faces(self) -> list:
        """Every face as a bitmask (downward closure of the facets)."""
        seen = set()
        for f in self.facet_masks:
            sub = f
            while True:
                seen.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return sorted(seen, key=lambda m: (_popcount(m), m))

    def minimal_nonfaces(self) -> list:
        s = self.vertex_count
        out = []
        for k in range(1, s + 1):
            for combo in combinations(range(s), k):
                m = sum(1 << i for i in combo)
                if self.has_face(m):
                    continue
                if any(o & m == o for o in out):
                    continue
                out.append(m)
        return out

    def dumps(self) -> str:
        lines = [f"s={self.vertex_count}"]
        for f in self.facets:
            lines.append(",".join(map(str, f)) if f else "-")
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> "SimplicialComplex":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        if not lines or not lines[0].startswith("s="):
            raise ValueError("facet file must start with 's=<n>'")
        s = int(lines[0][2:])
        facets = []
        for ln in lines[1:]:
            facets.append(() if ln == "-" else tuple(int(v) for v in ln.split(",")))
        return cls.from_facets(s, facets)


@dataclass(frozen=True)
class MatroidComplex:
    complex: SimplicialComplex
    codim: int

    def __post_init__(self):
        if not is_matroid(self.complex):
            raise ValueError(f"facets {self.complex.facets} do not form a matroid")
        expected = self.complex.vertex_count - (self.complex.dimension + 1)
        if expected < 1:
            raise ValueError("a full simplex has zero Stanley-Reisner ideal (codim 0)")
        if self.codim != expected:
            raise ValueError(f"codim {self.codim} does not match facet size (expected {expected})")

    @classmethod
    def of(cls, cx: SimplicialComplex) -> "MatroidComplex":
        return cls(cx, cx.vertex_count - cx.dimension - 1)

    @classmethod
    def from_facets(cls, s: int, facets) -> "MatroidComplex":
        return cls.of(SimplicialComplex.from_facets(s, facets))

    @property
    def vertex_count(self) -> int:
        return self.complex.vertex_count

    @property
    def facets(self) -> list:
        return self.complex.facets


def _exchange_ok(cx: SimplicialComplex) -> bool:
    # Independent sets of a matroid: exchange only needs checking for
    # |F| = |G| + 1, since larger F contain such a subset.
    faces = cx.faces()
    by_size: dict = {}
    for f in faces:
        by_size.setdefault(_popcount(f), []).append(f)
    face_set = set(faces)
    for k, gs in by_size.items():
        for G in gs:
            for F in by_size.get(k + 1, ()):
                diff = F & ~G
                ok = False
                while diff:
                    bit = diff & -diff
                    if G | bit in face_set:
                        ok = True
                        break
                    diff ^= bit
                if not ok:
                    return False
    return True


def _restrictions_pure(cx: SimplicialComplex) -> bool:
    s = cx.vertex_count
    for F in range(1 << s):
        # facets of the restriction are the maximal traces f & F
        traces = _maximal(f & F for f in cx.facet_masks)
        if len({_popcount(t) for t in traces}) > 1:
            return False
    return True


def is_matroid(cx: SimplicialComplex, method: str = "exchange") -> bool:
    if method == "restriction":
        return _restrictions_pure(cx)
    result = _exchange_ok(cx)
    if DEBUG:
        assert result == _restrictions_pure(cx), cx.facets
    return result


def _reindex(s: int, v: int):
    mapping = {}
    for old in range(1, s + 1):
        if old != v:
            mapping[old] = old if old < v else old - 1
    return mapping


def _drop_vertex(mask: int, v: int) -> int:
    low = mask & ((1 << (v - 1)) - 1)
    high = mask >> v
    return low | (high << (v - 1))


def _check_vertex(cx: SimplicialComplex, v: int):
    if not 1 <= v <= cx.vertex_count:
        raise ValueError(f"vertex {v} out of range 1..{cx.vertex_count}")
    if cx.vertex_count == 1:
        raise ValueError("cannot remove the only vertex")


def link(cx, v: int):
    """Link of vertex v, re-indexed onto [s-1].  Returns (complex, old->new map).
    For a matroid input the result is checked to be a matroid again."""
    was_matroid = isinstance(cx, MatroidComplex)
    cx = getattr(cx, "complex", cx)
    _check_vertex(cx, v)
    bit = 1 << (v - 1)
    faces = [f & ~bit for f in cx.facet_masks if f & bit]
    if not faces:
        raise ValueError(f"vertex {v} is a loop; its link is void")
    new = SimplicialComplex(cx.vertex_count - 1, tuple(_drop_vertex(f, v) for f in faces))
    assert not was_matroid or is_matroid(new), f"link of {v} is not a matroid"
    return new, _reindex(cx.vertex_count, v)


def deletion(cx, v: int):
    """Deletion of vertex v, re-indexed onto [s-1].  Returns (complex, old->new map)."""
    was_matroid = isinstance(cx, MatroidComplex)
    cx = getattr(cx, "complex", cx)
    _check_vertex(cx, v)
    bit = 1 << (v - 1)
    faces = [f & ~bit for f in cx.facet_masks]
    new = SimplicialComplex(cx.vertex_count - 1, tuple(_drop_vertex(f, v) for f in faces))
    assert not was_matroid or is_matroid(new), f"deletion of {v} is not a matroid"
    return new, _reindex(cx.vertex_count, v)


def uniform_matroid(s: int, c: int) -> MatroidComplex:
    if not 1 <= c <= s:
        raise ValueError(f"uniform matroid needs 1 <= c <= s, got s={s}, c={c}")
    facets = combinations(range(1, s + 1), s - c)
    return MatroidComplex(SimplicialComplex.from_facets(s, facets), c)


def stanley_reisner(cx, ctx: VariableContext = None) -> MonomialIdeal:
    cx = getattr(cx, "complex", cx)
    if ctx is None:
        ctx = VariableContext(cx.vertex_count)
    if ctx.count != cx.vertex_count:
        raise DimensionMismatch(
            f"complex on {cx.vertex_count} vertices, context has {ctx.count} variables")
    return MonomialIdeal.from_supports(
        ctx, [tuple(v - 1 for v in _face(m)) for m in cx.minimal_nonfaces()])


def facet_primes(mat: MatroidComplex, ctx: VariableContext = None) -> list:
    cx = mat.complex
    if ctx is None:
        ctx = VariableContext(cx.vertex_count)
    full = (1 << cx.vertex_count) - 1
    primes = [MonomialIdeal.prime(ctx, [v - 1 for v in _face(full & ~f)])
              for f in cx.facet_masks]
    if DEBUG:
        assert intersect_all(primes) == stanley_reisner(cx, ctx)
    return primes


def alexander_dual(I: MonomialIdeal) -> MonomialIdeal:
    """Generators of the dual are the supports of the minimal primes of I."""
    from .ideals import minimal_primes

    if not I.is_squarefree:
        raise ValueError("Alexander duality needs a squarefree ideal")
    if I.is_zero or I.is_unit:
        raise ValueError("Alexander duality needs a proper nonzero ideal")
    return MonomialIdeal.from_supports(I.context, minimal_primes(I))


def all_matroids(s: int) -> list:
    """Every matroid complex of positive codimension on [s], found by running
    is_matroid over all pure complexes (nonempty families of equal-size subsets)."""
    out = []
    for k in range(s):
        subsets = [sum(1 << i for i in c) for c in combinations(range(s), k)]
        for choice in range(1, 1 << len(subsets)):
            masks = tuple(subsets[i] for i in range(len(subsets)) if choice >> i & 1)
            cx = SimplicialComplex(s, masks)
            if is_matroid(cx):
                out.append(MatroidComplex(cx, s - k))
    return out


def canonical_form(cx: SimplicialComplex) -> tuple:
    """Lexicographically least relabelling of the facet list, for isomorphism tests."""
    from itertools import permutations

    s = cx.vertex_count
    best = None
    for perm in permutations(range(s)):
        masks = []
        for f in cx.facet_masks:
            m = 0
            for i in range(s):
                if f >> i & 1:
                    m |= 1 << perm[i]
            masks.append(m)
        key = tuple(sorted(masks))
        if best is None or key < best:
            best = key
    return (s, best)


def matroid_classes(s: int) -> list:
    """One representative per isomorphism class of matroids on [s]."""
    reps = {}
    for mat in all_matroids(s):
        key = canonical_form(mat.complex)
        reps.setdefault(key, mat)
    return [reps[k] for k in sorted(reps)]
