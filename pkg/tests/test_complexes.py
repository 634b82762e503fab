from itertools import combinations

import pytest

from matconf import complexes as cx
from matconf.ideals import MonomialIdeal, VariableContext, ideal_sum, intersect_all, product
from oracles import restriction_pure_matroid

SC = cx.SimplicialComplex.from_facets


@pytest.mark.parametrize("facets, expected", [
    ([(1, 2), (1, 3), (2, 3)], True),
    ([(1, 2), (3,)], False),
    ([(1, 2), (2, 3)], True),
    ([(1, 2), (3, 4)], False),
])
def test_is_matroid_examples(facets, expected):
    s = max(v for f in facets for v in f)
    c = SC(s, facets)
    assert cx.is_matroid(c) is expected
    assert cx.is_matroid(c, "restriction") is expected


def test_void_complex_rejected():
    with pytest.raises(ValueError):
        SC(3, [])


def test_empty_face_allowed():
    c = SC(2, [()])
    assert cx.stanley_reisner(c).generators == ((0, 1), (1, 0))


def test_exchange_and_restriction_agree_exhaustively():
    # every simplicial complex on at most 4 vertices, via antichains of faces
    for s in range(1, 5):
        subsets = [frozenset(c) for k in range(s + 1) for c in combinations(range(1, s + 1), k)]
        seen = set()
        for r in range(1, 5):
            for fam in combinations(subsets, r):
                if any(a < b for a in fam for b in fam):
                    continue
                c = SC(s, fam)
                if c in seen:
                    continue
                seen.add(c)
                ex = cx.is_matroid(c)
                assert ex == cx.is_matroid(c, "restriction") == restriction_pure_matroid(c.facets, s)


def test_exchange_and_restriction_agree_on_five_vertices():
    for mat in cx.all_matroids(5):
        assert restriction_pure_matroid(mat.facets, 5)
    # and a batch of non-pure or non-matroid complexes
    samples = [[(1, 2, 3), (4, 5)], [(1, 2), (3, 4), (5,)], [(1, 2, 3), (3, 4, 5)],
               [(1, 2), (2, 3), (3, 4), (4, 5)], [(1, 2, 3), (1, 4, 5), (2, 4)]]
    for f in samples:
        c = SC(5, f)
        assert cx.is_matroid(c) == restriction_pure_matroid(c.facets, 5)


def test_link_and_deletion_examples():
    u42 = cx.uniform_matroid(4, 2)
    lk, mapping = cx.link(u42, 4)
    assert lk.facets == [(1,), (2,), (3,)]
    assert mapping == {1: 1, 2: 2, 3: 3}
    dl, _ = cx.deletion(u42, 4)
    assert dl.facets == [(1, 2), (1, 3), (2, 3)]
    lk2, mapping2 = cx.link(SC(3, [(1, 2), (2, 3)]), 2)
    assert lk2.facets == [(1,), (2,)]
    assert mapping2 == {1: 1, 3: 2}
    with pytest.raises(ValueError):
        cx.link(u42, 5)


def test_links_and_deletions_of_matroids_are_matroids():
    for s in range(2, 6):
        for mat in cx.all_matroids(s):
            for v in range(1, s + 1):
                if mat.complex.has_face((v,)):
                    assert cx.is_matroid(cx.link(mat, v)[0])
                assert cx.is_matroid(cx.deletion(mat, v)[0])


@pytest.mark.parametrize("s, c, facets", [
    (3, 2, [(1,), (2,), (3,)]),
    (4, 2, list(combinations(range(1, 5), 2))),
    (4, 3, [(1,), (2,), (3,), (4,)]),
])
def test_uniform_matroid(s, c, facets):
    u = cx.uniform_matroid(s, c)
    assert u.facets == facets and u.codim == c


def test_uniform_matroid_bounds():
    with pytest.raises(ValueError):
        cx.uniform_matroid(3, 0)
    with pytest.raises(ValueError):
        cx.uniform_matroid(3, 4)


def test_stanley_reisner_examples():
    assert cx.stanley_reisner(cx.uniform_matroid(3, 2)).generators == ((0, 1, 1), (1, 0, 1), (1, 1, 0))
    I42 = cx.stanley_reisner(cx.uniform_matroid(4, 2))
    assert sorted(I42.generators) == sorted(
        tuple(1 if i in c else 0 for i in range(4)) for c in combinations(range(4), 3))
    assert cx.stanley_reisner(SC(3, [(1, 2), (2, 3)])).generators == ((1, 0, 1),)


def test_facet_primes_examples():
    ctx = VariableContext(3)
    P = lambda *v: MonomialIdeal.prime(ctx, v)
    assert cx.facet_primes(cx.uniform_matroid(3, 2)) == [P(1, 2), P(0, 2), P(0, 1)]
    primes43 = cx.facet_primes(cx.uniform_matroid(4, 3))
    assert len(primes43) == 4 and all(len(p) == 3 for p in primes43)
    assert cx.facet_primes(cx.MatroidComplex.from_facets(3, [(1, 2), (2, 3)])) == [P(2), P(0)]


def test_facet_primes_intersect_to_stanley_reisner():
    for s in range(1, 6):
        for mat in cx.all_matroids(s):
            assert intersect_all(cx.facet_primes(mat)) == cx.stanley_reisner(mat)


def test_alexander_dual_examples():
    I32 = cx.stanley_reisner(cx.uniform_matroid(3, 2))
    assert cx.alexander_dual(I32) == I32
    assert cx.alexander_dual(cx.stanley_reisner(cx.uniform_matroid(4, 2))) == \
        cx.stanley_reisner(cx.uniform_matroid(4, 3))
    ctx = VariableContext(3)
    assert cx.alexander_dual(MonomialIdeal(ctx, [(1, 0, 1)])) == MonomialIdeal(ctx, [(1, 0, 0), (0, 0, 1)])
    with pytest.raises(ValueError):
        cx.alexander_dual(MonomialIdeal(ctx, [(2, 0, 0)]))


def test_uniform_duality_general():
    for s in range(2, 7):
        for c in range(1, s + 1):
            I = cx.stanley_reisner(cx.uniform_matroid(s, c))
            assert cx.alexander_dual(I) == cx.stanley_reisner(cx.uniform_matroid(s, s - c + 1))


def test_alexander_dual_is_involution():
    for s in range(2, 6):
        for mat in cx.all_matroids(s):
            I = cx.stanley_reisner(mat)
            assert cx.alexander_dual(cx.alexander_dual(I)) == I


def _lift(J, mapping, s):
    inverse = {new: old for old, new in mapping.items()}
    gens = []
    for g in J.generators:
        m = [0] * s
        for k, e in enumerate(g):
            m[inverse[k + 1] - 1] = e
        gens.append(tuple(m))
    return MonomialIdeal(VariableContext(s), gens)


@pytest.mark.parametrize("s", [2, 3, 4, 5, 6])
def test_basic_double_link_decomposition(s):
    mats = cx.all_matroids(s) if s <= 5 else cx.matroid_classes(s)
    for mat in mats:
        I = cx.stanley_reisner(mat)
        for j in range(1, s + 1):
            if not mat.complex.has_face((j,)):
                continue
            lk, mapping = cx.link(mat, j)
            dl, _ = cx.deletion(mat, j)
            yj = MonomialIdeal.prime(I.context, [j - 1])
            rebuilt = ideal_sum(product(yj, _lift(cx.stanley_reisner(lk), mapping, s)),
                                _lift(cx.stanley_reisner(dl), mapping, s))
            assert rebuilt == I, (mat.facets, j)


def test_facet_file_round_trip(tmp_path):
    c = SC(4, [(1, 2), (3,), ()])
    assert c.facets == [(3,), (1, 2)]
    text = c.dumps()
    assert text.startswith("s=4\n")
    assert cx.SimplicialComplex.loads(text) == c
    empty = SC(2, [()])
    assert empty.dumps() == "s=2\n-\n"
    assert cx.SimplicialComplex.loads(empty.dumps()) == empty


def test_matroid_counts():
    # numbers of matroids on n labelled / unlabelled elements, minus the free matroid
    assert [len(cx.all_matroids(s)) for s in range(1, 6)] == [1, 4, 15, 67, 405]
    assert [len(cx.matroid_classes(s)) for s in range(1, 6)] == [1, 3, 7, 16, 37]
