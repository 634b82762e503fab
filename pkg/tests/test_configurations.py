from itertools import permutations, product

import pytest

from matconf import complexes as cx
from matconf.configurations import (
    PAIRS,
    HypergraphSpec,
    MonomialSubstitution,
    SubstitutionError,
    TetrahedralExponents,
    hypergraph_equals_lambda,
    hypergraph_ideal,
    lambda_config_ideal,
    power_substitution,
    product_substitution,
    specialize,
    tetrahedral_conditions,
    tetrahedral_ideal,
    tetrahedral_is_acm,
    tetrahedral_oracle,
)
from matconf.configurations import _permuted
from matconf.ideals import DimensionMismatch, MonomialIdeal, VariableContext, intersect_all, power
from matconf.symbolic import is_contained, symbolic_power

I32 = cx.stanley_reisner(cx.uniform_matroid(3, 2))


def test_specialize_examples():
    J = specialize(I32, power_substitution((2, 2, 2)))
    assert set(J.generators) == {(2, 2, 0), (2, 0, 2), (0, 2, 2)}
    assert str(J.context.names[0]) == "x0"
    I42 = cx.stanley_reisner(cx.uniform_matroid(4, 2))
    assert specialize(I42, power_substitution((1, 1, 1, 1))).generators == I42.generators
    I22 = cx.stanley_reisner(cx.uniform_matroid(2, 2))
    J = specialize(I22, product_substitution((2, 2)))
    assert J.generators == ((0, 0, 1, 1), (1, 1, 0, 0))


def test_substitution_validation():
    src, tgt = VariableContext(2), VariableContext(3)
    with pytest.raises(SubstitutionError):
        MonomialSubstitution(src, tgt, ((1, 1, 0), (0, 1, 1)))
    with pytest.raises(SubstitutionError):
        MonomialSubstitution(src, tgt, ((1, 0, 0), (0, 0, 0)))
    with pytest.raises(DimensionMismatch):
        MonomialSubstitution(src, tgt, ((1, 0, 0),))
    with pytest.raises(DimensionMismatch):
        specialize(I32, power_substitution((1, 1)))


def test_lambda_config_ideal_examples():
    I = lambda_config_ideal(([4, 3, 3, 2], 2))
    assert sorted(map(sum, I.generators)) == [8, 9, 9, 10]
    assert lambda_config_ideal(([2, 2], 2)).generators == ((0, 2), (2, 0))


def _substitutions(s, max_degree):
    """Every flat substitution sending y_i to a product of distinct fresh
    variables, each to a power at most max_degree, with image degree <= max_degree."""
    shapes = []
    for block in product(range(1, max_degree + 1), repeat=s):
        # image of y_i is either x^d or a product of d distinct variables
        for kinds in product((0, 1), repeat=s):
            if any(k and d == 1 for k, d in zip(kinds, block)):
                continue
            shapes.append((block, kinds))
    for block, kinds in shapes:
        sizes = [d if k else 1 for d, k in zip(block, kinds)]
        n = sum(sizes)
        images, start = [], 0
        for d, k, e in zip(block, kinds, sizes):
            im = [0] * n
            if k:
                for j in range(start, start + e):
                    im[j] = 1
            else:
                im[start] = d
            images.append(tuple(im))
            start += e
        yield MonomialSubstitution(VariableContext(s), VariableContext(n), tuple(images))


def test_specialization_respects_intersections():
    count = 0
    for s in range(1, 5):
        for mat in cx.matroid_classes(s):
            I = cx.stanley_reisner(mat)
            primes = cx.facet_primes(mat)
            for sub in _substitutions(s, 2):
                assert specialize(I, sub) == intersect_all([specialize(P, sub) for P in primes])
                count += 1
    assert count > 100


def test_symbolic_powers_commute_with_specialization():
    for s in range(2, 5):
        for mat in cx.matroid_classes(s):
            primes = cx.facet_primes(mat)
            for sub in list(_substitutions(s, 2))[:6]:
                for m in (1, 2, 3):
                    lhs = specialize(symbolic_power(mat, m), sub)
                    rhs = intersect_all([power(specialize(P, sub), m) for P in primes])
                    assert lhs == rhs


@pytest.mark.parametrize("s, c", [(3, 2), (4, 2)])
def test_containment_preserved_both_ways(s, c):
    mat = cx.uniform_matroid(s, c)
    I = cx.stanley_reisner(mat)
    for sub in [power_substitution((2,) * s), power_substitution(tuple(range(1, s + 1))),
                product_substitution((2,) + (1,) * (s - 1))]:
        for m, r in product(range(1, 5), range(1, 4)):
            image = specialize(symbolic_power(mat, m), sub).issubset(power(specialize(I, sub), r))
            assert image == is_contained(mat, m, r).contained


def test_hypergraph_examples():
    I42 = cx.stanley_reisner(cx.uniform_matroid(4, 2))
    assert hypergraph_ideal(HypergraphSpec((1, 1, 1, 1), 2)).generators == I42.generators
    J = hypergraph_ideal(HypergraphSpec((2, 1), 2))
    assert set(J.generators) == {(0, 0, 1), (1, 1, 0)}
    assert [J.context.format(g) for g in J.generators] == ["x21", "x11*x12"]
    J = hypergraph_ideal(HypergraphSpec((2, 2), 2))
    assert set(J.generators) == {(1, 1, 0, 0), (0, 0, 1, 1)}


def test_hypergraph_spec_parse_and_validate():
    spec = HypergraphSpec.parse("2,1,3;2")
    assert spec == HypergraphSpec((2, 1, 3), 2)
    with pytest.raises(ValueError):
        HypergraphSpec((2, 0), 1)
    with pytest.raises(ValueError):
        HypergraphSpec((2, 1), 3)


def test_hypergraph_identity_small():
    for total in range(1, 7):
        for k in range(1, total + 1):
            for blocks in product(range(1, total + 1), repeat=k):
                if sum(blocks) != total:
                    continue
                for c in range(1, k + 1):
                    assert hypergraph_equals_lambda(HypergraphSpec(blocks, c))


def test_block_names_switch_to_underscores_when_large():
    J = hypergraph_ideal(HypergraphSpec((10, 1), 1))
    assert J.context.names[0] == "x1_1" and J.context.names[10] == "x2_1"


def test_tetrahedral_examples():
    p = (1, 1, 1, 1, 1, 1)
    cubics = [tuple(0 if i == k else 1 for i in range(4)) for k in range(4)]
    assert set(tetrahedral_ideal(p).generators) == set(cubics)
    cond = tetrahedral_conditions(p)
    assert cond["ii"] and tetrahedral_is_acm(p) and tetrahedral_oracle(p)

    p = (1, 0, 0, 0, 0, 1)
    cond = tetrahedral_conditions(p)
    assert not any(cond[k] for k in ("i", "ii", "iii", "iv"))
    assert not tetrahedral_oracle(p)

    p = (2, 1, 1, 1, 1, 2)
    cond = tetrahedral_conditions(p)
    assert cond["iv"] and not cond["iii"] and not cond["ii"]
    assert tetrahedral_oracle(p)


def test_tetrahedral_validation():
    with pytest.raises(ValueError):
        TetrahedralExponents((0,) * 6)
    with pytest.raises(ValueError):
        TetrahedralExponents((1, 2, 3))
    assert TetrahedralExponents.parse("1,0,0,0,0,1").p == (1, 0, 0, 0, 0, 1)


def test_normalization_puts_max_on_first_pair():
    for p in product(range(3), repeat=6):
        if not any(p):
            continue
        q, sigma = TetrahedralExponents(p).normalized()
        assert q[0] + q[5] == max(q[0] + q[5], q[1] + q[4], q[2] + q[3])
        assert sorted(q) == sorted(p)


def test_permuted_matches_ideal_renaming():
    p = (1, 2, 0, 3, 1, 2)
    I = tetrahedral_ideal(p)
    for sigma in permutations(range(4)):
        renamed = MonomialIdeal(I.context, [tuple(g[sigma.index(v)] for v in range(4))
                                            for g in I.generators])
        assert renamed == tetrahedral_ideal(_permuted(p, sigma))


def test_opposite_pairs():
    for k, (u, v) in enumerate(PAIRS):
        assert set(PAIRS[5 - k]) == {0, 1, 2, 3} - {u, v}


def test_tetrahedral_sweep_small():
    for p in product(range(2), repeat=6):
        if any(p):
            assert tetrahedral_is_acm(p) == tetrahedral_oracle(p), p


def test_acm_is_invariant_under_relabeling():
    for p in [(2, 1, 0, 1, 2, 0), (0, 2, 1, 1, 0, 2), (1, 0, 2, 2, 0, 1)]:
        verdicts = {tetrahedral_is_acm(_permuted(p, s)) for s in permutations(range(4))}
        assert len(verdicts) == 1
        assert verdicts.pop() == tetrahedral_oracle(p)
