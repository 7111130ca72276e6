import itertools
import json
import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from hypocycloids.braid import Presentation, canonical_relator, parse_word
from hypocycloids.cli import run_pipeline
from hypocycloids.groups import (
    Abelianization,
    ArtinGraph,
    FiniteQuotientMap,
    GroupError,
    MAX_LOW_INDEX,
    abelianization,
    add_relations,
    artin_presentation,
    first_difference,
    kernel_presentation,
    low_index_subgroups,
    match_artin_graph,
    smith_diagonal,
    tietze_simplify,
)

from oracles import smith_invariants, subgroup_class_counts, subgroup_count_by_hall


def pres(gens, *rels):
    gens = tuple(gens.split())
    return Presentation(gens, tuple(parse_word(r, gens) for r in rels))


def random_graph(rng, n):
    vs = [f"v{i}" for i in range(n)]
    pairs = [p for p in itertools.combinations(vs, 2) if rng.random() < 0.5]
    return ArtinGraph.from_pairs(vs, pairs)


def test_artin_examples():
    b3 = artin_presentation(ArtinGraph.path(2, ("s", "t")))
    assert b3 == pres("s t", "s t s t^-1 s^-1 t^-1")
    k3 = artin_presentation(ArtinGraph.cycle(3, ("a", "b", "c")))
    assert k3 == pres("a b c", "a b a b^-1 a^-1 b^-1", "b c b c^-1 b^-1 c^-1", "a c a c^-1 a^-1 c^-1")
    z2 = artin_presentation(ArtinGraph.from_pairs(("s", "t"), []))
    assert z2 == pres("s t", "s t s^-1 t^-1")
    assert abelianization(z2) == Abelianization(2, ())


def test_graph_invariants():
    with pytest.raises(GroupError):
        ArtinGraph.from_pairs(("a", "b"), [("a", "a")])
    with pytest.raises(GroupError):
        ArtinGraph.from_pairs(("a", "a"), [])
    with pytest.raises(GroupError):
        ArtinGraph.from_pairs(("a", "b"), [("a", "c")])
    assert ArtinGraph.cycle(5).shape() == "cycle(5)"
    assert ArtinGraph.path(5).shape() == "path(5)"
    assert not ArtinGraph.path(3).is_cycle()


def test_match_roundtrip_random_graphs():
    rng = random.Random(2024)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 8))
        assert match_artin_graph(artin_presentation(g)) == g


def test_match_examples():
    assert match_artin_graph(pres("a b", "a b a b b^-1 a^-1 b^-1 a^-1")) is None
    # the same pair constrained twice is not an Artin presentation
    assert match_artin_graph(pres("a b", "a b a^-1 b^-1", "a b a b^-1 a^-1 b^-1")) is None
    # a missing pair is not one either
    assert match_artin_graph(pres("a b c", "a b a^-1 b^-1", "a c a^-1 c^-1")) is None


def test_add_relations():
    p = pres("a x b", "a b a b^-1 a^-1 b^-1")
    q = add_relations(p, ["x x"])
    assert canonical_relator((2, 2)) in q.relator_set()
    assert add_relations(p, ["b a b a^-1 b^-1 a^-1"]).relator_set() == p.relator_set()
    with pytest.raises(GroupError):
        add_relations(p, ["z"])
    with pytest.raises(GroupError):
        add_relations(p, [(4,)])


def test_kernel_trivial_example():
    rho = FiniteQuotientMap.abelian(pres("x", "x x"), [2], [(1,)])
    k = kernel_presentation(rho)
    s = tietze_simplify(k.presentation).presentation
    assert s.rank == 0 and s.rels == ()


def test_invalid_map_rejected():
    with pytest.raises(GroupError, match="invalid"):
        FiniteQuotientMap.abelian(pres("x", "x x x"), [2], [(1,)])
    with pytest.raises(GroupError):
        FiniteQuotientMap.abelian(pres("x y"), [2], [(1,)])
    with pytest.raises(GroupError):
        FiniteQuotientMap.permutations(pres("x"), 3, [(0, 0, 1)])


def test_not_onto_rejected():
    rho = FiniteQuotientMap.abelian(pres("x y"), [2, 2], [(1, 0), (1, 0)])
    assert not rho.onto()
    with pytest.raises(GroupError, match="onto"):
        kernel_presentation(rho)


def test_deltoid_kernel():
    res = run_pipeline("deltoid")
    k = res.kernel
    # Schreier count before pruning: index * gens - index + 1
    assert k.presentation.rank == k.index * res.group.rank - k.index + 1
    assert k.euler_balance() == k.index * (res.group.rank - len(res.group.rels) - 1) + 1
    s = res.simplified.presentation
    assert s.gens == ("a", "b", "xaX")
    assert match_artin_graph(s).shape() == "cycle(3)"


@given(st.integers(1, 3), st.lists(st.lists(st.sampled_from([1, -1, 2, -2]), min_size=1, max_size=6),
                                      min_size=1, max_size=3))
@settings(max_examples=40)
def test_euler_bookkeeping(order, rels):
    # map both generators of a two-generator group onto Z/order, when that is consistent
    p = Presentation(("a", "b"), tuple(tuple(r) for r in rels))
    try:
        rho = FiniteQuotientMap.abelian(p, [order], [(1,), (0,)])
    except GroupError:
        return
    k = kernel_presentation(rho)
    assert k.index == order
    assert k.presentation.rank == order * 2 - order + 1
    assert len(k.raw_relators) == order * len(p.rels)


def test_tietze_examples():
    r = tietze_simplify(pres("a b", "b a^-1 a^-1"))
    assert r.complete and r.presentation.gens == ("a",) and r.presentation.rels == ()
    r = tietze_simplify(pres("a b", "a b a b^-1 a^-1 b^-1"), budget=0)
    assert not r.complete


@given(st.lists(st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=7), max_size=4))
@settings(max_examples=80)
def test_tietze_preserves_abelianization(rels):
    p = Presentation(("a", "b", "c"), tuple(tuple(r) for r in rels))
    assert abelianization(tietze_simplify(p).presentation) == abelianization(p)


def test_abelianization_examples():
    assert abelianization(artin_presentation(ArtinGraph.cycle(3))) == Abelianization(1, ())
    assert abelianization(pres("x", "x x")) == Abelianization(0, (2,))
    assert str(abelianization(artin_presentation(ArtinGraph.cycle(8)))) == "Z"
    assert str(abelianization(pres("x y", "x x", "y y y"))) == "Z/6"
    assert str(abelianization(pres("x"))) == "Z"


@given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), max_size=4))
def test_smith_against_sympy(rows):
    assert [d for d in smith_diagonal(rows, 3) if d] == smith_invariants(rows, 3)


def test_low_index_examples():
    assert low_index_subgroups(pres("t"), 5) == [1, 1, 1, 1, 1]
    b3 = artin_presentation(ArtinGraph.path(2))
    assert low_index_subgroups(b3, 2) == [1, 1]
    with pytest.raises(GroupError, match="guard"):
        low_index_subgroups(b3, MAX_LOW_INDEX + 1)


@pytest.mark.parametrize("p", [
    artin_presentation(ArtinGraph.path(2)),
    artin_presentation(ArtinGraph.cycle(3)),
    artin_presentation(ArtinGraph.from_pairs(("a", "b"), [])),
    pres("a b", "a a", "b b b", "a b a b"),
    pres("a b", "a b a b^-1 a^-1 b^-1 a^-1 b^-1"),
])
def test_low_index_vs_permutation_oracle(p):
    counts = low_index_subgroups(p, 4)
    assert counts == [subgroup_class_counts(p, n) for n in range(1, 5)]


def test_low_index_not_up_to_conjugacy_sanity():
    # S3 = <a,b | a^2, b^3, (ab)^2>: index 3 has three conjugate subgroups, one class
    s3 = pres("a b", "a a", "b b b", "a b a b")
    assert subgroup_count_by_hall(s3, 3) == 3
    assert low_index_subgroups(s3, 3)[2] == 1


@given(st.lists(st.lists(st.sampled_from([1, -1, 2, -2]), max_size=6), max_size=3))
@settings(max_examples=40)
def test_index_one_is_one(rels):
    p = Presentation(("a", "b"), tuple(tuple(r) for r in rels))
    assert low_index_subgroups(p, 1) == [1]


def test_first_difference():
    assert first_difference([1, 2, 3], [1, 2, 4]) == 3
    assert first_difference([1, 2], [1, 2]) is None


def test_json_roundtrips():
    g = ArtinGraph.cycle(4, "abcd")
    assert ArtinGraph.from_json(json.loads(json.dumps(g.to_json()))) == g
    rho = FiniteQuotientMap.abelian(pres("a x", "x x"), [2], [(0,), (1,)])
    back = FiniteQuotientMap.from_json(json.loads(json.dumps(rho.to_json())))
    assert back.images == rho.images and back.source == rho.source
    perm = FiniteQuotientMap.permutations(pres("a"), 3, [(1, 2, 0)])
    assert FiniteQuotientMap.from_json(perm.to_json()).images == perm.images


@given(st.integers(1, 6), st.randoms(use_true_random=False))
def test_graph_json_property(n, rng):
    g = random_graph(rng, n)
    assert ArtinGraph.from_json(g.to_json()) == g


def test_smith_matches_sympy_on_artin_octagon():
    p = artin_presentation(ArtinGraph.cycle(8))
    rows = [[r.count(i) - r.count(-i) for i in range(1, 9)] for r in p.rels]
    m = sympy.Matrix(rows)
    assert m.rank() == 7
    assert abelianization(p) == Abelianization(1, ())
