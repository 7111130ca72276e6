import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypocycloids.braid import (
    BraidError,
    BraidWord,
    FreeWord,
    LocalSingType,
    Presentation,
    braid_act,
    braid_action_welldefined,
    braid_automorphism,
    braid_equal,
    canonical_relator,
    format_word,
    free_reduce,
    local_braid,
    parse_word,
    substitute,
    zvk_presentation,
)


@st.composite
def braids(draw, d=None, max_len=30):
    d = d or draw(st.integers(2, 6))
    gens = [g for i in range(1, d) for g in (i, -i)]
    return BraidWord(d, tuple(draw(st.lists(st.sampled_from(gens), max_size=max_len))))


def words(d, max_len=12):
    gens = [g for i in range(1, d + 1) for g in (i, -i)]
    return st.lists(st.sampled_from(gens), max_size=max_len).map(lambda w: FreeWord(d, free_reduce(w)))


def rels_mod(p: Presentation, images):
    """Relator set after a substitution, up to cyclic rotation and inversion."""
    return {canonical_relator(substitute(r, images)) for r in p.rels} - {()}


def test_action_examples():
    s1 = BraidWord(2, (1,))
    assert braid_act(s1, (1,)).letters == (2,)
    assert braid_act(s1, (2,)).letters == (2, 1, -2)
    assert braid_act(s1, (2, 1)).letters == (2, 1)
    assert braid_act(BraidWord(2, (1, 1, 1)), (1,)).letters == (2, 1, 2, -1, -2)


def test_cusp_relation_from_cube():
    p = zvk_presentation([BraidWord(2, (1, 1, 1))], 2)
    # a1 a2 a1 = a2 a1 a2
    assert p.relator_set() == {canonical_relator((1, 2, 1, -2, -1, -2))}


def test_welldefined_and_alternative_reading():
    assert braid_action_welldefined(3)
    assert braid_action_welldefined(5)
    assert not braid_action_welldefined(3, "literal")
    top = (3, 2, 1)
    moved = [braid_act(BraidWord(3, (i,)), top, "literal").letters for i in (1, 2)]
    assert any(m != top for m in moved)


@pytest.mark.parametrize("d", range(2, 7))
def test_right_action_and_boundary(d):
    rng = random.Random(d)
    gens = [g for i in range(1, d) for g in (i, -i)]
    top = tuple(range(d, 0, -1))
    for _ in range(500):
        b1 = BraidWord(d, tuple(rng.choice(gens) for _ in range(rng.randint(0, 15))))
        b2 = BraidWord(d, tuple(rng.choice(gens) for _ in range(rng.randint(0, 15))))
        w = free_reduce(rng.choice(range(1, d + 1)) * rng.choice((1, -1)) for _ in range(rng.randint(0, 8)))
        assert braid_act(b1 * b2, w) == braid_act(b2, braid_act(b1, w))
        assert braid_act(b1, top).letters == top


@given(braids())
@settings(max_examples=200)
def test_boundary_fixed(beta):
    top = tuple(range(beta.d, 0, -1))
    assert braid_act(beta, top).letters == top


@given(st.data())
def test_action_is_automorphism(data):
    beta = data.draw(braids())
    u = data.draw(words(beta.d))
    v = data.draw(words(beta.d))
    assert braid_act(beta, u * v) == braid_act(beta, u) * braid_act(beta, v)
    assert braid_act(beta, u.inverse()) == braid_act(beta, u).inverse()
    assert braid_act(beta * beta.inverse(), u) == u


@given(braids(max_len=12))
def test_permutation_matches_action(beta):
    # a_j^beta is a conjugate of a_{perm(j)}
    imgs = braid_automorphism(beta)
    perm = beta.permutation()
    for j, w in enumerate(imgs):
        core = w[len(w) // 2]
        assert abs(core) == perm[j] + 1 and core > 0


def test_artin_relations_hold():
    assert braid_equal(BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2)))
    assert braid_equal(BraidWord(4, (1, 3)), BraidWord(4, (3, 1)))
    assert not braid_equal(BraidWord(3, (1, 2)), BraidWord(3, (2, 1)))


def test_local_catalog():
    assert local_braid(LocalSingType("node"), 2) == BraidWord(2, (1, 1))
    assert local_braid(LocalSingType("tangent", 2), 3) == BraidWord(3, (2,))
    assert local_braid(LocalSingType("cusp"), 2) == BraidWord(2, (1, 1, 1))
    assert local_braid(LocalSingType("cusp-tangent"), 3) == BraidWord(3, (2, 1, 2, 1))
    assert local_braid(LocalSingType("tacnode", m=3), 2) == BraidWord(2, (1,) * 6)
    with pytest.raises(BraidError):
        local_braid(LocalSingType("cusp-tangent", 2), 3)
    with pytest.raises(BraidError):
        local_braid(LocalSingType("node", 0), 2)


def test_five_relation_shapes():
    def rel(p):
        return p.relator_set()

    pres = lambda t, d: zvk_presentation([local_braid(t, d)], d)
    # tangent: a1 = a2
    assert rel(pres(LocalSingType("tangent"), 2)) == {canonical_relator((1, -2))}
    # node: [a1, a2] = 1
    assert rel(pres(LocalSingType("node"), 2)) == {canonical_relator((1, 2, -1, -2))}
    # cusp: a1 a2 a1 = a2 a1 a2
    assert rel(pres(LocalSingType("cusp"), 2)) == {canonical_relator((1, 2, 1, -2, -1, -2))}
    # tacnode of order m: (a1 a2)^m = (a2 a1)^m
    for m in (1, 2, 3, 4):
        want = canonical_relator((1, 2) * m + (-1, -2) * m)
        assert rel(pres(LocalSingType("tacnode", m=m), 2)) == {want}
    # cusp-tangent: a1 = a3 and a2 = a3 a2 a1 a2^-1 a1^-1
    p = pres(LocalSingType("cusp-tangent"), 3)
    want = Presentation(p.gens, ((1, -3), (-2, 3, 2, 1, -2, -1)))
    assert canonical_relator((1, -3)) in p.relator_set()
    collapse = [(1,), (2,), (1,)]
    assert rels_mod(p, collapse) == rels_mod(want, collapse)


def test_zvk_examples():
    p = zvk_presentation([BraidWord(2, (1,))], 2)
    assert p.relator_set() == {canonical_relator((1, -2))}
    assert zvk_presentation([], 3).rels == ()


@given(braids(d=3, max_len=10), st.integers(0, 10), st.integers(1, 2))
def test_zvk_ignores_unreduced_input(beta, pos, g):
    w = list(beta.letters)
    pos = min(pos, len(w))
    padded = BraidWord(3, tuple(w[:pos] + [g, -g] + w[pos:]))
    assert zvk_presentation([padded], 3).relator_set() == zvk_presentation([beta], 3).relator_set()


def test_rank_errors():
    with pytest.raises(BraidError):
        BraidWord(2, (2,))
    with pytest.raises(BraidError):
        braid_act(BraidWord(2, (1,)), (3,))
    with pytest.raises(BraidError):
        Presentation(("a", "a"), ())


@given(braids())
def test_braid_json_roundtrip(beta):
    assert BraidWord.from_json(beta.d, beta.to_json()) == beta


@given(st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=10))
def test_word_format_roundtrip(w):
    gens = ["a", "x", "b"]
    w = free_reduce(w)
    assert parse_word(format_word(w, gens), gens) == w


@given(st.lists(st.lists(st.sampled_from([1, -1, 2, -2]), max_size=6), max_size=4))
def test_presentation_json_roundtrip(rels):
    p = Presentation(("a", "b"), tuple(tuple(r) for r in rels))
    assert Presentation.from_json(p.to_json()) == p
