import random

import pytest
from hypothesis import given, settings, strategies as st

from loopbraid.braidword import BraidWord, Generator, induced_permutation, parse_word, random_word
from loopbraid.chains import (
    ChainMatrix,
    ConjAutomorphism,
    FreeWord,
    GroupRingElement,
    NotConjugating,
    abelianize,
    aut_of_generator,
    aut_of_word,
    chain_matrix_of_word,
    compose_aut,
    fox_derivative,
    fox_jacobian,
    free_reduce,
    verify_aut_relations,
    verify_chain_relations,
)
from loopbraid.laurent import LaurentPolynomial as LP
from loopbraid.rep import RepKind, rep_of_word, word_nu


def words(n_max=4, len_max=6):
    return st.tuples(st.integers(2, n_max), st.integers(0, len_max), st.integers(0, 2**32)).map(
        lambda t: random_word(random.Random(t[2]), t[0], t[1]))


def free_words(n=3, max_len=8):
    letters = st.sampled_from([x for i in range(1, n + 1) for x in (i, -i)])
    return st.lists(letters, max_size=max_len).map(lambda ls: FreeWord(n, tuple(ls)))


def test_free_reduce():
    assert free_reduce([1, 2, -2, -1, 3]) == (3,)
    assert FreeWord(2, (1, -1)).letters == ()


def test_generator_automorphisms():
    a = aut_of_generator(Generator.sigma(1), 2)
    assert a.images == ((1, 2, -1), (1,))
    b = aut_of_generator(Generator.sigma(1, -1), 2)
    assert b.images == ((2,), (-2, 1, 2))
    assert compose_aut(a, b) == ConjAutomorphism.identity(2)
    assert aut_of_generator(Generator.rho(1), 2).images == ((2,), (1,))


def test_not_conjugating_rejected():
    with pytest.raises(NotConjugating):
        ConjAutomorphism(2, [(1, 2), (2,)])
    with pytest.raises(NotConjugating):
        ConjAutomorphism(2, [(1,), (1,)])


def test_fox_examples():
    # d(x1 x2 x1^-1)/dx1 = 1 - x1 x2 x1^-1 ; d/dx2 = x1
    u = FreeWord(2, (1, 2, -1))
    assert fox_derivative(u, 1) == GroupRingElement(2, {(): 1, (1, 2, -1): -1})
    assert fox_derivative(u, 2) == GroupRingElement(2, {(1,): 1})


def test_abelianize_example():
    e = GroupRingElement(2, {(1, 2, -1): 3, (-2,): -1})
    assert abelianize(e) == LP(2, {(0, 1): 3, (0, -1): -1})


def test_jacobian_of_sigma_is_r_block():
    J = fox_jacobian(aut_of_generator(Generator.sigma(1), 2)).abelianize()
    assert J.to_lists() == [["1 - a2", "a1"], ["1", "0"]]


def test_aut_perm_matches_braid_perm():
    w = parse_word("s1 r2 s3' s1", 4)
    assert aut_of_word(w).perm == induced_permutation(w)


@pytest.mark.parametrize("n", range(2, 6))
def test_chain_relations(n):
    checks = verify_chain_relations(n) + verify_aut_relations(n)
    assert checks and all(c.holds for c in checks)


@settings(max_examples=300, deadline=None)
@given(free_words())
def test_fox_fundamental_identity(u):
    # sum_i (du/dx_i)(x_i - 1) = u - 1
    n = u.n
    acc = GroupRingElement.zero(n)
    for i in range(1, n + 1):
        acc = acc + fox_derivative(u, i) * (GroupRingElement.word((i,), n) - 1)
    assert acc == GroupRingElement.word(u.letters, n) - 1


@settings(max_examples=300, deadline=None)
@given(free_words(), free_words())
def test_fox_product_rule(u, v):
    for i in (1, 2, 3):
        lhs = fox_derivative(u * v, i)
        rhs = fox_derivative(u, i) + GroupRingElement.word(u.letters, 3) * fox_derivative(v, i)
        assert lhs == rhs


@settings(max_examples=200, deadline=None)
@given(words(), words())
def test_composition_is_conjugating(w, v):
    v = BraidWord(w.n, tuple(g for g in v.gens if g.index < w.n))
    a = compose_aut(aut_of_word(w), aut_of_word(v))
    assert a == aut_of_word(w * v)
    assert a.perm == induced_permutation(w * v)


@settings(max_examples=200, deadline=None)
@given(words(), free_words(4))
def test_automorphism_is_homomorphism(w, u):
    u = FreeWord(w.n, tuple(x for x in u.letters if abs(x) <= w.n))
    a = aut_of_word(w)
    v = FreeWord(w.n, (1,))
    assert a(u * v) == a(u) * a(v)


@settings(max_examples=200, deadline=None)
@given(words())
def test_abelianized_chains_match_reps(w):
    assert chain_matrix_of_word(1, w).abelianize() == rep_of_word(RepKind.R, w)
    assert chain_matrix_of_word(2, w).abelianize() == rep_of_word(RepKind.RBAR, w)


@settings(max_examples=200, deadline=None)
@given(words(len_max=5))
def test_jacobian_equals_a1(w):
    assert fox_jacobian(aut_of_word(w)) == chain_matrix_of_word(1, w)


@settings(max_examples=200, deadline=None)
@given(words(), free_words(4))
def test_abelianize_intertwines_twist(w, u):
    # Ab(phi(u)) = nu(w)(Ab(u)) for the automorphism phi of w
    u = FreeWord(w.n, tuple(x for x in u.letters if abs(x) <= w.n))
    e = GroupRingElement.word(u.letters, w.n) + 2
    assert abelianize(aut_of_word(w)(e)) == word_nu(w)(abelianize(e))


def test_identity_chain_matrix():
    w = BraidWord.identity(3)
    assert chain_matrix_of_word(1, w) == ChainMatrix.identity(3)
