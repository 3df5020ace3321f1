import random

import pytest
from hypothesis import given, settings, strategies as st

from loopbraid.braidword import (
    BraidWord,
    Generator,
    IndexOutOfRange,
    Kind,
    Perm,
    WordSyntaxError,
    all_words,
    cycle_decomposition,
    induced_permutation,
    inverse_word,
    mirror_reverse,
    parse_word,
    random_word,
    relations,
    render_word,
)

s, r = Generator.sigma, Generator.rho


def words(n_max=5, len_max=8):
    return st.tuples(st.integers(2, n_max), st.integers(0, len_max), st.integers(0, 2**32)).map(
        lambda t: random_word(random.Random(t[2]), t[0], t[1]))


def test_parse_forms():
    w = parse_word("s1 s2' r1 σ3^-1 ρ2 s1^2", 4)
    assert w.gens == (s(1), s(2, -1), r(1), s(3, -1), r(2), s(1), s(1))


def test_parse_empty_and_separators():
    assert parse_word("", 3).gens == ()
    assert parse_word("s1s2 r1", 3) == parse_word("s1 s2 r1", 3)
    with pytest.raises(WordSyntaxError):
        parse_word("s1,s2", 3)


def test_rho_inverse_is_rho():
    assert parse_word("r1'", 2) == parse_word("r1", 2)
    assert parse_word("r1^-3", 2) == parse_word("r1 r1 r1", 2)


def test_syntax_error_names_token():
    with pytest.raises(WordSyntaxError) as e:
        parse_word("s1 x2", 3)
    assert e.value.position == 3
    assert "x" in str(e.value)


def test_index_out_of_range():
    with pytest.raises(IndexOutOfRange) as e:
        parse_word("s1 s4", 4)
    assert e.value.token == "s4"
    # the grammar requires a nonzero index, so s0 is a syntax error
    with pytest.raises(WordSyntaxError):
        parse_word("s0", 3)


def test_render_round_trip_example():
    w = parse_word("s1 s2' r1", 3)
    assert parse_word(render_word(w), 3) == w


def test_induced_permutation_leftmost_first():
    # s1 then s2: circle 1 -> 2 -> 3
    p = induced_permutation(parse_word("s1 s2", 3))
    assert (p(1), p(2), p(3)) == (3, 1, 2)


def test_cycle_decomposition_example():
    cd = cycle_decomposition(induced_permutation(parse_word("s1 s3", 4)))
    assert cd.cycles == ((1, 2), (3, 4))
    assert cd.assignment() == (1, 1, 2, 2)
    cd = cycle_decomposition(Perm.identity(3))
    assert cd.m == 3


def test_perm_str_cycle_notation():
    assert str(induced_permutation(parse_word("s1 s2", 3))) in {"(1 3 2)", "(1,3,2)"}


def test_relation_counts():
    # n=4: I 2, II 2 (ordered far pairs), III 2, IV 2, V 3, VI 2, VII 2, VIII 2
    fams = [rel.family for rel in relations(4)]
    assert {f: fams.count(f) for f in set(fams)} == {
        "I": 2, "II": 2, "III": 2, "IV": 2, "V": 3, "VI": 2, "VII": 2, "VIII": 2}
    assert len(relations(2)) == 1


def test_all_words_count():
    assert sum(1 for _ in all_words(3, 2)) == 1 + 6 + 36
    assert sum(1 for _ in all_words(2, 3, signed=False)) == 1 + 2 + 4 + 8


@settings(max_examples=300, deadline=None)
@given(words())
def test_render_parse_round_trip(w):
    assert parse_word(render_word(w), w.n) == w


@settings(max_examples=300, deadline=None)
@given(words(), words())
def test_permutation_is_homomorphism(w, v):
    if w.n != v.n:
        v = BraidWord(w.n, tuple(g for g in v.gens if g.index < w.n))
    assert induced_permutation(w * v) == induced_permutation(w).then(induced_permutation(v))


@settings(max_examples=300, deadline=None)
@given(words())
def test_inverse_word_inverts_permutation(w):
    assert (w * inverse_word(w)).n == w.n
    assert induced_permutation(w * inverse_word(w)).is_identity()


@settings(max_examples=300, deadline=None)
@given(words())
def test_mirror_reverse_involution(w):
    assert mirror_reverse(mirror_reverse(w)) == w
    assert len(mirror_reverse(w)) == len(w)


@settings(max_examples=200, deadline=None)
@given(words())
def test_cycles_partition_circles(w):
    cd = cycle_decomposition(induced_permutation(w))
    flat = sorted(c for cyc in cd.cycles for c in cyc)
    assert flat == list(range(1, w.n + 1))
    assert sum(cd.lengths()) == w.n


def test_random_word_kinds():
    w = random_word(random.Random(1), 4, 30, kinds=(Kind.RHO,))
    assert all(g.kind is Kind.RHO for g in w.gens)
