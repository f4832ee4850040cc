import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from meyer.errors import GenusTooSmall, ParseError
from meyer.symplectic import SpElement, is_symplectic
from meyer.words import (CHAIN_CLASSES, S1_BLOCKS, Generator, Word, derive_chain_classes,
                         evaluate_handlebody_word, evaluate_word, expand, generator_matrix,
                         parse_word, transvection, twist_letters, twist_matrix)


class TestParser:
    def test_canonical_print(self):
        assert str(parse_word("t1^3   s1")) == "t1^3 s1"
        assert str(parse_word("t1*s1^-2*r1")) == "t1 s1^-2 r1"
        assert str(parse_word("t2^+1")) == "t2"

    def test_empty_word(self):
        w = parse_word("   ")
        assert len(w) == 0 and str(w) == ""
        assert evaluate_word(w, 2).is_identity()

    @pytest.mark.parametrize("text, offset", [
        ("t1^^2", 3), ("t4", 0), ("t1 x1", 3), ("t1s1", 2), ("t1 *", 4), ("s1^0", 3), ("t1^", 3),
    ])
    def test_errors_carry_offset(self, text, offset):
        with pytest.raises(ParseError) as info:
            parse_word(text)
        assert info.value.position == offset
        assert f"offset {offset}" in str(info.value)

    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.tuples(st.sampled_from(list(Generator)),
                              st.integers(-20, 20).filter(bool)), max_size=10))
    def test_roundtrip(self, letters):
        w = Word(tuple(letters))
        assert parse_word(str(w)) == w

    def test_inverse_word(self):
        w = parse_word("t1^2 s1 r1^-1")
        assert str(w.inverse()) == "r1 s1^-1 t1^-2"
        assert (evaluate_word(w, 2) @ evaluate_word(w.inverse(), 2)).is_identity()


class TestChainClasses:
    def test_search_reproduces_constant(self):
        assert derive_chain_classes() == CHAIN_CLASSES
        assert CHAIN_CLASSES.violations() == []

    def test_s1_blocks_reproduced(self):
        a = evaluate_handlebody_word("s1", 2)
        p, q, s = S1_BLOCKS
        assert a.P.tolist() == [list(r) for r in p]
        assert a.Q.tolist() == [list(r) for r in q]
        assert a.S.tolist() == [list(r) for r in s]

    def test_r1_is_handlebody(self):
        for g in (2, 3, 5):
            evaluate_handlebody_word("r1", g)

    def test_braid_relations(self):
        # adjacent chain twists satisfy aba = bab, disjoint ones commute
        t1, t2, t3 = (twist_matrix(i, 3) for i in (1, 2, 3))
        assert t1 @ t2 @ t1 == t2 @ t1 @ t2
        assert t2 @ t3 @ t2 == t3 @ t2 @ t3
        assert t1 @ t3 == t3 @ t1


def test_transvection_action():
    c = (1, 0)
    t = transvection(c, 1)
    assert t.matrix.tolist() == [[1, 1], [0, 1]]
    assert isinstance(t, SpElement) and is_symplectic(t.matrix, 1)


def test_expand_and_letters():
    assert str(expand("s1")) == "t2 t3 t1 t2"
    assert str(expand("r1")) == "t2^-1 t3^-1 t1 t2"
    assert twist_letters("s1^-1") == [(2, -1), (1, -1), (3, -1), (2, -1)]
    assert twist_letters("t1^3") == [(1, 1)] * 3


def test_genus_one_only_has_first_twist():
    assert generator_matrix("t1", 1).matrix.tolist() == [[1, 1], [0, 1]]
    for gen in ("t2", "t3", "s1", "r1"):
        with pytest.raises(GenusTooSmall):
            generator_matrix(gen, 1)


def test_twists_stabilize():
    small, big = twist_matrix(2, 2), twist_matrix(2, 4)
    assert big.matrix[0, 0] == small.matrix[0, 0]
    assert big.matrix[3, 7] == 0 and big.matrix[3, 3] == 1
