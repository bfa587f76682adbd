import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import dotted_compositions, set_supercompositions, superpermutations
from superhopf.combinat import (
    Bidegree,
    DottedComposition,
    InvalidIndexError,
    ParseError,
    SetSupercomposition,
    alpha_of,
    bidegree,
    canonical_block_lift,
    gamma_of,
    global_descents,
    inversions,
    is_set_superpartition,
    is_superpermutation,
    lift,
    parse_dotted,
    parse_index,
    parse_supercomposition,
    set_superpartitions,
    set_supercompositions as all_supercompositions,
    shift,
    standardize,
    superpermutations as all_superpermutations,
    w_of,
)

P = parse_index


def test_bidegree():
    assert bidegree(P("{0,1,3}|{4}|{0}|{0,2}")) == Bidegree(4, 3)
    assert bidegree(P("e")) == (0, 0)
    assert bidegree(P("{1,2}")) == (2, 0)
    assert P("{0,1,3}|{4}|{0}|{0,2}").parity == 1


def test_shift():
    assert str(shift(P("{0,2}|{1}"), 3)) == "{0,5}|{4}"
    assert str(shift(P("{0,1,3}|{2}"), 2)) == "{0,3,5}|{4}"
    I = P("{0,1}|{2}")
    assert shift(I, 0) == I


def test_standardize():
    assert str(standardize([{0, 6}, {3}, {0, 4, 5}])) == "{0,4}|{1}|{0,2,3}"
    assert str(standardize(P("{1}|{2}"))) == "{1}|{2}"
    assert str(standardize([{0}])) == "{0}"
    with pytest.raises(InvalidIndexError):
        standardize([{1, 2}, {2}])


def test_alpha_gamma_word():
    assert str(alpha_of(P("{0}|{3,5}|{0,2,4}|{0,1}"))) == "(.0,2,.2,.1)"
    assert str(alpha_of(P("e"))) == "e"
    assert str(alpha_of(P("{1,2}"))) == "(2)"
    assert str(gamma_of(P("{0,4,8}|{2}|{5}|{3}|{0}|{6}|{1}|{7}"))) == "(.2,2,1,.0,1,2)"
    assert str(gamma_of(P("{1}"))) == "(1)"
    assert str(gamma_of(P("{2}|{1}"))) == "(1,1)"
    assert w_of(P("{3}|{0,1,5}|{4}|{0}|{2}")) == (3, 1, 5, 4, 2)
    assert w_of(P("{1}|{2}|{3}")) == (1, 2, 3)
    assert w_of(P("{0}")) == ()


def test_gamma_rejects_non_superpermutation():
    with pytest.raises(InvalidIndexError):
        gamma_of(P("{1,2}"))


def test_repeated_element_is_rejected():
    # an element shared by two blocks breaks the disjointness axiom
    with pytest.raises(InvalidIndexError, match="repeated"):
        P("{0,4,5}|{1}|{3}|{2}|{0}|{7}|{5}|{6}")


def test_global_descents():
    assert global_descents(P("{0,6}|{3}|{0,4,5}|{1}|{2}")) == [0, 1, 3, 5]
    assert global_descents(P("{1}|{2}")) == [0, 2]
    assert global_descents(P("{2}|{1}")) == [0, 1, 2]


def test_lift_examples():
    assert str(lift(P("(2,.1)"))) == "{1}|{2}|{0,3}"
    assert lift(P("()")) == SetSupercomposition()
    assert str(lift(P("(1,1)"))) == "{2}|{1}"
    assert str(canonical_block_lift(P("(2,.1)"))) == "{1,2}|{0,3}"


@pytest.mark.parametrize("size", range(7))
def test_lift_roundtrip_exhaustive(size):
    from superhopf.combinat import dotted_compositions as all_dotted

    for alpha in all_dotted(size):
        I = lift(alpha)
        assert is_superpermutation(I)
        assert gamma_of(I) == alpha
        assert alpha_of(canonical_block_lift(alpha)) == alpha


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_supercomposition("{1,2|{3}")
    assert err.value.position == 4
    with pytest.raises(ParseError):
        parse_dotted("(1,.x)")
    with pytest.raises(InvalidIndexError, match="repeated"):
        P("{1,2}|{2,3}")
    with pytest.raises(InvalidIndexError):
        P("{1}|{3}")


def test_parse_forms():
    assert P("e") == SetSupercomposition()
    assert parse_dotted("e") == parse_dotted("()") == DottedComposition()
    assert parse_supercomposition("({0,1,3},{4},{0},{0,2})") == P("{0,1,3}|{4}|{0}|{0,2}")
    assert str(parse_dotted("(1,2,.0,1,.3,3)")) == "(1,2,.0,1,.3,3)"
    assert str(parse_dotted("e")) == "e"
    assert isinstance(P("(1,.0)"), DottedComposition)
    assert isinstance(P("{1}"), SetSupercomposition)


def test_superpartition_predicate():
    assert is_set_superpartition(P("{0,2,4}|{0,3}|{1}"))
    assert not is_set_superpartition(P("{0,3}|{0,2,4}|{1}"))
    assert not is_set_superpartition(P("{1}|{0,2}"))
    assert not is_set_superpartition(P("{0}|{0}"))


def test_enumeration_counts():
    # ordered set partitions of [3] number 13; with one zero block inserted
    # anywhere or one block made fermionic
    assert len(list(all_supercompositions(3, 0))) == 13
    assert len(list(all_superpermutations(3, 0))) == 6
    assert len(list(all_supercompositions(0, 2))) == 1
    assert all(is_set_superpartition(I) for I in set_superpartitions(3, 1))


def test_inversions_are_position_pairs():
    assert inversions((3, 1, 2)) == frozenset({(1, 2), (1, 3)})


@given(set_supercompositions(), st.integers(0, 5))
def test_shift_and_standardize(I, n):
    assert alpha_of(shift(I, n)) == alpha_of(I)
    assert standardize(shift(I, n)) == I
    assert standardize(standardize(I)) == standardize(I)


@given(set_supercompositions())
def test_roundtrip_text(I):
    assert P(str(I)) == I


@given(dotted_compositions())
def test_roundtrip_dotted(alpha):
    assert parse_dotted(str(alpha)) == alpha


@given(superpermutations(), st.data())
def test_gamma_on_subsequences(I, data):
    keep = data.draw(st.lists(st.booleans(), min_size=len(I), max_size=len(I)))
    sub = standardize([b for b, k in zip(I.blocks, keep) if k])
    assert is_superpermutation(sub)
    gamma = gamma_of(sub)
    assert (gamma.n, gamma.m) == (sub.n, sub.m)
    assert gamma_of(shift(I, 3)) == gamma_of(I)


@settings(max_examples=50)
@given(superpermutations())
def test_word_injective_on_fiber(I):
    from superhopf.posets import weak_fiber

    fiber = weak_fiber(alpha_of(I))
    assert len({w_of(J) for J in fiber}) == len(fiber)
