import pytest
from hypothesis import given
from hypothesis import strategies as st

from sympbranch.core import (
    ShapeError,
    SkewTableau,
    barred_alphabet,
    column_word,
    conjugate,
    contains,
    enumerate_ssyt,
    is_semistandard,
    is_skew_semistandard,
    is_stable,
    letter_rank,
    normalize_partition,
    partition_to_weight,
    row_word,
    shape_of,
    unbarred_alphabet,
    weight_to_partition,
    word_weight,
)


def test_normalize_partition_strips_zeros():
    assert normalize_partition([3, 2, 0, 0]) == (3, 2)
    assert normalize_partition(()) == ()


def test_normalize_partition_rejects_increase():
    with pytest.raises(ShapeError):
        normalize_partition([1, 2])
    with pytest.raises(ShapeError):
        normalize_partition([2, -1])


def test_conjugate():
    assert conjugate((4, 3, 2, 1)) == (4, 3, 2, 1)
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()


def test_contains():
    assert contains((4, 3, 2, 1), (3, 2, 1))
    assert not contains((2, 2), (3,))


def test_is_stable():
    assert is_stable((5, 2), 2)
    assert not is_stable((1, 1, 1), 2)


partitions = st.lists(st.integers(1, 6), max_size=4).map(
    lambda xs: tuple(sorted(xs, reverse=True)))


@given(partitions)
def test_partition_weight_round_trip(lam):
    weight = partition_to_weight(lam, len(lam) + 2)
    assert weight_to_partition(weight) == lam


def test_alphabets_and_ranks():
    assert unbarred_alphabet(3) == (1, 2, 3)
    assert barred_alphabet(2) == (1, 2, -2, -1)
    assert [letter_rank(x, 2) for x in barred_alphabet(2)] == [1, 2, 3, 4]


def test_column_word_known_value():
    # [[1,2,3],[3bar,2bar]] reads 3 2 2bar 1 3bar by columns right to left
    rows = ((1, 2, 3), (-3, -2))
    assert column_word(rows) == (3, 2, -2, 1, -3)
    assert row_word(rows) == (3, 2, 1, -2, -3)


def test_word_weight():
    assert word_weight((3, 2, -2, 1, -3), 3) == (1, 0, 0)
    assert word_weight((), 2) == (0, 0)


def test_shape_and_semistandard():
    rows = ((1, 1, 2), (2, 3))
    assert shape_of(rows) == (3, 2)
    assert is_semistandard(rows, unbarred_alphabet(3))
    assert not is_semistandard(((1, 1), (1,)), unbarred_alphabet(2))
    assert not is_semistandard(((2, 1),), unbarred_alphabet(2))


def test_enumerate_ssyt_counts():
    # dim of gl(2) irreducible (2,1) is 2
    assert len(enumerate_ssyt((2, 1), unbarred_alphabet(2))) == 2
    # hook content formula: shape (2,1), 3 letters -> 8
    assert len(enumerate_ssyt((2, 1), unbarred_alphabet(3))) == 8
    assert enumerate_ssyt((), unbarred_alphabet(2)) == ((),)


def test_enumerate_ssyt_barred():
    # shape (1), barred alphabet of rank n has 2n letters
    assert len(enumerate_ssyt((1,), barred_alphabet(2))) == 4


def test_skew_tableau_validation():
    skew = SkewTableau((3, 2), (1,), ((1, 1), (1, 2)))
    assert is_skew_semistandard(skew, unbarred_alphabet(3))
    bad = SkewTableau((3, 2), (1,), ((1, 1), (2, 1)))
    assert not is_skew_semistandard(bad, unbarred_alphabet(3))


def test_skew_column_word():
    skew = SkewTableau((3, 2), (1,), ((1, 1), (1, 2)))
    # columns right to left: col3: 1; col2: 1,2; col1: 1
    assert column_word(skew) == (1, 1, 2, 1)
