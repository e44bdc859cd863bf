import pytest

from sympbranch.burge import (
    ArrayError,
    array_to_even_tableau,
    column_insert,
    even_tableau_to_array,
    is_even_shape,
    is_standard,
    iter_special_arrays,
    validate_special_array,
)


def test_validate_special_array():
    validate_special_array((3, 10), (1, 6))
    with pytest.raises(ArrayError):
        validate_special_array((3, 2), (1, 1))  # top not increasing
    with pytest.raises(ArrayError):
        validate_special_array((3,), (5,))  # top must exceed bottom
    with pytest.raises(ArrayError):
        validate_special_array((3, 5), (1, 3))  # repeated entry


def test_is_standard():
    assert is_standard(((1, 3), (2, 4)))
    assert not is_standard(((2, 1),))
    assert not is_standard(((1, 2), (2, 3)))


def test_is_even_shape():
    assert is_even_shape((2, 2))
    assert is_even_shape((2, 2, 1, 1))
    assert not is_even_shape((2, 1))
    assert is_even_shape(())


def test_column_insert_displaces_topmost_greater():
    # inserting 2 into column holding 1,3 displaces the 3
    rows = column_insert(((1,), (3,)), 2)
    assert rows == ((1, 3), (2,))


def test_known_even_tableaux():
    assert array_to_even_tableau((6, 10), (1, 3)) == ((1, 3), (6, 10))
    assert array_to_even_tableau((3, 10), (1, 6)) == ((1, 6), (3, 10))
    assert array_to_even_tableau((6, 10), (3, 1)) == ((1,), (3,), (6,), (10,))


def test_empty_array():
    assert array_to_even_tableau((), ()) == ()
    assert even_tableau_to_array(()) == ((), ())


def test_round_trip_small():
    for top, bottom in iter_special_arrays(range(1, 9), 3):
        tab = array_to_even_tableau(top, bottom)
        assert is_even_shape(tuple(len(r) for r in tab))
        assert even_tableau_to_array(tab) == (top, bottom)


def test_inverse_rejects_non_even_shape():
    with pytest.raises(Exception):
        even_tableau_to_array(((1, 2), (3,)))


def test_iter_special_arrays_count():
    # 2r-subsets times perfect matchings: 1 + C(4,2) + C(4,4)*3 = 10
    arrays = list(iter_special_arrays(range(1, 5), 2))
    assert len(arrays) == 10
    assert len(set(arrays)) == 10
