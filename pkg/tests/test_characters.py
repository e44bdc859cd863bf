import pytest

from sympbranch.characters import (
    CharacterError,
    bialternant_check,
    branch_by_character,
    is_weyl_symmetric,
    restricted_character,
    schur_character,
    sp_dominant_multiplicities,
    sp_weight_multiplicities,
    weyl_dim_sl,
    weyl_dim_sp,
)


def test_weyl_dim_sl():
    assert weyl_dim_sl((), 3) == 1
    assert weyl_dim_sl((1,), 4) == 4
    assert weyl_dim_sl((2, 1), 4) == 20
    # agrees with the SSYT count for shape (4,3,2,1) over 6 letters
    assert weyl_dim_sl((4, 3, 2, 1), 6) == 8064
    assert weyl_dim_sl((1, 1, 1), 2) == 0


def test_weyl_dim_sp():
    assert weyl_dim_sp((), 2) == 1
    assert weyl_dim_sp((1,), 2) == 4
    assert weyl_dim_sp((2, 1), 2) == 16
    assert weyl_dim_sp((1, 1), 2) == 5
    assert weyl_dim_sp((2,), 2) == 10  # adjoint of sp(4)


def test_small_example_dimension_check():
    assert weyl_dim_sp((2, 1), 2) + weyl_dim_sp((1,), 2) == weyl_dim_sl((2, 1), 4)


def test_schur_character_mass():
    char = schur_character((2, 1), 3)
    assert sum(char.values()) == weyl_dim_sl((2, 1), 3)
    assert char[(2, 1, 0)] == 1
    assert char[(1, 1, 1)] == 2


def test_bialternant():
    for lam in [(), (1,), (2,), (2, 1), (3, 1), (2, 2)]:
        assert bialternant_check(lam, 3)


def test_sp_weight_multiplicities():
    full = sp_weight_multiplicities((1,), 2)
    assert full == {(1, 0): 1, (-1, 0): 1, (0, 1): 1, (0, -1): 1}
    adjoint = sp_weight_multiplicities((2,), 2)
    assert adjoint[(0, 0)] == 2
    assert sum(adjoint.values()) == 10


def test_sp_dominant_multiplicities_rejects_long_mu():
    with pytest.raises(ValueError):
        sp_dominant_multiplicities((1, 1, 1), 2)


def test_restricted_character_symmetric():
    char = restricted_character((2, 1), 2)
    assert is_weyl_symmetric(char)
    assert sum(char.values()) == 20


def test_branch_by_character_small():
    assert branch_by_character((2, 1), 2) == {(2, 1): 1, (1,): 1}
    assert branch_by_character((1,), 1) == {(1,): 1}
    assert branch_by_character((), 2) == {(): 1}


def test_branch_by_character_guiding():
    table = branch_by_character((4, 3, 2, 1), 3)
    assert table[(3, 2, 1)] == 3
