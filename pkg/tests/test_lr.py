from sympbranch.core import SkewTableau
from sympbranch.lr import (
    enumerate_lr,
    enumerate_lrs,
    even_partitions,
    is_ballot,
    is_littlewood_richardson,
    is_n_symplectic,
    lr_coefficient,
    stable_subshapes,
    sundaram_multiplicity,
    sundaram_table,
)


def test_is_ballot():
    assert is_ballot((1, 1, 2, 1, 2))
    assert not is_ballot((2, 1))
    assert is_ballot(())


def test_lr_coefficients_match_classical_values():
    # c^{(2,1)}_{(1),(1,1)} = 1 and c^{(2,1)}_{(1),(2)} = 1
    assert lr_coefficient((2, 1), (1,), (1, 1)) == 1
    assert lr_coefficient((2, 1), (1,), (2,)) == 1
    # c^{(4,2)}_{(2,1),(2,1)} = 1; c^{(3,2,1)}_{(2,1),(2,1)} = 2
    assert lr_coefficient((4, 2), (2, 1), (2, 1)) == 1
    assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2


def test_lr_weight_mismatch_empty():
    assert enumerate_lr((2, 1), (1,), (3,)) == ()


def test_lr_pieri_row():
    # multiplying by one row: skew shapes with no two added boxes stacked
    assert lr_coefficient((3, 1), (2,), (2,)) == 1
    assert lr_coefficient((2, 2), (2,), (1, 1)) == 0


def test_guiding_example_images_are_lrs():
    fills = [
        SkewTableau((4, 3, 2, 1), (3, 2, 1), ((1,), (1,), (2,), (2,))),
        SkewTableau((4, 3, 2, 1), (3, 2, 1), ((1,), (2,), (1,), (2,))),
        SkewTableau((4, 3, 2, 1), (3, 2, 1), ((1,), (2,), (3,), (4,))),
    ]
    for skew in fills:
        assert is_littlewood_richardson(skew)
        assert is_n_symplectic(skew, 3)
    union = [t for eta in even_partitions(4, 6)
             for t in enumerate_lrs((4, 3, 2, 1), (3, 2, 1), eta, 3)]
    assert {t.rows for t in union} == {t.rows for t in fills}


def test_n_symplectic_condition():
    # entry 3 strictly below row n+1 violates the condition for n=1
    skew = SkewTableau((1, 1, 1), (), ((1,), (2,), (3,)))
    assert is_n_symplectic(skew, 2)
    assert not is_n_symplectic(skew, 1)


def test_even_partitions():
    assert set(even_partitions(4, 4)) == {(2, 2), (1, 1, 1, 1)}
    assert set(even_partitions(3, 4)) == set()
    assert set(even_partitions(0, 2)) == {()}


def test_sundaram_small_example():
    assert sundaram_table((2, 1), 2) == {(2, 1): 1, (1,): 1}


def test_sundaram_guiding_example():
    assert sundaram_multiplicity((4, 3, 2, 1), (3, 2, 1), 3) == 3


def test_stable_subshapes():
    assert stable_subshapes((2, 1), 2) == ((2, 1), (2,), (1, 1), (1,), ())
