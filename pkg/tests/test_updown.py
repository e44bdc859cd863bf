import pytest

from sympbranch.core import ShapeError
from sympbranch.paths import enumerate_domres
from sympbranch.updown import canonical_q, phi, phi_inverse, q_symbols, shape_sequence

T1 = ((1, 1, 1, 1), (2, 2, 2), (3, -1), (-2,))
T2 = ((1, 1, 1, 1), (2, 2, -1), (3, 3), (-3,))
T3 = ((1, 1, 1, 1), (2, 2, 2), (3, -2), (-1,))

FINAL_Q = ((1, 2, 4, 7), (3, 5, 8), (6, 9), (10,))


def test_shape_sequence_t1():
    seq = shape_sequence(T1, 3)
    assert seq.shapes == (
        (1,), (2,), (2, 1), (3, 1), (3, 2),
        (2, 2), (3, 2), (3, 3), (3, 3, 1), (3, 2, 1),
    )


def test_shape_sequence_rejects_invalid():
    with pytest.raises(ShapeError):
        shape_sequence(((-1,),), 2)


def test_q_symbols_t1():
    b = q_symbols(T1, 3)
    assert b.partial_q == ((2, 4, 7), (5, 8), (9,))
    assert b.array == ((6, 10), (1, 3))
    assert b.even == ((1, 3), (6, 10))
    assert b.final_q == FINAL_Q


def test_q_symbols_t2():
    b = q_symbols(T2, 3)
    assert b.array == ((3, 10), (1, 6))
    assert b.even == ((1, 6), (3, 10))
    assert b.final_q == FINAL_Q


def test_q_symbols_t3():
    b = q_symbols(T3, 3)
    assert b.array == ((6, 10), (3, 1))
    assert b.even == ((1,), (3,), (6,), (10,))
    assert b.final_q == FINAL_Q


def test_canonical_q():
    assert canonical_q((4, 3, 2, 1)) == FINAL_Q
    assert canonical_q(()) == ()
    assert canonical_q((2,)) == ((1, 2),)


def test_phi_guiding_example():
    assert phi(T1, 3).rows == ((1,), (1,), (2,), (2,))
    assert phi(T2, 3).rows == ((1,), (2,), (1,), (2,))
    assert phi(T3, 3).rows == ((1,), (2,), (3,), (4,))
    for t in (T1, T2, T3):
        image = phi(t, 3)
        assert image.outer == (4, 3, 2, 1)
        assert image.inner == (3, 2, 1)


def test_phi_round_trip():
    lam, mu = (4, 3, 2, 1), (3, 2, 1)
    for t in enumerate_domres(lam, 3, mu):
        assert phi_inverse(phi(t, 3), lam, mu, 3) == t


def test_q_rigidity_small():
    lam = (2, 2)
    for mu in [(2, 2), (1, 1), ()]:
        bundles = [q_symbols(t, 2) for t in enumerate_domres(lam, 2, mu)]
        assert len({b.final_q for b in bundles}) <= 1
        for b in bundles:
            assert tuple(len(r) for r in b.final_q) == lam
