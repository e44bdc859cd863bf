from sympbranch.paths import (
    PrefixPath,
    domres_endpoints,
    enumerate_domres,
    is_dominant_word,
    path_of,
    projection_dominance,
    restrict,
    word_has_cancellation,
)


def test_restrict():
    assert restrict((1, 0, 0, 0)) == (1, 0)
    assert restrict((0, 0, 0, 1)) == (-1, 0)
    assert restrict((1, 1, 1, 1)) == (0, 0)


def test_prefix_path_endpoint():
    p = PrefixPath.from_word((1, 2, -2), 2)
    assert p.endpoint == (1, 0)
    assert p.prefix[-1] == (1, 1, 1, 0)
    assert p.restricted_prefix == ((1, 0), (1, 1), (1, 0))


def test_cancellation():
    assert word_has_cancellation((1, -1), 2)
    assert not word_has_cancellation((-1, 1), 2)
    assert word_has_cancellation((2, 1, -2, -1), 2)
    assert not word_has_cancellation((1, -2), 2)


def test_dominance():
    assert is_dominant_word((1, 2, 1), 2)
    assert not is_dominant_word((2,), 2)
    # prefixes (1,0) then (0,0) stay in the chamber
    assert is_dominant_word((1, -1), 2)
    # prefix after the bar would be (-1,0)
    assert not is_dominant_word((-1,), 2)


def test_projection_dominance_agrees_with_word_dominance():
    from itertools import product
    letters = (1, 2, -2, -1)
    for word in product(letters, repeat=4):
        p = PrefixPath.from_word(word, 2)
        assert projection_dominance(p, 2) == is_dominant_word(word, 2)


def test_domres_small_example():
    # n=2, lambda=(2,1): one element ending at (2,1), one at (1)
    assert domres_endpoints((2, 1), 2) == {(2, 1): 1, (1,): 1}


def test_domres_guiding_example():
    elements = set(enumerate_domres((4, 3, 2, 1), 3, (3, 2, 1)))
    assert elements == {
        ((1, 1, 1, 1), (2, 2, 2), (3, -1), (-2,)),
        ((1, 1, 1, 1), (2, 2, -1), (3, 3), (-3,)),
        ((1, 1, 1, 1), (2, 2, 2), (3, -2), (-1,)),
    }


def test_domres_empty_shape():
    assert enumerate_domres((), 1) == ((),)
    assert domres_endpoints((), 1) == {(): 1}


def test_domres_highest_weight_always_present():
    for lam in [(1,), (2,), (2, 1), (2, 2), (3, 1)]:
        table = domres_endpoints(lam, 2)
        assert table.get(lam, 0) >= 1


def test_path_of_matches_column_word():
    t = ((1, 1), (2,))
    p = path_of(t, 2)
    assert p.word == (1, 1, 2)
