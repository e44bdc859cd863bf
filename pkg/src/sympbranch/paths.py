"""Prefix paths, restriction to the folded Cartan, and the domres sets.

A word over the barred alphabet generates a piecewise linear path; only its
break points (the prefix weights) matter for dominance and endpoints, so
paths are stored as prefix-weight sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import _kernels
from .core import (
    Rows,
    barred_alphabet,
    column_word,
    enumerate_ssyt,
    letter_rank,
    normalize_partition,
    word_weight,
)


def restrict(v: Sequence[int]) -> tuple[int, ...]:
    """Restriction Z^{2n} -> Z^n: coordinate i maps to v_i - v_{2n+1-i}."""
    if len(v) % 2:
        raise ValueError("unrestricted weight must have even length")
    n = len(v) // 2
    return tuple(v[i] - v[2 * n - 1 - i] for i in range(n))


@dataclass(frozen=True)
class PrefixPath:
    """Break points of the path of a word over the barred alphabet."""

    word: tuple[int, ...]
    n: int
    prefix: tuple[tuple[int, ...], ...]  # unrestricted, in Z^{2n}

    @classmethod
    def from_word(cls, word: Sequence[int], n: int) -> "PrefixPath":
        cur = [0] * (2 * n)
        prefix = []
        for letter in word:
            cur[letter_rank(letter, n) - 1] += 1
            prefix.append(tuple(cur))
        return cls(tuple(word), n, tuple(prefix))

    @property
    def restricted_prefix(self) -> tuple[tuple[int, ...], ...]:
        return tuple(restrict(v) for v in self.prefix)

    @property
    def endpoint(self) -> tuple[int, ...]:
        if not self.prefix:
            return (0,) * self.n
        return restrict(self.prefix[-1])

    def to_json(self) -> dict:
        return {"word": list(self.word), "prefix": [list(v) for v in self.prefix]}


def path_of(rows: Rows, n: int) -> PrefixPath:
    return PrefixPath.from_word(column_word(rows), n)


def _is_type_c_dominant(w: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(w, w[1:])) and (not w or w[-1] >= 0)


def is_dominant_word(word: Sequence[int], n: int) -> bool:
    """Every prefix weight weakly decreasing and nonnegative (type C chamber)."""
    w = [0] * n
    for letter in word:
        if letter > 0:
            w[letter - 1] += 1
        else:
            w[-letter - 1] -= 1
        if not _is_type_c_dominant(w):
            return False
    return True


def has_cancellation(rows: Rows, n: int) -> bool:
    """Every barred letter in the column word is matched by an earlier
    unmatched unbarred partner."""
    return word_has_cancellation(column_word(rows), n)


def word_has_cancellation(word: Sequence[int], n: int) -> bool:
    w = [0] * n
    for letter in word:
        if letter > 0:
            w[letter - 1] += 1
        else:
            w[-letter - 1] -= 1
            if w[-letter - 1] < 0:
                return False
    return True


def projection_dominance(path: PrefixPath, n: int) -> bool:
    """Dominance of the orthogonal projection of the path onto the fixed-space
    complement.  The projection halves the restricted coordinates, so the
    predicate agrees with :func:`is_dominant_word`; both are computed from the
    break points (doubled to stay in integers)."""
    for v in path.prefix:
        pr2 = [v[i] - v[2 * n - 1 - i] for i in range(n)]  # 2 * pr(v)
        if not _is_type_c_dominant(pr2):
            return False
    return True


@lru_cache(maxsize=None)
def _domres_all(lam: tuple[int, ...], n: int) -> tuple[Rows, ...]:
    lam = normalize_partition(lam)
    if len(lam) > 2 * n - 1:
        return ()
    tableaux = enumerate_ssyt(lam, barred_alphabet(n))
    if not tableaux:
        return ()
    size = sum(lam)
    words = _kernels.pack_words([column_word(t) for t in tableaux], size)
    cancel, dominant = _kernels.screen_words(words, n)
    keep = np.logical_and(cancel, dominant)
    return tuple(t for t, k in zip(tableaux, keep) if k)


def enumerate_domres(lam, n: int, mu=None) -> tuple[Rows, ...]:
    """SSYT of shape ``lam`` over the barred alphabet with the cancellation
    and dominance properties; optionally filtered by endpoint ``mu``."""
    result = _domres_all(normalize_partition(lam), n)
    if mu is None:
        return result
    mu = normalize_partition(mu)
    target = tuple(mu) + (0,) * (n - len(mu))
    return tuple(t for t in result if word_weight(column_word(t), n) == target)


def domres_endpoints(lam, n: int) -> dict[tuple[int, ...], int]:
    """Map endpoint partition -> number of domres elements with that endpoint."""
    table: dict[tuple[int, ...], int] = {}
    for t in _domres_all(normalize_partition(lam), n):
        mu = normalize_partition(word_weight(column_word(t), n))
        table[mu] = table.get(mu, 0) + 1
    return table
