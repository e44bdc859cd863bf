"""Batch screening of tableau words for cancellation and dominance.

Words are packed into an int32 matrix (one word per row, zero padded).
Letter ``i`` means +e_i, letter ``-i`` means -e_i in the restricted
coordinates.  Padding zeros leave the running weight unchanged, so they
never affect either predicate.

The numba kernel is the default; set ``SYMPBRANCH_NO_NUMBA=1`` to force the
vectorized numpy path (also used automatically when numba is unavailable).
"""

from __future__ import annotations

import os

import numpy as np

_FORCE_NUMPY = os.environ.get("SYMPBRANCH_NO_NUMBA", "0") == "1"

try:
    if _FORCE_NUMPY:
        raise ImportError
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:
    _HAVE_NUMBA = False


def active_backend() -> str:
    return "numba" if _HAVE_NUMBA else "numpy"


def screen_words_numpy(words: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Return (cancellation mask, dominance mask) for a (B, L) word matrix."""
    words = np.ascontiguousarray(words, dtype=np.int32)
    b, length = words.shape
    if length == 0:
        ones = np.ones(b, dtype=bool)
        return ones, ones.copy()
    prefix = np.empty((b, length, n), dtype=np.int32)
    for i in range(n):
        step = (words == i + 1).astype(np.int32) - (words == -(i + 1)).astype(np.int32)
        prefix[:, :, i] = np.cumsum(step, axis=1)
    cancel = (prefix >= 0).all(axis=(1, 2))
    dominant = (prefix[:, :, -1] >= 0).all(axis=1)
    if n > 1:
        dominant &= (prefix[:, :, :-1] >= prefix[:, :, 1:]).all(axis=(1, 2))
    return cancel, dominant


if _HAVE_NUMBA:

    @njit(cache=True)
    def _screen_words_numba(words, n):  # pragma: no cover - exercised via wrapper
        b, length = words.shape
        cancel = np.ones(b, dtype=np.bool_)
        dominant = np.ones(b, dtype=np.bool_)
        weight = np.zeros(n, dtype=np.int32)
        for s in range(b):
            for i in range(n):
                weight[i] = 0
            ok_cancel = True
            ok_dom = True
            for t in range(length):
                letter = words[s, t]
                if letter > 0:
                    weight[letter - 1] += 1
                elif letter < 0:
                    weight[-letter - 1] -= 1
                else:
                    continue
                if ok_cancel:
                    for i in range(n):
                        if weight[i] < 0:
                            ok_cancel = False
                            break
                if ok_dom:
                    if weight[n - 1] < 0:
                        ok_dom = False
                    else:
                        for i in range(n - 1):
                            if weight[i] < weight[i + 1]:
                                ok_dom = False
                                break
                if not ok_cancel and not ok_dom:
                    break
            cancel[s] = ok_cancel
            dominant[s] = ok_dom
        return cancel, dominant

    def screen_words(words: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
        words = np.ascontiguousarray(words, dtype=np.int32)
        if words.shape[1] == 0:
            ones = np.ones(words.shape[0], dtype=bool)
            return ones, ones.copy()
        return _screen_words_numba(words, n)

else:
    screen_words = screen_words_numpy


def pack_words(words, length: int) -> np.ndarray:
    """Pack same-or-shorter words into a zero-padded int32 matrix."""
    out = np.zeros((len(words), length), dtype=np.int32)
    for i, w in enumerate(words):
        if w:
            out[i, : len(w)] = w
    return out
