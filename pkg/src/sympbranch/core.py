"""Partitions, weights, alphabets and (skew) Young tableaux.

Conventions used throughout the package:

* A partition is a tuple of weakly decreasing positive integers (trailing
  zeros are dropped; the empty partition is ``()``).
* Letters are nonzero integers.  An unbarred letter ``k`` is the integer
  ``k``; the barred letter "k-bar" is encoded as ``-k``.  For the barred
  alphabet of rank ``n`` the total order is
  ``1 < 2 < ... < n < n-bar < ... < 1-bar``.
* A tableau is a tuple of rows, each row a tuple of letters.  A skew
  tableau additionally carries the inner (blank) shape; its rows contain
  the filled entries only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence


class ShapeError(ValueError):
    """Raised when a shape is invalid or out of type."""


# ---------------------------------------------------------------------------
# partitions and weights

def normalize_partition(parts: Sequence[int]) -> tuple[int, ...]:
    """Validate a weakly decreasing sequence and drop trailing zeros."""
    parts = tuple(int(p) for p in parts)
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ShapeError(f"not weakly decreasing: {parts}")
    if parts and parts[-1] < 0:
        raise ShapeError(f"negative part in {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    parts = normalize_partition(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= c) for c in range(1, parts[0] + 1))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """Componentwise containment of Young diagrams."""
    inner = normalize_partition(inner)
    outer = normalize_partition(outer)
    if len(inner) > len(outer):
        return False
    return all(i <= o for i, o in zip(inner, outer))


def weight_to_partition(coeffs: Sequence[int]) -> tuple[int, ...]:
    """Partition with ``coeffs[k-1]`` columns of length ``k``."""
    coeffs = [int(a) for a in coeffs]
    if any(a < 0 for a in coeffs):
        raise ShapeError(f"negative fundamental-weight coefficient in {coeffs}")
    return normalize_partition(
        tuple(sum(coeffs[k - 1] for k in range(i, len(coeffs) + 1))
              for i in range(1, len(coeffs) + 1)))


def partition_to_weight(parts: Sequence[int], num_coeffs: int | None = None) -> tuple[int, ...]:
    """Inverse of :func:`weight_to_partition`; ``a_k = p_k - p_{k+1}``."""
    parts = normalize_partition(parts)
    if num_coeffs is None:
        num_coeffs = len(parts)
    if len(parts) > num_coeffs:
        raise ShapeError(f"{parts} has more than {num_coeffs} rows")
    padded = parts + (0,) * (num_coeffs + 1 - len(parts))
    return tuple(padded[k] - padded[k + 1] for k in range(num_coeffs))


def is_stable(parts: Sequence[int], n: int) -> bool:
    """True iff every column of the diagram has length at most ``n``."""
    return len(normalize_partition(parts)) <= n


def stable_part(parts: Sequence[int], n: int) -> tuple[int, ...]:
    """Largest subshape whose columns have length at most ``n``."""
    return normalize_partition(parts)[:n]


# ---------------------------------------------------------------------------
# alphabets

def unbarred_alphabet(m: int) -> tuple[int, ...]:
    """The alphabet ``1 < 2 < ... < m``."""
    return tuple(range(1, m + 1))


def barred_alphabet(n: int) -> tuple[int, ...]:
    """The alphabet ``1 < ... < n < n-bar < ... < 1-bar``."""
    return tuple(range(1, n + 1)) + tuple(range(-n, 0))


def letter_rank(letter: int, n: int) -> int:
    """Position (1-based) of a letter in the barred alphabet of rank ``n``.

    The barred letter ``-k`` is identified with letter ``2n+1-k`` of the
    plain alphabet of size ``2n``.
    """
    if letter > 0:
        if letter > n:
            raise ValueError(f"letter {letter} not in alphabet of rank {n}")
        return letter
    if letter < -n:
        raise ValueError(f"letter {letter} not in alphabet of rank {n}")
    return 2 * n + 1 + letter


def format_letter(letter: int) -> str:
    return str(letter) if letter > 0 else f"{-letter}̄"


# ---------------------------------------------------------------------------
# tableaux

Rows = tuple[tuple[int, ...], ...]


def shape_of(rows: Rows) -> tuple[int, ...]:
    return normalize_partition(tuple(len(r) for r in rows))


def is_semistandard(rows: Rows, alphabet: Sequence[int]) -> bool:
    """Rows weakly increasing, columns strictly increasing, in alphabet order."""
    rank = {letter: i for i, letter in enumerate(alphabet)}
    try:
        shape_of(rows)
    except ShapeError:
        return False
    for row in rows:
        if any(x not in rank for x in row):
            return False
        if any(rank[a] > rank[b] for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(rows, rows[1:]):
        if any(rank[upper[c]] >= rank[lower[c]] for c in range(len(lower))):
            return False
    return True


@dataclass(frozen=True)
class SkewTableau:
    """Filling of ``outer/inner``; ``rows[r]`` holds the filled entries of row r."""

    outer: tuple[int, ...]
    inner: tuple[int, ...]
    rows: Rows

    def __post_init__(self):
        outer = normalize_partition(self.outer)
        inner = normalize_partition(self.inner)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        if not contains(outer, inner):
            raise ShapeError(f"inner {inner} not contained in outer {outer}")
        padded_inner = inner + (0,) * (len(outer) - len(inner))
        if len(self.rows) != len(outer):
            raise ShapeError("row count does not match outer shape")
        for r, row in enumerate(self.rows):
            if len(row) != outer[r] - padded_inner[r]:
                raise ShapeError(f"row {r} has wrong length")

    def entry_columns(self, r: int) -> range:
        """Absolute (0-based) column indices of the filled boxes in row r."""
        inner = self.inner + (0,) * (len(self.outer) - len(self.inner))
        return range(inner[r], self.outer[r])

    def weight(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for row in self.rows:
            for x in row:
                counts[x] = counts.get(x, 0) + 1
        return counts

    def to_json(self) -> dict:
        return {"outer": list(self.outer), "inner": list(self.inner),
                "rows": [list(r) for r in self.rows]}


def is_skew_semistandard(t: SkewTableau, alphabet: Sequence[int]) -> bool:
    rank = {letter: i for i, letter in enumerate(alphabet)}
    for row in t.rows:
        if any(x not in rank for x in row):
            return False
        if any(rank[a] > rank[b] for a, b in zip(row, row[1:])):
            return False
    inner = t.inner + (0,) * (len(t.outer) - len(t.inner))
    for r in range(len(t.rows) - 1):
        for c in set(t.entry_columns(r)) & set(t.entry_columns(r + 1)):
            above = t.rows[r][c - inner[r]]
            below = t.rows[r + 1][c - inner[r + 1]]
            if rank[above] >= rank[below]:
                return False
    return True


# ---------------------------------------------------------------------------
# word readings

def column_word(rows_or_skew) -> tuple[int, ...]:
    """Read columns right to left, top to bottom, skipping blank boxes."""
    if isinstance(rows_or_skew, SkewTableau):
        t = rows_or_skew
        inner = t.inner + (0,) * (len(t.outer) - len(t.inner))
        ncols = t.outer[0] if t.outer else 0
        word = []
        for c in range(ncols - 1, -1, -1):
            for r in range(len(t.outer)):
                if inner[r] <= c < t.outer[r]:
                    word.append(t.rows[r][c - inner[r]])
        return tuple(word)
    rows = tuple(tuple(r) for r in rows_or_skew)
    ncols = len(rows[0]) if rows else 0
    word = []
    for c in range(ncols - 1, -1, -1):
        for row in rows:
            if c < len(row):
                word.append(row[c])
    return tuple(word)


def row_word(rows: Rows) -> tuple[int, ...]:
    """Read rows top to bottom, each right to left."""
    word = []
    for row in rows:
        word.extend(reversed(row))
    return tuple(word)


def word_weight(word: Sequence[int], n: int) -> tuple[int, ...]:
    """Sum of the restricted weight contributions of the letters.

    Letter ``i`` contributes ``+e_i`` and ``i-bar`` contributes ``-e_i`` in
    the restricted coordinates (Z^n).
    """
    w = [0] * n
    for letter in word:
        if letter > 0:
            w[letter - 1] += 1
        else:
            w[-letter - 1] -= 1
    return tuple(w)


def tableau_content(rows: Rows, m: int) -> tuple[int, ...]:
    """Letter counts of an unbarred tableau, as a vector of length ``m``."""
    counts = [0] * m
    for row in rows:
        for x in row:
            counts[x - 1] += 1
    return tuple(counts)


# ---------------------------------------------------------------------------
# enumeration

@lru_cache(maxsize=None)
def enumerate_ssyt(shape: tuple[int, ...], alphabet: tuple[int, ...]) -> tuple[Rows, ...]:
    """All semistandard tableaux of ``shape`` over ``alphabet``.

    Order is lexicographic in the row reading of the fillings (by alphabet
    rank), which keeps golden tests deterministic.
    """
    shape = normalize_partition(shape)
    m = len(alphabet)
    if len(shape) > m:
        return ()
    results: list[Rows] = []
    rows: list[tuple[int, ...]] = []

    def fill_row(r: int) -> None:
        if r == len(shape):
            results.append(tuple(rows))
            return
        length = shape[r]
        prev = rows[r - 1] if r else None
        row_ranks = [0] * length

        def fill_cell(c: int) -> None:
            if c == length:
                rows.append(tuple(alphabet[k] for k in row_ranks))
                fill_row(r + 1)
                rows.pop()
                return
            low = row_ranks[c - 1] if c else 0
            if prev is not None:
                low = max(low, alphabet.index(prev[c]) + 1)
            for k in range(low, m):
                row_ranks[c] = k
                fill_cell(c + 1)

        # cheap feasibility bound: column c needs r strictly smaller letters above
        if m - r < 1:
            return
        fill_cell(0)

    fill_row(0)
    return tuple(results)


def enumerate_ssyt_iter(shape, alphabet) -> Iterator[Rows]:
    yield from enumerate_ssyt(normalize_partition(shape), tuple(alphabet))


def tableau_to_json(rows: Rows) -> dict:
    return {"rows": [list(r) for r in rows]}
