"""Special two-line arrays, column insertion, and even-shape standard tableaux."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .core import Rows, ShapeError, conjugate, shape_of


class ArrayError(ValueError):
    """Raised for malformed special two-line arrays."""


def validate_special_array(top: Sequence[int], bottom: Sequence[int]) -> None:
    if len(top) != len(bottom):
        raise ArrayError("top and bottom rows differ in length")
    entries = list(top) + list(bottom)
    if len(set(entries)) != len(entries):
        raise ArrayError("entries must be pairwise distinct")
    if any(e <= 0 for e in entries):
        raise ArrayError("entries must be positive")
    if any(a >= b for a, b in zip(top, top[1:])):
        raise ArrayError("top row must be strictly increasing")
    if any(j <= i for j, i in zip(top, bottom)):
        raise ArrayError("each top entry must exceed the bottom entry below it")


def is_standard(rows: Rows) -> bool:
    entries = [x for row in rows for x in row]
    if len(set(entries)) != len(entries):
        return False
    try:
        shape_of(rows)
    except ShapeError:
        return False
    for row in rows:
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(rows, rows[1:]):
        if any(upper[c] >= lower[c] for c in range(len(lower))):
            return False
    return True


def is_even_shape(parts) -> bool:
    """Every column of the diagram has an even number of boxes."""
    return all(c % 2 == 0 for c in conjugate(parts))


def _columns(rows: Rows) -> list[list[int]]:
    ncols = len(rows[0]) if rows else 0
    return [[row[c] for row in rows if c < len(row)] for c in range(ncols)]


def _rows_from_columns(cols: list[list[int]]) -> Rows:
    nrows = len(cols[0]) if cols else 0
    return tuple(tuple(col[r] for col in cols if r < len(col)) for r in range(nrows))


def column_insert(rows: Rows, x: int) -> Rows:
    """Insert ``x`` by column bumping.

    In each column the inserted value displaces the topmost entry strictly
    greater than it; with nothing greater it lands at the bottom of the
    column and the cascade stops.
    """
    if any(x in row for row in rows):
        raise ArrayError(f"entry {x} already present")
    cols = _columns(rows)
    cur = x
    c = 0
    while True:
        if c == len(cols):
            cols.append([cur])
            break
        col = cols[c]
        for r, entry in enumerate(col):
            if entry > cur:
                col[r], cur = cur, entry
                break
        else:
            col.append(cur)
            break
        c += 1
    return _rows_from_columns(cols)


def insert_sequence(rows: Rows, values: Sequence[int]) -> Rows:
    for v in values:
        rows = column_insert(rows, v)
    return rows


def _insertion_chain(top: Sequence[int], bottom: Sequence[int]) -> list[int]:
    # bottom entries in array order, rightmost of the chain first, then the
    # top entries ordered by increasing bottom partner
    order = sorted(range(len(top)), key=lambda s: bottom[s])
    return list(reversed(bottom)) + [top[s] for s in reversed(order)]


def array_to_even_tableau(top: Sequence[int], bottom: Sequence[int]) -> Rows:
    """Burge map: column insertion of the chain read off the array."""
    validate_special_array(top, bottom)
    return insert_sequence((), _insertion_chain(top, bottom))


def iter_special_arrays(entries: Sequence[int], max_pairs: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All special two-line arrays with entries drawn from ``entries``."""
    pool = sorted(set(entries))
    yield (), ()
    for r in range(1, max_pairs + 1):
        for chosen in combinations(pool, 2 * r):
            for pairing in _pairings(list(chosen)):
                pairs = sorted(((max(a, b), min(a, b)) for a, b in pairing))
                yield tuple(j for j, _ in pairs), tuple(i for _, i in pairs)


def _pairings(items: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not items:
        yield []
        return
    first = items[0]
    for k in range(1, len(items)):
        rest = items[1:k] + items[k + 1:]
        for sub in _pairings(rest):
            yield [(first, items[k])] + sub


@lru_cache(maxsize=4096)
def _burge_table(entries: tuple[int, ...]) -> dict:
    """Forward map over every special array on a fixed entry set."""
    table = {}
    for pairing in _pairings(list(entries)):
        pairs = sorted((max(a, b), min(a, b)) for a, b in pairing)
        top = tuple(j for j, _ in pairs)
        bottom = tuple(i for _, i in pairs)
        table[insert_sequence((), _insertion_chain(top, bottom))] = (top, bottom)
    return table


def even_tableau_to_array(rows: Rows) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Inverse Burge map.

    The forward map restricted to arrays on a fixed entry set is a bijection
    onto even-shape tableaux with that entry set, so the inverse is a lookup
    in the tabulated forward map of that entry set (cheap at the sizes this
    package targets).
    """
    rows = tuple(tuple(r) for r in rows)
    if not is_standard(rows):
        raise ShapeError("not a standard tableau")
    if not is_even_shape(shape_of(rows)):
        raise ShapeError(f"shape {shape_of(rows)} is not even")
    entries = sorted(x for row in rows for x in row)
    if not entries:
        return (), ()
    table = _burge_table(tuple(entries))
    if rows not in table:
        raise ArrayError("no special two-line array maps to this tableau")
    return table[rows]


def array_to_json(top, bottom) -> dict:
    return {"top": list(top), "bottom": list(bottom)}


def normalize_rows(rows) -> Rows:
    return tuple(tuple(r) for r in rows)
