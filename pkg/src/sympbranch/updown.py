"""Up-down shape sequences, Q-symbols, and the map into skew tableaux.

Reading the column word of a restricted-dominant tableau letter by letter
gives an up-down sequence of partitions (add a box in row i for letter i,
remove one for i-bar).  Recording the steps RSK-style produces a partial
Q-symbol, a special two-line array of (step, bumped entry) pairs, an
even-shape tableau, and a final Q-symbol of shape lambda.  Writing the
even-tableau row indices into the skew shape gives the skew tableau that
the branching rule counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .burge import array_to_even_tableau, insert_sequence
from .core import (
    Rows,
    ShapeError,
    SkewTableau,
    column_word,
    normalize_partition,
    shape_of,
    word_weight,
)
from .paths import enumerate_domres


class BijectionError(ValueError):
    """Raised when an input is outside the verified bijection's domain."""


@dataclass(frozen=True)
class UpDownSequence:
    shapes: tuple[tuple[int, ...], ...]
    moves: tuple[tuple[str, int], ...]  # ("add" | "remove", 0-based row)


@dataclass(frozen=True)
class QSymbolBundle:
    partial_q: Rows
    array: tuple[tuple[int, ...], tuple[int, ...]]  # (steps, bumped entries)
    even: Rows
    final_q: Rows

    def to_json(self) -> dict:
        top, bottom = self.array
        return {
            "partial_q": {"rows": [list(r) for r in self.partial_q]},
            "array": {"top": list(top), "bottom": list(bottom)},
            "even": {"rows": [list(r) for r in self.even]},
            "final_q": {"rows": [list(r) for r in self.final_q]},
        }


def shape_sequence(rows: Rows, n: int) -> UpDownSequence:
    """Shapes traced by reading the column word; fails on non-dominant input."""
    word = column_word(rows)
    shape: list[int] = []
    shapes = []
    moves = []
    for step, letter in enumerate(word, start=1):
        r = letter - 1 if letter > 0 else -letter - 1
        while len(shape) <= r:
            shape.append(0)
        if letter > 0:
            shape[r] += 1
            moves.append(("add", r))
        else:
            shape[r] -= 1
            moves.append(("remove", r))
        try:
            shapes.append(normalize_partition(shape))
        except ShapeError:
            raise ShapeError(f"invalid shape {tuple(shape)} at step {step}")
    return UpDownSequence(tuple(shapes), tuple(moves))


def q_symbols(rows: Rows, n: int) -> QSymbolBundle:
    """Partial and final Q-symbols with the recorded two-line array."""
    seq = shape_sequence(rows, n)
    partial: list[list[int]] = []
    steps: list[int] = []
    bumped: list[int] = []
    for j, (kind, r) in enumerate(seq.moves, start=1):
        if kind == "add":
            while len(partial) <= r:
                partial.append([])
            partial[r].append(j)
        else:
            # delete the left-most entry of row r and shift left
            steps.append(j)
            bumped.append(partial[r].pop(0))
            if not partial[r]:
                del partial[r]
    partial_q = tuple(tuple(r) for r in partial)
    even = array_to_even_tableau(tuple(steps), tuple(bumped))
    order = sorted(range(len(steps)), key=lambda s: bumped[s])
    chain = list(reversed(bumped)) + [steps[s] for s in reversed(order)]
    final_q = insert_sequence(partial_q, chain)
    _check_column_cancellations(rows, seq, steps, bumped)
    return QSymbolBundle(partial_q, (tuple(steps), tuple(bumped)), even, final_q)


def _check_column_cancellations(rows, seq, steps, bumped) -> None:
    # removals recorded in the same column of the source tableau must bump
    # strictly decreasing entries; a violation would falsify the theory
    word_cols = _word_columns(rows)
    by_col: dict[int, list[int]] = {}
    for j, r in zip(steps, bumped):
        by_col.setdefault(word_cols[j - 1], []).append(r)
    for col, entries in by_col.items():
        if any(a <= b for a, b in zip(entries, entries[1:])):
            raise BijectionError(
                f"same-column removals bumped non-decreasing entries {entries}")


def _word_columns(rows: Rows) -> list[int]:
    """Source column (0-based) of each letter of the column word."""
    rows = tuple(tuple(r) for r in rows)
    ncols = len(rows[0]) if rows else 0
    cols = []
    for c in range(ncols - 1, -1, -1):
        for row in rows:
            if c < len(row):
                cols.append(c)
    return cols


def canonical_q(lam) -> Rows:
    """Standard tableau numbering the boxes of ``lam`` in column-reading order
    (columns right to left, top to bottom), grown row by row."""
    lam = normalize_partition(lam)
    result: list[list[int]] = [[] for _ in lam]
    step = 0
    for c in range(lam[0] - 1, -1, -1) if lam else ():
        for r in range(len(lam)):
            if c < lam[r]:
                step += 1
                result[r].append(step)
    return tuple(tuple(r) for r in result)


def phi(rows: Rows, n: int) -> SkewTableau:
    """The skew tableau of shape lambda/mu assigned to a domres element."""
    lam = shape_of(rows)
    mu = normalize_partition(word_weight(column_word(rows), n))
    bundle = q_symbols(rows, n)
    row_in_even = {x: r + 1 for r, row in enumerate(bundle.even) for x in row}
    row_in_q = {x: r for r, row in enumerate(bundle.final_q) for x in row}
    fill: dict[int, list[int]] = {}
    for j, r_even in row_in_even.items():
        fill.setdefault(row_in_q[j], []).append(r_even)
    skew_rows = []
    padded_mu = mu + (0,) * (len(lam) - len(mu))
    for r in range(len(lam)):
        values = sorted(fill.get(r, []))
        if len(values) != lam[r] - padded_mu[r]:
            raise BijectionError(f"row {r} fill does not match skew shape")
        skew_rows.append(tuple(values))
    return SkewTableau(lam, mu, tuple(skew_rows))


@lru_cache(maxsize=None)
def _phi_table(lam: tuple[int, ...], mu: tuple[int, ...], n: int):
    forward = {}
    for t in enumerate_domres(lam, n, mu):
        forward[t] = phi(t, n)
    inverse = {}
    for t, image in forward.items():
        key = (image.outer, image.inner, image.rows)
        if key in inverse:
            raise BijectionError(f"phi not injective on domres({lam}, {mu})")
        inverse[key] = t
    return forward, inverse


def phi_inverse(skew: SkewTableau, lam, mu, n: int) -> Rows:
    """The unique domres element mapping to ``skew`` (lookup over the
    memoized finite map)."""
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    _, inverse = _phi_table(lam, mu, n)
    key = (skew.outer, skew.inner, skew.rows)
    if key not in inverse:
        raise BijectionError("skew tableau is not in the image of phi")
    return inverse[key]
