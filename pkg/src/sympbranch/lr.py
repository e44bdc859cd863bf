"""Littlewood-Richardson tableaux, the n-symplectic condition, and
Sundaram's branching multiplicities."""

from __future__ import annotations

from functools import lru_cache

from .core import (
    ShapeError,
    SkewTableau,
    column_word,
    contains,
    is_skew_semistandard,
    normalize_partition,
    unbarred_alphabet,
)


def is_ballot(word) -> bool:
    """Every prefix contains at least as many i's as (i+1)'s, for all i."""
    counts: dict[int, int] = {}
    for letter in word:
        counts[letter] = counts.get(letter, 0) + 1
        if letter > 1 and counts[letter] > counts.get(letter - 1, 0):
            return False
    return True


def is_littlewood_richardson(skew: SkewTableau) -> bool:
    """Unbarred, semistandard, and ballot column word."""
    entries = [x for row in skew.rows for x in row]
    if any(x <= 0 for x in entries):
        return False
    m = max(entries, default=1)
    if not is_skew_semistandard(skew, unbarred_alphabet(m)):
        return False
    return is_ballot(column_word(skew))


def is_n_symplectic(skew: SkewTableau, n: int) -> bool:
    """No entry 2i+1 strictly below row n+i (rows counted from 1)."""
    for r, row in enumerate(skew.rows, start=1):
        for x in row:
            if x % 2 == 1 and r > n + (x - 1) // 2:
                return False
    return True


@lru_cache(maxsize=None)
def enumerate_lr(lam: tuple[int, ...], mu: tuple[int, ...], eta: tuple[int, ...]) -> tuple[SkewTableau, ...]:
    """All Littlewood-Richardson tableaux of shape lam/mu and weight eta."""
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    eta = normalize_partition(eta)
    if not contains(lam, mu):
        raise ShapeError(f"{mu} is not contained in {lam}")
    if sum(eta) != sum(lam) - sum(mu):
        return ()
    nletters = len(eta)
    inner = mu + (0,) * (len(lam) - len(mu))
    remaining = list(eta)
    rows: list[tuple[int, ...]] = []
    results: list[SkewTableau] = []

    def fill_row(r: int) -> None:
        if r == len(lam):
            if all(x == 0 for x in remaining):
                skew = SkewTableau(lam, mu, tuple(rows))
                if is_ballot(column_word(skew)):
                    results.append(skew)
            return
        length = lam[r] - inner[r]
        prev = rows[r - 1] if r else None
        prev_start = inner[r - 1] if r else 0
        row: list[int] = []

        def fill_cell(c: int) -> None:
            if c == length:
                rows.append(tuple(row))
                fill_row(r + 1)
                rows.pop()
                return
            low = row[c - 1] if c else 1
            col = inner[r] + c  # absolute column
            if prev is not None and prev_start <= col < prev_start + len(prev):
                low = max(low, prev[col - prev_start] + 1)
            for x in range(low, nletters + 1):
                if remaining[x - 1] == 0:
                    continue
                remaining[x - 1] -= 1
                row.append(x)
                fill_cell(c + 1)
                row.pop()
                remaining[x - 1] += 1

        fill_cell(0)

    fill_row(0)
    return tuple(results)


def lr_coefficient(lam, mu, eta) -> int:
    return len(enumerate_lr(normalize_partition(lam), normalize_partition(mu),
                            normalize_partition(eta)))


def enumerate_lrs(lam, mu, eta, n: int) -> tuple[SkewTableau, ...]:
    """LR tableaux of lam/mu and weight eta passing the n-symplectic filter."""
    return tuple(t for t in enumerate_lr(normalize_partition(lam),
                                         normalize_partition(mu),
                                         normalize_partition(eta))
                 if is_n_symplectic(t, n))


def even_partitions(size: int, max_rows: int):
    """Partitions of ``size`` with every column length even."""
    if size % 2:
        return
    for halved in _partitions(size // 2, max_rows // 2):
        eta = []
        for p in halved:
            eta.extend((p, p))
        yield tuple(eta)


def _partitions(size: int, max_rows: int, largest: int | None = None):
    if size == 0:
        yield ()
        return
    if max_rows == 0:
        return
    if largest is None:
        largest = size
    for first in range(min(size, largest), 0, -1):
        for rest in _partitions(size - first, max_rows - 1, first):
            yield (first,) + rest


def sundaram_multiplicity(lam, mu, n: int) -> int:
    """Number of n-symplectic LR tableaux of lam/mu over all even weights."""
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    if not contains(lam, mu):
        return 0
    size = sum(lam) - sum(mu)
    return sum(len(enumerate_lrs(lam, mu, eta, n))
               for eta in even_partitions(size, 2 * n))


def sundaram_table(lam, n: int) -> dict[tuple[int, ...], int]:
    """Branching table mu -> multiplicity via Sundaram's rule."""
    lam = normalize_partition(lam)
    table: dict[tuple[int, ...], int] = {}
    for mu in _stable_subshapes(lam, n):
        mult = sundaram_multiplicity(lam, mu, n)
        if mult:
            table[mu] = mult
    return table


def _stable_subshapes(lam, n: int):
    yield from _shapes_below(lam[:n])


def _shapes_below(bounds: tuple[int, ...]):
    if not bounds:
        yield ()
        return
    for first in range(bounds[0], 0, -1):
        for rest in _shapes_below(tuple(min(b, first) for b in bounds[1:])):
            yield (first,) + rest
    yield ()


def stable_subshapes(lam, n: int) -> tuple[tuple[int, ...], ...]:
    """All stable partitions contained in ``lam``, largest first."""
    lam = normalize_partition(lam)
    return tuple(sorted(_shapes_below(lam[:n]), reverse=True))
