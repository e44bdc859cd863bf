"""H-representations of the restricted-dominant and Littlewood-Richardson
polytopes, and bounded lattice-point enumeration.

Variable order for the restricted-dominant polytope (stable shapes, rank n),
row by row of the triangular array:

    (1,1); (2,2), (-1,2); (3,3), (-2,3), (-1,3); ...

where ``(j,j)`` counts the letter j in row j and ``(-k,j)`` counts the
barred letter k-bar in row j (k < j).  For the LR polytope the variables are

    (0,1), (1,1); (0,2), (1,2), (2,2); ...

with ``(0,j)`` the number of blank boxes in row j and ``(i,j)`` the number
of entries i in row j (i <= j).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .core import Rows, ShapeError, is_stable, normalize_partition, shape_of


@dataclass(frozen=True)
class HRepresentation:
    variables: tuple[tuple[int, int], ...]
    constraints: tuple[tuple[tuple[int, ...], str, int], ...]  # (coeffs, rel, rhs)

    def to_json(self) -> dict:
        return {
            "variables": [list(v) for v in self.variables],
            "ineqs": [{"coeffs": list(c), "rel": rel, "rhs": rhs}
                      for c, rel, rhs in self.constraints],
        }

    def satisfied(self, point) -> bool:
        for coeffs, rel, rhs in self.constraints:
            val = sum(c * x for c, x in zip(coeffs, point))
            if rel == "<=" and val > rhs:
                return False
            if rel == ">=" and val < rhs:
                return False
            if rel == "=" and val != rhs:
                return False
        return True


# ---------------------------------------------------------------------------
# variable layouts

def domres_variables(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    for j in range(1, n + 1):
        out.append((j, j))
        out.extend((-k, j) for k in range(j - 1, 0, -1))
    return tuple(out)


def lr_variables(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    for j in range(1, n + 1):
        out.append((0, j))
        out.extend((i, j) for i in range(1, j + 1))
    return tuple(out)


# ---------------------------------------------------------------------------
# tableau <-> variables

def tableau_to_variables(rows: Rows, n: int) -> dict[tuple[int, int], int]:
    """Letter counts per row, checking the structural-zero pattern (row j may
    contain only the letter j and bars k-bar with k < j)."""
    rows = tuple(tuple(r) for r in rows)
    out: dict[tuple[int, int], int] = {}
    for r, row in enumerate(rows, start=1):
        for x in row:
            if x > 0 and x != r:
                raise ShapeError(f"unbarred letter {x} in row {r}")
            if x < 0 and -x >= r:
                raise ShapeError(f"barred letter {x} in row {r}")
            out[(x, r)] = out.get((x, r), 0) + 1
    return out


def variables_to_tableau(values, lam, n: int) -> Rows:
    """Rebuild the tableau from structural counts; ``values`` is a mapping
    or a vector in :func:`domres_variables` order."""
    lam = normalize_partition(lam)
    if not isinstance(values, dict):
        values = dict(zip(domres_variables(n), values))
    for (letter, r), count in values.items():
        if count < 0:
            raise ShapeError(f"negative count at {(letter, r)}")
        if count and (letter <= 0 and -letter >= r or letter > 0 and letter != r):
            raise ShapeError(f"nonzero count at non-structural {(letter, r)}")
    rows = []
    for r in range(1, len(lam) + 1):
        row = [r] * values.get((r, r), 0)
        for k in range(r - 1, 0, -1):
            row.extend([-k] * values.get((-k, r), 0))
        if len(row) != lam[r - 1]:
            raise ShapeError(f"row {r} has length {len(row)}, expected {lam[r - 1]}")
        rows.append(tuple(row))
    return tuple(rows)


# ---------------------------------------------------------------------------
# H-representations

def _unit(index: int, dim: int, sign: int = 1) -> list[int]:
    c = [0] * dim
    c[index] = sign
    return c


def domres_h_rep(lam, mu, n: int) -> HRepresentation:
    """Inequalities whose integer points are exactly domres(lam, mu), for
    stable lam and mu."""
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    if not is_stable(lam, n) or not is_stable(mu, n):
        raise ShapeError("only stable shapes are supported")
    variables = domres_variables(n)
    idx = {v: i for i, v in enumerate(variables)}
    dim = len(variables)
    lam_p = lam + (0,) * (n - len(lam))
    mu_p = mu + (0,) * (n - len(mu))
    cons: list[tuple[tuple[int, ...], str, int]] = []

    for i in range(dim):
        cons.append((tuple(_unit(i, dim)), ">=", 0))

    # row lengths
    for j in range(1, n + 1):
        c = [0] * dim
        c[idx[(j, j)]] = 1
        for k in range(1, j):
            c[idx[(-k, j)]] = 1
        cons.append((tuple(c), "=", lam_p[j - 1]))

    # content: #i minus #i-bar
    for i in range(1, n + 1):
        c = [0] * dim
        c[idx[(i, i)]] = 1
        for j in range(i + 1, n + 1):
            c[idx[(-i, j)]] = -1
        cons.append((tuple(c), "=", mu_p[i - 1]))

    # column strictness via rank thresholds between adjacent rows
    rank = {v: (v[0] if v[0] > 0 else 2 * n + 1 + v[0]) for v in variables}
    for j in range(1, n):
        for v in range(1, 2 * n + 1):
            c = [0] * dim
            nontrivial = False
            for var in variables:
                if var[1] == j + 1 and rank[var] <= v:
                    c[idx[var]] += 1
                    nontrivial = True
                if var[1] == j and rank[var] <= v - 1:
                    c[idx[var]] -= 1
            if nontrivial:
                cons.append((tuple(c), "<=", 0))

    # cancellation
    for i in range(1, n + 1):
        bar_rank = 2 * n + 1 - i
        for k in range(i + 1, n + 1):
            c = [0] * dim
            c[idx[(i, i)]] += 1
            c[idx[(-i, k)]] -= 1
            for var in variables:
                if var[1] == k and rank[var] < bar_rank:
                    c[idx[var]] -= 1
            cons.append((tuple(c), ">=", 0))

    # dominance
    for i in range(1, n):
        for l in range(i, n + 1):
            c = [0] * dim
            c[idx[(i, i)]] += 1
            c[idx[(i + 1, i + 1)]] -= 1
            for k in range(i, l + 1):
                if (-i, k) in idx:
                    c[idx[(-i, k)]] -= 1
                if (-(i + 1), k - 1) in idx:
                    c[idx[(-(i + 1), k - 1)]] += 1
            cons.append((tuple(c), ">=", 0))

    return HRepresentation(variables, tuple(cons))


def lr_h_rep(lam, mu, n: int) -> HRepresentation:
    """Inequalities whose integer points are the LR fillings of lam/mu over
    all weights, for stable shapes (linearized semistandardness, ballot
    prefix sums, and row-filling equalities)."""
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    if not is_stable(lam, n) or not is_stable(mu, n):
        raise ShapeError("only stable shapes are supported")
    variables = lr_variables(n)
    idx = {v: i for i, v in enumerate(variables)}
    dim = len(variables)
    lam_p = lam + (0,) * (n - len(lam))
    mu_p = mu + (0,) * (n - len(mu))
    cons: list[tuple[tuple[int, ...], str, int]] = []

    for i in range(dim):
        cons.append((tuple(_unit(i, dim)), ">=", 0))

    # blanks form the inner shape; rows are filled to lam
    for j in range(1, n + 1):
        cons.append((tuple(_unit(idx[(0, j)], dim)), "=", mu_p[j - 1]))
        c = [0] * dim
        for i in range(0, j + 1):
            c[idx[(i, j)]] = 1
        cons.append((tuple(c), "=", lam_p[j - 1]))

    # column strictness (blanks count as smaller than every letter)
    for j in range(1, n):
        for v in range(1, n + 1):
            c = [0] * dim
            c[idx[(0, j + 1)]] += 1
            for i in range(1, min(v, j + 1) + 1):
                c[idx[(i, j + 1)]] += 1
            c[idx[(0, j)]] -= 1
            for i in range(1, min(v - 1, j) + 1):
                c[idx[(i, j)]] -= 1
            cons.append((tuple(c), "<=", 0))

    # ballot prefix sums
    for i in range(1, n):
        for r in range(1, n):
            c = [0] * dim
            nontrivial = False
            for j in range(1, r + 2):
                if (i + 1, j) in idx:
                    c[idx[(i + 1, j)]] += 1
                    nontrivial = True
            for j in range(1, r + 1):
                if (i, j) in idx:
                    c[idx[(i, j)]] -= 1
            if nontrivial:
                cons.append((tuple(c), "<=", 0))

    return HRepresentation(variables, tuple(cons))


# ---------------------------------------------------------------------------
# lattice points

def lattice_points(h: HRepresentation, bounds) -> tuple[tuple[int, ...], ...]:
    """Integer points of the H-representation inside the box ``bounds``
    (per-variable inclusive (low, high) pairs, or a single high per var)."""
    box = []
    for b in bounds:
        low, high = b if isinstance(b, tuple) else (0, int(b))
        if high < low:
            return ()
        box.append((low, high))
    if len(box) != len(h.variables):
        raise ValueError("bounds length does not match variable count")
    # tighten with single-variable equalities
    for coeffs, rel, rhs in h.constraints:
        support = [i for i, c in enumerate(coeffs) if c]
        if rel == "=" and len(support) == 1:
            i = support[0]
            if rhs % coeffs[i]:
                return ()
            v = rhs // coeffs[i]
            low, high = box[i]
            box[i] = (max(low, v), min(high, v))
            if box[i][0] > box[i][1]:
                return ()
    sizes = [high - low + 1 for low, high in box]
    total = int(np.prod(sizes)) if sizes else 1
    if total > 5_000_000:
        raise ValueError(f"box with {total} points is too large to enumerate")
    if not sizes:
        return ((),) if h.satisfied(()) else ()
    grid = np.stack([a.ravel() for a in np.meshgrid(
        *[np.arange(low, high + 1) for low, high in box], indexing="ij")], axis=1)
    keep = np.ones(len(grid), dtype=bool)
    for coeffs, rel, rhs in h.constraints:
        vals = grid @ np.asarray(coeffs)
        if rel == "<=":
            keep &= vals <= rhs
        elif rel == ">=":
            keep &= vals >= rhs
        else:
            keep &= vals == rhs
    return tuple(map(tuple, grid[keep].tolist()))


def domres_lattice_points(lam, mu, n: int) -> tuple[tuple[int, ...], ...]:
    lam = normalize_partition(lam)
    h = domres_h_rep(lam, mu, n)
    lam_p = lam + (0,) * (n - len(lam))
    bounds = [lam_p[j - 1] for (_, j) in h.variables]
    return lattice_points(h, bounds)


def lr_lattice_points(lam, mu, n: int) -> tuple[tuple[int, ...], ...]:
    lam = normalize_partition(lam)
    h = lr_h_rep(lam, mu, n)
    lam_p = lam + (0,) * (n - len(lam))
    bounds = [lam_p[j - 1] for (_, j) in h.variables]
    return lattice_points(h, bounds)


def lr_point_to_skew(point, lam, mu, n: int):
    """Interpret an LR lattice point as a skew tableau."""
    from .core import SkewTableau

    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    values = dict(zip(lr_variables(n), point))
    rows = []
    mu_p = mu + (0,) * (len(lam) - len(mu))
    for r in range(1, len(lam) + 1):
        row = []
        for i in range(1, r + 1):
            row.extend([i] * values.get((i, r), 0))
        if len(row) != lam[r - 1] - mu_p[r - 1]:
            raise ShapeError(f"row {r} does not fill the skew shape")
        rows.append(tuple(row))
    return SkewTableau(lam, mu, tuple(rows))


def skew_to_lr_point(skew, n: int) -> tuple[int, ...]:
    values: dict[tuple[int, int], int] = {}
    mu_p = skew.inner + (0,) * (len(skew.outer) - len(skew.inner))
    for r, row in enumerate(skew.rows, start=1):
        values[(0, r)] = mu_p[r - 1]
        for x in row:
            if not (1 <= x <= r):
                raise ShapeError(f"entry {x} in row {r} breaks the structural zeros")
            values[(x, r)] = values.get((x, r), 0) + 1
    return tuple(values.get(v, 0) for v in lr_variables(n))


def domres_point_of(rows: Rows, n: int) -> tuple[int, ...]:
    values = tableau_to_variables(rows, n)
    if len(shape_of(rows)) > n:
        raise ShapeError("tableau is not stable")
    return tuple(values.get(v, 0) for v in domres_variables(n))
