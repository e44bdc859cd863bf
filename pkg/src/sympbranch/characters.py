"""Exact character arithmetic: Schur characters, symplectic weight
multiplicities via Freudenthal's recursion, and branching by character
subtraction.

Everything is exact integer arithmetic on finitely supported maps from
exponent vectors to multiplicities.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from .core import (
    barred_alphabet,
    column_word,
    enumerate_ssyt,
    normalize_partition,
    tableau_content,
    unbarred_alphabet,
    word_weight,
)


class CharacterError(ArithmeticError):
    """Raised when an exact character identity fails to hold."""


# ---------------------------------------------------------------------------
# dimension oracles (Weyl dimension formula)

def weyl_dim_sl(lam, m: int) -> int:
    """Dimension of the gl(m)/sl(m) irreducible with highest weight ``lam``."""
    lam = normalize_partition(lam)
    if len(lam) > m:
        return 0
    padded = lam + (0,) * (m - len(lam))
    num = den = 1
    for i in range(m):
        for j in range(i + 1, m):
            num *= padded[i] - padded[j] + j - i
            den *= j - i
    assert num % den == 0
    return num // den


def _type_c_positive_roots(n: int) -> list[tuple[int, ...]]:
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            e = [0] * n
            e[i], e[j] = 1, -1
            roots.append(tuple(e))
            e = [0] * n
            e[i], e[j] = 1, 1
            roots.append(tuple(e))
        e = [0] * n
        e[i] = 2
        roots.append(tuple(e))
    return roots


def weyl_dim_sp(mu, n: int) -> int:
    """Dimension of the sp(2n) irreducible with highest weight ``mu``."""
    mu = normalize_partition(mu)
    if len(mu) > n:
        return 0
    padded = mu + (0,) * (n - len(mu))
    rho = tuple(range(n, 0, -1))
    dim = Fraction(1)
    for alpha in _type_c_positive_roots(n):
        num = sum((padded[i] + rho[i]) * alpha[i] for i in range(n))
        den = sum(rho[i] * alpha[i] for i in range(n))
        dim *= Fraction(num, den)
    assert dim.denominator == 1
    return int(dim)


# ---------------------------------------------------------------------------
# Schur characters

@lru_cache(maxsize=None)
def schur_character(lam: tuple[int, ...], m: int) -> dict[tuple[int, ...], int]:
    """Coefficient of each exponent vector = number of SSYT of that content."""
    lam = normalize_partition(lam)
    char: dict[tuple[int, ...], int] = {}
    for t in enumerate_ssyt(lam, unbarred_alphabet(m)):
        key = tableau_content(t, m)
        char[key] = char.get(key, 0) + 1
    return char


@lru_cache(maxsize=None)
def restricted_character(lam: tuple[int, ...], n: int) -> dict[tuple[int, ...], int]:
    """Pushforward of the Schur character of sl(2n) to the folded coordinates.

    Computed directly as the sum of restricted contents over SSYT in the
    barred alphabet (same multiset as substituting x_j -> 1/x_{2n+1-j})."""
    lam = normalize_partition(lam)
    char: dict[tuple[int, ...], int] = {}
    for t in enumerate_ssyt(lam, barred_alphabet(n)):
        key = word_weight(column_word(t), n)
        char[key] = char.get(key, 0) + 1
    return char


def poly_mul(a: dict, b: dict) -> dict:
    out: dict[tuple[int, ...], int] = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            key = tuple(x + y for x, y in zip(ka, kb))
            coeff = out.get(key, 0) + va * vb
            if coeff:
                out[key] = coeff
            else:
                out.pop(key, None)
    return out


def alternant(exponents, m: int) -> dict[tuple[int, ...], int]:
    """det(x_i^{a_j}) expanded as a signed sum over permutations."""
    exponents = tuple(exponents)
    out: dict[tuple[int, ...], int] = {}
    for sign, perm in _signed_permutations_of_positions(m):
        key = tuple(exponents[perm[i]] for i in range(m))
        coeff = out.get(key, 0) + sign
        if coeff:
            out[key] = coeff
        else:
            out.pop(key, None)
    return out


def _signed_permutations_of_positions(m: int):
    for perm in permutations(range(m)):
        inversions = sum(1 for i in range(m) for j in range(i + 1, m)
                         if perm[i] > perm[j])
        yield (-1) ** inversions, perm


def bialternant_check(lam, m: int) -> bool:
    """Polynomial identity a_delta * s_lambda == a_{lambda+delta}."""
    lam = normalize_partition(lam)
    if len(lam) > m:
        return schur_character(lam, m) == {}
    padded = lam + (0,) * (m - len(lam))
    delta = tuple(range(m - 1, -1, -1))
    lhs = poly_mul(alternant(delta, m), schur_character(lam, m))
    rhs = alternant(tuple(p + d for p, d in zip(padded, delta)), m)
    return lhs == rhs


# ---------------------------------------------------------------------------
# symplectic weight multiplicities (Freudenthal, type C_n)

def _dominant_rep_type_c(v) -> tuple[int, ...]:
    return tuple(sorted((abs(x) for x in v), reverse=True))


def _cone_height(d: tuple[int, ...]) -> int | None:
    """Sum of the simple-root coefficients of ``d`` for C_n, or None when
    ``d`` is outside the nonnegative integer span of the simple roots.

    The coefficient of e_j - e_{j+1} is the j-th partial sum of d and the
    coefficient of 2e_n is half the total."""
    height = 0
    partial = 0
    for x in d[:-1]:
        partial += x
        if partial < 0:
            return None
        height += partial
    total = partial + d[-1]
    if total < 0 or total % 2:
        return None
    return height + total // 2


def _in_positive_root_cone(d: tuple[int, ...]) -> bool:
    return _cone_height(d) is not None


@lru_cache(maxsize=None)
def sp_dominant_multiplicities(mu: tuple[int, ...], n: int) -> dict[tuple[int, ...], int]:
    """Multiplicity of each dominant weight in the sp(2n) irreducible L(mu)."""
    mu = normalize_partition(mu)
    if len(mu) > n:
        raise ValueError(f"{mu} is not dominant for sp({2 * n})")
    top = mu + (0,) * (n - len(mu))
    rho = tuple(range(n, 0, -1))
    roots = _type_c_positive_roots(n)

    candidates = []
    for v in product(*(range(top[0] + 1) for _ in range(n))):
        if all(a >= b for a, b in zip(v, v[1:])):
            d = tuple(t - x for t, x in zip(top, v))
            if _in_positive_root_cone(d):
                candidates.append(v)
    # Freudenthal in decreasing order of height of the weight
    candidates.sort(key=lambda v: _cone_height(tuple(t - x for t, x in zip(top, v))))

    norm_top = sum((t + r) ** 2 for t, r in zip(top, rho))
    mults: dict[tuple[int, ...], int] = {}
    for v in candidates:
        if v == top:
            mults[v] = 1
            continue
        acc = 0
        for alpha in roots:
            k = 1
            while True:
                w = tuple(x + k * a for x, a in zip(v, alpha))
                dom = _dominant_rep_type_c(w)
                mw = mults.get(dom, 0)
                if mw == 0 and sum(dom) > sum(top):
                    break
                if mw:
                    acc += mw * sum(wi * ai for wi, ai in zip(w, alpha))
                k += 1
                if k > 2 * sum(top) + 1:
                    break
        denom = norm_top - sum((x + r) ** 2 for x, r in zip(v, rho))
        if denom <= 0:
            raise CharacterError(f"Freudenthal denominator not positive at {v}")
        if (2 * acc) % denom:
            raise CharacterError(f"non-integral multiplicity at {v}")
        m_v = (2 * acc) // denom
        if m_v:
            mults[v] = m_v
    return mults


@lru_cache(maxsize=None)
def sp_weight_multiplicities(mu: tuple[int, ...], n: int) -> dict[tuple[int, ...], int]:
    """Full weight multiset of the sp(2n) irreducible (all Weyl conjugates)."""
    mu = normalize_partition(mu)
    dom = sp_dominant_multiplicities(mu, n)
    full: dict[tuple[int, ...], int] = {}
    for v, mult in dom.items():
        for w in _signed_permutation_orbit(v):
            full[w] = mult
    total = sum(full.values())
    expected = weyl_dim_sp(mu, n)
    if total != expected:
        raise CharacterError(
            f"weight multiset mass {total} != Weyl dimension {expected} for {mu}")
    return full


def _signed_permutation_orbit(v: tuple[int, ...]) -> set[tuple[int, ...]]:
    orbit = set()
    for perm in permutations(v):
        nonzero = [i for i, x in enumerate(perm) if x]
        for signs in product((1, -1), repeat=len(nonzero)):
            w = list(perm)
            for idx, s in zip(nonzero, signs):
                w[idx] *= s
            orbit.add(tuple(w))
    return orbit


# ---------------------------------------------------------------------------
# branching by character subtraction

def branch_by_character(lam, n: int) -> dict[tuple[int, ...], int]:
    """Decompose the restricted character into sp(2n) characters by greedy
    subtraction of the lexicographically largest remaining dominant weight."""
    lam = normalize_partition(lam)
    if len(lam) > 2 * n - 1:
        raise ValueError(f"{lam} has more than {2 * n - 1} rows")
    remaining = dict(restricted_character(lam, n))
    table: dict[tuple[int, ...], int] = {}
    while remaining:
        top = max(remaining)
        if any(a < b for a, b in zip(top, top[1:])) or top[-1] < 0:
            raise CharacterError(f"leading weight {top} is not dominant")
        mult = remaining[top]
        if mult < 0:
            raise CharacterError(f"negative multiplicity {mult} at {top}")
        mu = normalize_partition(top)
        table[mu] = mult
        for w, m_w in sp_weight_multiplicities(mu, n).items():
            coeff = remaining.get(w, 0) - mult * m_w
            if coeff < 0:
                raise CharacterError(f"subtraction went negative at weight {w}")
            if coeff:
                remaining[w] = coeff
            else:
                remaining.pop(w, None)
    return table


def is_weyl_symmetric(char: dict[tuple[int, ...], int]) -> bool:
    """Invariance under coordinate permutations and sign flips (Weyl of C_n)."""
    for v, mult in char.items():
        srt = _dominant_rep_type_c(v)
        if char.get(srt, 0) != mult:
            return False
        for i in range(len(v)):
            flipped = v[:i] + (-v[i],) + v[i + 1:]
            if char.get(flipped, 0) != mult:
                return False
    return True
