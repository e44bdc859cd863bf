"""Cross-verification sweeps: triple agreement of the branching tables,
bijection certificates, polytope comparisons, and Burge round-trips."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .burge import array_to_even_tableau, even_tableau_to_array, is_even_shape, iter_special_arrays
from .characters import (
    branch_by_character,
    is_weyl_symmetric,
    restricted_character,
    weyl_dim_sl,
    weyl_dim_sp,
)
from .core import is_stable, normalize_partition, shape_of
from .lr import enumerate_lrs, even_partitions, stable_subshapes, sundaram_table
from .paths import domres_endpoints, enumerate_domres
from .updown import phi, phi_inverse, q_symbols


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name, passed, detail))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def summary(self) -> str:
        passed = sum(c.passed for c in self.checks)
        return f"{passed}/{len(self.checks)} checks passed"


def partitions_up_to(max_size: int, max_rows: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def rec(prefix, remaining, largest, rows_left):
        out.append(tuple(prefix))
        if remaining == 0 or rows_left == 0:
            return
        for part in range(min(largest, remaining), 0, -1):
            rec(prefix + [part], remaining - part, part, rows_left - 1)

    rec([], max_size, max_size, max_rows)
    return sorted(set(out), key=lambda p: (sum(p), p))


def branching_tables(lam, n: int, fault: bool = False):
    """The three branching tables (paths, Sundaram, character) for lam."""
    lam = normalize_partition(lam)
    paths_table = domres_endpoints(lam, n)
    sund_table = sundaram_table(lam, n)
    char_table = branch_by_character(lam, n)
    if fault and char_table:
        mu = next(iter(char_table))
        char_table = dict(char_table)
        char_table[mu] += 1
    return paths_table, sund_table, char_table


def verify_triple_agreement(n: int, max_size: int, report: Report,
                            fault: bool = False) -> None:
    for lam in partitions_up_to(max_size, 2 * n - 1):
        paths_t, sund_t, char_t = branching_tables(lam, n, fault=fault)
        agree = paths_t == sund_t == char_t
        report.add(f"triple-agreement n={n} lam={lam}", agree,
                   "" if agree else f"paths={paths_t} sundaram={sund_t} character={char_t}")
        mass = sum(mult * weyl_dim_sp(mu, n) for mu, mult in paths_t.items())
        dim = weyl_dim_sl(lam, 2 * n)
        report.add(f"mass n={n} lam={lam}", mass == dim,
                   "" if mass == dim else f"sum of sp dims {mass} != dim {dim}")


def verify_bijection(n: int, max_size: int, report: Report) -> None:
    for lam in partitions_up_to(max_size, 2 * n - 1):
        for mu in stable_subshapes(lam, n):
            elements = enumerate_domres(lam, n, mu)
            images = [phi(t, n) for t in elements]
            keys = {(im.outer, im.inner, im.rows) for im in images}
            injective = len(keys) == len(images)
            size = sum(lam) - sum(mu)
            lrs = [t for eta in even_partitions(size, 2 * n)
                   for t in enumerate_lrs(lam, mu, eta, n)]
            lrs_keys = {(t.outer, t.inner, t.rows) for t in lrs}
            ok = injective and keys == lrs_keys
            if ok:
                for t, im in zip(elements, images):
                    if phi_inverse(im, lam, mu, n) != t:
                        ok = False
                        break
            if ok and elements:
                bundles = [q_symbols(t, n) for t in elements]
                same_q = all(b.partial_q == bundles[0].partial_q
                             and b.final_q == bundles[0].final_q for b in bundles)
                shape_ok = shape_of(bundles[0].final_q) == lam
                ok = same_q and shape_ok
            report.add(f"bijection n={n} lam={lam} mu={mu}", ok,
                       "" if ok else f"|domres|={len(elements)} |LRS|={len(lrs)}")


def verify_q_rigidity(n: int, max_size: int, report: Report) -> None:
    for lam in partitions_up_to(max_size, 2 * n - 1):
        table = domres_endpoints(lam, n)
        for mu in table:
            bundles = [q_symbols(t, n) for t in enumerate_domres(lam, n, mu)]
            same = all(b.partial_q == bundles[0].partial_q
                       and b.final_q == bundles[0].final_q for b in bundles)
            shape_ok = all(shape_of(b.final_q) == lam for b in bundles)
            report.add(f"q-rigidity n={n} lam={lam} mu={mu}", same and shape_ok)


def verify_polytopes(n: int, max_size: int, report: Report) -> None:
    from .lr import enumerate_lr
    from .polytopes import (
        domres_lattice_points,
        domres_point_of,
        lr_lattice_points,
        skew_to_lr_point,
    )

    for lam in partitions_up_to(max_size, n):
        if not is_stable(lam, n):
            continue
        for mu in stable_subshapes(lam, n):
            points = set(domres_lattice_points(lam, mu, n))
            direct = {domres_point_of(t, n) for t in enumerate_domres(lam, n, mu)}
            report.add(f"domres-polytope n={n} lam={lam} mu={mu}", points == direct,
                       "" if points == direct
                       else f"{len(points)} lattice points vs {len(direct)} tableaux")
            lr_points = set(lr_lattice_points(lam, mu, n))
            size = sum(lam) - sum(mu)
            from .lr import _partitions
            all_eta = [eta for eta in _partitions(size, 2 * n - 1)]
            lr_direct = {skew_to_lr_point(t, n)
                         for eta in all_eta for t in enumerate_lr(lam, mu, tuple(eta))}
            report.add(f"lr-polytope n={n} lam={lam} mu={mu}", lr_points == lr_direct,
                       "" if lr_points == lr_direct
                       else f"{len(lr_points)} lattice points vs {len(lr_direct)} tableaux")


def verify_burge(max_entry: int, max_pairs: int, report: Report) -> None:
    seen = {}
    count = 0
    ok_shape = ok_round = ok_injective = True
    for top, bottom in iter_special_arrays(range(1, max_entry + 1), max_pairs):
        count += 1
        tab = array_to_even_tableau(top, bottom)
        if not is_even_shape(shape_of(tab)):
            ok_shape = False
        if tab in seen and seen[tab] != (top, bottom):
            ok_injective = False
        seen[tab] = (top, bottom)
        if even_tableau_to_array(tab) != (top, bottom):
            ok_round = False
    report.add(f"burge-even-shape entries<={max_entry} r<={max_pairs}", ok_shape,
               f"{count} arrays")
    report.add(f"burge-injective entries<={max_entry} r<={max_pairs}", ok_injective)
    report.add(f"burge-round-trip entries<={max_entry} r<={max_pairs}", ok_round)


def verify_characters(n_values: Iterable[int], max_size: int, report: Report) -> None:
    from .characters import bialternant_check

    for m in (2, 3, 4):
        for lam in partitions_up_to(min(max_size, 6), m):
            report.add(f"bialternant m={m} lam={lam}", bialternant_check(lam, m))
    for n in n_values:
        for lam in partitions_up_to(max_size, 2 * n - 1):
            char = restricted_character(lam, n)
            sym = is_weyl_symmetric(char)
            mass = sum(char.values())
            dim = weyl_dim_sl(lam, 2 * n)
            report.add(f"restricted-char n={n} lam={lam}", sym and mass == dim,
                       "" if sym and mass == dim else f"symmetric={sym} mass={mass} dim={dim}")


def full_sweep(n_values=(2, 3), max_size: int = 8, fault: bool = False) -> Report:
    report = Report()
    for n in n_values:
        verify_triple_agreement(n, max_size, report, fault=fault)
        verify_bijection(n, max_size, report)
        verify_q_rigidity(n, max_size, report)
        verify_polytopes(n, max_size, report)
    verify_burge(12, 4, report)
    verify_characters(n_values, max_size, report)
    return report
