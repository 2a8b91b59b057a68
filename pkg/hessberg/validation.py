"""
Exhaustive property suite behind ``hessberg validate-all``.

Every check counts the cases it looked at and collects a one-line message
per failure. Per-type checks run in worker processes; the named Betti
values and the parallel/sequential catalog comparison run in-process.
"""

import json
import logging
import os
import time
from typing import Dict, List

from hessberg.catalog import CatalogBuilder
from hessberg.errors import InputError, InversionSetError, PropertyViolation
from hessberg.hessenberg import enumerate_all, filter_all, from_hessenberg_function, full_space, springer_space
from hessberg.nilpotent import (
    all_supports,
    connect_chain,
    curve_admissible,
    fixed_points,
    phi_gamma_N_dominates,
    regular_support,
)
from hessberg.rootsys import (
    build_root_system,
    is_closed,
    parse_cartan,
    partial_sum_chain,
    simple_root,
    upper_set,
)
from hessberg.runner import run_tasks
from hessberg.semisimple import betti_numbers, disconnection_witness, is_connected_by_criterion
from hessberg.settings import build_settings
from hessberg.weyl import (
    all_levis,
    classical_poincare_counts,
    coset_decompose,
    inversion_set,
    length_polynomial,
    levi_datum,
    maximal_inversions,
    scan_for_inversions,
    weyl_from_inversions,
    weyl_group,
    weyl_order,
)

logger = logging.getLogger(__name__)

EXPECTED_SPACE_COUNTS = {'A1': 2, 'A2': 5, 'B2': 6, 'G2': 8, 'A3': 14, 'B3': 20, 'C3': 20}

TYPE_CHECKS = (
    'enumeration',
    'weyl_lengths',
    'kostant',
    'coset',
    'euler',
    'full_space_betti',
    'agreement',
    'witness_soundness',
    'upper_set_claim',
    'reverse_direction',
    'phi_gamma_dominance',
    'springer_regular',
    'zero_nilpotent',
    'curve_admissible',
    'chain_termination',
)


class CheckStats:
    def __init__(self):
        self.cases = 0
        self.failures: List[str] = []

    def record(self, ok, message):
        self.cases += 1
        if not ok:
            self.failures.append(message)

    def as_dict(self):
        return {'cases': self.cases, 'failures': list(self.failures)}


def _check_enumeration(rs, W, spaces, stats):
    expected = EXPECTED_SPACE_COUNTS.get(rs.cartan.name)
    if expected is not None:
        stats.record(len(spaces) == expected, f"{len(spaces)} Hessenberg spaces, expected {expected}")
    if rs.n_positive <= 9:
        stats.record(list(spaces) == filter_all(rs), "antichain enumeration differs from the brute-force filter")
    stats.record(len(W) == weyl_order(rs.cartan), f"|W| = {len(W)}, expected {weyl_order(rs.cartan)}")


def _check_lengths(rs, W, stats):
    lengths = length_polynomial(W)
    stats.record(lengths == classical_poincare_counts(rs.cartan),
                 f"length counts {lengths} differ from the degree product")
    stats.record(W.longest.length == rs.n_positive, f"longest element has length {W.longest.length}")


def _check_kostant(rs, W, stats):
    for w in W:
        try:
            stats.record(weyl_from_inversions(W, inversion_set(w)) == w, f"inversion set of {w} rebuilds another element")
        except PropertyViolation as exc:
            stats.record(False, f"{w}: {exc}")
    if rs.rank > 2:
        return
    for mask in range(1 << rs.n_positive):
        roots = rs.roots_of(mask)
        expected = scan_for_inversions(W, roots)
        closed = is_closed(rs, roots) and is_closed(rs, frozenset(rs.positive_roots) - roots)
        stats.record(closed == (expected is not None), f"closed/co-closed test disagrees with the scan for {sorted(map(str, roots))}")
        try:
            found = weyl_from_inversions(W, roots)
        except InversionSetError:
            found = None
        except PropertyViolation as exc:
            stats.record(False, f"{sorted(map(str, roots))}: {exc}")
            continue
        stats.record(found == expected, f"peeling and scanning disagree on {sorted(map(str, roots))}")


def _check_cosets(rs, W, levis, stats):
    for M in levis:
        for w in W:
            y, v = coset_decompose(w, M)
            image = 0
            for p in rs.ids_of(v.inversions):
                image |= 1 << y.perm[p]
            ok = (W.compose(y, v) == w
                  and w.length == y.length + v.length
                  and not y.inversions & ~M.phi_m_mask
                  and not v.inversions & ~M.phi_uq_mask
                  and not y.inversions & image
                  and w.inversions == y.inversions | image)
            stats.record(ok, f"levi=[{M}] w={w}: y={y} v={v} breaks the coset decomposition")


def _missing_simple(rs, H):
    return [i for i in range(rs.rank) if not H.neg_mask >> rs.negate_id(i) & 1]


def _check_upper_set_claim(rs, spaces, stats):
    for H in spaces:
        for i in _missing_simple(rs, H):
            alpha = simple_root(rs.rank, i)
            upper = upper_set(rs, alpha)
            negated = rs.mask_of(-g for g in upper)
            stats.record(not negated & H.neg_mask, f"{H}: -Phi>={alpha} meets Phi_H^-")
            # -gamma in Phi_H^- would give -(alpha_1 + ... + alpha_j) and then -alpha in Phi_H^-
            for gamma in upper:
                chain = partial_sum_chain(rs, gamma)
                if alpha not in chain:
                    stats.record(False, f"partial-sum chain of {gamma} avoids {alpha}")
                    continue
                j = chain.index(alpha)
                prefix = [0] * rs.rank
                blocked = True
                for k, step in enumerate(chain):
                    prefix = [a + b for a, b in zip(prefix, step.coeffs)]
                    if k >= j and H.neg_mask >> rs.find([-c for c in prefix]) & 1:
                        blocked = False
                stats.record(blocked, f"{H}: chain of {gamma} reaches Phi_H^- above {alpha}")


def _check_semisimple(rs, W, levis, spaces, out):
    lengths = tuple(length_polynomial(W))
    for M in levis:
        for H in spaces:
            label = f"{rs.cartan} levi=[{M}] {H}"
            table = betti_numbers(M, H)
            out['euler'].record(table.euler == len(W), f"{label}: Betti numbers sum to {table.euler}")
            if M.is_central or H == full_space(rs):
                out['full_space_betti'].record(table.counts == lengths, f"{label}: {table.counts} != {lengths}")
            if M.is_central:
                continue
            criterion = is_connected_by_criterion(M, H)
            out['agreement'].record((table.components == 1) == criterion,
                                    f"{label}: n0={table.components} but criterion says {criterion}")
            if not criterion:
                try:
                    disconnection_witness(M, H)
                    out['witness_soundness'].record(True, label)
                except PropertyViolation as exc:
                    out['witness_soundness'].record(False, f"{label}: {exc}")
            missing = _missing_simple(rs, H)
            for c in table.point_cells:
                w_inverse = W.inverse(c.w)
                ok = (bool(missing) and c.y.is_identity
                      and not (w_inverse.inversions << rs.n_positive) & H.neg_mask)
                out['reverse_direction'].record(ok, f"{label}: point cell at {c.w} without a missing -alpha")


def _check_nilpotent(rs, W, spaces, out):
    for N in all_supports(rs):
        for H in spaces:
            label = f"{rs.cartan} N={N} {H}"
            points = fixed_points(W, N, H)
            if N.is_zero:
                out['zero_nilpotent'].record(len(points) == len(W), f"{label}: N = 0 misses fixed points")
            for w in points:
                if w.is_identity:
                    continue
                for gamma in sorted(maximal_inversions(w), key=lambda g: g.coeffs):
                    try:
                        out['curve_admissible'].record(curve_admissible(w, gamma, N, H), label)
                    except PropertyViolation as exc:
                        out['curve_admissible'].record(False, f"{label} w={w}: {exc}")
                try:
                    chain = connect_chain(w, N, H)
                except PropertyViolation as exc:
                    out['chain_termination'].record(False, f"{label} w={w}: {exc}")
                    continue
                lengths = [x.length for x in chain.elements]
                ok = (chain.end.is_identity and len(chain) <= w.length
                      and all(a > b for a, b in zip(lengths, lengths[1:])))
                out['chain_termination'].record(ok, f"{label}: chain from {w} has lengths {lengths}")


def type_checks(task) -> Dict[str, dict]:
    """Worker: every per-type check for one Cartan type."""
    cartan_name, nilpotent = task
    rs = build_root_system(parse_cartan(cartan_name))
    W = weyl_group(rs)
    levis = all_levis(W)
    spaces = enumerate_all(rs, None)
    out = {name: CheckStats() for name in TYPE_CHECKS}

    _check_enumeration(rs, W, spaces, out['enumeration'])
    _check_lengths(rs, W, out['weyl_lengths'])
    _check_kostant(rs, W, out['kostant'])
    _check_cosets(rs, W, levis, out['coset'])
    _check_semisimple(rs, W, levis, spaces, out)
    _check_upper_set_claim(rs, spaces, out['upper_set_claim'])

    if rs.n_positive <= 9:
        for N in all_supports(rs):
            for gamma in rs.positive_roots:
                out['phi_gamma_dominance'].record(phi_gamma_N_dominates(rs, gamma, N),
                                                  f"Phi({gamma}, N={N}) does not dominate {gamma}")
    springer = fixed_points(W, regular_support(rs), springer_space(rs))
    out['springer_regular'].record(springer == [W.identity], f"regular nilpotent fixed points {list(map(str, springer))}")
    if nilpotent:
        _check_nilpotent(rs, W, spaces, out)

    logger.info(f"Checked {cartan_name}: {sum(s.cases for s in out.values())} cases")
    return {name: stats.as_dict() for name, stats in out.items()}


def named_betti_values() -> CheckStats:
    """The A2 tables for M = T."""
    stats = CheckStats()
    rs = build_root_system(parse_cartan('A2'))
    M = levi_datum(weyl_group(rs), [])
    expected = [
        (from_hessenberg_function([2, 3, 3], 3), (1, 4, 1, 0)),
        (full_space(rs), (1, 2, 2, 1)),
        (springer_space(rs), (6, 0, 0, 0)),
    ]
    for H, counts in expected:
        got = betti_numbers(M, H).counts
        stats.record(got == counts, f"A2 levi=[] {H}: {got} != {counts}")
    return stats


class PropertySuite:
    """Runs the exhaustive checks and keeps their statistics."""

    def __init__(self, max_rank=None, jobs=1, additional_settings=None):
        self.settings = build_settings(additional_settings)
        if max_rank is not None:
            self.settings['MAX_RANK'] = max_rank
        self.settings['JOBS'] = jobs
        if self.settings['MAX_RANK'] < 1:
            raise InputError(f"--max-rank must be at least 1, got {self.settings['MAX_RANK']}")
        self.results: Dict[str, dict] = {}
        self.by_type: Dict[str, Dict[str, dict]] = {}
        self.elapsed = 0.0

    def _types(self, key):
        return [name for name in self.settings[key] if parse_cartan(name).rank <= self.settings['MAX_RANK']]

    @property
    def semisimple_types(self):
        return self._types('SEMISIMPLE_TYPES')

    @property
    def nilpotent_types(self):
        return self._types('NILPOTENT_TYPES')

    def run(self) -> Dict[str, dict]:
        start = time.perf_counter()
        nilpotent = set(self.nilpotent_types)
        names = self.semisimple_types + [t for t in self.nilpotent_types if t not in self.semisimple_types]
        tasks = [(name, name in nilpotent) for name in names]
        logger.info(f"Validating {', '.join(names)} (max rank {self.settings['MAX_RANK']})")
        self.by_type = dict(zip(names, run_tasks(type_checks, tasks, self.settings)))

        merged = {name: CheckStats() for name in TYPE_CHECKS}
        for cartan_name, checks in self.by_type.items():
            for name, stats in checks.items():
                merged[name].cases += stats['cases']
                merged[name].failures.extend(f"{cartan_name}: {f}" for f in stats['failures'])

        if 'A2' in self.semisimple_types:
            merged['named_betti'] = named_betti_values()
        merged['determinism'] = self._check_determinism()

        self.results = {name: stats.as_dict() for name, stats in merged.items()}
        self.elapsed = time.perf_counter() - start
        for name, stats in self.results.items():
            if stats['failures']:
                logger.error(f"Check {name} failed {len(stats['failures'])} of {stats['cases']} cases")
        return self.results

    def _check_determinism(self) -> CheckStats:
        stats = CheckStats()
        jobs = max(2, self.settings['JOBS'])
        for name in self.semisimple_types:
            sequential = CatalogBuilder(name, jobs=1)
            sequential.build()
            parallel = CatalogBuilder(name, jobs=jobs)
            parallel.build()
            stats.record(sequential.digest() == parallel.digest(),
                         f"{name}: catalog digest differs between 1 and {jobs} jobs")
        return stats

    @property
    def passed(self):
        return bool(self.results) and not any(stats['failures'] for stats in self.results.values())

    def get_statistics(self):
        if not self.results:
            logger.warning("No results available. Run the suite first.")
            return {}
        return {
            'max_rank': self.settings['MAX_RANK'],
            'types': list(self.by_type),
            'total_cases': sum(s['cases'] for s in self.results.values()),
            'total_failures': sum(len(s['failures']) for s in self.results.values()),
            'elapsed_seconds': round(self.elapsed, 3),
            'passed': self.passed,
        }

    def save_results(self, output_path="./validation_report.json"):
        """Write statistics, merged checks and the per-type breakdown as JSON."""
        if not self.results:
            logger.warning("No results available. Run the suite first.")
            return
        output = {
            'statistics': self.get_statistics(),
            'checks': self.results,
            'by_type': self.by_type,
        }
        directory = os.path.dirname(output_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(output_path, 'w', encoding='utf-8', newline='\n') as f:
            json.dump(output, f, indent=2, ensure_ascii=False)
            f.write("\n")
        logger.info(f"Validation report saved to {output_path}")


def validate_all(max_rank=None, jobs=1, output_path=None):
    """Convenience function: run the suite and return its statistics."""
    suite = PropertySuite(max_rank=max_rank, jobs=jobs)
    suite.run()
    if output_path:
        suite.save_results(output_path)
    return suite.get_statistics()
