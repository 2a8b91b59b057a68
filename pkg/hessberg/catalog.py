"""
Catalog of semisimple Hessenberg varieties: one row per (Levi datum,
Hessenberg space) with its Betti numbers and both connectedness verdicts.
"""

import csv
import hashlib
import io
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from hessberg.errors import InputError
from hessberg.hessenberg import enumerate_all
from hessberg.report import compact, render, to_json
from hessberg.rootsys import build_root_system, parse_cartan
from hessberg.runner import run_tasks
from hessberg.semisimple import betti_numbers, disconnection_witness, is_connected_by_criterion
from hessberg.settings import DEFAULT_SETTINGS, build_settings
from hessberg.weyl import all_levis, levi_datum, weyl_group

logger = logging.getLogger(__name__)

CSV_HEADER = ['cartan', 'levi', 'hess', 'betti', 'poincare', 'conn_betti', 'conn_criterion', 'witness', 'agree']
FORMATS = ('csv', 'json', 'text')


@dataclass(frozen=True)
class CatalogRow:
    cartan: str
    levi: Tuple[int, ...]
    hess: Tuple[Tuple[int, ...], ...]
    hess_text: str
    betti: Tuple[int, ...]
    poincare: str
    conn_betti: bool
    conn_criterion: bool
    witness: Optional[str]

    @property
    def agree(self):
        return self.conn_betti == self.conn_criterion

    def as_dict(self):
        return {
            'cartan': self.cartan,
            'levi': list(self.levi),
            'hess': [list(v) for v in self.hess],
            'betti': list(self.betti),
            'poincare': self.poincare,
            'conn_betti': self.conn_betti,
            'conn_criterion': self.conn_criterion,
            'witness': self.witness,
            'agree': self.agree,
        }

    def csv_fields(self):
        return [
            self.cartan,
            compact(list(self.levi)),
            compact([list(v) for v in self.hess]),
            compact(list(self.betti)),
            self.poincare,
            compact(self.conn_betti),
            compact(self.conn_criterion),
            self.witness or "",
            compact(self.agree),
        ]


def catalog_row(M, H) -> CatalogRow:
    table = betti_numbers(M, H)
    criterion = is_connected_by_criterion(M, H)
    witness = None
    if not criterion:
        witness = str(disconnection_witness(M, H).v)
    return CatalogRow(
        cartan=M.rs.cartan.name,
        levi=tuple(M.labels),
        hess=tuple(tuple(v) for v in H.vectors()),
        hess_text=str(H),
        betti=table.counts,
        poincare=table.poincare,
        conn_betti=table.components == 1,
        conn_criterion=criterion,
        witness=witness,
    )


@lru_cache(maxsize=None)
def _spaces(rs, rank_limit):
    return tuple(enumerate_all(rs, rank_limit))


def levi_rows(task) -> List[CatalogRow]:
    """Worker: every Hessenberg space for one Levi datum."""
    cartan_name, labels, weyl_limit, rank_limit = task
    rs = build_root_system(parse_cartan(cartan_name))
    M = levi_datum(weyl_group(rs, weyl_limit), [i - 1 for i in labels])
    return [catalog_row(M, H) for H in _spaces(rs, rank_limit)]


class CatalogBuilder:
    """
    Builds the catalog of one type, optionally across worker processes.
    """

    def __init__(self, cartan, jobs=1, force=False, additional_settings=None):
        self.cartan = parse_cartan(cartan) if isinstance(cartan, str) else cartan
        self.settings = build_settings(additional_settings)
        self.settings['JOBS'] = jobs
        self.force = force
        self.rows: List[CatalogRow] = []

    def build(self) -> List[CatalogRow]:
        weyl_limit = None if self.force else self.settings['WEYL_ORDER_LIMIT']
        rank_limit = None if self.force else self.settings['ENUMERATION_RANK_LIMIT']
        if self.force:
            logger.warning(f"Size guards disabled for the {self.cartan} catalog")
        rs = build_root_system(self.cartan)
        levis = all_levis(weyl_group(rs, weyl_limit))
        tasks = [(self.cartan.name, tuple(M.labels), weyl_limit, rank_limit) for M in levis]
        self.rows = [row for rows in run_tasks(levi_rows, tasks, self.settings) for row in rows]
        disagreements = sum(not row.agree for row in self.rows)
        logger.info(f"Catalog {self.cartan}: {len(self.rows)} rows, {disagreements} disagreements")
        return self.rows

    @property
    def disagreements(self) -> List[CatalogRow]:
        return [row for row in self.rows if not row.agree]

    def digest(self) -> str:
        return catalog_digest(self.rows)


def build_catalog(cartan, jobs=1, force=False) -> List[CatalogRow]:
    """Convenience function to build the catalog of one type."""
    return CatalogBuilder(cartan, jobs=jobs, force=force).build()


def emit_catalog(rows: Sequence[CatalogRow], fmt=DEFAULT_SETTINGS['FORMAT']) -> bytes:
    """Serialize rows as UTF-8 with LF line endings."""
    if fmt == 'csv':
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow(row.csv_fields())
        text = buffer.getvalue()
    elif fmt == 'json':
        text = to_json([row.as_dict() for row in rows])
    elif fmt == 'text':
        text = render('catalog', rows=list(rows))
    else:
        raise InputError(f"Unknown catalog format: {fmt!r} (expected one of {', '.join(FORMATS)})")
    return text.encode('utf-8')


def catalog_digest(rows: Sequence[CatalogRow]) -> str:
    """sha256 of the canonical CSV."""
    return hashlib.sha256(emit_catalog(rows, 'csv')).hexdigest()
