"""
Betti numbers and connectedness of semisimple Hessenberg varieties B(S, H).

The semisimple element S only enters through its centralizer, a standard
Levi datum Delta_M. Every Schubert cell X_w meets B(S, H) in an affine space
of dimension |Phi_y| + |Phi_v & v(Phi_H^-)| where w = y v, so the Betti
numbers are a histogram over W.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import sympy as sp

from hessberg.errors import CentralLeviError, NoWitnessError, PropertyViolation
from hessberg.hessenberg import HessenbergSpace, contains_negative_simples
from hessberg.rootsys import Root, simple_root, upper_set
from hessberg.weyl import LeviDatum, WeylElement, coset_decompose, weyl_from_inversions

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CellReport:
    w: WeylElement
    y: WeylElement
    v: WeylElement
    dim: int
    ambient_length: int


def poincare_string(counts) -> str:
    """Render sum n_k q^k, e.g. ``q**2 + 4*q + 1``."""
    q = sp.Symbol('q')
    return str(sp.Poly(list(reversed(counts)), q).as_expr())


@dataclass(frozen=True)
class BettiTable:
    counts: Tuple[int, ...]
    cells: Tuple[CellReport, ...]

    @property
    def poincare(self) -> str:
        return poincare_string(self.counts)

    @property
    def euler(self) -> int:
        """Sum of the n_k (the number of cells)."""
        return sum(self.counts)

    @property
    def components(self) -> int:
        return self.counts[0]

    @property
    def point_cells(self) -> Tuple[CellReport, ...]:
        """Cells that are points, other than the one at e."""
        return tuple(c for c in self.cells if c.dim == 0 and not c.w.is_identity)


def _translate(perm, mask, rs):
    image = 0
    for b in rs.ids_of(mask):
        image |= 1 << perm[b]
    return image


def cell(w: WeylElement, M: LeviDatum, H: HessenbergSpace) -> CellReport:
    y, v = coset_decompose(w, M)
    rs = M.rs
    dim = y.length + bin(v.inversions & _translate(v.perm, H.neg_mask, rs)).count("1")
    return CellReport(w=w, y=y, v=v, dim=dim, ambient_length=w.length)


def cell_dimension(w: WeylElement, M: LeviDatum, H: HessenbergSpace) -> int:
    """dim(X_w & B(S, H)) = |Phi_y| + |Phi_v & v(Phi_H^-)|."""
    return cell(w, M, H).dim


def betti_numbers(M: LeviDatum, H: HessenbergSpace) -> BettiTable:
    cells = tuple(cell(w, M, H) for w in M.group)
    counts = [0] * (M.rs.n_positive + 1)
    for report in cells:
        counts[report.dim] += 1
    return BettiTable(counts=tuple(counts), cells=cells)


def is_connected_by_betti(M: LeviDatum, H: HessenbergSpace) -> bool:
    return betti_numbers(M, H).components == 1


def is_regular(M: LeviDatum) -> bool:
    """Delta_M empty: S is regular and M is the torus."""
    return M.is_torus


def is_connected_by_criterion(M: LeviDatum, H: HessenbergSpace) -> bool:
    """Connected iff -Delta lies in Phi_H^-; always connected when S is central."""
    if M.is_central:
        return True
    return contains_negative_simples(H)


def zero_dimensional_cells(M: LeviDatum, H: HessenbergSpace) -> List[WeylElement]:
    """Every w != e whose cell is a point."""
    return [c.w for c in betti_numbers(M, H).point_cells]


@dataclass(frozen=True)
class DisconnectionWitness:
    alpha: Root
    v: WeylElement
    # 'nilradical' (alpha in Phi(u_Q)) or 'levi' (alpha in Phi(m))
    case: str
    # levi case only: Phi_w equals the upper set of alpha, and w^-1 = y v
    w: Optional[WeylElement] = None
    y: Optional[WeylElement] = None

    # allow unpacking as (alpha, v)
    def __iter__(self):
        return iter((self.alpha, self.v))


def witness_problems(M: LeviDatum, H: HessenbergSpace, witness: DisconnectionWitness) -> List[str]:
    """Ways in which ``witness`` fails to certify a second point component."""
    rs = M.rs
    v = witness.v
    problems = []
    if v.is_identity:
        problems.append("v is the identity")
    if v.inversions & ~M.phi_uq_mask:
        problems.append(f"Phi_v of {v} is not inside Phi(u_Q)")
    if _translate(v.inverse_perm, v.inversions, rs) & H.neg_mask:
        problems.append(f"v^-1(Phi_v) meets Phi_H^- for v = {v}")
    if cell_dimension(v, M, H) != 0:
        problems.append(f"cell of {v} has positive dimension")
    upper = rs.mask_of(-g for g in upper_set(rs, witness.alpha))
    if upper & H.neg_mask:
        problems.append(f"-Phi>={witness.alpha} meets Phi_H^-")
    return problems


def disconnection_witness(M: LeviDatum, H: HessenbergSpace) -> DisconnectionWitness:
    """
    A simple root alpha with -alpha outside Phi_H^- and a minimal coset
    representative v != e whose cell is a point.
    """
    if M.is_central:
        raise CentralLeviError("S is central: B(S, H) is the flag variety and has no witness")
    rs = M.rs
    W = M.group
    missing = [i for i in range(rs.rank) if not H.neg_mask >> rs.negate_id(i) & 1]
    if not missing:
        raise NoWitnessError(f"-Delta is contained in Phi_H^- ({H}); B(S, H) is connected")
    i = missing[0]
    alpha = simple_root(rs.rank, i)

    if i not in M.simple_subset:
        witness = DisconnectionWitness(alpha=alpha, v=W.generators[i], case='nilradical')
    else:
        w = weyl_from_inversions(W, upper_set(rs, alpha))
        y, v = coset_decompose(W.inverse(w), M)
        witness = DisconnectionWitness(alpha=alpha, v=v, case='levi', w=w, y=y)

    problems = witness_problems(M, H, witness)
    if problems:
        logger.error(f"Unsound witness for Levi [{M}] and {H}: {'; '.join(problems)}")
        raise PropertyViolation(f"unsound disconnection witness: {problems[0]}")
    return witness
