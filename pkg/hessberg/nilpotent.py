"""
Torus-fixed points and rational-curve chains of nilpotent Hessenberg
varieties B(N, H), at the level of root supports.

N is modelled by its support Phi_N, the positive roots gamma with a nonzero
E_gamma coefficient. The flag w.b lies in B(N, H) exactly when
w^-1(Phi_N) is inside Phi_H.
"""

import logging
from dataclasses import dataclass, field
from typing import FrozenSet, List, Tuple

from hessberg.errors import (
    GuardExceeded,
    IdentityHasNoDescent,
    InputError,
    NotAFixedPoint,
    NotARoot,
    NotMaximalInversion,
    PropertyViolation,
)
from hessberg.hessenberg import HessenbergSpace
from hessberg.rootsys import Root, RootSystem, format_root, leq, parse_root_list
from hessberg.weyl import WeylElement, WeylGroup, maximal_inversions

logger = logging.getLogger(__name__)

# Phi(gamma, N) uses c * gamma + alpha for these c
MULTIPLES = (1, 2, 3)


@dataclass(frozen=True)
class NilpotentSupport:
    rs: RootSystem = field(repr=False)
    mask: int

    @property
    def roots(self) -> FrozenSet[Root]:
        return self.rs.roots_of(self.mask)

    @property
    def is_zero(self):
        return not self.mask

    def vectors(self) -> List[List[int]]:
        return [list(r.coeffs) for r in self.rs.sorted_roots(self.mask)]

    def __str__(self):
        if not self.mask:
            return "0"
        return ",".join(format_root(r) for r in self.rs.sorted_roots(self.mask))


def nilpotent_support(rs: RootSystem, roots) -> NilpotentSupport:
    roots = list(roots)
    for root in roots:
        rs.index_of(root)
        if not root.is_positive:
            raise InputError(f"nilpotent support must consist of positive roots, got {root}")
    return NilpotentSupport(rs, rs.mask_of(roots))


def regular_support(rs: RootSystem) -> NilpotentSupport:
    """Phi_N = Delta, the regular nilpotent element."""
    return NilpotentSupport(rs, (1 << rs.rank) - 1)


def parse_nilpotent(text, rs: RootSystem) -> NilpotentSupport:
    """Comma-separated positive roots; an empty string or ``0`` is N = 0."""
    text = (text or "").strip()
    if text in ("", "0"):
        return NilpotentSupport(rs, 0)
    return nilpotent_support(rs, parse_root_list(text, rs.rank))


def all_supports(rs: RootSystem) -> List[NilpotentSupport]:
    n = rs.n_positive
    if n > 16:
        raise GuardExceeded(f"Refusing to list 2^{n} nilpotent supports for {rs.cartan}")
    return [NilpotentSupport(rs, mask) for mask in range(1 << n)]


def is_fixed_point(w: WeylElement, N: NilpotentSupport, H: HessenbergSpace) -> bool:
    full = H.full_mask
    return all(full >> w.inverse_perm[p] & 1 for p in N.rs.ids_of(N.mask))


def fixed_points(W: WeylGroup, N: NilpotentSupport, H: HessenbergSpace) -> List[WeylElement]:
    """Every w with w^-1(Phi_N) inside Phi_H, in group order (e first)."""
    return [w for w in W if is_fixed_point(w, N, H)]


def phi_gamma_N(rs: RootSystem, gamma: Root, N: NilpotentSupport) -> FrozenSet[Root]:
    """Positive roots c * gamma + alpha with c in 1..3 and alpha in Phi_N."""
    rs.index_of(gamma)
    if not gamma.is_positive:
        raise NotARoot(gamma.coeffs, f"{gamma} is not a positive root")
    found = set()
    for alpha in N.roots:
        for c in MULTIPLES:
            i = rs.find(c * g + a for g, a in zip(gamma.coeffs, alpha.coeffs))
            if i is not None and rs.is_positive_id(i):
                found.add(rs.roots[i])
    return frozenset(found)


def translate_split(w: WeylElement, H: HessenbergSpace) -> Tuple[FrozenSet[Root], FrozenSet[Root]]:
    """
    w(Phi_H) & Phi+ as the disjoint pair (Phi_w^c, w(Phi_H^-) & Phi+).

    The first part is the support of u_w^c, which therefore lies in w.H.
    """
    rs = H.rs
    image = 0
    for b in rs.ids_of(H.full_mask):
        image |= 1 << w.perm[b]
    image &= rs.positive_mask
    complement = rs.positive_mask & ~w.inversions
    lowered = 0
    for b in rs.ids_of(H.neg_mask):
        lowered |= 1 << w.perm[b]
    lowered &= rs.positive_mask
    if complement & lowered or complement | lowered != image:
        raise PropertyViolation(f"w(Phi_H) does not split over Phi_w^c for w = {w} and {H}")
    return rs.roots_of(complement), rs.roots_of(lowered)


def curve_admissible(w: WeylElement, gamma: Root, N: NilpotentSupport, H: HessenbergSpace) -> bool:
    """
    Check that the curve U_gamma w.b stays inside B(N, H).

    (a) every root of Phi(gamma, N) lies outside Phi_w, so the correction
        terms of u^-1.N land in u_w^c, which w.H contains;
    (b) the limit point s_gamma w.b is again a fixed point.
    """
    rs = N.rs
    if not is_fixed_point(w, N, H):
        raise NotAFixedPoint(f"{w} is not a fixed point of B(N, H) for N = {N}, {H}")
    if gamma not in maximal_inversions(w):
        raise NotMaximalInversion(f"{gamma} is not a maximal inversion of {w}")

    complement = rs.positive_mask & ~w.inversions
    outside = rs.mask_of(phi_gamma_N(rs, gamma, N)) & ~complement
    if outside:
        bad = ", ".join(format_root(r) for r in rs.sorted_roots(outside))
        logger.error(f"Phi({gamma}, N) meets Phi_w for w = {w}, N = {N}: {bad}")
        raise PropertyViolation(f"Phi({gamma}, N) is not inside Phi_w^c for w = {w}")

    W = w.group
    limit = W.compose(W.reflection(gamma), w)
    if not is_fixed_point(limit, N, H):
        logger.error(f"Limit point {limit} of the curve at {w} along {gamma} left B(N, H)")
        raise PropertyViolation(f"s_gamma w = {limit} is not a fixed point for N = {N}, {H}")
    return True


@dataclass(frozen=True)
class ChainStep:
    w_before: WeylElement
    gamma: Root
    w_after: WeylElement


@dataclass(frozen=True)
class Chain:
    start: WeylElement
    steps: Tuple[ChainStep, ...]

    @property
    def end(self) -> WeylElement:
        return self.steps[-1].w_after if self.steps else self.start

    @property
    def elements(self) -> List[WeylElement]:
        """start, then each w_after in turn."""
        return [self.start] + [step.w_after for step in self.steps]

    def __len__(self):
        return len(self.steps)


def descend(w: WeylElement, N: NilpotentSupport, H: HessenbergSpace) -> ChainStep:
    """One curve from w down to s_gamma w, gamma the smallest maximal inversion."""
    if w.is_identity:
        raise IdentityHasNoDescent("the identity has no inversions to descend along")
    if not is_fixed_point(w, N, H):
        raise NotAFixedPoint(f"{w} is not a fixed point of B(N, H) for N = {N}, {H}")
    gamma = min(maximal_inversions(w), key=lambda g: g.coeffs)
    curve_admissible(w, gamma, N, H)
    W = w.group
    after = W.compose(W.reflection(gamma), w)
    if after.length >= w.length:
        raise PropertyViolation(f"s_gamma w = {after} is not shorter than {w}")
    return ChainStep(w_before=w, gamma=gamma, w_after=after)


def connect_chain(w: WeylElement, N: NilpotentSupport, H: HessenbergSpace) -> Chain:
    """Curves from w.b down to b, one length drop at a time."""
    if not is_fixed_point(w, N, H):
        raise NotAFixedPoint(f"{w} is not a fixed point of B(N, H) for N = {N}, {H}")
    steps = []
    current = w
    while not current.is_identity:
        step = descend(current, N, H)
        steps.append(step)
        current = step.w_after
        if len(steps) > w.length:
            raise PropertyViolation(f"chain from {w} is longer than l(w) = {w.length}")
    return Chain(start=w, steps=tuple(steps))


def connect_points(w1: WeylElement, w2: WeylElement, N: NilpotentSupport, H: HessenbergSpace) -> List[WeylElement]:
    """
    Fixed points joining w1 to w2 through the identity, consecutive entries
    linked by a single reflection.
    """
    down = connect_chain(w1, N, H).elements
    up = connect_chain(w2, N, H).elements
    return down + list(reversed(up))[1:]


def phi_gamma_N_dominates(rs: RootSystem, gamma: Root, N: NilpotentSupport) -> bool:
    """Whether every root of Phi(gamma, N) strictly dominates gamma."""
    return all(g != gamma and leq(gamma, g) for g in phi_gamma_N(rs, gamma, N))
