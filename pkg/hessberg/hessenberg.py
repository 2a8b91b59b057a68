"""
Hessenberg spaces as sets of negative roots.

A Hessenberg space H contains b, so it is determined by the negative roots
Phi_H^- it contains; these must be closed under addition with positive roots.
Equivalently -Phi_H^- is a lower order ideal of the positive-root poset.
"""

import logging
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Sequence

import networkx as nx

from hessberg.errors import (
    ClosureViolation,
    GuardExceeded,
    HessenbergFunctionError,
    InputError,
    ParseError,
)
from hessberg.rootsys import (
    Root,
    RootSystem,
    build_root_system,
    cartan_datum,
    format_root,
    parse_root_list,
    root_poset,
)
from hessberg.settings import DEFAULT_SETTINGS

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HessenbergSpace:
    rs: RootSystem = field(repr=False)
    neg_mask: int

    @property
    def neg_roots(self) -> FrozenSet[Root]:
        return self.rs.roots_of(self.neg_mask)

    @property
    def full_mask(self):
        """Phi_H = Phi+ together with Phi_H^-."""
        return self.rs.positive_mask | self.neg_mask

    @property
    def size(self):
        return bin(self.neg_mask).count("1")

    def contains(self, root: Root) -> bool:
        return bool(self.full_mask >> self.rs.index_of(root) & 1)

    def vectors(self) -> List[List[int]]:
        """Negative roots as coefficient vectors, in id order."""
        return [list(r.coeffs) for r in self.rs.sorted_roots(self.neg_mask)]

    def __str__(self):
        return "neg=" + ",".join(format_root(r) for r in self.rs.sorted_roots(self.neg_mask))


def springer_space(rs: RootSystem) -> HessenbergSpace:
    """H = b."""
    return HessenbergSpace(rs, 0)


def full_space(rs: RootSystem) -> HessenbergSpace:
    """H = g."""
    return HessenbergSpace(rs, rs.negative_mask)


def validate(rs: RootSystem, roots: Iterable[Root]) -> HessenbergSpace:
    """Build the space with negative part ``roots`` or raise ClosureViolation."""
    roots = list(roots)
    for root in roots:
        rs.index_of(root)
        if root.is_positive:
            raise InputError(f"{root} is not a negative root")
    mask = rs.mask_of(roots)
    for beta in rs.sorted_roots(mask):
        for alpha in rs.positive_roots:
            total = rs.add(beta, alpha)
            if total is not None and not total.is_positive and not mask >> rs.index_of(total) & 1:
                raise ClosureViolation(beta, alpha, total)
    return HessenbergSpace(rs, mask)


def enumerate_all(rs: RootSystem, rank_limit=DEFAULT_SETTINGS['ENUMERATION_RANK_LIMIT']) -> List[HessenbergSpace]:
    """
    Every Hessenberg space, ordered by |Phi_H^-| then bitset value.

    Each antichain of the positive-root poset generates the order ideal
    below it; negating that ideal gives Phi_H^-.
    """
    if rank_limit is not None and rs.rank > rank_limit:
        raise GuardExceeded(f"Hessenberg enumeration refused for rank {rs.rank} > {rank_limit}")
    G = root_poset(rs)
    spaces = []
    for antichain in nx.antichains(G):
        ideal = set(antichain)
        for top in antichain:
            ideal |= nx.ancestors(G, top)
        spaces.append(HessenbergSpace(rs, rs.mask_of(-g for g in ideal)))
    spaces.sort(key=lambda H: (H.size, H.neg_mask))
    logger.info(f"Enumerated {len(spaces)} Hessenberg spaces for {rs.cartan}")
    return spaces


def filter_all(rs: RootSystem) -> List[HessenbergSpace]:
    """Brute-force filter over all subsets of the negative roots (small rank only)."""
    n = rs.n_positive
    if n > 16:
        raise GuardExceeded(f"Refusing to filter 2^{n} subsets for {rs.cartan}")
    spaces = []
    for bits in range(1 << n):
        try:
            spaces.append(validate(rs, rs.roots_of(bits << n)))
        except ClosureViolation:
            continue
    spaces.sort(key=lambda H: (H.size, H.neg_mask))
    return spaces


def _check_hessenberg_function(h: Sequence[int], n: int):
    if n < 2:
        raise HessenbergFunctionError(f"Hessenberg functions need n >= 2, got {n}")
    if len(h) != n:
        raise HessenbergFunctionError(f"Hessenberg function has {len(h)} values, expected {n}")
    for i, value in enumerate(h, start=1):
        if not i <= value <= n:
            raise HessenbergFunctionError(f"h({i}) = {value} must satisfy {i} <= h({i}) <= {n}")
        if i > 1 and value < h[i - 2]:
            raise HessenbergFunctionError(f"Hessenberg function must be nondecreasing, got {list(h)}")


def from_hessenberg_function(h: Sequence[int], n: int) -> HessenbergSpace:
    """
    Type A_{n-1} space of a Hessenberg function: e_i - e_j with i > j and
    i <= h(j).
    """
    h = [int(x) for x in h]
    _check_hessenberg_function(h, n)
    rs = build_root_system(cartan_datum('A', n - 1))
    roots = []
    for j in range(1, n + 1):
        for i in range(j + 1, h[j - 1] + 1):
            coeffs = [0] * (n - 1)
            # e_i - e_j = -(alpha_j + ... + alpha_{i-1})
            for k in range(j - 1, i - 1):
                coeffs[k] = -1
            roots.append(Root(tuple(coeffs)))
    return validate(rs, roots)


def to_hessenberg_function(H: HessenbergSpace) -> List[int]:
    """Inverse of from_hessenberg_function (type A only)."""
    if H.rs.cartan.family != 'A':
        raise InputError(f"Hessenberg functions are only defined in type A, not {H.rs.cartan}")
    n = H.rs.rank + 1
    h = list(range(1, n + 1))
    for root in H.neg_roots:
        support = [k for k, c in enumerate(root.coeffs) if c]
        j, i = support[0] + 1, support[-1] + 2
        h[j - 1] = max(h[j - 1], i)
    return h


def contains_negative_simples(H: HessenbergSpace) -> bool:
    rs = H.rs
    return all(H.neg_mask >> rs.negate_id(i) & 1 for i in range(rs.rank))


def parse_hessenberg(text, rs: RootSystem) -> HessenbergSpace:
    """
    ``neg=-a1,-a2`` (explicit negative roots, ``neg=`` is b), ``h=2,3,3``
    (type A Hessenberg function), ``b`` or ``g``.
    """
    text = (text or "").strip()
    if text == "b":
        return springer_space(rs)
    if text == "g":
        return full_space(rs)
    key, sep, value = text.partition("=")
    if not sep or key.strip() not in ("neg", "h"):
        raise ParseError(f"Malformed Hessenberg space: {text!r} (expected neg=..., h=..., b or g)")
    if key.strip() == "neg":
        return validate(rs, parse_root_list(value, rs.rank))
    if rs.cartan.family != 'A':
        raise InputError(f"h=... requires a type A root system, not {rs.cartan}")
    try:
        h = [int(x) for x in value.split(",") if x.strip()]
    except ValueError:
        raise ParseError(f"Malformed Hessenberg function: {value!r}") from None
    H = from_hessenberg_function(h, rs.rank + 1)
    return HessenbergSpace(rs, H.neg_mask)


def parse_hessenberg_spaces(text, rs: RootSystem,
                            rank_limit=DEFAULT_SETTINGS['ENUMERATION_RANK_LIMIT']) -> List[HessenbergSpace]:
    """Like parse_hessenberg, but ``all`` expands to every Hessenberg space of ``rs``."""
    if (text or "").strip() == "all":
        return enumerate_all(rs, rank_limit)
    return [parse_hessenberg(text, rs)]
