"""
Weyl groups as permutation groups on root ids.

An element is stored as the permutation it induces on all roots, together
with its inverse, its inversion set Phi_w (a bitset over positive-root ids)
and its lexicographically smallest reduced word.
"""

import logging
import re
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import prod
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import sympy as sp

from hessberg.errors import (
    GuardExceeded,
    InputError,
    InversionSetError,
    NotARoot,
    ParseError,
    PropertyViolation,
)
from hessberg.rootsys import Root, RootSystem, closure_failure, leq
from hessberg.settings import DEFAULT_SETTINGS

logger = logging.getLogger(__name__)


def degrees(cartan):
    """Fundamental degrees of the Weyl group."""
    n = cartan.rank
    family = cartan.family
    if family == 'A':
        return list(range(2, n + 2))
    if family in 'BC':
        return list(range(2, 2 * n + 1, 2))
    if family == 'D':
        return sorted(list(range(2, 2 * n - 1, 2)) + [n])
    return {
        'E6': [2, 5, 6, 8, 9, 12],
        'E7': [2, 6, 8, 10, 12, 14, 18],
        'E8': [2, 8, 12, 14, 18, 20, 24, 30],
        'F4': [2, 6, 8, 12],
        'G2': [2, 6],
    }[cartan.name]


def weyl_order(cartan):
    return prod(degrees(cartan))


@dataclass(frozen=True, eq=False)
class WeylElement:
    perm: Tuple[int, ...] = field(repr=False)
    inverse_perm: Tuple[int, ...] = field(repr=False)
    inversions: int = field(repr=False)
    length: int
    canonical_word: Tuple[int, ...]
    index: int = field(repr=False)
    group: "WeylGroup" = field(repr=False)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)

    @property
    def is_identity(self):
        return self.length == 0

    def __call__(self, root: Root) -> Root:
        rs = self.group.rs
        return rs.roots[self.perm[rs.index_of(root)]]

    def __str__(self):
        return format_word(self)


def format_word(w: WeylElement) -> str:
    """``s1 s2 s1``, or ``e`` for the identity."""
    if not w.canonical_word:
        return "e"
    return " ".join(f"s{i + 1}" for i in w.canonical_word)


class WeylGroup:
    """A fully enumerated Weyl group."""

    def __init__(self, rs: RootSystem, perms: List[Tuple[int, ...]], words: Dict[Tuple[int, ...], Tuple[int, ...]]):
        self.rs = rs
        n = rs.n_positive
        order = sorted(perms, key=lambda p: (len(words[p]), words[p]))
        elements = []
        for idx, perm in enumerate(order):
            inverse = [0] * len(perm)
            for x, image in enumerate(perm):
                inverse[image] = x
            inversions = 0
            for p in range(n):
                if inverse[p] >= n:
                    inversions |= 1 << p
            elements.append(WeylElement(
                perm=perm,
                inverse_perm=tuple(inverse),
                inversions=inversions,
                length=bin(inversions).count("1"),
                canonical_word=words[perm],
                index=idx,
                group=self,
            ))
        self.elements: Tuple[WeylElement, ...] = tuple(elements)
        self.lookup: Dict[Tuple[int, ...], int] = {w.perm: w.index for w in elements}
        self.identity = self.elements[0]
        self.generators = tuple(self.from_word([i]) for i in range(rs.rank))
        self._reflections = self._build_reflections()

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return f"WeylGroup({self.rs.cartan}, order={len(self)})"

    def element(self, perm) -> WeylElement:
        try:
            return self.elements[self.lookup[tuple(perm)]]
        except KeyError:
            raise PropertyViolation("permutation is not an element of the Weyl group") from None

    def compose(self, a: WeylElement, b: WeylElement) -> WeylElement:
        """a followed after b, i.e. the product ab."""
        return self.element(tuple(a.perm[x] for x in b.perm))

    def inverse(self, w: WeylElement) -> WeylElement:
        return self.element(w.inverse_perm)

    def from_word(self, letters: Iterable[int]) -> WeylElement:
        """s_{i1} s_{i2} ... s_{ik} for 0-based letters."""
        table = self.rs.simple_reflection_table
        perm = list(range(2 * self.rs.n_positive))
        for i in reversed(list(letters)):
            if not 0 <= i < self.rs.rank:
                raise InputError(f"s{i + 1} is not a simple reflection of {self.rs.cartan}")
            perm = [table[i][x] for x in perm]
        return self.element(perm)

    def parse_word(self, text) -> WeylElement:
        """Parse ``s1 s2 s1``; ``e`` or an empty string is the identity."""
        tokens = (text or "").split()
        if tokens in ([], ["e"]):
            return self.identity
        letters = []
        for token in tokens:
            match = re.fullmatch(r"s(\d+)", token)
            if not match:
                raise ParseError(f"Malformed Weyl word: {text!r} (expected e.g. 's1 s2')")
            letters.append(int(match.group(1)) - 1)
        return self.from_word(letters)

    def reflection(self, gamma: Root) -> WeylElement:
        """The reflection s_gamma for a positive root gamma."""
        i = self.rs.index_of(gamma)
        if not self.rs.is_positive_id(i):
            i = self.rs.negate_id(i)
        return self._reflections[i]

    @property
    def longest(self) -> WeylElement:
        return self.elements[-1]

    def _build_reflections(self):
        n = self.rs.n_positive
        reflections = {}
        for w in self.elements:
            for i, s in enumerate(self.generators):
                gamma = w.perm[i]
                if gamma < n and gamma not in reflections:
                    reflections[gamma] = self.compose(self.compose(w, s), self.inverse(w))
            if len(reflections) == n:
                break
        return reflections


def enumerate_weyl(rs: RootSystem, limit=DEFAULT_SETTINGS['WEYL_ORDER_LIMIT']) -> WeylGroup:
    """
    Breadth-first closure of the identity under left multiplication by
    simple reflections. ``limit=None`` disables the size guard.
    """
    order = weyl_order(rs.cartan)
    if limit is not None and order > limit:
        raise GuardExceeded(
            f"Weyl group of {rs.cartan} has {order} elements, above the limit of {limit} "
            f"(use --force to override)"
        )
    table = rs.simple_reflection_table
    identity = tuple(range(2 * rs.n_positive))
    words = {identity: ()}
    queue = deque([identity])
    while queue:
        perm = queue.popleft()
        for i in range(rs.rank):
            image = tuple(table[i][x] for x in perm)
            if image not in words:
                words[image] = None
                queue.append(image)
        if limit is not None and len(words) > limit:
            raise GuardExceeded(f"Weyl group enumeration of {rs.cartan} exceeded {limit} elements")
    if len(words) != order:
        raise PropertyViolation(f"enumerated {len(words)} elements of W({rs.cartan}), expected {order}")

    # insertion order is BFS order, so s_i w is always seen before w.
    # smallest reduced word: smallest left descent, then the word of s_i w
    n = rs.n_positive
    for perm in list(words):
        if perm == identity:
            continue
        inverse = [0] * len(perm)
        for x, image in enumerate(perm):
            inverse[image] = x
        i = next(i for i in range(rs.rank) if inverse[i] >= n)
        shorter = tuple(table[i][x] for x in perm)
        words[perm] = (i,) + words[shorter]

    W = WeylGroup(rs, list(words), words)
    logger.info(f"Enumerated W({rs.cartan}): {len(W)} elements, longest length {W.longest.length}")
    return W


@lru_cache(maxsize=None)
def _cached_group(rs: RootSystem) -> WeylGroup:
    return enumerate_weyl(rs, limit=None)


def weyl_group(rs: RootSystem, limit=DEFAULT_SETTINGS['WEYL_ORDER_LIMIT']) -> WeylGroup:
    """Enumerate W once per type and process; the size guard still applies."""
    order = weyl_order(rs.cartan)
    if limit is not None and order > limit:
        raise GuardExceeded(
            f"Weyl group of {rs.cartan} has {order} elements, above the limit of {limit} "
            f"(use --force to override)"
        )
    return _cached_group(rs)


def inversion_set(w: WeylElement) -> FrozenSet[Root]:
    """Phi_w: positive roots sent negative by w^-1."""
    return w.group.rs.roots_of(w.inversions)


def complement_inversions(w: WeylElement) -> FrozenSet[Root]:
    rs = w.group.rs
    return rs.roots_of(rs.positive_mask & ~w.inversions)


def maximal_inversions(w: WeylElement) -> FrozenSet[Root]:
    """Maximal elements of Phi_w under leq."""
    inv = inversion_set(w)
    return frozenset(g for g in inv if not any(d != g and leq(g, d) for d in inv))


@dataclass(frozen=True, eq=False)
class LeviDatum:
    group: WeylGroup = field(repr=False)
    simple_subset: FrozenSet[int]
    phi_m_mask: int = field(repr=False)
    phi_uq_mask: int = field(repr=False)

    def __eq__(self, other):
        return (isinstance(other, LeviDatum) and self.rs == other.rs
                and self.simple_subset == other.simple_subset)

    def __hash__(self):
        return hash((self.rs.cartan, self.simple_subset))

    @property
    def rs(self):
        return self.group.rs

    @property
    def phi_m(self) -> FrozenSet[Root]:
        return self.rs.roots_of(self.phi_m_mask)

    @property
    def phi_uq(self) -> FrozenSet[Root]:
        return self.rs.roots_of(self.phi_uq_mask)

    @property
    def is_central(self):
        """All simple roots: the semisimple element is central."""
        return len(self.simple_subset) == self.rs.rank

    @property
    def is_torus(self):
        """No simple roots: the regular semisimple case."""
        return not self.simple_subset

    @property
    def labels(self) -> List[int]:
        """1-based simple-root indices."""
        return [i + 1 for i in sorted(self.simple_subset)]

    def __str__(self):
        return ",".join(str(i) for i in self.labels)


def levi_datum(W: WeylGroup, indices: Iterable[int]) -> LeviDatum:
    """Levi datum for 0-based simple-root indices."""
    subset = frozenset(int(i) for i in indices)
    rs = W.rs
    if any(not 0 <= i < rs.rank for i in subset):
        raise InputError(f"Levi indices {sorted(i + 1 for i in subset)} out of range for {rs.cartan}")
    phi_m = 0
    for k, root in enumerate(rs.roots):
        if all(c == 0 or i in subset for i, c in enumerate(root.coeffs)):
            phi_m |= 1 << k
    return LeviDatum(
        group=W,
        simple_subset=subset,
        phi_m_mask=phi_m,
        phi_uq_mask=rs.positive_mask & ~phi_m,
    )


def parse_levi(W: WeylGroup, text) -> LeviDatum:
    """Comma-separated 1-based indices; an empty string is the torus."""
    text = (text or "").strip()
    if not text:
        return levi_datum(W, [])
    try:
        labels = [int(part) for part in text.split(",")]
    except ValueError:
        raise ParseError(f"Malformed Levi subset: {text!r} (expected e.g. 1,3)") from None
    return levi_datum(W, [i - 1 for i in labels])


def all_levis(W: WeylGroup) -> List[LeviDatum]:
    """Every subset of the simple roots, by size then indices."""
    return [levi_datum(W, subset)
            for size in range(W.rs.rank + 1)
            for subset in combinations(range(W.rs.rank), size)]


def coset_decompose(w: WeylElement, M: LeviDatum) -> Tuple[WeylElement, WeylElement]:
    """
    w = y v with y in W_M and v a minimal coset representative, found by
    stripping simple roots of M that lie in the inversion set from the left.
    """
    W = w.group
    current = w
    while True:
        descent = next((i for i in sorted(M.simple_subset) if current.inversions >> i & 1), None)
        if descent is None:
            break
        current = W.compose(W.generators[descent], current)
    v = current
    y = W.compose(w, W.inverse(v))
    return y, v


def weyl_from_inversions(W: WeylGroup, roots: Iterable[Root]) -> WeylElement:
    """
    The unique w whose inversion set is ``roots``.

    Peels a simple root alpha off the set, recurses on s_alpha of the
    remainder, and returns s_alpha times the result.
    """
    rs = W.rs
    target = frozenset(roots)
    for root in target:
        if not root.is_positive:
            raise NotARoot(root.coeffs, f"{root} is not a positive root")
    failure = closure_failure(rs, target)
    if failure:
        raise InversionSetError(*failure)
    failure = closure_failure(rs, frozenset(rs.positive_roots) - target)
    if failure:
        raise InversionSetError(*failure, complement=True)

    n = rs.n_positive
    table = rs.simple_reflection_table
    mask = rs.mask_of(target)
    letters = []
    while mask:
        i = next((i for i in range(rs.rank) if mask >> i & 1), None)
        if i is None:
            raise PropertyViolation(
                f"closed set with closed complement {sorted(map(str, rs.roots_of(mask)))} has no simple root"
            )
        letters.append(i)
        rest = 0
        for p in rs.ids_of(mask & ~(1 << i)):
            image = table[i][p]
            if image >= n:
                raise PropertyViolation(f"s{i + 1} sent {rs.roots[p]} out of the positive roots")
            rest |= 1 << image
        mask = rest
    w = W.from_word(letters)
    if w.inversions != rs.mask_of(target):
        raise PropertyViolation(f"peeled element {w} does not have the requested inversion set")
    return w


def scan_for_inversions(W: WeylGroup, roots: Iterable[Root]) -> Optional[WeylElement]:
    """Brute-force search for the element with the given inversion set."""
    try:
        mask = W.rs.mask_of(roots)
    except NotARoot:
        return None
    return next((w for w in W if w.inversions == mask), None)


def length_polynomial(W: WeylGroup) -> List[int]:
    """Number of elements of each length 0..|Phi+|."""
    counts = [0] * (W.rs.n_positive + 1)
    for w in W:
        counts[w.length] += 1
    return counts


def classical_poincare_counts(cartan) -> List[int]:
    """Coefficients of prod (1 - q^d)/(1 - q) over the fundamental degrees."""
    q = sp.Symbol('q')
    expr = sp.prod([sp.cancel((1 - q ** d) / (1 - q)) for d in degrees(cartan)])
    return [int(c) for c in reversed(sp.Poly(sp.expand(expr), q).all_coeffs())]
