"""
Root systems of the irreducible types A-G.

Roots are integer coefficient vectors over the simple roots. A RootSystem
assigns every root a dense integer id (positive roots first, sorted by
height, then ``-gamma`` at ``id(gamma) + N``) so that sets of roots can be
stored as Python int bitsets.
"""

import logging
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx
import numpy as np

from hessberg.errors import (
    NotARoot,
    NotSimple,
    ParseError,
    PropertyViolation,
    UnsupportedCartanType,
)

logger = logging.getLogger(__name__)

FAMILIES = "ABCDEFG"

# (lowest, highest) supported rank per family; None means unbounded
_RANK_RANGE = {
    'A': (1, None),
    'B': (2, None),
    'C': (3, None),
    'D': (4, None),
    'E': (6, 8),
    'F': (4, 4),
    'G': (2, 2),
}


def _check_supported(family, rank):
    if family not in _RANK_RANGE:
        raise UnsupportedCartanType(f"Unknown Cartan family: {family!r}")
    low, high = _RANK_RANGE[family]
    if not isinstance(rank, (int, np.integer)) or rank < low or (high is not None and rank > high):
        raise UnsupportedCartanType(f"Unsupported Cartan type: {family}{rank}")


def cartan_matrix(family, rank):
    """
    Standard Cartan matrix with entries ``a[i, j] = <alpha_j, alpha_i^vee>``.

    Bourbaki numbering except that B_n has its short simple root first and
    C_n its long simple root first (so B2 has alpha_1 short). G2 has alpha_1
    short.
    """
    _check_supported(family, rank)
    A = 2 * np.eye(rank, dtype=int)

    def bond(i, j, a_ij=-1, a_ji=-1):
        A[i, j] = a_ij
        A[j, i] = a_ji

    if family in "ABC":
        for i in range(rank - 1):
            bond(i, i + 1)
        if family == 'B':
            bond(0, 1, -2, -1)
        elif family == 'C':
            bond(0, 1, -1, -2)
    elif family == 'D':
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 3, rank - 1)
    elif family == 'E':
        for i, j in [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)]:
            if j < rank:
                bond(i, j)
        bond(1, 3)
    elif family == 'F':
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    elif family == 'G':
        bond(0, 1, -3, -1)
    return A


@dataclass(frozen=True)
class CartanDatum:
    family: str
    rank: int
    matrix: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        _check_supported(self.family, self.rank)
        A = np.array(self.matrix, dtype=int)
        if A.shape != (self.rank, self.rank):
            raise UnsupportedCartanType(f"Cartan matrix of {self.name} must be {self.rank}x{self.rank}")
        if not np.all(np.diag(A) == 2):
            raise UnsupportedCartanType("Cartan matrix diagonal entries must equal 2")
        off = A[~np.eye(self.rank, dtype=bool)]
        if np.any(off > 0):
            raise UnsupportedCartanType("Cartan matrix off-diagonal entries must be <= 0")
        if not np.array_equal(A == 0, A.T == 0):
            raise UnsupportedCartanType("Cartan matrix zero pattern must be symmetric")
        if not np.array_equal(A, cartan_matrix(self.family, self.rank)):
            raise UnsupportedCartanType(f"Not the standard Cartan matrix of {self.name}")

    @property
    def name(self):
        return f"{self.family}{self.rank}"

    def as_array(self):
        return np.array(self.matrix, dtype=int)

    def __str__(self):
        return self.name


def cartan_datum(family, rank):
    A = cartan_matrix(family, rank)
    return CartanDatum(family, int(rank), tuple(tuple(int(x) for x in row) for row in A))


def parse_cartan(text):
    """Parse ``A3``, ``g2``, ``E 6`` into a CartanDatum."""
    match = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text or "")
    if not match:
        raise ParseError(f"Malformed Cartan type: {text!r} (expected e.g. A3 or G2)")
    return cartan_datum(match.group(1).upper(), int(match.group(2)))


@dataclass(frozen=True)
class Root:
    """A root as a coefficient vector in the simple-root basis."""

    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, 'coeffs', coeffs)
        if not any(coeffs):
            raise NotARoot(coeffs, "the zero vector is not a root")
        if any(c > 0 for c in coeffs) and any(c < 0 for c in coeffs):
            raise NotARoot(coeffs, f"{list(coeffs)} mixes signs and is not a root")

    @property
    def is_positive(self):
        return all(c >= 0 for c in self.coeffs)

    @property
    def height(self):
        return sum(self.coeffs)

    def __neg__(self):
        return Root(tuple(-c for c in self.coeffs))

    def __str__(self):
        return format_root(self)


def simple_root(rank, i):
    """The i-th simple root (0-based)."""
    return Root(tuple(int(j == i) for j in range(rank)))


def format_root(root):
    """Symbolic form: ``a1+a2``, ``2a1+a2``, ``-a1-a2``."""
    text = ""
    for i, c in enumerate(root.coeffs):
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if text else "")
        mag = "" if abs(c) == 1 else str(abs(c))
        text += f"{sign}{mag}a{i + 1}"
    return text


_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*a(\d+)\s*")


def parse_root(text, rank):
    """
    Parse a root written as a vector (``[1,1]``, ``-[1,1]``) or a symbolic
    sum (``a1+a2``, ``-a1-a2``, ``3a1+2a2``).

    Only the syntax and the rank are checked here; use
    ``RootSystem.index_of`` to check that the result is a root.
    """
    if isinstance(text, (list, tuple)):
        coeffs = [int(c) for c in text]
    else:
        s = (text or "").strip()
        vec = re.fullmatch(r"(-?)\s*\[\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\]", s)
        if vec:
            sign = -1 if vec.group(1) else 1
            coeffs = [sign * int(c) for c in vec.group(2).split(",")]
        else:
            coeffs = [0] * rank
            pos = 0
            while pos < len(s):
                term = _TERM.match(s, pos)
                if not term or term.end() == pos or (pos > 0 and not term.group(1)):
                    raise ParseError(f"Malformed root: {text!r}")
                index = int(term.group(3))
                if not 1 <= index <= rank:
                    raise ParseError(f"Simple root a{index} out of range for rank {rank}")
                mag = int(term.group(2)) if term.group(2) else 1
                coeffs[index - 1] += -mag if term.group(1) == "-" else mag
                pos = term.end()
            if not s:
                raise ParseError("Empty root expression")
    if len(coeffs) != rank:
        raise ParseError(f"Root {text!r} has {len(coeffs)} coefficients, expected {rank}")
    return Root(tuple(coeffs))


def _sort_key(coeffs):
    # height first, then descending lexicographic so simple roots keep index order
    return (sum(coeffs), tuple(-c for c in coeffs))


@dataclass(frozen=True, eq=False)
class RootSystem:
    cartan: CartanDatum
    positive_roots: Tuple[Root, ...]
    roots: Tuple[Root, ...]
    index: Dict[Root, int] = field(repr=False)
    simple_reflection_table: Tuple[Tuple[int, ...], ...] = field(repr=False)
    highest_root: Root

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.cartan == other.cartan

    def __hash__(self):
        return hash(self.cartan)

    @property
    def rank(self):
        return self.cartan.rank

    @property
    def n_positive(self):
        return len(self.positive_roots)

    @property
    def positive_mask(self):
        return (1 << self.n_positive) - 1

    @property
    def negative_mask(self):
        return self.positive_mask << self.n_positive

    @property
    def simple_roots(self):
        return tuple(simple_root(self.rank, i) for i in range(self.rank))

    def find(self, coeffs) -> Optional[int]:
        """Id of the root with these coefficients, or None."""
        try:
            return self.index.get(Root(tuple(coeffs)))
        except NotARoot:
            return None

    def index_of(self, root):
        try:
            return self.index[root]
        except KeyError:
            raise NotARoot(root.coeffs, f"{root} is not a root of {self.cartan}") from None

    def simple_index(self, root):
        """0-based index i with root == alpha_i."""
        if root.height == 1 and root in self.index:
            return root.coeffs.index(1)
        raise NotSimple(root)

    def negate_id(self, i):
        return (i + self.n_positive) % (2 * self.n_positive)

    def is_positive_id(self, i):
        return i < self.n_positive

    def mask_of(self, roots: Iterable[Root]):
        mask = 0
        for root in roots:
            mask |= 1 << self.index_of(root)
        return mask

    def ids_of(self, mask) -> List[int]:
        ids = []
        while mask:
            low = mask & -mask
            ids.append(low.bit_length() - 1)
            mask ^= low
        return ids

    def roots_of(self, mask) -> FrozenSet[Root]:
        return frozenset(self.roots[i] for i in self.ids_of(mask))

    def sorted_roots(self, mask) -> List[Root]:
        """Roots of ``mask`` in id order (deterministic output order)."""
        return [self.roots[i] for i in self.ids_of(mask)]

    def add(self, a: Root, b: Root) -> Optional[Root]:
        """a + b if it is a root, else None."""
        i = self.find(x + y for x, y in zip(a.coeffs, b.coeffs))
        return None if i is None else self.roots[i]

    def negative_simples(self):
        return [-a for a in self.simple_roots]


@lru_cache(maxsize=None)
def build_root_system(cartan: CartanDatum) -> RootSystem:
    """Generate all roots as the orbit of the simple roots under simple reflections."""
    rank = cartan.rank
    A = cartan.as_array()
    simples = [tuple(int(x) for x in row) for row in np.eye(rank, dtype=int)]
    seen = set(simples)
    frontier = list(simples)
    while frontier:
        found = []
        for beta in frontier:
            b = np.array(beta, dtype=int)
            for i in range(rank):
                image = b.copy()
                image[i] -= A[i] @ b
                key = tuple(int(x) for x in image)
                if key not in seen:
                    seen.add(key)
                    found.append(key)
        frontier = found

    positive = sorted((c for c in seen if all(x >= 0 for x in c)), key=_sort_key)
    if 2 * len(positive) != len(seen):
        raise PropertyViolation(f"{cartan}: roots are not split evenly into positive and negative")
    positive_roots = tuple(Root(c) for c in positive)
    roots = positive_roots + tuple(-r for r in positive_roots)
    index = {root: i for i, root in enumerate(roots)}

    table = []
    for i in range(rank):
        row = []
        for root in roots:
            b = np.array(root.coeffs, dtype=int)
            b[i] -= A[i] @ b
            image = index.get(Root(tuple(int(x) for x in b)))
            if image is None:
                raise PropertyViolation(f"{cartan}: root set is not stable under s{i + 1}")
            row.append(image)
        table.append(tuple(row))

    maximal = [g for g in positive_roots
               if not any(g != d and leq(g, d) for d in positive_roots)]
    if len(maximal) != 1 or min(maximal[0].coeffs) < 1:
        raise PropertyViolation(f"{cartan}: no unique highest root among {maximal}")

    rs = RootSystem(
        cartan=cartan,
        positive_roots=positive_roots,
        roots=roots,
        index=index,
        simple_reflection_table=tuple(table),
        highest_root=maximal[0],
    )
    logger.info(f"Built root system {cartan}: {len(positive_roots)} positive roots, "
                f"highest root {rs.highest_root}")
    return rs


def reflect(rs: RootSystem, gamma: Root, alpha: Root) -> Root:
    """s_alpha(gamma) for a simple root alpha."""
    i = rs.simple_index(alpha)
    return rs.roots[rs.simple_reflection_table[i][rs.index_of(gamma)]]


def leq(gamma: Root, other: Root) -> bool:
    """gamma <= other iff other - gamma has only nonnegative coefficients."""
    return all(b >= a for a, b in zip(gamma.coeffs, other.coeffs))


def upper_set(rs: RootSystem, alpha: Root) -> FrozenSet[Root]:
    """The positive roots above the simple root alpha."""
    rs.simple_index(alpha)
    return frozenset(g for g in rs.positive_roots if leq(alpha, g))


def closure_failure(rs: RootSystem, roots: Iterable[Root]):
    """First (gamma, delta, gamma + delta) with the sum a root outside the set, or None."""
    members = sorted(set(roots), key=rs.index_of)
    present = set(members)
    for i, gamma in enumerate(members):
        for delta in members[i:]:
            total = rs.add(gamma, delta)
            if total is not None and total not in present:
                return gamma, delta, total
    return None


def is_closed(rs: RootSystem, roots: Iterable[Root]) -> bool:
    return closure_failure(rs, roots) is None


def partial_sum_chain(rs: RootSystem, gamma: Root) -> List[Root]:
    """
    Simple roots alpha_1, ..., alpha_k summing to gamma with every prefix
    sum a positive root.

    Built backwards from gamma, each time removing the lexicographically
    smallest simple root that leaves a positive root.
    """
    if not gamma.is_positive:
        raise NotARoot(gamma.coeffs, f"{gamma} is not a positive root")
    rs.index_of(gamma)
    letters = []
    current = list(gamma.coeffs)
    while sum(current) > 1:
        # e_i is lexicographically smaller than e_j exactly when i > j
        for i in reversed(range(rs.rank)):
            if current[i] == 0:
                continue
            rest = current.copy()
            rest[i] -= 1
            if rs.find(rest) is not None:
                letters.append(i)
                current = rest
                break
        else:
            raise PropertyViolation(f"{gamma}: no simple root can be removed from {current}")
    letters.append(current.index(1))
    return [simple_root(rs.rank, i) for i in reversed(letters)]


def height(root: Root) -> int:
    return root.height


def root_poset(rs: RootSystem) -> nx.DiGraph:
    """Covering graph of the positive roots: gamma -> gamma + alpha_i."""
    G = nx.DiGraph()
    for gamma in rs.positive_roots:
        G.add_node(gamma, height=gamma.height)
    for gamma in rs.positive_roots:
        for i, alpha in enumerate(rs.simple_roots):
            above = rs.add(gamma, alpha)
            if above is not None:
                G.add_edge(gamma, above, simple=i)
    return G


def parse_root_list(text, rank) -> List[Root]:
    """Comma-separated roots; commas inside ``[...]`` vectors do not split."""
    parts = [p.strip() for p in re.split(r",(?![^\[]*\])", text or "")]
    return [parse_root(p, rank) for p in parts if p]
