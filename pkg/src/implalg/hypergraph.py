"""Hypergraphs over a small labelled ground set.

Vertex subsets are plain ``int`` bitmasks over the vertex order of the
owning hypergraph. Edges keep the order they were given in: profiles and
polymatroid tables are indexed by edge position.
"""

from __future__ import annotations

import itertools
import string
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .bits import mask_of, members, popcount
from .errors import (
    BoundsTooLarge,
    DuplicateEdge,
    EmptyEdge,
    EmptyIndexSet,
    GroundTooLarge,
    IsolatedVertex,
    UnknownLabel,
)

MAX_VERTICES = 30


@dataclass(frozen=True)
class Hypergraph:
    """Named vertices plus an ordered list of distinct nonempty edges.

    Construction validates: every vertex lies in some edge, edges are
    nonempty and pairwise distinct. ``edges=()`` is only allowed together
    with ``vertex_names=()``.
    """

    vertex_names: tuple[str, ...]
    edges: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertex_names", tuple(self.vertex_names))
        object.__setattr__(self, "edges", tuple(self.edges))
        n = len(self.vertex_names)
        if n > MAX_VERTICES:
            raise GroundTooLarge(f"{n} vertices, at most {MAX_VERTICES} supported")
        if len(set(self.vertex_names)) != n:
            raise ValueError("vertex labels must be distinct")
        full = (1 << n) - 1
        seen = set()
        for e in self.edges:
            if e == 0:
                raise EmptyEdge("edges must be nonempty")
            if e & ~full:
                raise UnknownLabel(f"bit {e.bit_length() - 1}")
            if e in seen:
                raise DuplicateEdge(f"edge {self._labels(e)} occurs twice")
            seen.add(e)
        covered = 0
        for e in self.edges:
            covered |= e
        if covered != full:
            missing = members(full & ~covered)[0]
            raise IsolatedVertex(self.vertex_names[missing])

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_names)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def _labels(self, mask: int) -> list[str]:
        return [self.vertex_names[i] for i in members(mask)]

    def edge_labels(self) -> list[list[str]]:
        """Edges as label lists, each sorted by vertex order."""
        return [self._labels(e) for e in self.edges]

    def relabel(self, perm: Sequence[int]) -> Hypergraph:
        """Move vertex ``i`` to position ``perm[i]``; names travel with vertices."""
        names = [""] * self.n_vertices
        for i, j in enumerate(perm):
            names[j] = self.vertex_names[i]
        return Hypergraph(tuple(names), tuple(permute_mask(e, perm) for e in self.edges))


@dataclass(frozen=True)
class EdgeFamily:
    """Indexed family of vertex sets over ``range(n_vertices)``.

    Unlike :class:`Hypergraph`, repeated, nested and empty edges are allowed.
    This is what synthesis and recognition produce.
    """

    n_vertices: int
    edges: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        full = (1 << self.n_vertices) - 1
        if any(e & ~full for e in self.edges):
            raise ValueError("edge outside the ground set")

    @property
    def n_edges(self) -> int:
        return len(self.edges)


def permute_mask(mask: int, perm: Sequence[int]) -> int:
    out = 0
    for i in members(mask):
        out |= 1 << perm[i]
    return out


def new_hypergraph(vertex_names: Iterable[str], edges: Iterable[Iterable[str]]) -> Hypergraph:
    """Build a validated hypergraph from label lists."""
    names = tuple(vertex_names)
    index = {v: i for i, v in enumerate(names)}
    masks = []
    for edge in edges:
        m = 0
        for label in edge:
            if label not in index:
                raise UnknownLabel(label)
            m |= 1 << index[label]
        masks.append(m)
    return Hypergraph(names, tuple(masks))


def is_sperner(h: Hypergraph | Sequence[int]) -> bool:
    edges = h.edges if isinstance(h, Hypergraph) else tuple(h)
    for i, e in enumerate(edges):
        for j, f in enumerate(edges):
            if i != j and e & f == e:
                return False
    return True


def maximal_edges(edges: Sequence[int]) -> list[int]:
    """Inclusion-maximal members of ``edges``, first occurrence order, no repeats."""
    out = []
    for e in edges:
        if e in out:
            continue
        if any(e & f == e and e != f for f in edges):
            continue
        out.append(e)
    return out


def maximal_reduction(h: Hypergraph) -> Hypergraph:
    edges = maximal_edges(h.edges)
    covered = 0
    for e in edges:
        covered |= e
    keep = members(covered)
    if len(keep) == h.n_vertices:
        return Hypergraph(h.vertex_names, tuple(edges))
    pos = {old: new for new, old in enumerate(keep)}
    return Hypergraph(
        tuple(h.vertex_names[i] for i in keep),
        tuple(mask_of(pos[i] for i in members(e)) for e in edges),
    )


def _check_indices(edges: Sequence[int], indices: Iterable[int]) -> list[int]:
    idx = list(indices)
    for i in idx:
        if not 0 <= i < len(edges):
            raise IndexError(f"edge index {i} out of range")
    return idx


def intersection_size(h: Hypergraph | EdgeFamily, indices: Iterable[int]) -> int:
    idx = _check_indices(h.edges, indices)
    if not idx:
        raise EmptyIndexSet("intersection over an empty index set")
    acc = h.edges[idx[0]]
    for i in idx[1:]:
        acc &= h.edges[i]
    return popcount(acc)


def union_size(h: Hypergraph | EdgeFamily, indices: Iterable[int]) -> int:
    acc = 0
    for i in _check_indices(h.edges, indices):
        acc |= h.edges[i]
    return popcount(acc)


def canonical_key(n: int, edges: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least sorted edge tuple over all vertex permutations."""
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted(permute_mask(e, perm) for e in edges))
        if best is None or key < best:
            best = key
    return best


def enumerate_hypergraphs(
    max_vertices: int,
    max_edges: int,
    sperner_only: bool,
    *,
    dedup: bool = False,
    vertex_limit: int = 6,
    edge_limit: int = 4,
) -> Iterator[Hypergraph]:
    """Yield every valid hypergraph with 1..max_vertices vertices and 1..max_edges edges.

    Vertices are named ``a, b, c, ...``. Each edge set is produced once, with
    its edges in increasing mask order; order is by vertex count, then edge
    count, then lexicographic edge tuple. With ``dedup`` only the first
    member of each relabelling class is kept.
    """
    if max_vertices > vertex_limit or max_edges > edge_limit:
        raise BoundsTooLarge(
            f"bounds ({max_vertices}, {max_edges}) exceed ({vertex_limit}, {edge_limit})"
        )
    for n in range(1, max_vertices + 1):
        full = (1 << n) - 1
        names = tuple(string.ascii_lowercase[:n])
        seen = set()
        for k in range(1, max_edges + 1):
            for combo in itertools.combinations(range(1, full + 1), k):
                covered = 0
                for e in combo:
                    covered |= e
                if covered != full:
                    continue
                if sperner_only and not is_sperner(combo):
                    continue
                if dedup:
                    key = canonical_key(n, combo)
                    if key in seen:
                        continue
                    seen.add(key)
                yield Hypergraph(names, combo)
