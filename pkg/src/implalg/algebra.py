"""Finite implication algebras inside their enveloping Boolean algebra.

An algebra over ground ``V`` is stored as the antichain of its minimal
elements, each given by the set of coatoms above it. Elements are the
subsets of some minimal edge, ordered by *reverse* inclusion, so the top
is the empty set, join is intersection and ``x -> y`` is ``y - x``.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass

from .bits import popcount, submasks
from .errors import EmptyAlgebra, GroundTooLarge, InternalInconsistency, NotAnElement
from .hypergraph import Hypergraph, is_sperner, maximal_reduction

ELEMENT_GROUND_LIMIT = 20
ABBOTT_ELEMENT_LIMIT = 200


@dataclass(frozen=True)
class ImplicationAlgebra:
    ground: tuple[str, ...]
    min_edges: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ground", tuple(self.ground))
        object.__setattr__(self, "min_edges", tuple(self.min_edges))
        if not self.min_edges:
            raise EmptyAlgebra("an implication algebra has at least one minimal element")
        if not is_sperner(self.min_edges) or len(set(self.min_edges)) != len(self.min_edges):
            raise ValueError("minimal elements must form an antichain")
        # Hypergraph validation covers empty edges and isolated coatoms
        Hypergraph(self.ground, self.min_edges)

    @property
    def n(self) -> int:
        """Number of minimal elements."""
        return len(self.min_edges)

    def contains(self, x: int) -> bool:
        return any(x & ~e == 0 for e in self.min_edges)

    def leq(self, x: int, y: int) -> bool:
        """Order of the algebra: ``x <= y`` iff ``y`` is a subset of ``x``."""
        return y & ~x == 0


def from_hypergraph(h: Hypergraph) -> ImplicationAlgebra:
    if not h.edges:
        raise EmptyAlgebra("hypergraph has no edges")
    r = maximal_reduction(h)
    return ImplicationAlgebra(r.vertex_names, r.edges)


def to_hypergraph(alg: ImplicationAlgebra) -> Hypergraph:
    # coatoms of the envelope are the singletons of the ground set, so the
    # coatom set of each minimal element is just its stored edge
    return Hypergraph(enveloping_ground(alg), alg.min_edges)


def enveloping_ground(alg: ImplicationAlgebra) -> list[str]:
    """Labels of the coatoms of the enveloping Boolean algebra ``2^ground``.

    The envelope is minimal because the minimal elements meet to 0 there,
    i.e. every coatom lies above some minimal element; the no-isolated-coatom
    invariant of :class:`ImplicationAlgebra` is exactly that condition.
    """
    return list(alg.ground)


def element_count(alg: ImplicationAlgebra) -> int:
    """Size of the union of the down-sets of the minimal edges, by inclusion-exclusion."""
    edges = alg.min_edges
    total = 0
    for s in range(1, 1 << len(edges)):
        inter = -1
        for i, e in enumerate(edges):
            if s >> i & 1:
                inter &= e
        sign = 1 if popcount(s) % 2 else -1
        total += sign * (1 << popcount(inter))
    return total


def elements(alg: ImplicationAlgebra) -> Iterator[int]:
    """Yield every element once, in increasing mask order."""
    if len(alg.ground) > ELEMENT_GROUND_LIMIT:
        raise GroundTooLarge(f"{len(alg.ground)} coatoms, limit {ELEMENT_GROUND_LIMIT}")
    found = set()
    for e in alg.min_edges:
        found.update(submasks(e))
    if len(alg.min_edges) <= ELEMENT_GROUND_LIMIT and len(found) != element_count(alg):
        raise InternalInconsistency("element enumeration disagrees with inclusion-exclusion")
    yield from sorted(found)


def _need(alg: ImplicationAlgebra, *xs: int) -> None:
    for x in xs:
        if not alg.contains(x):
            raise NotAnElement(x)


def implies(alg: ImplicationAlgebra, x: int, y: int) -> int:
    _need(alg, x, y)
    return y & ~x


def join(alg: ImplicationAlgebra, x: int, y: int) -> int:
    _need(alg, x, y)
    return x & y


def meet_opt(alg: ImplicationAlgebra, x: int, y: int) -> int | None:
    """Meet of ``x`` and ``y``, or ``None`` when they have no common lower bound."""
    _need(alg, x, y)
    u = x | y
    return u if alg.contains(u) else None


def minimal_elements(alg: ImplicationAlgebra) -> list[int]:
    return list(alg.min_edges)


def coatoms(alg: ImplicationAlgebra) -> list[int]:
    return [1 << i for i in range(len(alg.ground))]


def interval_height(alg: ImplicationAlgebra, x: int) -> int:
    _need(alg, x)
    return popcount(x)


def check_abbott_axioms(
    alg: ImplicationAlgebra,
    op: Callable[[ImplicationAlgebra, int, int], int] | None = None,
) -> bool:
    """Check Abbott's three identities over all element pairs and triples.

    ``op`` replaces :func:`implies`; it exists for negative controls and is
    applied to raw masks, which may leave the algebra.
    """
    imp = op or implies
    elems: Sequence[int] = list(elements(alg))
    if len(elems) > ABBOTT_ELEMENT_LIMIT:
        raise GroundTooLarge(f"{len(elems)} elements, limit {ABBOTT_ELEMENT_LIMIT}")

    for a in elems:
        for b in elems:
            ab = imp(alg, a, b)
            if imp(alg, ab, a) != a:
                return False
            if imp(alg, ab, b) != imp(alg, imp(alg, b, a), a):
                return False
            for c in elems:
                if imp(alg, a, imp(alg, b, c)) != imp(alg, b, imp(alg, a, c)):
                    return False
    return True
