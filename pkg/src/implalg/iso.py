"""Isomorphism of implication algebras and of hypergraphs.

:func:`algebra_iso` searches for a bijection of minimal elements that
carries one profile onto the other; two finite implication algebras are
isomorphic exactly when such a bijection exists. :func:`poset_iso_oracle`
decides the same question the slow way, on the explicit element orders,
and is kept only as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import ImplicationAlgebra, elements, from_hypergraph
from .errors import InternalInconsistency, TooLarge
from .hypergraph import Hypergraph
from .profile import Profile, compute_profile

POSET_LIMIT = 12


@dataclass(frozen=True)
class IsoWitness:
    """Bijection between minimal-element indices, as ``(i, phi(i))`` pairs sorted by ``i``."""

    mapping: tuple[tuple[int, int], ...]

    def __post_init__(self):
        mapping = tuple(sorted(tuple(pair) for pair in self.mapping))
        src = [i for i, _ in mapping]
        dst = sorted(j for _, j in mapping)
        if src != list(range(len(mapping))) or dst != src:
            raise ValueError(f"not a bijection: {mapping}")
        object.__setattr__(self, "mapping", mapping)

    def image(self, s: int) -> int:
        out = 0
        for i, j in self.mapping:
            if s >> i & 1:
                out |= 1 << j
        return out

    def holds(self, p1: Profile, p2: Profile) -> bool:
        return p1.m == p2.m == len(self.mapping) and all(
            p1[s] == p2[self.image(s)] for s in range(1, 1 << p1.m)
        )


def _signatures(p: Profile) -> list[tuple[int, tuple[int, ...]]]:
    sig = []
    for i in range(p.m):
        pairs = sorted(p[(1 << i) | (1 << j)] for j in range(p.m) if j != i)
        sig.append((p[1 << i], tuple(pairs)))
    return sig


def profile_iso(p1: Profile, p2: Profile) -> IsoWitness | None:
    """Bijection ``phi`` with ``p1(X) == p2(phi[X])`` for every nonempty ``X``, or ``None``."""
    if p1.m != p2.m or sorted(p1.values) != sorted(p2.values):
        return None
    m = p1.m
    sig1, sig2 = _signatures(p1), _signatures(p2)
    if sorted(sig1) != sorted(sig2):
        return None
    order = sorted(range(m), key=lambda i: (sig1[i], -i), reverse=True)
    used = [False] * m
    phi = [-1] * m

    def extend(depth: int, pairs: list[tuple[int, int]]) -> bool:
        # pairs: (X, phi[X]) for every subset X of the indices assigned so far
        if depth == m:
            return True
        i = order[depth]
        for j in range(m):
            if used[j] or sig2[j] != sig1[i]:
                continue
            bi, bj = 1 << i, 1 << j
            new = [(x | bi, y | bj) for x, y in pairs]
            if all(p1[x] == p2[y] for x, y in new):
                used[j], phi[i] = True, j
                if extend(depth + 1, pairs + new):
                    return True
                used[j], phi[i] = False, -1
        return False

    if not extend(0, [(0, 0)]):
        return None
    witness = IsoWitness(tuple(enumerate(phi)))
    if not witness.holds(p1, p2):
        raise InternalInconsistency(f"search returned an invalid witness {witness.mapping}")
    return witness


def algebra_iso(a1: ImplicationAlgebra, a2: ImplicationAlgebra) -> IsoWitness | None:
    if a1.n != a2.n:
        return None
    return profile_iso(compute_profile(a1), compute_profile(a2))


def hypergraph_iso_witness(h1: Hypergraph, h2: Hypergraph) -> IsoWitness | None:
    """Edge-index bijection showing ``h1`` and ``h2`` isomorphic, or ``None``.

    Both inputs go through maximal reduction first (via the algebra), so the
    indices refer to the reduced edge lists.
    """
    if h1.n_vertices != h2.n_vertices:
        return None
    return algebra_iso(from_hypergraph(h1), from_hypergraph(h2))


def hypergraph_iso(h1: Hypergraph, h2: Hypergraph) -> bool:
    return hypergraph_iso_witness(h1, h2) is not None


def poset_iso_oracle(a1: ImplicationAlgebra, a2: ImplicationAlgebra) -> bool:
    """Brute-force search for an order isomorphism between the element posets."""
    e1, e2 = list(elements(a1)), list(elements(a2))
    if len(e1) > POSET_LIMIT or len(e2) > POSET_LIMIT:
        raise TooLarge(f"posets of size {len(e1)} and {len(e2)}, limit {POSET_LIMIT}")
    if len(e1) != len(e2):
        return False
    n = len(e1)
    # le[x][y]: x <= y in the algebra order, i.e. y is a subset of x
    le1 = [[y & ~x == 0 for y in e1] for x in e1]
    le2 = [[y & ~x == 0 for y in e2] for x in e2]

    def sig(le, k):
        return (sum(le[k]), sum(row[k] for row in le))

    s1 = [sig(le1, k) for k in range(n)]
    s2 = [sig(le2, k) for k in range(n)]
    if sorted(s1) != sorted(s2):
        return False
    order = sorted(range(n), key=lambda k: (s1[k], k))
    target = [-1] * n
    taken = [False] * n

    def extend(depth):
        if depth == n:
            return True
        x = order[depth]
        for y in range(n):
            if taken[y] or s2[y] != s1[x]:
                continue
            ok = all(
                le1[x][u] == le2[y][target[u]] and le1[u][x] == le2[target[u]][y]
                for u in order[:depth]
            )
            if ok:
                taken[y], target[x] = True, y
                if extend(depth + 1):
                    return True
                taken[y], target[x] = False, -1
        return False

    return extend(0)
