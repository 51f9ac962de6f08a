"""Build an edge family whose intersection profile is a given profile.

The construction peels off the lowest index ``b``: its edge gets
``p({b})`` fresh vertices, the family ``X -> p(X | b)`` is realized
recursively *inside* that edge and ``X -> p(X) - p(X | b)`` on fresh
vertices *outside* it, and every other edge is the union of its inside and
outside parts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bits import members
from .errors import ConditionsFail, InsideOverflow, NegativeValue, RealizationError, VerificationFail
from .hypergraph import EdgeFamily, Hypergraph, maximal_edges
from .profile import Profile, check_realizability_conditions, derive_pA, derive_qA, family_profile


@dataclass(frozen=True)
class PartialRealization:
    ground_size: int
    edges: tuple[int, ...]

    def __post_init__(self):
        full = (1 << self.ground_size) - 1
        assert all(e & ~full == 0 for e in self.edges)


def _build(p: Profile) -> PartialRealization:
    size_b = p.values[0]
    e_b = (1 << size_b) - 1
    if p.m == 1:
        return PartialRealization(size_b, (e_b,))
    try:
        inside = _build(derive_pA(p, 1))
        outside_profile = derive_qA(p, 1)
    except NegativeValue as exc:
        raise RealizationError(f"derived profile below index {p.labels[0]} went negative: {exc}") from exc
    if inside.ground_size > size_b:
        raise InsideOverflow(p.labels[0], inside.ground_size, size_b)
    # inside ground is compact, so its i-th vertex already is the i-th vertex of e_b
    outside = _build(outside_profile)
    rest = tuple(f | (g << size_b) for f, g in zip(inside.edges, outside.edges))
    return PartialRealization(size_b + outside.ground_size, (e_b,) + rest)


def _trim(part: PartialRealization) -> EdgeFamily:
    used = 0
    for e in part.edges:
        used |= e
    keep = members(used)
    if len(keep) == part.ground_size:
        return EdgeFamily(part.ground_size, part.edges)
    pos = {old: new for new, old in enumerate(keep)}
    edges = tuple(sum(1 << pos[v] for v in members(e)) for e in part.edges)
    return EdgeFamily(len(keep), edges)


def realize(p: Profile) -> EdgeFamily:
    """Indexed family (edge ``i`` for index ``i``) with intersection profile ``p``.

    Raises :class:`ConditionsFail` if ``p`` fails the realizability
    conditions, and a :class:`RealizationError` if the construction breaks
    or its result does not reproduce ``p`` exactly.
    """
    verdict = check_realizability_conditions(p)
    if not verdict:
        raise ConditionsFail(verdict)
    family = _trim(_build(Profile(p.m, p.values)))
    got = family_profile(family.edges)
    for s in range(1, 1 << p.m):
        if got[s] != p[s]:
            raise VerificationFail(s, p[s], got[s])
    return family


@dataclass(frozen=True)
class DegeneracyReport:
    """How an indexed family falls short of a Sperner hypergraph with one edge per index."""

    n_indices: int
    coinciding: tuple[tuple[int, ...], ...] = ()
    nested: tuple[tuple[int, int], ...] = ()
    empty: tuple[int, ...] = ()
    distinct_maximal: int = 0

    @property
    def degenerate(self) -> bool:
        return bool(self.coinciding or self.nested or self.empty)

    def entries(self) -> list[dict]:
        out = [{"kind": "coinciding", "indices": list(g)} for g in self.coinciding]
        out += [{"kind": "nested", "indices": list(pair)} for pair in self.nested]
        if self.empty:
            out.append({"kind": "empty", "indices": list(self.empty)})
        return out

    def summary(self) -> str:
        return f"degenerate: {self.distinct_maximal} distinct maximal edges of {self.n_indices} indices"


def degeneracy(family: EdgeFamily) -> DegeneracyReport:
    edges = family.edges
    groups: dict[int, list[int]] = {}
    for i, e in enumerate(edges):
        if e:
            groups.setdefault(e, []).append(i)
    coinciding = tuple(tuple(g) for g in groups.values() if len(g) > 1)
    # nested pairs (i, j) with e_i a proper nonempty subset of e_j
    nested = tuple(
        (i, j)
        for i, e in enumerate(edges)
        for j, f in enumerate(edges)
        if e and e != f and e & f == e
    )
    empty = tuple(i for i, e in enumerate(edges) if not e)
    distinct_max = len(maximal_edges([e for e in edges if e]))
    return DegeneracyReport(len(edges), coinciding, nested, empty, distinct_max)


def family_to_hypergraph(family: EdgeFamily, prefix: str = "v") -> Hypergraph:
    """Strict hypergraph of the distinct, nonempty, inclusion-maximal edges."""
    edges = maximal_edges([e for e in family.edges if e])
    names = tuple(f"{prefix}{i}" for i in range(family.n_vertices))
    return Hypergraph(names, tuple(edges))


def realize_to_hypergraph(p: Profile) -> tuple[Hypergraph, EdgeFamily, DegeneracyReport]:
    family = realize(p)
    return family_to_hypergraph(family), family, degeneracy(family)
