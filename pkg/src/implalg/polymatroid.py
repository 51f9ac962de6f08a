"""Graphical polymatroids, the inclusion-exclusion bridge to profiles, and
recognition of Boolean polymatroids.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .bits import members
from .errors import (
    InternalInconsistency,
    NegativeResult,
    NegativeValue,
    RealizationError,
    TooManyEdges,
)
from .hypergraph import EdgeFamily, Hypergraph
from .profile import MAX_M, Profile, Verdict, Violation, check_realizability_conditions, first_pair

if TYPE_CHECKING:
    from .synth import DegeneracyReport


@dataclass(frozen=True)
class PolymatroidFn:
    """Table on *all* subsets of ``{0..m-1}``; ``values[mask]``, with ``values[0] == 0``."""

    m: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.m > MAX_M:
            raise TooManyEdges(f"m={self.m}, limit {MAX_M}")
        vals = tuple(self.values)
        if len(vals) != 1 << self.m:
            raise ValueError(f"expected {1 << self.m} values, got {len(vals)}")
        for v in vals:
            if isinstance(v, bool) or int(v) != v or v < 0:
                raise ValueError(f"polymatroid values must be nonnegative integers, got {v!r}")
        if vals[0] != 0:
            raise ValueError("value at the empty set must be 0")
        object.__setattr__(self, "values", tuple(int(v) for v in vals))

    def __getitem__(self, s: int) -> int:
        return self.values[s]

    def array(self) -> np.ndarray:
        return np.array(self.values, dtype=np.int64)


def _alternating_sum(m: int, table: np.ndarray) -> np.ndarray:
    """``out[S] = sum over nonempty T <= S of (-1)^(|T|+1) table[T]``; ``out[0] = 0``.

    Sign the table, then a subset-sum (zeta) transform one bit at a time.
    """
    n = 1 << m
    odd = np.array([bin(s).count("1") & 1 for s in range(n)], dtype=bool)
    f = np.where(odd, table, -table).astype(np.int64)
    f[0] = 0
    for i in range(m):
        view = f.reshape(-1, 2, 1 << i)
        view[:, 1, :] += view[:, 0, :]
    return f


def rho_of_hypergraph(h: Hypergraph | EdgeFamily) -> PolymatroidFn:
    m = h.n_edges
    if m > MAX_M:
        raise TooManyEdges(f"{m} edges, limit {MAX_M}")
    union = [0] * (1 << m)
    for s in range(1, 1 << m):
        low = s & -s
        union[s] = union[s ^ low] | h.edges[low.bit_length() - 1]
    return PolymatroidFn(m, tuple(u.bit_count() for u in union))


def rho_from_profile(p: Profile) -> PolymatroidFn:
    out = _alternating_sum(p.m, p.array())
    bad = np.flatnonzero(out < 0)
    if bad.size:
        s = int(bad[0])
        raise NegativeResult(s, int(out[s]))
    return PolymatroidFn(p.m, tuple(int(v) for v in out))


def profile_from_rho(r: PolymatroidFn) -> Profile:
    if r.m < 1:
        raise ValueError("need at least one index")
    out = _alternating_sum(r.m, r.array())
    bad = np.flatnonzero(out[1:] < 0)
    if bad.size:
        s = int(bad[0]) + 1
        raise NegativeResult(s, int(out[s]))
    return Profile(r.m, tuple(int(v) for v in out[1:]))


def is_polymatroid(r: PolymatroidFn) -> Violation | bool:
    """Normalized, monotone nondecreasing and (standard) submodular over all pairs."""
    if r.values[0] != 0:
        return Violation("normalized", 0, 0)
    # values are nonnegative by construction, so pairs with the empty set cannot fail
    a = r.array()
    pair = first_pair(r.m, lambda s1, s2: ((s1 & s2) == s1) & (a[s1] > a[s2]))
    if pair:
        return Violation("monotone", *pair)
    pair = first_pair(r.m, lambda s1, s2: a[s1] + a[s2] < a[s1 | s2] + a[s1 & s2])
    if pair:
        return Violation("submodular", *pair)
    return True


@dataclass(frozen=True)
class Rejection:
    stage: int
    reason: str
    witness: object = None

    def __bool__(self):
        return False


@dataclass(frozen=True)
class Recognition:
    family: EdgeFamily
    hypergraph: Hypergraph
    report: DegeneracyReport

    @property
    def distinct_edges(self) -> bool:
        """Whether the witness is also a family of pairwise distinct edges."""
        return len(set(self.family.edges)) == self.family.n_edges


def recognize_boolean(r: PolymatroidFn) -> Recognition | Rejection:
    """Decide whether ``r`` is the union-size function of some indexed edge family.

    Stages: 1 polymatroid axioms, 2 inclusion-exclusion to a nonnegative
    profile, 3 realizability conditions, 4 synthesis, 5 exact re-check of
    the union sizes. Failures in 1-3 are rejections; a failure after 3
    raises :class:`InternalInconsistency`.
    """
    from .synth import realize_to_hypergraph

    ok = is_polymatroid(r)
    if not ok:
        return Rejection(1, f"not a polymatroid: {ok.kind}", ok)
    if r.m == 0:
        return Rejection(1, "empty index set")
    try:
        p = profile_from_rho(r)
    except NegativeValue as exc:
        return Rejection(2, "inclusion-exclusion gives a negative intersection size", exc.subset)
    verdict: Verdict = check_realizability_conditions(p)
    if not verdict:
        return Rejection(3, f"profile fails: {verdict.clause}", verdict)
    try:
        h, family, report = realize_to_hypergraph(p)
    except RealizationError as exc:
        raise InternalInconsistency(f"stages 1-3 passed but synthesis failed: {exc}") from exc
    got = rho_of_hypergraph(family)
    if got != r:
        diff = next(s for s in range(1 << r.m) if got[s] != r[s])
        raise InternalInconsistency(
            f"realized union size at {members(diff)} is {got[diff]}, expected {r[diff]}"
        )
    return Recognition(family, h, report)
