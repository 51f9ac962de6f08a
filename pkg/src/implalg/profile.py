"""Implication profiles and the conditions they satisfy.

A :class:`Profile` is a total table on the nonempty subsets of an index
set ``M = {0..m-1}``, keyed by bitmask. For an algebra, the value at ``S``
is the height of the interval above the join of the minimal elements in
``S``; in the set picture this is the size of the intersection of the
corresponding edges.

"Submodular" for a profile means

    p(S1) + p(S2) <= p(S1 | S2) + p(S1 & S2)    for all S1, S2 with S1 & S2 != 0

which is the *reverse* of the usual submodularity used for rank functions.
Intersection sizes satisfy it; union sizes satisfy the usual one.
``is_paper_submodular`` checks this form.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

from .algebra import ImplicationAlgebra
from .bits import complement_positions, expand, mask_of, members, popcount
from .errors import BadIndexSet, NegativeValue, TooManyMinimalElements

MAX_M = 20
# rows per block in the pairwise scans, so a block holds ~4M cells
_SCAN_CELLS = 1 << 22


@dataclass(frozen=True)
class Profile:
    m: int
    values: tuple[int, ...]
    # original index of each position; derived profiles live on M - A
    labels: tuple[int, ...] = field(default=None, compare=False)

    def __post_init__(self):
        if self.m < 1:
            raise BadIndexSet("a profile needs a nonempty index set")
        if self.m > MAX_M:
            raise TooManyMinimalElements(f"m={self.m}, limit {MAX_M}")
        vals = tuple(self.values)
        if len(vals) != (1 << self.m) - 1:
            raise ValueError(f"expected {(1 << self.m) - 1} values, got {len(vals)}")
        for s, v in enumerate(vals, start=1):
            if isinstance(v, bool) or int(v) != v:
                raise TypeError(f"profile value at {s} is not an integer: {v!r}")
            if v < 0:
                raise NegativeValue(s, v)
        object.__setattr__(self, "values", tuple(int(v) for v in vals))
        labels = tuple(range(self.m)) if self.labels is None else tuple(self.labels)
        if len(labels) != self.m:
            raise ValueError("one label per index expected")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_function(cls, m: int, f: Callable[[int], int]) -> Profile:
        return cls(m, tuple(f(s) for s in range(1, 1 << m)))

    @classmethod
    def from_mapping(cls, m: int, table: dict[int, int]) -> Profile:
        missing = [s for s in range(1, 1 << m) if s not in table]
        if missing or len(table) != (1 << m) - 1:
            raise BadIndexSet(f"profile table must cover exactly the masks 1..{(1 << m) - 1}")
        return cls(m, tuple(table[s] for s in range(1, 1 << m)))

    def __getitem__(self, s: int) -> int:
        if not 0 < s < (1 << self.m):
            raise KeyError(s)
        return self.values[s - 1]

    def __call__(self, indices: Iterable[int]) -> int:
        return self[mask_of(indices)]

    def as_dict(self) -> dict[int, int]:
        return {s: v for s, v in enumerate(self.values, start=1)}

    def array(self) -> np.ndarray:
        """Values as an int64 array indexed by mask; slot 0 is a 0 placeholder."""
        return np.array((0,) + self.values, dtype=np.int64)

    def label_mask(self, s: int) -> int:
        """Translate a positional mask into a mask over the original indices."""
        return expand(s, self.labels)


@dataclass(frozen=True)
class Violation:
    """A failed pairwise condition. Falsy, so checkers can return it in place of ``False``."""

    kind: str
    s1: int
    s2: int

    def __bool__(self):
        return False

    def describe(self) -> str:
        return f"{self.kind} fails at ({members(self.s1)}, {members(self.s2)})"


@dataclass(frozen=True)
class Verdict:
    passed: bool
    clause: str | None = None
    A: int | None = None
    violation: Violation | None = None

    def __bool__(self):
        return self.passed

    def __str__(self):
        if self.passed:
            return "pass"
        where = f" at A={members(self.A)}" if self.A is not None else ""
        return f"fail: {self.clause}{where}: {self.violation.describe()}"


def first_pair(m: int, bad: Callable[[np.ndarray, np.ndarray], np.ndarray]) -> tuple[int, int] | None:
    """First ``(s1, s2)`` over nonempty masks, s1-major order, with ``bad(s1, s2)`` true."""
    n = 1 << m
    s2 = np.arange(n, dtype=np.int64)[None, :]
    step = max(1, _SCAN_CELLS >> m)
    for start in range(1, n, step):
        s1 = np.arange(start, min(n, start + step), dtype=np.int64)[:, None]
        hit = bad(s1, s2)
        hit[:, 0] = False
        if hit.any():
            r, c = np.unravel_index(int(np.argmax(hit)), hit.shape)
            return int(s1[r, 0]), int(c)
    return None


def _violation(p: Profile, kind: str, pair) -> Violation | bool:
    if pair is None:
        return True
    return Violation(kind, p.label_mask(pair[0]), p.label_mask(pair[1]))


def is_decreasing(p: Profile) -> Violation | bool:
    """``True`` if ``p(S1) >= p(S2)`` whenever ``S1 <= S2``, else the first violating pair."""
    a = p.array()
    pair = first_pair(p.m, lambda s1, s2: ((s1 & s2) == s1) & (a[s1] < a[s2]))
    return _violation(p, "decreasing", pair)


def is_paper_submodular(p: Profile) -> Violation | bool:
    a = p.array()
    pair = first_pair(
        p.m,
        lambda s1, s2: ((s1 & s2) != 0) & (a[s1] + a[s2] > a[s1 | s2] + a[s1 & s2]),
    )
    return _violation(p, "submodular", pair)


def _as_mask(A: int | Iterable[int]) -> int:
    return A if isinstance(A, int) else mask_of(A)


def _rest(p: Profile, A: int | Iterable[int]) -> tuple[int, list[int]]:
    A = _as_mask(A)
    full = (1 << p.m) - 1
    if A == 0 or A & ~full or A == full:
        raise BadIndexSet(f"A={A:#b} must be a nonempty proper subset of {p.m} indices")
    return A, complement_positions(p.m, A)


def derive_pA(p: Profile, A: int | Iterable[int]) -> Profile:
    """Profile on ``M - A`` with ``X -> p(X | A)``."""
    A, rest = _rest(p, A)
    k = len(rest)
    vals = tuple(p[expand(x, rest) | A] for x in range(1, 1 << k))
    return Profile(k, vals, tuple(p.labels[i] for i in rest))


def derive_qA(p: Profile, A: int | Iterable[int]) -> Profile:
    """Profile on ``M - A`` with ``X -> p(X) - p(X | A)``; negative entries raise."""
    A, rest = _rest(p, A)
    k = len(rest)
    vals = []
    for x in range(1, 1 << k):
        X = expand(x, rest)
        v = p[X] - p[X | A]
        if v < 0:
            raise NegativeValue(p.label_mask(X), v)
        vals.append(v)
    return Profile(k, tuple(vals), tuple(p.labels[i] for i in rest))


def check_realizability_conditions(p: Profile) -> Verdict:
    """Decreasing and submodular, and the same for every ``p_A`` and ``q_A``.

    ``A`` runs over nonempty proper subsets in increasing mask order; the
    first failing clause is reported.
    """
    for clause, check in (("decreasing", is_decreasing), ("submodular", is_paper_submodular)):
        res = check(p)
        if not res:
            return Verdict(False, clause, None, res)
    full = (1 << p.m) - 1
    for A in range(1, full):
        label_A = p.label_mask(A)
        pa = derive_pA(p, A)
        for name, check in (("decreasing", is_decreasing), ("submodular", is_paper_submodular)):
            res = check(pa)
            if not res:
                return Verdict(False, f"p_A {name}", label_A, res)
        try:
            qa = derive_qA(p, A)
        except NegativeValue as exc:
            return Verdict(False, "q_A nonnegative", label_A, Violation("nonnegative", exc.subset, exc.subset | label_A))
        for name, check in (("decreasing", is_decreasing), ("submodular", is_paper_submodular)):
            res = check(qa)
            if not res:
                return Verdict(False, f"q_A {name}", label_A, res)
    return Verdict(True)


def family_profile(edges: Sequence[int]) -> Profile:
    """Intersection-size profile of an indexed family of vertex masks."""
    m = len(edges)
    if m > MAX_M:
        raise TooManyMinimalElements(f"m={m}, limit {MAX_M}")
    inter = [0] * (1 << m)
    inter[0] = -1
    for s in range(1, 1 << m):
        low = s & -s
        inter[s] = inter[s ^ low] & edges[low.bit_length() - 1]
    return Profile(m, tuple(popcount(x) for x in inter[1:]))


def compute_profile(alg: ImplicationAlgebra) -> Profile:
    return family_profile(alg.min_edges)


def profile_at(alg: ImplicationAlgebra, b: int) -> Profile:
    """Profile of ``alg`` at the envelope element whose coatom set is ``b``."""
    return family_profile([e & b for e in alg.min_edges])
