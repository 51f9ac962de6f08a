"""Run every structural check over an exhaustive corpus of small hypergraphs."""

from __future__ import annotations

import itertools
from collections.abc import Callable

from .algebra import check_abbott_axioms, elements, from_hypergraph, to_hypergraph
from .errors import ImplAlgError
from .formats import hypergraph_to_json
from .hypergraph import Hypergraph, enumerate_hypergraphs, is_sperner, maximal_reduction
from .iso import POSET_LIMIT, algebra_iso, hypergraph_iso, poset_iso_oracle
from .polymatroid import profile_from_rho, recognize_boolean, rho_from_profile, rho_of_hypergraph
from .profile import check_realizability_conditions, compute_profile, is_decreasing, is_paper_submodular, profile_at
from .synth import realize_to_hypergraph

MAX_COUNTEREXAMPLES = 5

CHECKS = (
    "roundtrip_hypergraph",
    "roundtrip_algebra",
    "abbott_axioms",
    "profile_at_submodular",
    "realizability_conditions",
    "inclusion_exclusion",
    "realize",
    "recognize",
    "iso_oracle_agreement",
)


def _same_edges(h1: Hypergraph, h2: Hypergraph) -> bool:
    return h1.vertex_names == h2.vertex_names and sorted(h1.edges) == sorted(h2.edges)


def _roundtrip_hypergraph(h):
    if not is_sperner(h):
        return None
    return _same_edges(to_hypergraph(from_hypergraph(h)), h)


def _roundtrip_algebra(h):
    alg = from_hypergraph(h)
    return from_hypergraph(to_hypergraph(alg)) == alg


def _abbott(h):
    return check_abbott_axioms(from_hypergraph(h))


def _profile_at(h):
    alg = from_hypergraph(h)
    for b in range(1 << len(alg.ground)):
        p = profile_at(alg, b)
        if not is_decreasing(p) or not is_paper_submodular(p):
            return False
    return True


def _conditions(h):
    return bool(check_realizability_conditions(compute_profile(from_hypergraph(h))))


def _inclusion_exclusion(h):
    alg = from_hypergraph(h)
    p = compute_profile(alg)
    rho = rho_of_hypergraph(to_hypergraph(alg))
    return (
        rho_from_profile(p) == rho
        and profile_from_rho(rho_from_profile(p)) == p
        and rho_from_profile(profile_from_rho(rho)) == rho
    )


def _realize(h):
    alg = from_hypergraph(h)
    p = compute_profile(alg)
    strict, family, report = realize_to_hypergraph(p)
    return (
        not report.degenerate
        and family.n_vertices == rho_from_profile(p)[(1 << p.m) - 1]
        and hypergraph_iso(strict, maximal_reduction(h))
    )


def _recognize(h):
    rho = rho_of_hypergraph(h)
    res = recognize_boolean(rho)
    return bool(res) and rho_of_hypergraph(res.family) == rho


_PER_INSTANCE: dict[str, Callable[[Hypergraph], bool | None]] = {
    "roundtrip_hypergraph": _roundtrip_hypergraph,
    "roundtrip_algebra": _roundtrip_algebra,
    "abbott_axioms": _abbott,
    "profile_at_submodular": _profile_at,
    "realizability_conditions": _conditions,
    "inclusion_exclusion": _inclusion_exclusion,
    "realize": _realize,
    "recognize": _recognize,
}


def verify_corpus(max_vertices: int, max_edges: int) -> dict:
    """Check every hypergraph within the bounds; returns a JSON-ready report.

    Iso agreement is checked on all pairs of relabelling-class
    representatives and on each instance against its reversed relabelling,
    restricted to algebras with at most ``POSET_LIMIT`` elements.
    """
    corpus = list(enumerate_hypergraphs(max_vertices, max_edges, sperner_only=False))
    results = {name: {"passed": 0, "failed": 0, "counterexamples": []} for name in CHECKS}

    def record(name, ok, witness):
        if ok is None:
            return
        slot = results[name]
        if ok:
            slot["passed"] += 1
        else:
            slot["failed"] += 1
            if len(slot["counterexamples"]) < MAX_COUNTEREXAMPLES:
                slot["counterexamples"].append(witness)

    for h in corpus:
        for name, check in _PER_INSTANCE.items():
            try:
                ok = check(h)
            except ImplAlgError as exc:
                ok = False
                record(name, ok, {"hypergraph": hypergraph_to_json(h), "error": str(exc)})
                continue
            record(name, ok, {"hypergraph": hypergraph_to_json(h)})

    def small(h):
        return len(list(elements(from_hypergraph(h)))) <= POSET_LIMIT

    def agree(h1, h2):
        a1, a2 = from_hypergraph(h1), from_hypergraph(h2)
        ok = (algebra_iso(a1, a2) is not None) == poset_iso_oracle(a1, a2)
        record("iso_oracle_agreement", ok, {"pair": [hypergraph_to_json(h1), hypergraph_to_json(h2)]})

    reps = [
        h
        for h in enumerate_hypergraphs(max_vertices, max_edges, sperner_only=False, dedup=True)
        if small(h)
    ]
    for h1, h2 in itertools.combinations_with_replacement(reps, 2):
        agree(h1, h2)
    for h in corpus:
        if small(h):
            agree(h, h.relabel(list(reversed(range(h.n_vertices)))))

    return {
        "bounds": {"max_vertices": max_vertices, "max_edges": max_edges},
        "instances": len(corpus),
        "checks": results,
        "all_passed": all(r["failed"] == 0 for r in results.values()),
    }
