"""Exhaustive ground-truth computations for small graphs.

Exact maximum(-weight) independent set, exact induced-odd-cycle packing
number, exact chromatic number, and certificate checkers. Every oracle has
a hard vertex limit (configurable through OCPACK_ORACLE_LIMITS, three
comma-separated integers for mis,iocp,chromatic) and rejects over-limit
inputs with LimitExceededError rather than degrade to an approximation.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import NamedTuple

from . import backend
from .errors import LimitExceededError
from .graph import Coloring, Graph, VertexWeights, complement

ENV_VAR = "OCPACK_ORACLE_LIMITS"


@dataclass(frozen=True)
class OracleLimit:
    """Hard vertex-count ceilings for the exhaustive oracles."""

    max_vertices_mis: int = 20
    max_vertices_iocp: int = 14
    max_vertices_chi: int = 12

    def __post_init__(self) -> None:
        for name in ("max_vertices_mis", "max_vertices_iocp", "max_vertices_chi"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")

    @classmethod
    def from_env(cls) -> "OracleLimit":
        """Limits from OCPACK_ORACLE_LIMITS ("mis,iocp,chromatic"), else defaults."""
        raw = os.environ.get(ENV_VAR)
        if raw is None:
            return cls()
        parts = raw.split(",")
        if len(parts) != 3:
            raise ValueError(
                f"{ENV_VAR} must hold three comma-separated integers, got {raw!r}"
            )
        mis, iocp, chi = (int(part.strip()) for part in parts)
        return cls(mis, iocp, chi)


def _ceiling(explicit: int | None, configured: int) -> int:
    return configured if explicit is None else explicit


def _guard(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise LimitExceededError(
            f"exhaustive {what} limited to {limit} vertices, got {n}"
        )


def _mask_to_set(mask: int) -> frozenset[int]:
    out = []
    while mask:
        low = mask & -mask
        mask ^= low
        out.append(low.bit_length() - 1)
    return frozenset(out)


def exact_mis(
    graph: Graph, weights: VertexWeights | None = None, limit: int | None = None
) -> frozenset[int]:
    """A maximum-weight independent set, by branch and bound.

    Branches in/out on a highest-degree vertex, splits connected components,
    and memoizes subproblems; ties resolve deterministically (the including
    branch wins). Unit weights when none are given.
    """
    if weights is None:
        weights = VertexWeights.unit(graph.n)
    weights.check_domain(graph)
    _guard(graph.n, _ceiling(limit, OracleLimit.from_env().max_vertices_mis), "independent set search")
    _, mask = backend.mis_exact(graph, tuple(weights.values))
    return _mask_to_set(mask)


def exact_mis_bruteforce(
    graph: Graph, weights: VertexWeights | None = None, limit: int | None = None
) -> frozenset[int]:
    """Maximum-weight independent set by full 2^n enumeration (test oracle)."""
    if weights is None:
        weights = VertexWeights.unit(graph.n)
    weights.check_domain(graph)
    _guard(graph.n, _ceiling(limit, OracleLimit.from_env().max_vertices_mis), "subset enumeration")
    _, mask = backend.mis_bruteforce(graph, tuple(weights.values))
    return _mask_to_set(mask)


def exact_iocp(graph: Graph, limit: int | None = None) -> int:
    """Exact induced-odd-cycle packing number by pruned subset enumeration.

    A vertex subset witnesses k when its induced subgraph is 2-regular with
    every component an odd cycle; the maximum component count over witnesses
    is returned (0 when no induced odd cycle exists).
    """
    _guard(graph.n, _ceiling(limit, OracleLimit.from_env().max_vertices_iocp), "odd-cycle packing search")
    return backend.iocp(graph)


def exact_max_clique(graph: Graph, limit: int | None = None) -> frozenset[int]:
    """A maximum clique, as a maximum independent set of the complement."""
    _guard(graph.n, _ceiling(limit, OracleLimit.from_env().max_vertices_mis), "clique search")
    return exact_mis(complement(graph), limit=graph.n)


def independent_set_of_size(graph: Graph, size: int, limit: int | None = None) -> frozenset[int] | None:
    """Lexicographically first independent set of exactly ``size`` vertices,
    or None. Unlike the optimizing oracles this decision search is feasible
    well beyond the mis limit for small ``size``, so it is bounded only by
    ``limit`` when one is passed."""
    if size < 0:
        raise ValueError(f"size must be >= 0, got {size}")
    if limit is not None:
        _guard(graph.n, limit, "independent-set-of-size search")
    mask = backend.independent_set_of_size(graph, size)
    return None if mask is None else _mask_to_set(mask)


def exact_chromatic_coloring(graph: Graph, limit: int | None = None) -> tuple[int, Coloring]:
    """Exact chromatic number with an optimal coloring, by iterative deepening.

    For each candidate palette size, vertices are colored in index order and
    a new color may only be opened in canonical order (vertex 0 always takes
    color 0), which removes palette symmetry.
    """
    _guard(graph.n, _ceiling(limit, OracleLimit.from_env().max_vertices_chi), "chromatic search")
    n = graph.n
    if n == 0:
        return 0, Coloring((), 0)
    if graph.m == 0:
        return 1, Coloring((0,) * n, 1)

    def colorable(palette: int) -> tuple[int, ...] | None:
        assignment = [-1] * n

        def place(v: int, opened: int) -> bool:
            if v == n:
                return True
            usable = min(opened + 1, palette)
            for color in range(usable):
                if all(assignment[u] != color for u in graph.adj[v] if u < v):
                    assignment[v] = color
                    if place(v + 1, max(opened, color + 1)):
                        return True
            assignment[v] = -1
            return False

        return tuple(assignment) if place(0, 0) else None

    k = 2
    while True:
        found = colorable(k)
        if found is not None:
            return k, Coloring.from_assignment(found)
        k += 1


def exact_chromatic(graph: Graph, limit: int | None = None) -> int:
    """Exact chromatic number; see exact_chromatic_coloring."""
    return exact_chromatic_coloring(graph, limit)[0]


class CheckResult(NamedTuple):
    """Outcome of a certificate check, with a violating edge on failure."""

    ok: bool
    violating_edge: tuple[int, int] | None = None


def check_independent(graph: Graph, vertices) -> CheckResult:
    """Whether the vertex set spans no edge; the first violation in
    lexicographic order is reported."""
    members = sorted(set(vertices))
    for v in members:
        if not 0 <= v < graph.n:
            raise ValueError(f"vertex {v} out of range for n={graph.n}")
    member_set = set(members)
    for u in members:
        for v in graph.adj[u]:
            if v > u and v in member_set:
                return CheckResult(False, (u, v))
    return CheckResult(True)


def check_coloring(graph: Graph, coloring: Coloring) -> CheckResult:
    """Whether the coloring is proper; the first monochromatic edge in
    lexicographic order is reported. The assignment must cover V(G)."""
    if len(coloring.assignment) != graph.n:
        raise ValueError(
            f"assignment covers {len(coloring.assignment)} vertices, graph has {graph.n}"
        )
    for u, v in graph.edges():
        if coloring.assignment[u] == coloring.assignment[v]:
            return CheckResult(False, (u, v))
    return CheckResult(True)
