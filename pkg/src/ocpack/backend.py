"""Kernel backend selection.

The hot kernels exist twice: a compiled Cython extension (ocpack._kernels)
and a pure-Python fallback (ocpack._pykernels) with identical semantics. The
compiled backend is used when it imported successfully, unless overridden by
the OCPACK_BACKEND environment variable ("pure", "compiled", or "auto") or a
set_backend() call. The compiled bitset kernels cover n <= 64; larger graphs
silently use the pure kernels, which have no size ceiling.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    from . import _kernels  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on the build environment
    _kernels = None

_COMPILED_BITSET_LIMIT = 64


def available_backends() -> tuple[str, ...]:
    return ("pure", "compiled") if _kernels is not None else ("pure",)


def _resolve(name: str) -> str:
    if name not in ("auto", "pure", "compiled"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "auto":
        return "compiled" if _kernels is not None else "pure"
    if name == "compiled" and _kernels is None:
        raise RuntimeError("compiled backend requested but ocpack._kernels is not built")
    return name


_active = _resolve(os.environ.get("OCPACK_BACKEND", "auto"))


def set_backend(name: str) -> None:
    """Select 'pure', 'compiled', or 'auto' for subsequent kernel calls."""
    global _active
    _active = _resolve(name)


def current_backend() -> str:
    return _active


def _compiled_for(n: int) -> bool:
    return _active == "compiled" and n <= _COMPILED_BITSET_LIMIT


def bfs(graph, sources: list[int]) -> list[int]:
    if _active == "compiled":
        indptr, indices = graph.csr()
        import numpy as np

        src = np.asarray(sources, dtype=np.int32)
        return _kernels.bfs_multi(graph.n, indptr, indices, src).tolist()
    return _pykernels.bfs_multi(graph.n, graph.adj, sources)


def odd_cycle(graph) -> list[int] | None:
    """Canonical shortest odd cycle vertex list, or None if bipartite."""
    if _active == "compiled":
        indptr, indices = graph.csr()
        raw = _kernels.shortest_odd_cycle(graph.n, indptr, indices)
    else:
        raw = _pykernels.shortest_odd_cycle(graph.n, graph.adj)
    if raw is None:
        return None
    return _canonical_cycle(list(raw))


def _canonical_cycle(cycle: list[int]) -> list[int]:
    """Rotate to the smallest vertex; orient toward the smaller neighbor."""
    k = len(cycle)
    i = cycle.index(min(cycle))
    rotated = cycle[i:] + cycle[:i]
    if rotated[1] > rotated[-1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return rotated


_COMPILED_WEIGHT_LIMIT = 1 << 62


def _weights_fit(weights: tuple[int, ...]) -> bool:
    # The compiled kernels accumulate weights in 64-bit signed integers.
    return sum(weights) < _COMPILED_WEIGHT_LIMIT


def mis_exact(graph, weights: tuple[int, ...]) -> tuple[int, int]:
    """Exact maximum-weight independent set as (weight, bitmask)."""
    if _compiled_for(graph.n) and _weights_fit(weights):
        return _kernels.mis_exact(graph.n, list(graph.bits), list(weights))
    return _pykernels.mis_exact(graph.n, graph.bits, weights)


def mis_bruteforce(graph, weights: tuple[int, ...]) -> tuple[int, int]:
    """Exhaustive-subset maximum-weight independent set as (weight, bitmask)."""
    if _compiled_for(graph.n) and _weights_fit(weights):
        return _kernels.mis_bruteforce(graph.n, list(graph.bits), list(weights))
    return _pykernels.mis_bruteforce(graph.n, graph.bits, weights)


def iocp(graph) -> int:
    if _compiled_for(graph.n):
        return _kernels.iocp_exact(graph.n, list(graph.bits))
    return _pykernels.iocp_exact(graph.n, graph.bits)


def independent_set_of_size(graph, size: int) -> int | None:
    """Bitmask of the first independent set of the given size, or None."""
    if _compiled_for(graph.n):
        return _kernels.independent_set_of_size(graph.n, list(graph.bits), size)
    return _pykernels.independent_set_of_size(graph.n, graph.bits, size)
