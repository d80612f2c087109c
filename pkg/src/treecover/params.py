"""Decomposition parameters of complete graphs and small-graph condition checks.

sigma: spanning tree packing number, alpha: arboricity, tau: tree covering
number. The two ``*_condition``/``*_sparse`` checkers enumerate every vertex
partition or subset, so they are only meant for small graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import Edge, canonical_edge, complete_edge_count, iter_edges

MAX_SUBSET_ORDER = 20
MAX_PARTITION_ORDER = 10


class InstanceTooLarge(ValueError):
    pass


def stp_complete(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return n // 2


def stp_bipartite(n1: int, n2: int) -> int:
    """Spanning tree packing number of K_{n1,n2}, 1 <= n1 <= n2."""
    if n1 < 1 or n2 < 1:
        raise ValueError("part sizes must be positive")
    if n1 > n2:
        raise ValueError(f"expected n1 <= n2, got {n1} > {n2}")
    return (n1 * n2) // (n1 + n2 - 1)


def arboricity_formula(n: int, m: int) -> int:
    """ceil(m / (n - 1)); 0 for an edgeless graph."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    return -(-m // (n - 1))


def _check_nontrivial(n: int) -> None:
    if n < 3:
        raise ValueError(f"n={n} is trivial; need n >= 3")


def tau_complete(n: int) -> int:
    _check_nontrivial(n)
    return (n + 1) // 2


def size_sequence(n: int) -> list[int]:
    """Tree sizes of a minimum decomposition of K_n, in emission order."""
    _check_nontrivial(n)
    if n % 2 == 0:
        return [n - 1] * (n // 2)
    return [n - 1] + [n - 2] * ((n - 1) // 2)


def lemma1_feasible(n: int, sizes: Iterable[int]) -> bool:
    """Can K_n split into edge-disjoint trees with exactly these sizes?"""
    _check_nontrivial(n)
    sizes = list(sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("sizes must be a non-empty list of positive integers")
    return all(s <= n - 1 for s in sizes) and sum(sizes) == complete_edge_count(n)


@dataclass(frozen=True)
class SmallGraph:
    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        for a, b in self.edges:
            canonical_edge(a, b, self.n)
            if a > b:
                raise ValueError(f"edge ({a},{b}) is not canonical")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "SmallGraph":
        return cls(n, frozenset(canonical_edge(a, b, n) for a, b in pairs))

    @classmethod
    def complete(cls, n: int) -> "SmallGraph":
        return cls(n, frozenset(iter_edges(n)))


def nash_williams_sparse(g: SmallGraph, kappa: int) -> bool:
    """|E(X)| <= kappa * (|X| - 1) for every nonempty vertex subset X."""
    if g.n > MAX_SUBSET_ORDER:
        raise InstanceTooLarge(f"instance too large: n={g.n} > {MAX_SUBSET_ORDER} for subset enumeration")
    n = g.n
    adj = [0] * n
    for a, b in g.edges:
        adj[a - 1] |= 1 << (b - 1)
        adj[b - 1] |= 1 << (a - 1)
    # induced[X] = induced[X minus its lowest vertex] + edges from that vertex into the rest
    induced = [0] * (1 << n)
    size = [0] * (1 << n)
    for x in range(1, 1 << n):
        low = (x & -x).bit_length() - 1
        rest = x & (x - 1)
        induced[x] = induced[rest] + (adj[low] & rest).bit_count()
        size[x] = size[rest] + 1
        if induced[x] > kappa * (size[x] - 1):
            return False
    return True


def set_partitions(n: int) -> Iterator[list[int]]:
    """Yield block labels for every partition of n items (restricted growth strings)."""
    if n == 0:
        yield []
        return
    labels = [0] * n

    def rec(i: int, top: int) -> Iterator[list[int]]:
        if i == n:
            yield labels
            return
        for lab in range(top + 1):
            labels[i] = lab
            yield from rec(i + 1, max(top, lab + 1))

    yield from rec(1, 1)


def tutte_packing_condition(g: SmallGraph, kappa: int) -> bool:
    """|E_P| >= kappa * (|P| - 1) for every partition P of the vertex set,
    E_P being the edges joining different blocks."""
    if g.n > MAX_PARTITION_ORDER:
        raise InstanceTooLarge(f"instance too large: n={g.n} > {MAX_PARTITION_ORDER} for partition enumeration")
    edges = [(a - 1, b - 1) for a, b in g.edges]
    for labels in set_partitions(g.n):
        blocks = max(labels) + 1
        crossing = sum(1 for a, b in edges if labels[a] != labels[b])
        if crossing < kappa * (blocks - 1):
            return False
    return True


@dataclass(frozen=True)
class ParamRow:
    n: int
    m: int
    sigma: int
    alpha: int
    tau: int


def param_table(n_max: int) -> list[ParamRow]:
    _check_nontrivial(n_max)
    rows = []
    for n in range(3, n_max + 1):
        m = complete_edge_count(n)
        rows.append(ParamRow(n, m, stp_complete(n), arboricity_formula(n, m), tau_complete(n)))
    return rows
