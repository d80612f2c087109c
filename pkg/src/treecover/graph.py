"""Vertices, edges and complete-graph enumeration.

Vertices are 1-indexed integers. An edge is stored canonically as ``(u, v)``
with ``u < v`` so that undirected edges compare and hash as plain tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Tuple

# canonical (u, v) with u < v
Edge = Tuple[int, int]


def _check_order(n: int) -> None:
    if n < 1:
        raise ValueError(f"graph order must be >= 1, got {n}")


def canonical_edge(a: int, b: int, n: int | None = None) -> Edge:
    """Return the undirected edge ``{a, b}`` as ``(min, max)``.

    When ``n`` is given, both endpoints must lie in ``1..n``.
    """
    if a == b:
        raise ValueError(f"self-loop at vertex {a}")
    if a < 1 or b < 1 or (n is not None and (a > n or b > n)):
        bound = f"1..{n}" if n is not None else ">= 1"
        raise ValueError(f"edge ({a},{b}) has an endpoint outside {bound}")
    return (a, b) if a < b else (b, a)


def complete_edge_count(n: int) -> int:
    _check_order(n)
    return n * (n - 1) // 2


def iter_edges(n: int) -> Iterator[Edge]:
    _check_order(n)
    for u in range(1, n):
        for v in range(u + 1, n + 1):
            yield (u, v)


def enumerate_edges(n: int) -> frozenset[Edge]:
    """All edges of K_n."""
    return frozenset(iter_edges(n))


def successor(i: int, n: int) -> int:
    """Cyclic successor on ``1..n``: ``i + 1``, wrapping ``n`` back to ``1``."""
    if not 1 <= i <= n:
        raise ValueError(f"vertex {i} outside 1..{n}")
    return i % n + 1


@dataclass(frozen=True)
class TreeCover:
    """An ordered list of edge lists ``T[1..x]`` claimed to decompose E(K_n).

    Edges within a tree keep their emission order. Nothing here checks the
    claim; see :func:`treecover.verify.verify_cover`.
    """

    n: int
    trees: tuple[tuple[Edge, ...], ...]

    @property
    def tau(self) -> int:
        return len(self.trees)

    @property
    def sizes(self) -> list[int]:
        return [len(t) for t in self.trees]

    def edge_count(self) -> int:
        return sum(len(t) for t in self.trees)
