"""Minimum edge-disjoint tree decompositions of K_n.

``deck_e`` handles even orders and returns n/2 spanning trees. ``deck_o``
handles odd orders and returns one spanning star plus (n-1)/2 trees of
n-2 edges each. Both emit every edge of K_n exactly once, so the work is
linear in m = n(n-1)/2.

Edges are written out already canonical (smaller endpoint first); the
comments on each emission give the ordering argument.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Edge, TreeCover, complete_edge_count, successor


@dataclass(frozen=True)
class DecompositionTrace:
    n: int
    tau: int
    emitted_edges: int
    per_tree_sizes: tuple[int, ...]


def _sweep(n: int, tau: int, i: int, pt: int, qt: int) -> list[list[Edge]]:
    """Trees T[3..tau], shared by both parities.

    Each tree is centred on the pair (pt, qt), which moves one step outward
    per tree while the offset ``i`` grows by one. Throughout, pt <= n/2 < qt.
    """
    trees = []
    for _ in range(3, tau + 1):
        tree = [(pt, qt)]
        append = tree.append
        for j in range(1, pt):
            append((j, qt))  # j < pt < qt
            append((pt, n - j + 1))  # n - j + 1 > n - pt + 1 > pt
        for j in range(i, 0, -1):
            append((j, pt + j))
            append((qt - j, n - j + 1))  # qt <= n
        trees.append(tree)
        i, pt, qt = i + 1, pt - 1, qt + 1
    return trees


def _cycle_minus(n: int, skip: set[int]) -> list[Edge]:
    """The cycle 1-2-...-n-1 minus the edges leaving the vertices in ``skip``."""
    path = [(i, i + 1) for i in range(1, n) if i not in skip]
    if n not in skip:
        path.append((successor(n, n), n))
    return path


def deck_e(n: int) -> TreeCover:
    """Decompose K_n, n even, into n/2 edge-disjoint spanning trees."""
    if n % 2 or n < 4:
        raise ValueError(f"deck_e needs an even order >= 4, got {n}")
    tau = mid = (n + 1) // 2
    p, q = mid, mid + 1

    # double star on the centre pair (p, q)
    t1 = [(p, q)]
    for i in range(1, p):
        t1.append((i, q))
        t1.append((p, n - i + 1))

    # Hamiltonian path: the n-cycle with the edge leaving p removed
    t2 = _cycle_minus(n, {p})

    trees = [t1, t2, *_sweep(n, tau, 1, p - 1, q + 1)]
    return TreeCover(n, tuple(map(tuple, trees)))


def deck_o(n: int) -> TreeCover:
    """Decompose K_n, n odd, into (n+1)/2 edge-disjoint trees."""
    if n % 2 == 0 or n < 3:
        raise ValueError(f"deck_o needs an odd order >= 3, got {n}")
    tau = mid = (n + 1) // 2
    p, q = mid - 1, mid + 1

    t1 = [(i, mid) for i in range(1, mid)] + [(mid, i) for i in range(mid + 1, n + 1)]
    # The guard reads "i != p or i != mid", which is always true; only the
    # conjunction gives a tree of n-2 edges.
    t2 = _cycle_minus(n, {p, mid})

    trees = [t1, t2, *_sweep(n, tau, 0, p, q)]
    return TreeCover(n, tuple(map(tuple, trees)))


def decompose(n: int) -> tuple[TreeCover, DecompositionTrace]:
    """Dispatch on parity and record how many edges were emitted.

    Orders 1 and 2 are rejected: K_1 has no edges and K_2 is a single edge,
    so there is nothing to decompose.
    """
    if n < 3:
        raise ValueError(
            f"n={n} is trivial: K_{n} has {max(n * (n - 1) // 2, 0)} edge(s); "
            "decomposition is defined for n >= 3"
        )
    cover = deck_e(n) if n % 2 == 0 else deck_o(n)
    sizes = tuple(len(t) for t in cover.trees)
    trace = DecompositionTrace(n=n, tau=len(cover.trees), emitted_edges=sum(sizes), per_tree_sizes=sizes)
    assert trace.emitted_edges == complete_edge_count(n)
    return cover, trace
