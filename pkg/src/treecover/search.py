"""Exhaustive search for the fewest edge-disjoint trees covering K_n.

Only meant as an oracle for tiny orders. Edges are assigned in lexicographic
order; a new tree may only be opened as the lowest unused label, which removes
label-permutation symmetry. The only pruning is acyclicity: no bound on tree
sizes is used, so infeasibility is established by search alone.
"""

from __future__ import annotations

from collections import Counter

from .graph import iter_edges

MAX_SEARCH_ORDER = 6


def _partition_exists(n: int, k: int) -> bool:
    edges = list(iter_edges(n))
    # comp[t][v]: component label of vertex v inside tree t
    comp = [list(range(n + 1)) for _ in range(k)]

    def connected(t: int) -> bool:
        # untouched vertices stay singletons; a tree is one non-singleton component
        counts = Counter(comp[t][1:])
        return sum(1 for c in counts.values() if c > 1) == 1

    def place(i: int, opened: int) -> bool:
        if i == len(edges):
            return opened == k and all(connected(t) for t in range(k))
        a, b = edges[i]
        for t in range(min(opened + 1, k)):
            labels = comp[t]
            la, lb = labels[a], labels[b]
            if la == lb:
                continue
            saved = labels[:]
            for v in range(1, n + 1):
                if labels[v] == lb:
                    labels[v] = la
            if place(i + 1, max(opened, t + 1)):
                return True
            comp[t] = saved
        return False

    return place(0, 0)


def brute_force_min_trees(n: int) -> int:
    """Least k such that E(K_n) splits into k edge-disjoint trees, 3 <= n <= 6."""
    if not 3 <= n <= MAX_SEARCH_ORDER:
        raise ValueError(f"exhaustive search supports 3 <= n <= {MAX_SEARCH_ORDER}, got {n}")
    k = 1
    while not _partition_exists(n, k):
        k += 1
    return k
