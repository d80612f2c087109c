"""Independent checks for a claimed tree cover of K_n."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .graph import Edge, TreeCover, enumerate_edges
from .params import size_sequence, tau_complete
from .unionfind import DisjointSet

MAX_LISTED = 20


@dataclass
class VerificationReport:
    pairwise_disjoint: bool = True
    covers_all_edges: bool = True
    all_acyclic: bool = True
    all_connected: bool = True
    sizes_match_lemma3: bool = True
    count_equals_tau: bool = True
    spanning_flags: list[bool] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.pairwise_disjoint
            and self.covers_all_edges
            and self.all_acyclic
            and self.all_connected
            and self.sizes_match_lemma3
            and self.count_equals_tau
        )

    def summary(self) -> str:
        checks = [
            ("pairwise_disjoint", self.pairwise_disjoint),
            ("covers_all_edges", self.covers_all_edges),
            ("all_acyclic", self.all_acyclic),
            ("all_connected", self.all_connected),
            ("sizes_match_lemma3", self.sizes_match_lemma3),
            ("count_equals_tau", self.count_equals_tau),
        ]
        lines = [f"{name}: {'ok' if ok else 'FAIL'}" for name, ok in checks]
        spanning = sum(self.spanning_flags)
        lines.append(f"spanning trees: {spanning}/{len(self.spanning_flags)}")
        lines.extend(self.failures)
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def _tree_shape(edges: Iterable[tuple[int, int]]) -> tuple[bool, bool, tuple[int, int] | None]:
    """Return (acyclic, connected, first cycle-closing edge) for an edge list.

    Connectivity is judged on the endpoints that actually occur.
    """
    ds = DisjointSet()
    closing = None
    for a, b in edges:
        if not ds.union(a, b) and closing is None:
            closing = (a, b)
    if not len(ds):
        return True, False, None
    return closing is None, ds.components() == 1, closing


def is_tree(edges: Iterable[tuple[int, int]]) -> bool:
    """True iff the edges form one connected acyclic graph on their endpoints.

    An empty edge set is not a tree.
    """
    acyclic, connected, _ = _tree_shape(edges)
    return acyclic and connected


def _listed(items: list, what: str) -> list[str]:
    out = [f"{what}: {x}" for x in items[:MAX_LISTED]]
    if len(items) > MAX_LISTED:
        out.append(f"{what}: ... and {len(items) - MAX_LISTED} more")
    return out


def _indexed_tree_shape(tree: list[Edge], n: int) -> tuple[bool, bool, Edge | None, int]:
    """Array-backed form of :func:`_tree_shape` for edges inside ``1..n``.

    Also returns the number of distinct endpoints.
    """
    parent = list(range(n + 1))
    touched = bytearray(n + 1)
    vertices = unions = 0
    closing = None
    for u, v in tree:
        if not touched[u]:
            touched[u] = 1
            vertices += 1
        if not touched[v]:
            touched[v] = 1
            vertices += 1
        a, b = u, v
        while parent[a] != a:
            parent[a] = a = parent[parent[a]]
        while parent[b] != b:
            parent[b] = b = parent[parent[b]]
        if a != b:
            parent[a] = b
            unions += 1
        elif closing is None:
            closing = (u, v)
    return closing is None, vertices > 0 and vertices - unions == 1, closing, vertices


def _screen_edges(trees, n: int):
    """Fast pass: succeeds only if every edge is canonical, in range and
    appears once across the whole cover."""
    seen: set[Edge] = set()
    for tree in trees:
        if not all(0 < a < b <= n for a, b in tree):
            return None, None, None
        before = len(seen)
        seen.update(tree)
        if len(seen) - before != len(tree):
            return None, None, None
    return trees, seen, []


def _locate_edge_faults(trees, n: int, report: VerificationReport):
    """Slow pass that names every shared, repeated or invalid edge."""
    fail = report.failures
    owner: dict[Edge, int] = {}
    bad: list[str] = []
    valid_trees: list[list[Edge]] = []
    for t, tree in enumerate(trees, start=1):
        valid: list[Edge] = []
        in_tree: set[Edge] = set()
        for a, b in tree:
            if a == b or not (1 <= a <= n and 1 <= b <= n):
                bad.append(f"T{t} ({a},{b})")
                continue
            e = (a, b) if a < b else (b, a)
            first = owner.setdefault(e, t)
            if e in in_tree:
                fail.append(f"duplicate edge ({e[0]},{e[1]}) inside T{t}")
            elif first != t:
                report.pairwise_disjoint = False
                fail.append(f"edge ({e[0]},{e[1]}) shared by T{first} and T{t}")
            valid.append(e)
            in_tree.add(e)
        valid_trees.append(valid)
    return valid_trees, owner, bad


def verify_cover(cover: TreeCover) -> VerificationReport:
    """Check a cover of K_n for disjointness, exact coverage, tree shape,
    the expected size multiset and the minimum tree count.

    Malformed input (out-of-range endpoints, self-loops, repeated edges)
    is reported in ``failures`` rather than raised.
    """
    n = cover.n
    if n < 3:
        raise ValueError(f"verify_cover needs n >= 3, got {n}")
    report = VerificationReport()
    fail = report.failures

    valid_trees, owner, bad = _screen_edges(cover.trees, n)
    if valid_trees is None:
        valid_trees, owner, bad = _locate_edge_faults(cover.trees, n, report)

    if bad:
        report.covers_all_edges = False
        fail.extend(_listed(bad, "invalid edge"))
    # owner holds distinct canonical in-range edges, so the count decides coverage
    if len(owner) != n * (n - 1) // 2:
        report.covers_all_edges = False
        missing = sorted(enumerate_edges(n).difference(owner))
        fail.extend(_listed([f"({a},{b})" for a, b in missing], "missing edge"))

    for t, tree in enumerate(valid_trees, start=1):
        acyclic, connected, closing, vertices = _indexed_tree_shape(tree, n)
        if not tree:
            fail.append(f"T{t} is empty")
        if not acyclic:
            report.all_acyclic = False
            fail.append(f"T{t} has a cycle closed by edge ({closing[0]},{closing[1]})")
        if not connected:
            report.all_connected = False
            if tree:
                fail.append(f"T{t} is disconnected")
        report.spanning_flags.append(vertices == n)

    expected = size_sequence(n)
    if Counter(cover.sizes) != Counter(expected):
        report.sizes_match_lemma3 = False
        fail.append(f"tree sizes {sorted(cover.sizes, reverse=True)} != expected {expected}")
    tau = tau_complete(n)
    if len(cover.trees) != tau:
        report.count_equals_tau = False
        fail.append(f"{len(cover.trees)} trees, minimum for K_{n} is {tau}")
    return report
