import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treecover.decompose import deck_e, deck_o, decompose
from treecover.graph import TreeCover, enumerate_edges
from treecover.params import size_sequence
from treecover.search import brute_force_min_trees
from treecover.verify import _indexed_tree_shape, is_tree, verify_cover


def definitional_is_tree(edges) -> bool:
    """Connected by flood fill and |E| = |V| - 1."""
    edges = list(edges)
    if not edges:
        return False
    vertices = {x for e in edges for x in e}
    if len(set(map(frozenset, edges))) != len(edges) or any(a == b for a, b in edges):
        return False
    if len(edges) != len(vertices) - 1:
        return False
    adj = {v: [] for v in vertices}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    start = next(iter(vertices))
    seen, stack = {start}, [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == vertices


def independently_valid(cover: TreeCover) -> bool:
    flat = [frozenset(e) for t in cover.trees for e in t]
    return (
        len(flat) == len(set(flat))
        and set(flat) == {frozenset(e) for e in enumerate_edges(cover.n)}
        and all(definitional_is_tree(t) for t in cover.trees)
        and Counter(cover.sizes) == Counter(size_sequence(cover.n))
        and len(cover.trees) == (cover.n + 1) // 2
    )


@pytest.mark.parametrize(
    "edges, expected",
    [
        ([(1, 2), (2, 3)], True),
        ([(1, 2), (2, 3), (1, 3)], False),
        ([(1, 2), (3, 4)], False),
        ([], False),
        ([(4, 9)], True),
        ([(1, 2), (1, 2)], False),
    ],
)
def test_is_tree_examples(edges, expected):
    assert is_tree(edges) is expected


def test_is_tree_agrees_with_definition_on_random_sets():
    rng = random.Random(20240611)
    for _ in range(10_000):
        n = rng.randint(2, 8)
        pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
        k = rng.randint(1, min(len(pairs), n + 1))
        edges = rng.sample(pairs, k)
        expected = definitional_is_tree(edges)
        assert is_tree(edges) == expected, edges
        acyclic, connected, _, _ = _indexed_tree_shape(edges, n)
        assert (acyclic and connected) == expected, edges


def test_verify_deck_e_6():
    report = verify_cover(deck_e(6))
    assert report.passed, report.failures
    assert report.spanning_flags == [True, True, True]
    assert report.failures == []


def test_verify_deck_o_7():
    report = verify_cover(deck_o(7))
    assert report.passed, report.failures
    assert report.spanning_flags == [True, False, False, False]


def test_shared_edge_is_located():
    cover = TreeCover(4, (((1, 2), (1, 3), (1, 4)), ((1, 2), (2, 3), (3, 4))))
    report = verify_cover(cover)
    assert not report.pairwise_disjoint
    assert not report.passed
    assert any("(1,2)" in f and "T1" in f and "T2" in f for f in report.failures)
    assert not report.covers_all_edges  # (2,4) missing
    assert any("missing edge: (2,4)" in f for f in report.failures)


def test_duplicate_inside_tree():
    t1, t2 = deck_e(4).trees
    report = verify_cover(TreeCover(4, (t1 + (t1[0],), t2)))
    assert not report.passed
    assert any("duplicate edge (2,3) inside T1" in f for f in report.failures)
    assert not report.all_acyclic


def test_invalid_endpoints_reported_not_raised():
    t1, t2 = deck_e(4).trees
    report = verify_cover(TreeCover(4, (t1 + ((2, 2), (3, 9)), t2)))
    assert not report.covers_all_edges
    assert any("(2,2)" in f for f in report.failures)
    assert any("(3,9)" in f for f in report.failures)


def test_non_canonical_orientation_accepted():
    cover = TreeCover(3, (((2, 1), (3, 2)), ((3, 1),)))
    assert verify_cover(cover).passed


def test_wrong_tree_count_and_empty_tree():
    cover = deck_e(4)
    report = verify_cover(TreeCover(4, cover.trees + ((),)))
    assert not report.count_equals_tau
    assert not report.all_connected
    assert any("T3 is empty" in f for f in report.failures)


def test_cycle_reported_with_closing_edge():
    # three trees of K_4: a triangle and two leftovers
    cover = TreeCover(4, (((1, 2), (2, 3), (1, 3)), ((1, 4), (2, 4), (3, 4))))
    report = verify_cover(cover)
    assert not report.all_acyclic
    assert any("T1 has a cycle closed by edge (1,3)" in f for f in report.failures)


def test_verify_rejects_tiny_order():
    with pytest.raises(ValueError):
        verify_cover(TreeCover(2, (((1, 2),),)))


@settings(max_examples=300)
@given(st.data())
def test_moving_an_edge_is_caught_unless_result_is_valid(data):
    n = data.draw(st.integers(3, 50))
    cover, _ = decompose(n)
    trees = [list(t) for t in cover.trees]
    i = data.draw(st.integers(0, len(trees) - 1))
    j = data.draw(st.integers(0, len(trees) - 1).filter(lambda x: x != i))
    edge = trees[i].pop(data.draw(st.integers(0, len(trees[i]) - 1)))
    trees[j].append(edge)
    mutated = TreeCover(n, tuple(map(tuple, trees)))
    report = verify_cover(mutated)

    assert report.covers_all_edges and report.pairwise_disjoint
    assert report.passed == independently_valid(mutated)
    if n % 2 == 1 and i == 0:
        # the star edge (x, mid) hangs mid off a tree that avoids it: still a minimum cover
        assert report.passed
    else:
        assert not (report.all_acyclic and report.all_connected and report.sizes_match_lemma3)


@settings(max_examples=200)
@given(st.data())
def test_deleting_an_edge_breaks_coverage(data):
    n = data.draw(st.integers(3, 50))
    trees = [list(t) for t in decompose(n)[0].trees]
    i = data.draw(st.integers(0, len(trees) - 1))
    removed = trees[i].pop(data.draw(st.integers(0, len(trees[i]) - 1)))
    report = verify_cover(TreeCover(n, tuple(map(tuple, trees))))
    assert not report.covers_all_edges
    assert any(f"missing edge: ({removed[0]},{removed[1]})" in f for f in report.failures)


@pytest.mark.parametrize("n", range(3, 80))
def test_decompose_verifies(n):
    report = verify_cover(decompose(n)[0])
    assert report.passed, report.failures
    assert independently_valid(decompose(n)[0])


@pytest.mark.parametrize("n, k", [(3, 2), (4, 2), (5, 3), (6, 3)])
def test_brute_force_min_trees(n, k):
    assert brute_force_min_trees(n) == k


@pytest.mark.parametrize("n", [2, 7])
def test_brute_force_bounds(n):
    with pytest.raises(ValueError):
        brute_force_min_trees(n)
