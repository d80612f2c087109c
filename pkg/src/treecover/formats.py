"""Text formats for tree covers.

edge list::

    n tau
    t u v        # one line per edge, tree index first

JSON::

    {"format_version": 1, "n": 6, "tau": 3, "trees": [[[3, 4], ...], ...]}

DOT output is write-only: one ``graph Tk { ... }`` block per tree.
All vertices are 1-indexed.
"""

from __future__ import annotations

import json

from .graph import Edge, TreeCover

FORMAT_VERSION = 1
FORMATS = ("edgelist", "json", "dot")


class CoverParseError(ValueError):
    pass


def to_edgelist(cover: TreeCover) -> str:
    lines = [f"{cover.n} {cover.tau}"]
    for t, tree in enumerate(cover.trees, start=1):
        lines.extend(f"{t} {u} {v}" for u, v in tree)
    return "\n".join(lines) + "\n"


def to_json(cover: TreeCover) -> str:
    payload = {
        "format_version": FORMAT_VERSION,
        "n": cover.n,
        "tau": cover.tau,
        "trees": [[[u, v] for u, v in tree] for tree in cover.trees],
    }
    return json.dumps(payload) + "\n"


def to_dot(cover: TreeCover) -> str:
    out = []
    for t, tree in enumerate(cover.trees, start=1):
        out.append(f"graph T{t} {{")
        out.extend(f"  {u} -- {v};" for u, v in tree)
        out.append("}")
    return "\n".join(out) + "\n"


def serialize(cover: TreeCover, fmt: str) -> str:
    if fmt == "edgelist":
        return to_edgelist(cover)
    if fmt == "json":
        return to_json(cover)
    if fmt == "dot":
        return to_dot(cover)
    raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def _edge(a: int, b: int) -> Edge:
    # orientation is normalised; self-loops and range errors are left for the verifier
    return (a, b) if a <= b else (b, a)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _check_order(n, where: str) -> None:
    if n < 3:
        raise CoverParseError(f"{where}: cover order must be >= 3, got {n}")


def parse_edgelist(text: str) -> TreeCover:
    header = None
    trees: list[list[Edge]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise CoverParseError(f"line {lineno}: expected integers, got {raw.strip()!r}") from None
        if header is None:
            if len(values) != 2:
                raise CoverParseError(f"line {lineno}: header must be 'n tau', got {raw.strip()!r}")
            n, tau = values
            _check_order(n, f"line {lineno}")
            if tau < 1:
                raise CoverParseError(f"line {lineno}: tau must be >= 1, got {tau}")
            header = (n, tau)
            trees = [[] for _ in range(tau)]
            continue
        if len(values) != 3:
            raise CoverParseError(f"line {lineno}: expected 't u v', got {raw.strip()!r}")
        t, u, v = values
        if not 1 <= t <= header[1]:
            raise CoverParseError(f"line {lineno}: tree index {t} outside 1..{header[1]}")
        trees[t - 1].append(_edge(u, v))
    if header is None:
        raise CoverParseError("line 1: empty input, missing 'n tau' header")
    return TreeCover(header[0], tuple(tuple(t) for t in trees))


def parse_json(text: str) -> TreeCover:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CoverParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise CoverParseError("top level must be an object")
    for key in ("format_version", "n", "tau", "trees"):
        if key not in data:
            raise CoverParseError(f"missing key {key!r}")
    if data["format_version"] != FORMAT_VERSION:
        raise CoverParseError(f"unsupported format_version {data['format_version']!r}")
    n, tau, raw_trees = data["n"], data["tau"], data["trees"]
    if not _is_int(n) or not _is_int(tau):
        raise CoverParseError("'n' and 'tau' must be integers")
    _check_order(n, "'n'")
    if not isinstance(raw_trees, list):
        raise CoverParseError("'trees' must be a list")
    if len(raw_trees) != tau:
        raise CoverParseError(f"'tau' is {tau} but {len(raw_trees)} trees are listed")
    trees = []
    for t, raw in enumerate(raw_trees, start=1):
        if not isinstance(raw, list):
            raise CoverParseError(f"trees[{t - 1}] must be a list of edges")
        tree = []
        for k, pair in enumerate(raw):
            if not (isinstance(pair, list) and len(pair) == 2 and all(_is_int(x) for x in pair)):
                raise CoverParseError(f"trees[{t - 1}][{k}] must be a pair of integers, got {pair!r}")
            tree.append(_edge(*pair))
        trees.append(tuple(tree))
    return TreeCover(n, tuple(trees))


def parse_cover(text: str) -> TreeCover:
    """Parse either format; JSON is recognised by a leading ``{``."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_edgelist(text)
