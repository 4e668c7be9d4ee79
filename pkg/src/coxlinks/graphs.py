"""Mixed-sign Coxeter graphs.

A graph here is finite, simple, connected, with a sign (+1 or -1)
attached to every vertex.  The text format, sign-induced bipartitions,
vertex extensions and the labeled-tree enumeration used by the theorem
sweeps all live in this module.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .exact import IntMatrix

Sign = int
PLUS: Sign = 1
MINUS: Sign = -1

_SIGN_TOKENS = {"+": PLUS, "-": MINUS}
_TOKEN_OF_SIGN = {PLUS: "+", MINUS: "-"}


class GraphError(ValueError):
    pass


class GraphParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class NotBipartiteError(GraphError):
    pass


class NotAlternatingError(GraphError):
    pass


@dataclass(frozen=True)
class Bipartition:
    part_plus: frozenset[int]
    part_minus: frozenset[int]


@dataclass(frozen=True)
class MixedSignCoxeterGraph:
    """Immutable sign-labeled graph; vertex order is declaration order."""

    names: tuple[str, ...]
    signs: tuple[Sign, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        n = len(self.names)
        if n == 0:
            raise GraphError("graph must have at least one vertex")
        if len(set(self.names)) != n:
            raise GraphError("duplicate vertex name")
        if len(self.signs) != n or any(s not in (PLUS, MINUS) for s in self.signs):
            raise GraphError("every vertex needs a sign of +1 or -1")
        seen = set()
        for e in self.edges:
            i, j = e
            if not (0 <= i < j < n):
                raise GraphError(f"invalid edge {e}")
            if e in seen:
                raise GraphError(f"repeated edge {e}")
            seen.add(e)
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))
        if not _connected(n, self.edges):
            raise GraphError("graph is not connected")

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def _edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self._edge_set

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise GraphError(f"unknown vertex {name!r}") from None

    def edge_names(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset((self.names[i], self.names[j])) for i, j in self.edges)


def _connected(n: int, edges: Iterable[tuple[int, int]]) -> bool:
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    seen = [False] * n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    return count == n


def parse_graph(text: str) -> MixedSignCoxeterGraph:
    """Parse the plain-text graph format.

    Directives, one per line: ``# comment``, ``vertex <name> <+|->``,
    ``edge <name> <name>``.  Vertex declaration order fixes the matrix
    index order everywhere else in the package.
    """
    names: list[str] = []
    signs: list[Sign] = []
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    edge_seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "vertex":
            if len(tokens) != 3:
                raise GraphParseError("vertex directive needs a name and a sign", lineno)
            name, sign_tok = tokens[1], tokens[2]
            if sign_tok not in _SIGN_TOKENS:
                raise GraphParseError(f"bad sign token {sign_tok!r} (expected + or -)", lineno)
            if name in index:
                raise GraphParseError(f"duplicate vertex {name!r}", lineno)
            index[name] = len(names)
            names.append(name)
            signs.append(_SIGN_TOKENS[sign_tok])
        elif tokens[0] == "edge":
            if len(tokens) != 3:
                raise GraphParseError("edge directive needs two vertex names", lineno)
            a, b = tokens[1], tokens[2]
            for v in (a, b):
                if v not in index:
                    raise GraphParseError(f"unknown vertex {v!r}", lineno)
            if a == b:
                raise GraphParseError(f"self-edge at {a!r}", lineno)
            e = (min(index[a], index[b]), max(index[a], index[b]))
            if e in edge_seen:
                raise GraphParseError(f"repeated edge {a!r} {b!r}", lineno)
            edge_seen.add(e)
            edges.append(e)
        else:
            raise GraphParseError(f"unknown directive {tokens[0]!r}", lineno)
    if not names:
        raise GraphParseError("empty graph: no vertices declared")
    if not _connected(len(names), edges):
        raise GraphParseError("graph is not connected")
    return MixedSignCoxeterGraph(tuple(names), tuple(signs), tuple(edges))


def graph_to_text(g: MixedSignCoxeterGraph) -> str:
    lines = [f"vertex {name} {_TOKEN_OF_SIGN[sign]}" for name, sign in zip(g.names, g.signs)]
    lines += [f"edge {g.names[i]} {g.names[j]}" for i, j in g.edges]
    return "\n".join(lines) + "\n"


def adjacency_matrix(g: MixedSignCoxeterGraph) -> IntMatrix:
    n = g.n
    rows = [[0] * n for _ in range(n)]
    for i, j in g.edges:
        rows[i][j] = 1
        rows[j][i] = 1
    return IntMatrix(rows)


def is_alternating_sign(g: MixedSignCoxeterGraph) -> bool:
    """True when every edge joins a +1 vertex to a -1 vertex."""
    return all(g.signs[i] != g.signs[j] for i, j in g.edges)


def sign_bipartition(g: MixedSignCoxeterGraph) -> Bipartition:
    if not is_alternating_sign(g):
        raise NotAlternatingError("graph is not alternating-sign")
    plus = frozenset(i for i in range(g.n) if g.signs[i] == PLUS)
    return Bipartition(plus, frozenset(range(g.n)) - plus)


def two_coloring(g: MixedSignCoxeterGraph) -> Bipartition:
    """Proper 2-coloring by breadth-first search; vertex 0 lands in
    part_plus.  Raises NotBipartiteError on an odd cycle."""
    color = [-1] * g.n
    color[0] = 0
    queue = [0]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        for v in g.neighbors[u]:
            if color[v] == -1:
                color[v] = 1 - color[u]
                queue.append(v)
            elif color[v] == color[u]:
                raise NotBipartiteError(
                    f"graph is not bipartite: odd cycle through {g.names[u]!r}")
    plus = frozenset(i for i in range(g.n) if color[i] == 0)
    return Bipartition(plus, frozenset(range(g.n)) - plus)


def vertex_extension(g: MixedSignCoxeterGraph, sign: Sign, neighbors: Iterable[int],
                     name: str | None = None,
                     require_alternating: bool = True) -> MixedSignCoxeterGraph:
    """Attach one new vertex with the given sign and neighbor set."""
    nbrs = sorted(set(neighbors))
    if not nbrs:
        raise GraphError("vertex extension needs a nonempty neighbor set")
    if any(not 0 <= v < g.n for v in nbrs):
        raise GraphError("extension neighbor out of range")
    if require_alternating and any(g.signs[v] == sign for v in nbrs):
        raise NotAlternatingError(
            "extension would join two vertices of equal sign")
    if name is None:
        k = g.n
        while f"v{k}" in g.names:
            k += 1
        name = f"v{k}"
    elif name in g.names:
        raise GraphError(f"duplicate vertex name {name!r}")
    new = g.n
    return MixedSignCoxeterGraph(
        g.names + (name,),
        g.signs + (sign,),
        g.edges + tuple((v, new) for v in nbrs))


def is_vertex_extension(g: MixedSignCoxeterGraph, gp: MixedSignCoxeterGraph) -> bool:
    """True when gp is g plus exactly one vertex, label-preserving:
    every edge of gp not touching the new vertex is an edge of g and
    vice versa."""
    if gp.n != g.n + 1:
        return False
    g_names = set(g.names)
    extra = set(gp.names) - g_names
    if len(extra) != 1 or not g_names <= set(gp.names):
        return False
    w = extra.pop()
    gp_rest = frozenset(e for e in gp.edge_names() if w not in e)
    return gp_rest == g.edge_names()


def remove_vertex(g: MixedSignCoxeterGraph, index: int) -> MixedSignCoxeterGraph:
    """Delete one vertex; raises GraphError if the rest disconnects."""
    if not 0 <= index < g.n:
        raise GraphError("vertex index out of range")
    if g.n == 1:
        raise GraphError("cannot remove the last vertex")
    keep = [i for i in range(g.n) if i != index]
    remap = {old: new for new, old in enumerate(keep)}
    return MixedSignCoxeterGraph(
        tuple(g.names[i] for i in keep),
        tuple(g.signs[i] for i in keep),
        tuple(sorted((remap[i], remap[j]) for i, j in g.edges if index not in (i, j))))


def add_edge(g: MixedSignCoxeterGraph, i: int, j: int) -> MixedSignCoxeterGraph:
    if i == j:
        raise GraphError("self-edge")
    e = (min(i, j), max(i, j))
    if e in g._edge_set:
        raise GraphError("edge already present")
    return MixedSignCoxeterGraph(g.names, g.signs, g.edges + (e,))


def _prufer_edges(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    edges = []
    for s in seq:
        for leaf in range(n):
            if degree[leaf] == 1:
                break
        edges.append((min(leaf, s), max(leaf, s)))
        degree[leaf] -= 1
        degree[s] -= 1
    u, v = (i for i in range(n) if degree[i] == 1)
    edges.append((min(u, v), max(u, v)))
    return edges


def _bipartite_signs(n: int, edges: Sequence[tuple[int, int]]) -> tuple[Sign, ...]:
    # trees are bipartite; vertex 0 is + by convention
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    signs: list[Sign] = [0] * n
    signs[0] = PLUS
    stack = [0]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if signs[v] == 0:
                signs[v] = -signs[u]
                stack.append(v)
    return tuple(signs)


def _tree_from_edges(n: int, edges: Sequence[tuple[int, int]]) -> MixedSignCoxeterGraph:
    return MixedSignCoxeterGraph(
        tuple(f"v{i}" for i in range(n)),
        _bipartite_signs(n, edges),
        tuple(sorted(edges)))


def tree_canonical_key(n: int, edges: Sequence[tuple[int, int]]):
    """Isomorphism-invariant key for an unlabeled tree (AHU, rooted at
    the center; minimum over both centers when there are two)."""
    if n == 1:
        return (1, 0)
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    degree = [len(a) for a in adj]
    alive = n
    removed = [False] * n
    layer = [v for v in range(n) if degree[v] == 1]
    while alive > 2:
        nxt = []
        for v in layer:
            removed[v] = True
            alive -= 1
            for u in adj[v]:
                if not removed[u]:
                    degree[u] -= 1
                    if degree[u] == 1:
                        nxt.append(u)
        layer = nxt
    centers = [v for v in range(n) if not removed[v]]

    def canon(root: int) -> tuple:
        def rec(v: int, parent: int) -> tuple:
            return tuple(sorted(rec(u, v) for u in adj[v] if u != parent))
        return rec(root, -1)

    return (n, min(canon(c) for c in centers))


def enumerate_alternating_trees(n: int, dedup: bool = False) -> Iterator[MixedSignCoxeterGraph]:
    """All labeled trees on n vertices with the bipartition-induced
    alternating signs (vertex 0 positive).

    Enumeration walks the n**(n-2) Pruefer sequences in lexicographic
    order.  With dedup=True only the first representative of each
    isomorphism class is yielded; Coxeter spectra are invariant under
    relabeling and under the global sign flip, so deduplication is a
    pure optimization for spectra-level sweeps.
    """
    if n < 1:
        raise GraphError("tree size must be at least 1")
    if n == 1:
        yield MixedSignCoxeterGraph(("v0",), (PLUS,), ())
        return
    seen: set = set()
    for seq in itertools.product(range(n), repeat=n - 2):
        edges = _prufer_edges(seq, n)
        if dedup:
            key = tree_canonical_key(n, edges)
            if key in seen:
                continue
            seen.add(key)
        yield _tree_from_edges(n, edges)


def random_alternating_tree(n: int, rng: random.Random) -> MixedSignCoxeterGraph:
    if n < 2:
        raise GraphError("random tree size must be at least 2")
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return _tree_from_edges(n, _prufer_edges(seq, n))


def random_vertex_extension(g: MixedSignCoxeterGraph, rng: random.Random) -> MixedSignCoxeterGraph:
    """Seeded alternating vertex extension: random sign, random nonempty
    subset of the opposite-sign vertices as neighbors."""
    sign = rng.choice((PLUS, MINUS))
    candidates = [i for i in range(g.n) if g.signs[i] != sign]
    if not candidates:
        sign = -sign
        candidates = [i for i in range(g.n) if g.signs[i] != sign]
    k = rng.randint(1, len(candidates))
    return vertex_extension(g, sign, rng.sample(candidates, k))


def random_edge_augmentation(g: MixedSignCoxeterGraph, rng: random.Random,
                             max_new: int = 3) -> MixedSignCoxeterGraph:
    """Add up to max_new random opposite-sign non-edges; the result
    contains g as a label-preserving subgraph on the same vertex set."""
    candidates = [(i, j) for i in range(g.n) for j in range(i + 1, g.n)
                  if g.signs[i] != g.signs[j] and not g.has_edge(i, j)]
    if not candidates:
        return g
    k = rng.randint(0, min(max_new, len(candidates)))
    out = g
    for i, j in rng.sample(candidates, k):
        out = add_edge(out, i, j)
    return out
