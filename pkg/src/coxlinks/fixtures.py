"""Built-in example graphs, stored in the text format so they can be
emitted verbatim and re-parsed."""

from __future__ import annotations

from .graphs import MixedSignCoxeterGraph, parse_graph

_A2 = """\
# 2-vertex alternating path
vertex a +
vertex b -
edge a b
"""

_P3_ALT = """\
# 3-vertex alternating path
vertex a +
vertex b -
vertex c +
edge a b
edge b c
"""

# Positive part p1 p2 p3, negative part n1 n2, adjacency block
# [[1, 1], [1, 1], [0, 1]].
_PAPER_5 = """\
# 5-vertex alternating graph with one cycle
vertex p1 +
vertex p2 +
vertex p3 +
vertex n1 -
vertex n2 -
edge p1 n1
edge p1 n2
edge p2 n1
edge p2 n2
edge p3 n2
"""

_P5 = """\
# 5-vertex alternating path
vertex v1 +
vertex v2 -
vertex v3 +
vertex v4 -
vertex v5 +
edge v1 v2
edge v2 v3
edge v3 v4
edge v4 v5
"""

_K33 = """\
# complete bipartite 3 + 3, alternating signs
vertex p1 +
vertex p2 +
vertex p3 +
vertex n1 -
vertex n2 -
vertex n3 -
edge p1 n1
edge p1 n2
edge p1 n3
edge p2 n1
edge p2 n2
edge p2 n3
edge p3 n1
edge p3 n2
edge p3 n3
"""

# Star-like tree with arms of 1, 2 and 6 edges; all-positive signs put it
# in the classical regime, where the bipartite Coxeter polynomial is
# Lehmer's polynomial.
_E10_CLASSICAL = """\
# (2,3,7) star-like tree, classical signs
vertex center +
vertex a1 +
vertex b1 +
vertex b2 +
vertex c1 +
vertex c2 +
vertex c3 +
vertex c4 +
vertex c5 +
vertex c6 +
edge center a1
edge center b1
edge b1 b2
edge center c1
edge c1 c2
edge c2 c3
edge c3 c4
edge c4 c5
edge c5 c6
"""

FIXTURES: dict[str, str] = {
    "a2": _A2,
    "p3-alt": _P3_ALT,
    "paper-5": _PAPER_5,
    "p5": _P5,
    "k33": _K33,
    "e10-classical": _E10_CLASSICAL,
}


def fixture_names() -> tuple[str, ...]:
    return tuple(FIXTURES)


def fixture_text(name: str) -> str:
    try:
        return FIXTURES[name]
    except KeyError:
        valid = ", ".join(fixture_names())
        raise KeyError(f"unknown fixture {name!r}; valid names: {valid}") from None


def fixture_graph(name: str) -> MixedSignCoxeterGraph:
    return parse_graph(fixture_text(name))
