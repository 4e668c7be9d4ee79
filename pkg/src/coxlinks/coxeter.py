"""Bipartite Coxeter transformations of mixed-sign graphs.

The bilinear form of a graph puts -2*sign(v) on the diagonal and the
adjacency entries off it.  Reflections divide by the diagonal entry,
which is always +-2, so every matrix below is an exact integer matrix.
On an alternating-sign graph the two sign classes are independent sets,
their reflections commute, and the two half-turns C+ and C- compose to
the bipartite Coxeter transformation C+- = C+ C-.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import IntMatrix, IntPolynomial
from .graphs import (Bipartition, MixedSignCoxeterGraph, NotAlternatingError,
                     adjacency_matrix, is_alternating_sign, sign_bipartition,
                     two_coloring)


def bilinear_form(g: MixedSignCoxeterGraph) -> IntMatrix:
    n = g.n
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = -2 * g.signs[i]
    for i, j in g.edges:
        rows[i][j] = 1
        rows[j][i] = 1
    return IntMatrix(rows)


def reflection(g: MixedSignCoxeterGraph, i: int) -> IntMatrix:
    """Matrix of the reflection in vertex i on the basis of vertex
    classes: identity except row i, which picks up sign(v_i) * a_ij off
    the diagonal and -1 on it."""
    if not 0 <= i < g.n:
        raise ValueError("vertex index out of range")
    rows = [list(r) for r in IntMatrix.identity(g.n).rows]
    s = g.signs[i]
    for j in g.neighbors[i]:
        rows[i][j] = s
    rows[i][i] = -1
    return IntMatrix(rows)


def _validate_bipartition(g: MixedSignCoxeterGraph, bip: Bipartition) -> None:
    allv = frozenset(range(g.n))
    if bip.part_plus | bip.part_minus != allv or bip.part_plus & bip.part_minus:
        raise ValueError("bipartition must split the vertex set")
    for i, j in g.edges:
        if (i in bip.part_plus) == (j in bip.part_plus):
            raise ValueError("bipartition has an edge inside a part")


def _part_product(g: MixedSignCoxeterGraph, part: frozenset[int]) -> IntMatrix:
    # The reflections of an independent set commute and each one touches
    # only its own row, so their product is assembled in a single pass.
    rows = [list(r) for r in IntMatrix.identity(g.n).rows]
    for i in part:
        s = g.signs[i]
        row = rows[i]
        for j in g.neighbors[i]:
            row[j] = s
        row[i] = -1
    return IntMatrix(rows)


def bipartite_factors(g: MixedSignCoxeterGraph,
                      bipartition: Bipartition | None = None) -> tuple[IntMatrix, IntMatrix]:
    """(C+, C-): products of the reflections over the two parts.

    Defaults to the sign bipartition for alternating-sign graphs and to
    a breadth-first 2-coloring otherwise (the classical case).
    """
    if bipartition is None:
        bipartition = sign_bipartition(g) if is_alternating_sign(g) else two_coloring(g)
    else:
        _validate_bipartition(g, bipartition)
    return _part_product(g, bipartition.part_plus), _part_product(g, bipartition.part_minus)


def coxeter_transformation(g: MixedSignCoxeterGraph,
                           bipartition: Bipartition | None = None) -> IntMatrix:
    c_plus, c_minus = bipartite_factors(g, bipartition)
    return c_plus @ c_minus


def coxeter_polynomial(g: MixedSignCoxeterGraph,
                       bipartition: Bipartition | None = None) -> IntPolynomial:
    """Characteristic polynomial of the bipartite Coxeter transformation."""
    return coxeter_transformation(g, bipartition).charpoly()


def _require_alternating(g: MixedSignCoxeterGraph, what: str) -> None:
    if not is_alternating_sign(g):
        raise NotAlternatingError(f"{what} needs an alternating-sign graph")
    if g.n < 2:
        raise ValueError(f"{what} needs at least two vertices")


def seifert_matrix(g: MixedSignCoxeterGraph) -> IntMatrix:
    """Seifert matrix -C+ of the link associated with an
    alternating-sign graph."""
    _require_alternating(g, "seifert_matrix")
    c_plus, _ = bipartite_factors(g)
    return -c_plus


def homological_monodromy(g: MixedSignCoxeterGraph) -> IntMatrix:
    """(M^T)^-1 M for the Seifert matrix M; integer because M^T is
    unimodular, and conjugate to -C+- via M^T."""
    m = seifert_matrix(g)
    return m.transpose().inverse_unimodular() @ m


def alexander_polynomial(g: MixedSignCoxeterGraph) -> IntPolynomial:
    """Monic normalization (-1)^n c(-t) of the Coxeter polynomial; equal
    to the characteristic polynomial of the homological monodromy."""
    _require_alternating(g, "alexander_polynomial")
    c = coxeter_polynomial(g)
    n = g.n
    return IntPolynomial((c.coefficient(k) if (n + k) % 2 == 0 else -c.coefficient(k))
                         for k in range(n + 1))


@dataclass(frozen=True)
class IdentityMismatch:
    """Failed matrix identity; falsy so callers can branch on the result."""
    identity: str
    lhs: IntMatrix
    rhs: IntMatrix

    def __bool__(self) -> bool:
        return False


def verify_proof_identities(g: MixedSignCoxeterGraph):
    """Check (C+ + C-)^2 = -A^2 = 2I + C+- + C+-^-1 exactly.

    Returns True, or an IdentityMismatch naming the first identity that
    fails (which would falsify the spectral correspondence).
    """
    _require_alternating(g, "verify_proof_identities")
    c_plus, c_minus = bipartite_factors(g)
    c = c_plus @ c_minus
    s = c_plus + c_minus
    s2 = s @ s
    a = adjacency_matrix(g)
    neg_a2 = -(a @ a)
    if s2 != neg_a2:
        return IdentityMismatch("(C+ + C-)^2 = -A^2", s2, neg_a2)
    # C+ and C- are involutions, so (C+ C-)^-1 = C- C+
    rhs = 2 * IntMatrix.identity(g.n) + c + c_minus @ c_plus
    if s2 != rhs:
        return IdentityMismatch("(C+ + C-)^2 = 2I + C+- + C+-^-1", s2, rhs)
    return True


@dataclass(frozen=True)
class CoxeterSystem:
    """Graph together with its derived exact matrices."""

    graph: MixedSignCoxeterGraph
    bipartition: Bipartition
    bilinear: IntMatrix
    c_plus: IntMatrix
    c_minus: IntMatrix
    c_bipartite: IntMatrix

    @classmethod
    def build(cls, g: MixedSignCoxeterGraph,
              bipartition: Bipartition | None = None) -> "CoxeterSystem":
        if bipartition is None:
            bipartition = sign_bipartition(g) if is_alternating_sign(g) else two_coloring(g)
        else:
            _validate_bipartition(g, bipartition)
        c_plus, c_minus = bipartite_factors(g, bipartition)
        return cls(g, bipartition, bilinear_form(g), c_plus, c_minus, c_plus @ c_minus)
