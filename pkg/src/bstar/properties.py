"""Property predicates: Cohen-Macaulay, Buchsbaum, Buchsbaum-star and their
m-fold variants, homology manifolds, balanced colorings, rank selection.

Every predicate returns a PropertyReport whose false verdicts carry a
witness that independently re-checks to a genuine violation (see
:func:`revalidate_witness`).  Faces and vertex subsets are enumerated in
deterministic (dimension, lexicographic) order, so the reported witness is
always the first violation in that order.

Purity is part of the Buchsbaum definition here: without it the
"dimension d-1" bookkeeping of the deletion-based predicates breaks.
m-fold predicates quantify over vertex subsets A with |A| < m, so m = 0
degenerates to the base property's precondition and m = 1 to the base
property itself.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping

from .complexes import Complex, NotPureError, build, label_key
from .homology import reduced_betti, top_restriction_surjective
from .linalg import CoefficientField


class ColoringError(Exception):
    """A vertex coloring fails validation."""


class _Unknown:
    """Distinct verdict for searches stopped by a node budget."""

    def __repr__(self):
        return "UNKNOWN"

    def __bool__(self):
        return False


UNKNOWN = _Unknown()


@dataclass(frozen=True)
class Coloring:
    """A vertex-to-color map witnessing balancedness (colors 1..d)."""

    assignment: Mapping
    d: int

    def color_set(self, face) -> frozenset:
        return frozenset(self.assignment[v] for v in face)

    def validate(self, c: Complex) -> None:
        """Raise ColoringError unless this is a proper coloring of the
        1-skeleton by colors from [d] covering every vertex."""
        for v in c.vertices:
            col = self.assignment.get(v)
            if col is None:
                raise ColoringError(f"vertex {v!r} is uncolored")
            if not isinstance(col, int) or not 1 <= col <= self.d:
                raise ColoringError(f"vertex {v!r} has color {col!r} outside [{self.d}]")
        for e in c.faces_of_dim(1):
            if self.assignment[e[0]] == self.assignment[e[1]]:
                raise ColoringError(f"edge {list(e)!r} has both ends colored "
                                    f"{self.assignment[e[0]]}")
        if c.is_pure and not c.is_void and c.dim + 1 == self.d:
            for f in c.facets:
                assert len(self.color_set(f)) == len(f)

    def as_sorted_dict(self) -> dict:
        return {v: self.assignment[v]
                for v in sorted(self.assignment, key=label_key)}


@dataclass(frozen=True)
class Witness:
    """Certificate of a property violation; `kind` selects how the payload
    in `data` re-validates."""

    kind: str
    data: tuple

    def __repr__(self):
        return f"Witness({self.kind}, {self.data!r})"


@dataclass(frozen=True)
class PropertyReport:
    prop: str
    field: str | None
    verdict: bool
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.verdict


def _report(prop, field, verdict, witness=None) -> PropertyReport:
    label = field.label if isinstance(field, CoefficientField) else field
    return PropertyReport(prop, label, verdict, witness)


def _impure_witness(c: Complex) -> Witness:
    by_len = sorted(c.facets, key=len)
    return Witness("not_pure", (by_len[0], by_len[-1]))


def is_cohen_macaulay(c: Complex, field: CoefficientField) -> PropertyReport:
    """Vanishing of reduced link homology below the link dimension, for
    every face including the empty one."""
    if c.is_void:
        raise ValueError("void complex has no Cohen-Macaulay verdict")
    for sigma in c.faces_sorted():
        link = c.link(sigma)
        top = link.dim
        betti = reduced_betti(link, field)
        for i in range(-1, top):
            if betti[i] != 0:
                return _report("cohen_macaulay", field, False,
                               Witness("link_homology", (sigma, i)))
    return _report("cohen_macaulay", field, True)


def _vertex_subsets(c: Complex, max_size: int):
    for size in range(max_size + 1):
        yield from itertools.combinations(c.vertices, size)


def is_m_cm(c: Complex, m: int, field: CoefficientField) -> PropertyReport:
    """Cohen-Macaulay, with dimension preserved and Cohen-Macaulayness kept
    under deletion of every vertex subset of size below m."""
    if m < 1:
        raise ValueError("m must be at least 1")
    dim = c.dim
    for a in _vertex_subsets(c, m - 1):
        deleted = c.delete(a)
        if deleted.dim != dim:
            return _report("m_cm", field, False,
                           Witness("deletion_dimension", (a,)))
        inner = is_cohen_macaulay(deleted, field)
        if not inner.verdict:
            return _report("m_cm", field, False,
                           Witness("deletion_cm", (a, inner.witness)))
    return _report("m_cm", field, True)


def is_buchsbaum(c: Complex, field: CoefficientField) -> PropertyReport:
    """Pure with every vertex link Cohen-Macaulay of dimension d-2."""
    if c.is_void:
        raise ValueError("void complex has no Buchsbaum verdict")
    if not c.is_pure:
        return _report("buchsbaum", field, False, _impure_witness(c))
    for v in c.vertices:
        link = c.link((v,))
        if link.dim != c.dim - 1:
            return _report("buchsbaum", field, False,
                           Witness("vertex_link", (v, None)))
        inner = is_cohen_macaulay(link, field)
        if not inner.verdict:
            return _report("buchsbaum", field, False,
                           Witness("vertex_link", (v, inner.witness)))
    return _report("buchsbaum", field, True)


def is_doubly_buchsbaum(c: Complex, field: CoefficientField) -> PropertyReport:
    """Buchsbaum, and still Buchsbaum of the same dimension after deleting
    any single vertex."""
    base = is_buchsbaum(c, field)
    if not base.verdict:
        return _report("doubly_buchsbaum", field, False, base.witness)
    for v in c.vertices:
        deleted = c.delete((v,))
        if deleted.dim != c.dim or not is_buchsbaum(deleted, field).verdict:
            return _report("doubly_buchsbaum", field, False,
                           Witness("deletion_buchsbaum", ((v,),)))
    return _report("doubly_buchsbaum", field, True)


def is_buchsbaum_star(c: Complex, field: CoefficientField) -> PropertyReport:
    """Buchsbaum with the top-homology restriction map surjective at every
    non-empty face."""
    base = is_buchsbaum(c, field)
    if not base.verdict:
        return _report("buchsbaum_star", field, False, base.witness)
    for tau in c.faces_sorted():
        if not tau:
            continue
        if not top_restriction_surjective(c, tau, field):
            return _report("buchsbaum_star", field, False,
                           Witness("surjectivity", (tau,)))
    return _report("buchsbaum_star", field, True)


def is_m_buchsbaum_star(c: Complex, m: int,
                        field: CoefficientField) -> PropertyReport:
    """Buchsbaum, and Buchsbaum-star of unchanged dimension after deleting
    any vertex subset of size below m.  m = 0 is plain Buchsbaum, m = 1 is
    exactly Buchsbaum-star."""
    if m < 0:
        raise ValueError("m must be non-negative")
    base = is_buchsbaum(c, field)
    if not base.verdict:
        return _report("m_buchsbaum_star", field, False, base.witness)
    if m == 0:
        return _report("m_buchsbaum_star", field, True)
    dim = c.dim
    for a in _vertex_subsets(c, m - 1):
        deleted = c.delete(a)
        if deleted.dim != dim:
            return _report("m_buchsbaum_star", field, False,
                           Witness("deletion_dimension", (a,)))
        inner = is_buchsbaum_star(deleted, field)
        if not inner.verdict:
            return _report("m_buchsbaum_star", field, False,
                           Witness("deletion_buchsbaum_star", (a, inner.witness)))
    return _report("m_buchsbaum_star", field, True)


def _sphere_betti(top: int) -> tuple:
    values = [0] * (top + 2)
    values[-1] = 1
    return tuple(values)


def is_homology_manifold(c: Complex, field: CoefficientField) -> PropertyReport:
    """Pure, with every non-empty face link having the homology of a sphere
    of the link's dimension (closed manifolds only)."""
    if c.is_void:
        raise ValueError("void complex has no manifold verdict")
    if not c.is_pure:
        return _report("homology_manifold", field, False, _impure_witness(c))
    for sigma in c.faces_sorted():
        if not sigma:
            continue
        link = c.link(sigma)
        betti = reduced_betti(link, field)
        if tuple(betti.values) != _sphere_betti(link.dim):
            bad = next(i for i in range(-1, link.dim + 1)
                       if betti[i] != _sphere_betti(link.dim)[i + 1])
            return _report("homology_manifold", field, False,
                           Witness("link_sphere", (sigma, bad)))
    return _report("homology_manifold", field, True)


def find_balanced_coloring(c: Complex, max_nodes: int = 10_000_000):
    """Proper (dim+1)-coloring of the 1-skeleton via backtracking with a
    decreasing-degree vertex order.

    Returns a Coloring, None when provably absent, or UNKNOWN when the
    node budget is exhausted before the search finishes.
    """
    if c.is_void or not c.is_pure:
        raise NotPureError("balancedness is defined for pure complexes")
    d = c.dim + 1
    adj = {v: set() for v in c.vertices}
    for e in c.faces_of_dim(1):
        adj[e[0]].add(e[1])
        adj[e[1]].add(e[0])
    order = sorted(c.vertices, key=lambda v: (-len(adj[v]), label_key(v)))
    assignment: dict = {}
    nodes = 0

    def backtrack(pos: int):
        nonlocal nodes
        if pos == len(order):
            return True
        v = order[pos]
        for color in range(1, d + 1):
            nodes += 1
            if nodes > max_nodes:
                raise _BudgetExhausted
            if any(assignment.get(u) == color for u in adj[v]):
                continue
            assignment[v] = color
            if backtrack(pos + 1):
                return True
            del assignment[v]
        return False

    try:
        found = backtrack(0)
    except _BudgetExhausted:
        return UNKNOWN
    if not found:
        return None
    coloring = Coloring(dict(assignment), d)
    coloring.validate(c)
    return coloring


class _BudgetExhausted(Exception):
    pass


def rank_selected(c: Complex, coloring: Coloring, colors) -> Complex:
    """Subcomplex of the faces whose colors lie in the given color set."""
    coloring.validate(c)
    s = set(colors)
    if not s.issubset(range(1, coloring.d + 1)):
        raise ColoringError(f"color set {sorted(s)!r} not within [{coloring.d}]")
    gens = [tuple(v for v in f if coloring.assignment[v] in s)
            for f in c.facets]
    return build(gens)


def revalidate_witness(c: Complex, report: PropertyReport,
                       field: CoefficientField) -> bool:
    """Re-check that a false report's witness is a genuine violation,
    recomputing from scratch."""
    if report.verdict or report.witness is None:
        return False
    w = report.witness
    if w.kind == "not_pure":
        a, b = w.data
        return len(a) != len(b) and a in c.faces() and b in c.faces()
    if w.kind == "link_homology":
        sigma, i = w.data
        link = c.link(sigma)
        return i < link.dim and reduced_betti(link, field)[i] != 0
    if w.kind == "deletion_dimension":
        (a,) = w.data
        return c.delete(a).dim != c.dim
    if w.kind == "deletion_cm":
        a = w.data[0]
        return not is_cohen_macaulay(c.delete(a), field).verdict
    if w.kind == "vertex_link":
        v = w.data[0]
        link = c.link((v,))
        return (link.dim != c.dim - 1
                or not is_cohen_macaulay(link, field).verdict)
    if w.kind == "deletion_buchsbaum":
        (a,) = w.data
        deleted = c.delete(a)
        return (deleted.dim != c.dim
                or not is_buchsbaum(deleted, field).verdict)
    if w.kind == "surjectivity":
        (tau,) = w.data
        return not top_restriction_surjective(c, tau, field)
    if w.kind == "deletion_buchsbaum_star":
        a = w.data[0]
        deleted = c.delete(a)
        return (deleted.dim != c.dim
                or not is_buchsbaum_star(deleted, field).verdict)
    if w.kind == "link_sphere":
        sigma, i = w.data
        link = c.link(sigma)
        expected = 1 if i == link.dim else 0
        return reduced_betti(link, field)[i] != expected
    raise ValueError(f"unknown witness kind {w.kind!r}")
