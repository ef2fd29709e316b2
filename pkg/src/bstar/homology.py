"""Reduced simplicial homology over exact coefficient fields.

Chain complexes use the reduced (augmented) convention: degree -1 is
spanned by the empty face and the vertex boundary map is the all-ones
augmentation row.  Boundary matrices carry alternating integer signs in
sorted vertex order (emitted even over F_2, where they are irrelevant).

Relative homology of a contrastar pair (Delta, cost(tau)) is computed on
the quotient complex whose degree-j basis is the j-faces containing tau;
the induced restriction maps used by the Buchsbaum-star classifiers are
coordinate projections at chain level, never routed through the
link-shift isomorphism, which therefore stays available as an independent
cross-check.

All results are memoized per (complex, field) keyed by the canonical
facet encoding.  The caches behave as write-once maps (setdefault), so
concurrent insertion of identical values is safe and results do not
depend on scheduling.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .complexes import Complex, FaceNotPresentError, NotPureError, as_face
from .linalg import CoefficientField, Matrix, kernel_basis, rank

_chain_cache: dict = {}
_rank_cache: dict = {}
_betti_cache: dict = {}
_rel_cache: dict = {}
_rel_kernel_cache: dict = {}
_top_kernel_cache: dict = {}


def clear_caches() -> None:
    for c in (_chain_cache, _rank_cache, _betti_cache, _rel_cache,
              _rel_kernel_cache, _top_kernel_cache):
        c.clear()


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers for degrees -1 .. d-1 over a fixed field."""

    values: tuple
    field: CoefficientField

    def __getitem__(self, degree: int) -> int:
        idx = degree + 1
        if 0 <= idx < len(self.values):
            return self.values[idx]
        return 0

    def __iter__(self):
        return iter(self.values)

    @property
    def top_degree(self) -> int:
        return len(self.values) - 2

    def chi_reduced(self) -> int:
        return sum(v if i % 2 else -v for i, v in enumerate(self.values))

    def __repr__(self) -> str:
        return f"BettiVector({self.values}, {self.field.label})"


@dataclass(frozen=True)
class ChainComplexOverField:
    """Ordered face bases per degree and the boundary matrices between them.

    boundaries[j] is the map from degree-j chains to degree-(j-1) chains,
    for 0 <= j <= top degree; bases[j + 1] lists the degree-j faces.
    """

    field: CoefficientField
    bases: tuple          # bases[k] = faces of degree k-1, k = 0 .. d
    boundaries: tuple     # boundaries[j] = boundary map of degree j

    def basis(self, degree: int) -> tuple:
        idx = degree + 1
        if 0 <= idx < len(self.bases):
            return self.bases[idx]
        return ()

    def boundary(self, degree: int) -> Matrix:
        if 0 <= degree < len(self.boundaries):
            return self.boundaries[degree]
        return Matrix.zero(len(self.basis(degree - 1)), len(self.basis(degree)))


def _chain_data(c: Complex):
    """Bases and integer boundary matrices, cached per complex."""
    key = c.facets
    cached = _chain_cache.get(key)
    if cached is not None:
        return cached
    top = c.dim
    bases = [tuple(c.faces_of_dim(k)) for k in range(-1, top + 1)]
    index = [{face: i for i, face in enumerate(b)} for b in bases]
    boundaries = []
    for degree in range(0, top + 1):
        cols = bases[degree + 1]
        rows_idx = index[degree]
        entries = {}
        for j, face in enumerate(cols):
            for drop in range(len(face)):
                sub = face[:drop] + face[drop + 1:]
                entries[(rows_idx[sub], j)] = 1 if drop % 2 == 0 else -1
        boundaries.append(Matrix(len(bases[degree]), len(cols), entries))
    for j in range(1, len(boundaries)):
        assert boundaries[j - 1].matmul(boundaries[j]).is_zero
    data = (tuple(bases), tuple(boundaries))
    return _chain_cache.setdefault(key, data)


def chain_complex(c: Complex, field: CoefficientField) -> ChainComplexOverField:
    """The reduced chain complex of a non-void complex over the field."""
    if c.is_void:
        raise ValueError("the void complex has no chain complex")
    bases, boundaries = _chain_data(c)
    return ChainComplexOverField(field, bases, boundaries)


def _boundary_ranks(c: Complex, field: CoefficientField) -> tuple:
    key = (c.facets, field.label)
    cached = _rank_cache.get(key)
    if cached is not None:
        return cached
    _, boundaries = _chain_data(c)
    ranks = tuple(rank(b, field) for b in boundaries)
    return _rank_cache.setdefault(key, ranks)


def reduced_betti(c: Complex, field: CoefficientField) -> BettiVector:
    """Reduced Betti numbers of a non-void complex."""
    if c.is_void:
        raise ValueError("Betti numbers of the void complex are undefined")
    key = (c.facets, field.label)
    cached = _betti_cache.get(key)
    if cached is not None:
        return cached
    top = c.dim
    if top == -1:
        bv = BettiVector((1,), field)
    else:
        bases, _ = _chain_data(c)
        ranks = _boundary_ranks(c, field)
        f = [len(b) for b in bases]
        values = []
        for degree in range(-1, top + 1):
            r_out = ranks[degree] if 0 <= degree < len(ranks) else 0
            r_in = ranks[degree + 1] if degree + 1 < len(ranks) else 0
            values.append(f[degree + 1] - r_out - r_in)
        bv = BettiVector(tuple(values), field)
        chi_f = sum(n if k % 2 else -n for k, n in enumerate(f))
        assert bv.chi_reduced() == chi_f, "Euler characteristic mismatch"
    return _betti_cache.setdefault(key, bv)


def _superset_indices(c: Complex, tau: tuple) -> dict:
    """Per degree, the basis indices of faces containing tau."""
    bases, _ = _chain_data(c)
    tset = set(tau)
    out = {}
    for k, basis in enumerate(bases):
        degree = k - 1
        if degree < len(tau) - 1:
            continue
        idx = [i for i, face in enumerate(basis) if tset.issubset(face)]
        out[degree] = idx
    return out


def _relative_data(c: Complex, tau: tuple, field: CoefficientField):
    """Face counts and boundary ranks of the quotient complex for
    (Delta, cost(tau)): counts[j] and rank of the induced boundary leaving
    degree j, for |tau|-1 <= j <= dim."""
    key = (c.facets, tau, field.label)
    cached = _rel_cache.get(key)
    if cached is not None:
        return cached
    bases, boundaries = _chain_data(c)
    sel = _superset_indices(c, tau)
    counts = {deg: len(idx) for deg, idx in sel.items()}
    ranks = {}
    for deg, idx in sel.items():
        rows = sel.get(deg - 1)
        if not rows:
            ranks[deg] = 0
            continue
        sub = boundaries[deg].submatrix(rows, idx)
        ranks[deg] = rank(sub, field)
    return _rel_cache.setdefault(key, (counts, ranks))


def relative_betti_vector(c: Complex, tau, field: CoefficientField) -> BettiVector:
    """dim H(Delta, cost(tau)) per degree -1 .. dim, from the quotient complex."""
    t = _checked_face(c, tau)
    counts, ranks = _relative_data(c, t, field)
    values = []
    for degree in range(-1, c.dim + 1):
        n = counts.get(degree, 0)
        r_out = ranks.get(degree, 0)
        r_in = ranks.get(degree + 1, 0)
        values.append(n - r_out - r_in)
    return BettiVector(tuple(values), field)


def relative_betti(c: Complex, tau, i: int, field: CoefficientField) -> int:
    """dim H_i(Delta, cost(tau)); equals the link Betti number shifted by
    |tau| (the shift identity is exercised as an oracle in the tests)."""
    return relative_betti_vector(c, tau, field)[i]


def _checked_face(c: Complex, tau) -> tuple:
    t = as_face(tau)
    if not t:
        raise ValueError("the empty face is not allowed here")
    if t not in c.faces():
        raise FaceNotPresentError(f"{t!r} is not a face")
    return t


def top_cycle_basis(c: Complex, field: CoefficientField) -> Matrix:
    """Basis of top-degree cycles; equals the top reduced homology of a
    pure complex since there are no chains above the top degree."""
    key = (c.facets, field.label)
    cached = _top_kernel_cache.get(key)
    if cached is not None:
        return cached
    _, boundaries = _chain_data(c)
    k = kernel_basis(boundaries[c.dim], field)
    return _top_kernel_cache.setdefault(key, k)


def _relative_top_kernel(c: Complex, tau: tuple, field: CoefficientField) -> Matrix:
    """Kernel of the top boundary of the quotient complex for tau; its
    columns live in the coordinates of the facets containing tau."""
    key = (c.facets, tau, field.label)
    cached = _rel_kernel_cache.get(key)
    if cached is not None:
        return cached
    _, boundaries = _chain_data(c)
    sel = _superset_indices(c, tau)
    top = c.dim
    cols = sel[top]
    rows = sel.get(top - 1, [])
    sub = boundaries[top].submatrix(rows, cols)
    k = kernel_basis(sub, field)
    return _rel_kernel_cache.setdefault(key, k)


def top_restriction_surjective(c: Complex, tau, field: CoefficientField) -> bool:
    """Whether top homology surjects onto the relative top homology at tau.

    Top homology is the kernel of the top boundary map; the induced map is
    the coordinate projection onto the facets containing tau, and relative
    top homology is the relative cycle space.
    """
    if c.is_void or not c.is_pure:
        raise NotPureError("surjectivity test requires a pure complex")
    t = _checked_face(c, tau)
    top = c.dim
    facet_rows = _superset_indices(c, t)[top]
    rel_kernel = _relative_top_kernel(c, t, field)
    z_dim = rel_kernel.ncols
    if z_dim == 0:
        return True
    cycles = top_cycle_basis(c, field)
    projected = cycles.take_rows(facet_rows)
    return rank(projected, field) == z_dim


def pair_restriction_surjective(c: Complex, sigma, tau,
                                field: CoefficientField) -> bool:
    """Whether the inclusion-induced map between the relative top homology
    at sigma and at tau is surjective (sigma a subset of tau; sigma empty
    means the absolute top homology)."""
    if c.is_void or not c.is_pure:
        raise NotPureError("surjectivity test requires a pure complex")
    s = as_face(sigma)
    t = as_face(tau)
    if not set(s).issubset(t):
        raise ValueError(f"{s!r} is not a subset of {t!r}")
    if t not in c.faces():
        raise FaceNotPresentError(f"{t!r} is not a face")
    if s == t:
        return True
    if not t:
        return True
    top = c.dim
    target_kernel = _relative_top_kernel(c, t, field)
    z_dim = target_kernel.ncols
    if z_dim == 0:
        return True
    rows_t = _superset_indices(c, t)[top]
    if s:
        source = _relative_top_kernel(c, s, field)
        rows_s = _superset_indices(c, s)[top]
        pos = {facet_idx: i for i, facet_idx in enumerate(rows_s)}
        projected = source.take_rows([pos[i] for i in rows_t])
    else:
        projected = top_cycle_basis(c, field).take_rows(rows_t)
    return rank(projected, field) == z_dim


# -- optional on-disk Betti cache (used by the CLI) -------------------------

def _cache_key_string(facets: tuple, field_label: str) -> str:
    return field_label + "|" + json.dumps([list(f) for f in facets])


def save_betti_cache(path) -> None:
    data = {
        _cache_key_string(facets, label): list(bv.values)
        for (facets, label), bv in _betti_cache.items()
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh)


def load_betti_cache(path) -> int:
    """Merge a saved cache file; a missing or corrupt file loads nothing."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (FileNotFoundError, json.JSONDecodeError):
        return 0
    loaded = 0
    for key, values in data.items():
        try:
            label, _, facets_json = key.partition("|")
            facets = tuple(tuple(f) for f in json.loads(facets_json))
            field = (CoefficientField.rationals() if label == "Q"
                     else CoefficientField.prime(int(label[1:])))
        except (ValueError, json.JSONDecodeError):
            continue
        _betti_cache.setdefault((facets, label),
                                BettiVector(tuple(values), field))
        loaded += 1
    return loaded
