"""Exact linear algebra over the rationals and prime fields.

Matrices carry integer or Fraction entries and are interpreted through a
CoefficientField at elimination time, so the same matrix can be ranked over
Q and over any F_p.  There is no floating point anywhere: rationals use
arbitrary-precision Fractions, prime fields use Python integers reduced
mod p.

Elimination is deterministic (pivot = first non-zero entry in column order)
and runs through one of two code paths chosen by entry density: matrices
with fewer than 25% non-zero entries use per-row dictionaries, the rest use
dense row lists.  Both paths compute the (unique) reduced row echelon form,
so ranks and kernel bases agree exactly between them.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

SPARSE_DENSITY_THRESHOLD = 0.25


class ShapeError(ValueError):
    """Incompatible matrix/vector dimensions."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class CoefficientField:
    """Descriptor of an exact coefficient field: the rationals or F_p."""

    __slots__ = ("kind", "p")
    _instances: dict = {}

    def __new__(cls, kind: str, p: int | None = None):
        key = (kind, p)
        inst = cls._instances.get(key)
        if inst is None:
            if kind == "prime_field":
                if not isinstance(p, int) or not _is_prime(p):
                    raise ValueError(f"{p!r} is not a prime")
            elif kind != "rationals":
                raise ValueError(f"unknown field kind {kind!r}")
            inst = object.__new__(cls)
            inst.kind = kind
            inst.p = p
            cls._instances[key] = inst
        return inst

    @classmethod
    def rationals(cls) -> "CoefficientField":
        return cls("rationals")

    @classmethod
    def prime(cls, p: int) -> "CoefficientField":
        return cls("prime_field", p)

    @property
    def label(self) -> str:
        return "Q" if self.kind == "rationals" else f"F{self.p}"

    # -- element arithmetic (elements are Fractions, or ints in [0, p)) ----

    def convert(self, x):
        if self.kind == "rationals":
            return x if isinstance(x, Fraction) else Fraction(x)
        p = self.p
        if isinstance(x, Fraction):
            den = x.denominator % p
            if den == 0:
                raise ZeroDivisionError(
                    f"denominator of {x} vanishes in F_{p}")
            return x.numerator * pow(den, -1, p) % p
        return x % p

    def zero(self):
        return Fraction(0) if self.kind == "rationals" else 0

    def one(self):
        return Fraction(1) if self.kind == "rationals" else 1

    def is_zero(self, a) -> bool:
        return a == 0

    def add(self, a, b):
        return a + b if self.kind == "rationals" else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.kind == "rationals" else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.kind == "rationals" else (a * b) % self.p

    def neg(self, a):
        return -a if self.kind == "rationals" else (-a) % self.p

    def inv(self, a):
        if self.kind == "rationals":
            return Fraction(1) / a
        return pow(a, -1, self.p)

    def __repr__(self) -> str:
        return f"CoefficientField({self.label})"


QQ = CoefficientField.rationals()
GF2 = CoefficientField.prime(2)
GF3 = CoefficientField.prime(3)


def GF(p: int) -> CoefficientField:
    return CoefficientField.prime(p)


class Matrix:
    """Immutable exact matrix with dict-of-keys storage.

    Entries are ints or Fractions; zeros are never stored.  Use
    :meth:`from_rows` for small literals.
    """

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows: int, ncols: int, entries: dict | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.entries = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < nrows and 0 <= j < ncols):
                    raise ShapeError(f"entry ({i},{j}) outside {nrows}x{ncols}")
                if v != 0:
                    self.entries[(i, j)] = v

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ShapeError("ragged rows")
            for j, v in enumerate(row):
                if v != 0:
                    entries[(i, j)] = v
        return cls(nrows, ncols, entries)

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "Matrix":
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @property
    def density(self) -> float:
        cells = self.nrows * self.ncols
        return len(self.entries) / cells if cells else 0.0

    @property
    def representation(self) -> str:
        """Elimination path this matrix will take ("dense" or "sparse")."""
        if self.nrows * self.ncols == 0:
            return "dense"
        return "sparse" if self.density < SPARSE_DENSITY_THRESHOLD else "dense"

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def to_rows(self) -> list:
        rows = [[0] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def transpose(self) -> "Matrix":
        return Matrix(self.ncols, self.nrows,
                      {(j, i): v for (i, j), v in self.entries.items()})

    def matmul(self, other: "Matrix") -> "Matrix":
        """Exact product over the integers/rationals (no field reduction)."""
        if self.ncols != other.nrows:
            raise ShapeError(f"{self.ncols} cols vs {other.nrows} rows")
        by_row: dict = {}
        for (i, k), v in self.entries.items():
            by_row.setdefault(i, []).append((k, v))
        by_col: dict = {}
        for (k, j), v in other.entries.items():
            by_col.setdefault(k, []).append((j, v))
        out: dict = {}
        for i, row in by_row.items():
            for k, v in row:
                for j, w in by_col.get(k, ()):
                    out[(i, j)] = out.get((i, j), 0) + v * w
        return Matrix(self.nrows, other.ncols, out)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Matrix":
        rpos = {r: i for i, r in enumerate(row_idx)}
        cpos = {c: j for j, c in enumerate(col_idx)}
        out = {}
        for (i, j), v in self.entries.items():
            if i in rpos and j in cpos:
                out[(rpos[i], cpos[j])] = v
        return Matrix(len(row_idx), len(col_idx), out)

    def take_rows(self, row_idx: Sequence[int]) -> "Matrix":
        return self.submatrix(row_idx, range(self.ncols))

    def augment(self, column: Sequence) -> "Matrix":
        if len(column) != self.nrows:
            raise ShapeError(f"column of length {len(column)} vs {self.nrows} rows")
        out = dict(self.entries)
        for i, v in enumerate(column):
            if v != 0:
                out[(i, self.ncols)] = v
        return Matrix(self.nrows, self.ncols + 1, out)

    def column(self, j: int) -> list:
        return [self.entries.get((i, j), 0) for i in range(self.nrows)]

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.nrows == other.nrows
                and self.ncols == other.ncols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.nrows, self.ncols, frozenset(self.entries.items())))

    def __repr__(self) -> str:
        return (f"Matrix({self.nrows}x{self.ncols}, "
                f"{len(self.entries)} non-zero)")


def _rref_dense(m: Matrix, field: CoefficientField):
    rows = [[field.convert(v) for v in row] for row in m.to_rows()]
    nrows, ncols = m.nrows, m.ncols
    pivots = []
    pr = 0
    for col in range(ncols):
        if pr == nrows:
            break
        piv = None
        for r in range(pr, nrows):
            if not field.is_zero(rows[r][col]):
                piv = r
                break
        if piv is None:
            continue
        rows[pr], rows[piv] = rows[piv], rows[pr]
        inv = field.inv(rows[pr][col])
        rows[pr] = [field.mul(inv, x) for x in rows[pr]]
        prow = rows[pr]
        for r in range(nrows):
            if r != pr:
                f = rows[r][col]
                if not field.is_zero(f):
                    rows[r] = [field.sub(a, field.mul(f, b))
                               for a, b in zip(rows[r], prow)]
        pivots.append(col)
        pr += 1
    reduced = {}
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if not field.is_zero(v):
                reduced[(i, j)] = v
    return pivots, Matrix(nrows, ncols, reduced)


def _rref_sparse(m: Matrix, field: CoefficientField):
    rows: list = [dict() for _ in range(m.nrows)]
    for (i, j), v in m.entries.items():
        cv = field.convert(v)
        if not field.is_zero(cv):
            rows[i][j] = cv
    nrows, ncols = m.nrows, m.ncols
    pivots = []
    pr = 0
    for col in range(ncols):
        if pr == nrows:
            break
        piv = None
        for r in range(pr, nrows):
            if col in rows[r]:
                piv = r
                break
        if piv is None:
            continue
        rows[pr], rows[piv] = rows[piv], rows[pr]
        prow = rows[pr]
        inv = field.inv(prow[col])
        for j in list(prow):
            prow[j] = field.mul(inv, prow[j])
        for r in range(nrows):
            if r != pr and col in rows[r]:
                f = rows[r][col]
                target = rows[r]
                for j, pv in prow.items():
                    nv = field.sub(target.get(j, field.zero()),
                                   field.mul(f, pv))
                    if field.is_zero(nv):
                        target.pop(j, None)
                    else:
                        target[j] = nv
        pivots.append(col)
        pr += 1
    reduced = {(i, j): v for i, row in enumerate(rows) for j, v in row.items()}
    return pivots, Matrix(nrows, ncols, reduced)


def rref(m: Matrix, field: CoefficientField):
    """Reduced row echelon form over the field.

    Returns:
        (pivots, R): pivot column indices and the reduced matrix.  The RREF
        is unique, so the dense and sparse paths agree exactly.
    """
    if m.representation == "sparse":
        return _rref_sparse(m, field)
    return _rref_dense(m, field)


def rank(m: Matrix, field: CoefficientField) -> int:
    """Rank of the matrix over the given field."""
    return len(rref(m, field)[0])


def kernel_basis(m: Matrix, field: CoefficientField) -> Matrix:
    """Matrix whose columns form the canonical RREF null-space basis.

    Satisfies rank(m) + cols(result) == cols(m); the product m*result is
    zero over the field (both checked in test builds).
    """
    pivots, reduced = rref(m, field)
    pivot_set = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivot_set]
    entries = {}
    one = field.one()
    for k, fc in enumerate(free):
        entries[(fc, k)] = one
        for r, pc in enumerate(pivots):
            v = reduced[(r, fc)]
            if not field.is_zero(v):
                entries[(pc, k)] = field.neg(v)
    result = Matrix(m.ncols, len(free), entries)
    assert len(pivots) + result.ncols == m.ncols
    assert product_is_zero(m, result, field)
    return result


def product_is_zero(a: Matrix, b: Matrix, field: CoefficientField) -> bool:
    """Whether a*b vanishes over the field."""
    if a.ncols != b.nrows:
        raise ShapeError(f"{a.ncols} cols vs {b.nrows} rows")
    acc: dict = {}
    b_by_row: dict = {}
    for (k, j), v in b.entries.items():
        b_by_row.setdefault(k, []).append((j, v))
    for (i, k), v in a.entries.items():
        cv = field.convert(v)
        for j, w in b_by_row.get(k, ()):
            key = (i, j)
            acc[key] = field.add(acc.get(key, field.zero()),
                                 field.mul(cv, field.convert(w)))
    return all(field.is_zero(v) for v in acc.values())


def span_dim(vectors: Matrix, field: CoefficientField) -> int:
    """Dimension of the column span."""
    return rank(vectors, field)


def span_contains(vectors: Matrix, v: Iterable, field: CoefficientField) -> bool:
    """Exact membership of a vector in the column span."""
    col = list(v)
    if len(col) != vectors.nrows:
        raise ShapeError(
            f"vector of length {len(col)} vs {vectors.nrows} rows")
    return rank(vectors, field) == rank(vectors.augment(col), field)
