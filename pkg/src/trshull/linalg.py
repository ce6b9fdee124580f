"""Dense exact linear algebra over a finite Field.

Matrices store their entries as a numpy array of canonical element indices;
all row operations go through the owning field's table-driven vector
arithmetic, so results are exact.  Pivoting always picks the first nonzero
entry in column order, which keeps every decomposition deterministic.
"""

from __future__ import annotations

import numpy as np

from .gf import Element, Field, MixedFields, make_field


class LinalgError(Exception):
    pass


class DimensionMismatch(LinalgError):
    pass


class NonSquare(LinalgError):
    pass


# ---------------------------------------------------------------------------
# array engine (int32 index arrays; shapes (rows, cols))
# ---------------------------------------------------------------------------

def rref_array(f: Field, a: np.ndarray) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row-echelon form and pivot columns."""
    a = np.array(a, dtype=np.int32, copy=True)
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        piv = int(a[r, c])
        if piv != 1:
            a[r] = f.vmul(a[r], np.int32(f.inv_idx(piv)))
        others = np.flatnonzero(a[:, c])
        others = others[others != r]
        if others.size:
            fac = a[others, c]
            a[others] = f.vsub(a[others], f.vmul(fac[:, None], a[r][None, :]))
        pivots.append(c)
        r += 1
    return a, tuple(pivots)


def rank_array(f: Field, a: np.ndarray) -> int:
    return len(rref_array(f, a)[1])


def nullspace_array(f: Field, a: np.ndarray) -> np.ndarray:
    """Basis (as rows) of {x : a x^T = 0}."""
    r, pivots = rref_array(f, a)
    cols = a.shape[1]
    pivset = set(pivots)
    free = [c for c in range(cols) if c not in pivset]
    basis = np.zeros((len(free), cols), dtype=np.int32)
    if free:
        basis[np.arange(len(free)), free] = 1
        if pivots:
            basis[:, list(pivots)] = f.vneg(r[: len(pivots), free]).T
    return basis


def det_array(f: Field, a: np.ndarray) -> int:
    """Determinant (as an element index) via fraction-free forward elimination."""
    n = a.shape[0]
    if a.shape[1] != n:
        raise NonSquare(f"determinant needs a square matrix, got {a.shape}")
    a = np.array(a, dtype=np.int32, copy=True)
    det = 1
    negate = False
    for c in range(n):
        nz = np.flatnonzero(a[c:, c])
        if nz.size == 0:
            return 0
        i = c + int(nz[0])
        if i != c:
            a[[c, i]] = a[[i, c]]
            negate = not negate
        piv = int(a[c, c])
        det = f.mul_idx(det, piv)
        below = c + 1 + np.flatnonzero(a[c + 1 :, c])
        if below.size:
            fac = f.vmul(a[below, c], np.int32(f.inv_idx(piv)))
            a[below, c:] = f.vsub(a[below, c:], f.vmul(fac[:, None], a[c, c:][None, :]))
    return f.neg_idx(det) if negate else det


def matmul_array(f: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    if a.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int32)
    prod = f.vmul(a[:, :, None], b[None, :, :])
    return f.vsum(prod, axis=1)


# ---------------------------------------------------------------------------
# Matrix
# ---------------------------------------------------------------------------

class Matrix:
    """Immutable dense matrix over one Field."""

    __slots__ = ("field", "rows", "cols", "_a")

    def __init__(self, field: Field, data, cols: int | None = None):
        self.field = field
        if isinstance(data, np.ndarray):
            a = np.array(data, dtype=np.int32, copy=True)
            if a.ndim != 2:
                raise DimensionMismatch("matrix data must be 2-dimensional")
        else:
            grid = []
            for row in data:
                grid.append([self._coerce(field, x) for x in row])
            if grid:
                width = len(grid[0])
                if any(len(r) != width for r in grid):
                    raise DimensionMismatch("ragged rows")
                a = np.array(grid, dtype=np.int32)
            else:
                a = np.zeros((0, 0 if cols is None else cols), dtype=np.int32)
        if np.any(a < 0) or np.any(a >= field.q):
            raise ValueError("entry index out of field range")
        a.flags.writeable = False
        self._a = a
        self.rows, self.cols = a.shape

    @staticmethod
    def _coerce(field: Field, x) -> int:
        if isinstance(x, Element):
            if x.field is not field:
                raise MixedFields("matrix entries must come from one field")
            return x.idx
        return int(x)

    # -- constructors --

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls(field, np.zeros((rows, cols), dtype=np.int32))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, np.eye(n, dtype=np.int32))

    @classmethod
    def from_entries(cls, field: Field, rows: int, cols: int, entries) -> "Matrix":
        entries = list(entries)
        if len(entries) != rows * cols:
            raise DimensionMismatch(
                f"expected {rows * cols} entries, got {len(entries)}")
        a = np.array(entries, dtype=np.int32).reshape(rows, cols)
        return cls(field, a)

    # -- access --

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the underlying index array."""
        return self._a

    def __getitem__(self, ij) -> Element:
        i, j = ij
        return Element(self.field, int(self._a[i, j]))

    def row(self, i: int) -> list[Element]:
        return [Element(self.field, int(v)) for v in self._a[i]]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and other.field is self.field
                and other._a.shape == self._a.shape
                and bool(np.all(other._a == self._a)))

    def __hash__(self):
        return hash((id(self.field), self._a.tobytes()))

    def __repr__(self):
        return f"Matrix({self.field}, {self.rows}x{self.cols})"

    # -- operations --

    def mul(self, other: "Matrix") -> "Matrix":
        if other.field is not self.field:
            raise MixedFields("cannot multiply matrices over different fields")
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        return Matrix(self.field, matmul_array(self.field, self._a, other._a))

    def __matmul__(self, other):
        return self.mul(other)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self._a.T)

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        r, piv = rref_array(self.field, self._a)
        return Matrix(self.field, r), piv

    def rank(self) -> int:
        return rank_array(self.field, self._a)

    def null_space(self) -> "Matrix":
        return Matrix(self.field, nullspace_array(self.field, self._a))

    def det(self) -> Element:
        return Element(self.field, det_array(self.field, self._a))

    def stack(self, other: "Matrix") -> "Matrix":
        if other.field is not self.field:
            raise MixedFields("cannot stack matrices over different fields")
        if self.cols != other.cols:
            raise DimensionMismatch("column counts differ")
        return Matrix(self.field, np.vstack([self._a, other._a]))

    def take_columns(self, cols) -> "Matrix":
        return Matrix(self.field, self._a[:, list(cols)])

    def row_space_basis(self) -> "Matrix":
        """Canonical basis of the row space (nonzero RREF rows)."""
        r, piv = rref_array(self.field, self._a)
        return Matrix(self.field, r[: len(piv)])

    # -- serialization --

    def to_dict(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "field": self.field.spec_string(),
            "entries": [int(v) for v in self._a.ravel()],
        }

    @classmethod
    def from_dict(cls, d: dict, field: Field | None = None) -> "Matrix":
        f = field if field is not None else make_field(d["field"])
        return cls.from_entries(f, int(d["rows"]), int(d["cols"]), d["entries"])


def row_space_intersection(a: Matrix, b: Matrix) -> Matrix:
    """Basis of rowspace(a) ∩ rowspace(b), by the kernel of stacked coefficients.

    Solves u·a + v·b = 0; each kernel vector contributes u·a, and the span of
    those contributions is exactly the intersection.
    """
    if a.field is not b.field:
        raise MixedFields("matrices over different fields")
    if a.cols != b.cols:
        raise DimensionMismatch("column counts differ")
    f = a.field
    stacked = np.vstack([a.array, b.array])
    kernel = nullspace_array(f, stacked.T)  # rows w with w @ stacked = 0
    if kernel.shape[0] == 0:
        return Matrix(f, np.zeros((0, a.cols), dtype=np.int32))
    cand = matmul_array(f, kernel[:, : a.rows], a.array)
    r, piv = rref_array(f, cand)
    return Matrix(f, r[: len(piv)])
