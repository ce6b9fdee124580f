"""Linear codes over a finite field: dual, hull, MDS and non-GRS certification.

The hull dimension is available through two independent routes: the rank
identity dim Hull = k - rank(G G^T), and a direct basis computation
intersecting the row spaces of G and of a dual generator.  Reports use the
rank route; tests and debug paths cross-check both.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from enum import Enum

import numpy as np

from .gf import Element, Field, make_field
from .linalg import (
    DimensionMismatch,
    Matrix,
    det_array,
    matmul_array,
    nullspace_array,
    rank_array,
    row_space_intersection,
    rref_array,
)

# Codes with q^k above this are refused by the brute-force distance scan.
ENUMERATION_CAP = 2**24
# Inner vectorized block for codeword enumeration.
_ENUM_BLOCK = 1 << 16


class CodeError(Exception):
    pass


class TooLargeToEnumerate(CodeError):
    pass


class LinearCode:
    """An [n, k] linear code given by a k x n generator matrix of full rank."""

    __slots__ = ("field", "n", "k", "G")

    def __init__(self, G: Matrix, validate: bool = True):
        self.field = G.field
        self.k, self.n = G.rows, G.cols
        if self.k > self.n:
            raise CodeError(f"dimension {self.k} exceeds length {self.n}")
        if validate and rank_array(self.field, G.array) != self.k:
            raise CodeError("generator matrix does not have full row rank")
        self.G = G

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}] over {self.field})"

    def codeword(self, message) -> list[Element]:
        msg = np.array([Matrix._coerce(self.field, x) for x in message],
                       dtype=np.int32).reshape(1, self.k)
        out = matmul_array(self.field, msg, self.G.array)
        return [Element(self.field, int(v)) for v in out[0]]

    def same_row_space(self, other: "LinearCode") -> bool:
        if other.field is not self.field or other.n != self.n:
            return False
        a, pa = rref_array(self.field, self.G.array)
        b, pb = rref_array(self.field, other.G.array)
        return pa == pb and bool(np.all(a[: len(pa)] == b[: len(pb)]))

    def to_dict(self) -> dict:
        return {
            "field": self.field.spec_string(),
            "n": self.n,
            "k": self.k,
            "G": self.G.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "LinearCode":
        f = make_field(d["field"])
        g = d["G"]
        if isinstance(g, dict):
            G = Matrix.from_dict(g, field=f)
        else:
            G = Matrix.from_entries(f, int(d["k"]), int(d["n"]), g)
        if G.rows != int(d["k"]) or G.cols != int(d["n"]):
            raise CodeError("generator shape disagrees with declared (n, k)")
        return cls(G)


class NonRSCertificate(str, Enum):
    CERTIFIED_NON_GRS = "CertifiedNonGRS"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class MonomialTransform:
    """Column permutation followed by nonzero column scalings."""

    permutation: tuple[int, ...]
    scales: tuple[Element, ...]

    def __post_init__(self):
        n = len(self.permutation)
        if sorted(self.permutation) != list(range(n)):
            raise ValueError("permutation is not a bijection on positions")
        if len(self.scales) != n:
            raise ValueError("need one scale factor per position")
        if any(s.is_zero for s in self.scales):
            raise ValueError("scale factors must be nonzero")


@dataclass
class CodeReport:
    """Analysis summary for one code."""

    field: str
    n: int
    k: int
    hull_dimension: int
    is_mds: bool
    schur_dimension: int
    non_rs_certificate: NonRSCertificate
    min_distance: int | None = None
    params: dict | None = None

    def __post_init__(self):
        if self.is_mds and self.min_distance is not None:
            if self.min_distance != self.n - self.k + 1:
                raise CodeError("MDS report with non-Singleton distance")

    def to_dict(self) -> dict:
        return {
            "field": self.field,
            "n": self.n,
            "k": self.k,
            "hull_dimension": self.hull_dimension,
            "is_mds": self.is_mds,
            "min_distance": self.min_distance,
            "schur_dimension": self.schur_dimension,
            "non_rs_certificate": self.non_rs_certificate.value,
            "params": self.params,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CodeReport":
        return cls(
            field=d["field"],
            n=int(d["n"]),
            k=int(d["k"]),
            hull_dimension=int(d["hull_dimension"]),
            is_mds=bool(d["is_mds"]),
            schur_dimension=int(d["schur_dimension"]),
            non_rs_certificate=NonRSCertificate(d["non_rs_certificate"]),
            min_distance=None if d.get("min_distance") is None else int(d["min_distance"]),
            params=d.get("params"),
        )


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def dual(code: LinearCode) -> LinearCode:
    """The [n, n-k] dual code."""
    basis = nullspace_array(code.field, code.G.array)
    return LinearCode(Matrix(code.field, basis), validate=False)


def hull_dimension(code: LinearCode) -> int:
    """dim(C ∩ C-dual) = k - rank(G G^T)."""
    f = code.field
    gram = matmul_array(f, code.G.array, code.G.array.T)
    return code.k - rank_array(f, gram)


def hull_basis(code: LinearCode) -> Matrix:
    """Basis of the hull by direct row-space intersection with the dual.

    Independent of the Gram-rank route in :func:`hull_dimension`; the two
    must agree on every code.
    """
    return row_space_intersection(code.G, dual(code).G)


def is_mds(code: LinearCode) -> bool:
    """True iff every k x k minor of G is nonzero (distance meets Singleton)."""
    f, k, a = code.field, code.k, code.G.array
    if k == 0:
        raise CodeError("MDS test needs dimension >= 1")
    for cols in itertools.combinations(range(code.n), k):
        if det_array(f, a[:, cols]) == 0:
            return False
    return True


def min_distance_bruteforce(code: LinearCode) -> int:
    """Minimum Hamming weight over all q^k - 1 nonzero codewords."""
    f, k, n = code.field, code.k, code.n
    if k == 0:
        raise CodeError("distance of the zero code is undefined")
    if f.q**k > ENUMERATION_CAP:
        raise TooLargeToEnumerate(
            f"q^k = {f.q}**{k} exceeds enumeration cap {ENUMERATION_CAP}")
    G = code.G.array
    coeffs = np.arange(f.q, dtype=np.int32)

    # inner block: all combinations of the last b message symbols
    b = 1
    while b < k and f.q ** (b + 1) <= _ENUM_BLOCK:
        b += 1
    block = np.zeros((1, n), dtype=np.int32)
    for i in range(k - b, k):
        scaled = f.vmul(coeffs[:, None], G[i][None, :])  # (q, n)
        block = f.vadd(block[:, None, :], scaled[None, :, :]).reshape(-1, n)

    best = n + 1
    for prefix in itertools.product(range(f.q), repeat=k - b):
        part = np.zeros(n, dtype=np.int32)
        for c, i in zip(prefix, range(k - b)):
            if c:
                part = f.vadd(part, f.vmul(np.int32(c), G[i]))
        words = f.vadd(part[None, :], block)
        weights = np.count_nonzero(words, axis=1)
        if not any(prefix):
            weights = weights[1:]  # drop the all-zero message
        w = int(weights.min())
        if w < best:
            best = w
    return best


def schur_square(code: LinearCode) -> LinearCode:
    """Span of all componentwise products of pairs of basis codewords."""
    f, G = code.field, code.G.array
    iu, ju = np.triu_indices(code.k)
    prods = f.vmul(G[iu], G[ju])
    r, piv = rref_array(f, prods)
    return LinearCode(Matrix(f, r[: len(piv)]), validate=False)


def non_rs_certificate(code: LinearCode) -> NonRSCertificate:
    """One-sided Schur-square test against GRS equivalence.

    GRS codes with 2k-1 <= n have Schur square of dimension exactly 2k-1, and
    that dimension is invariant under monomial transformations, so a larger
    Schur square certifies the code is not monomially equivalent to any GRS
    code.  The converse does not hold: Inconclusive decides nothing.
    """
    if 2 * code.k - 1 > code.n:
        return NonRSCertificate.INCONCLUSIVE
    if schur_square(code).k > 2 * code.k - 1:
        return NonRSCertificate.CERTIFIED_NON_GRS
    return NonRSCertificate.INCONCLUSIVE


def apply_monomial(code: LinearCode, mono: MonomialTransform) -> LinearCode:
    """Generator G·M: column j of the result is scales[j] * column perm[j] of G."""
    if len(mono.permutation) != code.n:
        raise DimensionMismatch(
            f"transform length {len(mono.permutation)} != code length {code.n}")
    f = code.field
    scales = np.array([f.element(s).idx for s in mono.scales], dtype=np.int32)
    a = f.vmul(code.G.array[:, list(mono.permutation)], scales[None, :])
    return LinearCode(Matrix(f, a), validate=False)


def compute_report(
    code: LinearCode,
    *,
    with_min_distance: bool = False,
    cross_check_hull: bool = False,
    params: dict | None = None,
) -> CodeReport:
    """Full analysis of one code.

    ``cross_check_hull`` additionally runs the intersection-oracle route and
    raises if it disagrees with the Gram-rank value.
    """
    hd = hull_dimension(code)
    if cross_check_hull:
        oracle = hull_basis(code).rows
        if oracle != hd:
            raise CodeError(
                f"hull dimension mismatch: rank formula {hd}, intersection {oracle}")
    mds = is_mds(code)
    md = None
    if with_min_distance:
        md = min_distance_bruteforce(code)
    elif mds:
        md = code.n - code.k + 1  # Singleton, certified by the minor test
    sq = schur_square(code).k
    if 2 * code.k - 1 > code.n:
        cert = NonRSCertificate.INCONCLUSIVE
    else:
        cert = (NonRSCertificate.CERTIFIED_NON_GRS if sq > 2 * code.k - 1
                else NonRSCertificate.INCONCLUSIVE)
    return CodeReport(
        field=code.field.spec_string(),
        n=code.n,
        k=code.k,
        hull_dimension=hd,
        is_mds=mds,
        min_distance=md,
        schur_dimension=sq,
        non_rs_certificate=cert,
        params=params,
    )
