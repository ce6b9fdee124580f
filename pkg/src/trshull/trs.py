"""Generator constructions: GRS codes, twisted RS codes, and the two
roots-of-unity families that produce one-dimensional hulls.

A twisted RS code of dimension k hooks the basis monomial x^h with an extra
term eta * x^(k-1+t): its generator matrix is the k x n power matrix whose
row h+1 is alpha^h + eta * alpha^(k-1+t) componentwise.

The hull families evaluate on the k-th roots of unity together with a coset
shifted by a primitive element: beta is the field's own primitive element,
or, when a subfield order s is given, the canonical generator g^((q-1)/(s-1))
of that subfield — which places every evaluation point inside the subfield
and opens the MDS lifting route (eta outside the subfield forces MDS).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .code import LinearCode
from .gf import Element, Field, MixedFields, NotASubfieldOrder, make_field
from .linalg import Matrix


class TrsError(Exception):
    pass


class ParamViolation(TrsError):
    """A named construction precondition failed; the message says which."""


class RepeatedPoint(TrsError):
    pass


class ZeroMultiplier(TrsError):
    pass


class BadDimension(TrsError):
    pass


class NotADivisor(TrsError):
    pass


def _as_elements(field: Field, xs) -> tuple[Element, ...]:
    out = []
    for x in xs:
        e = field.element(x)
        out.append(e)
    return tuple(out)


@dataclass(frozen=True)
class TwistedRSParams:
    """Parameter bundle (alpha, k, t, h, eta) for a twisted RS code."""

    alpha: tuple[Element, ...]
    k: int
    t: int
    h: int
    eta: Element

    def validate(self) -> None:
        field = self.eta.field
        n, k, t, h = len(self.alpha), self.k, self.t, self.h
        if any(a.field is not field for a in self.alpha):
            raise MixedFields("alpha and eta must come from one field")
        if not 0 <= h:
            raise ParamViolation(f"h >= 0 fails (h={h})")
        if not h < k:
            raise ParamViolation(f"h < k fails (h={h}, k={k})")
        if not k <= field.q:
            raise ParamViolation(f"k <= q fails (k={k}, q={field.q})")
        if not k < n:
            raise ParamViolation(f"k < n fails (k={k}, n={n})")
        if not 0 < t:
            raise ParamViolation(f"t > 0 fails (t={t})")
        if not t <= n - k:
            raise ParamViolation(f"t <= n-k fails (t={t}, n-k={n - k})")
        if len({a.idx for a in self.alpha}) != n:
            raise ParamViolation("alpha entries pairwise distinct fails")
        if self.eta.is_zero:
            raise ParamViolation("eta != 0 fails")

    @property
    def field(self) -> Field:
        return self.eta.field

    @property
    def n(self) -> int:
        return len(self.alpha)


def grs_generator(alpha, v, k: int) -> Matrix:
    """k x n generator of GRS_k(alpha, v): rows v_j * alpha_j^i, i = 0..k-1."""
    if not alpha:
        raise BadDimension("need at least one evaluation point")
    field = next((x.field for x in list(alpha) + list(v) if isinstance(x, Element)), None)
    if field is None:
        raise TypeError("alpha or v must contain at least one field Element")
    alpha = _as_elements(field, alpha)
    v = _as_elements(field, v)
    n = len(alpha)
    if len(v) != n:
        raise BadDimension(f"{n} points but {len(v)} multipliers")
    if not 1 <= k <= n:
        raise BadDimension(f"need 1 <= k <= n, got k={k}, n={n}")
    if len({a.idx for a in alpha}) != n:
        raise RepeatedPoint("evaluation points must be pairwise distinct")
    if any(x.is_zero for x in v):
        raise ZeroMultiplier("column multipliers must be nonzero")
    a = np.array([x.idx for x in alpha], dtype=np.int32)
    vv = np.array([x.idx for x in v], dtype=np.int32)
    rows = [field.vmul(vv, field.vpow(a, i)) for i in range(k)]
    return Matrix(field, np.stack(rows))


def trs_generator(params: TwistedRSParams) -> Matrix:
    """Generator matrix of the twisted RS code, twist row at index h."""
    params.validate()
    field = params.field
    a = np.array([x.idx for x in params.alpha], dtype=np.int32)
    rows = [field.vpow(a, i) for i in range(params.k)]
    twist = field.vmul(np.int32(params.eta.idx),
                       field.vpow(a, params.k - 1 + params.t))
    rows[params.h] = field.vadd(rows[params.h], twist)
    return Matrix(field, np.stack(rows))


@dataclass(frozen=True)
class RootsOfUnityBlock:
    """The k-th roots of unity alpha_i = g^((q-1)/k * i), i = 1..k."""

    field: Field
    k: int
    points: tuple[Element, ...]


def roots_of_unity_points(field: Field, k: int) -> RootsOfUnityBlock:
    if k < 1 or (field.q - 1) % k != 0:
        raise NotADivisor(f"k={k} does not divide q-1={field.q - 1}")
    step = (field.q - 1) // k
    points = tuple(field.g_pow(step * i) for i in range(1, k + 1))
    return RootsOfUnityBlock(field, k, points)


def power_sum(block: RootsOfUnityBlock, f: int) -> Element:
    """Sum of the f-th powers of the block: k (mod p) when k | f, else 0."""
    if f < 0:
        raise ValueError("exponent must be nonnegative")
    field = block.field
    if f % block.k == 0:
        return field.from_digits([block.k % field.p])
    return field.zero


def _subfield_context(field: Field, subfield_order: int | None):
    """Resolve (s, beta): the active multiplicative order and coset shift."""
    if subfield_order is None or subfield_order == field.q:
        return field.q, field.gamma, "q"
    try:
        beta = field.subfield_generator(subfield_order)
    except NotASubfieldOrder as exc:
        raise ParamViolation(f"subfield order invalid: {exc}") from exc
    return subfield_order, beta, "s"


def _coset_alpha(field: Field, k: int, beta: Element) -> tuple[Element, ...]:
    block = roots_of_unity_points(field, k)
    return block.points + tuple(beta * x for x in block.points)


def construct_lemma31(field: Field, k: int, t: int, h: int, eta,
                      subfield_order: int | None = None) -> LinearCode:
    """[2k, k] twisted RS code with one-dimensional hull (even q).

    Evaluation points are the k-th roots of unity and their beta-coset.  With
    ``subfield_order`` s, all points lie in the subfield (beta is its
    canonical generator) and the divisibility/range conditions apply to s-1
    instead of q-1.
    """
    eta = field.element(eta)
    s, beta, sym = _subfield_context(field, subfield_order)
    if field.p != 2:
        raise ParamViolation(f"q is even fails (q={field.q})")
    if (s - 1) % k != 0:
        raise ParamViolation(f"k | {sym}-1 fails (k={k}, {sym}-1={s - 1})")
    if not k < s - 1:
        raise ParamViolation(f"k < {sym}-1 fails (k={k}, {sym}-1={s - 1})")
    if not h > 0:
        raise ParamViolation(f"h > 0 fails (h={h})")
    if not h < k:
        raise ParamViolation(f"h < k fails (h={h}, k={k})")
    if not 0 < t <= k:
        raise ParamViolation(f"0 < t <= n-k fails (t={t}, n-k={k})")
    if eta.is_zero:
        raise ParamViolation("eta != 0 fails")
    params = TwistedRSParams(_coset_alpha(field, k, beta), k, t, h, eta)
    # full row rank: rows evaluate polynomials of degree < n at n distinct points
    return LinearCode(trs_generator(params), validate=False)


def construct_lemma32(field: Field, k: int, t: int, h: int, eta,
                      subfield_order: int | None = None) -> LinearCode:
    """[2k, k-1] twisted RS code with one-dimensional hull (odd q).

    Same evaluation-point layout as the even-q family, but the code dimension
    is k-1: plain rows alpha^0..alpha^(k-2) with the twist eta*alpha^(k-2+t)
    added to row h+1.
    """
    eta = field.element(eta)
    s, beta, sym = _subfield_context(field, subfield_order)
    if field.p == 2:
        raise ParamViolation(f"q is odd fails (q={field.q})")
    if (s - 1) % k != 0:
        raise ParamViolation(f"k | {sym}-1 fails (k={k}, {sym}-1={s - 1})")
    if not 2 < k:
        raise ParamViolation(f"k > 2 fails (k={k})")
    if not 2 * k < s - 1:
        raise ParamViolation(f"k < ({sym}-1)/2 fails (k={k}, {sym}-1={s - 1})")
    if not h > 1:
        raise ParamViolation(f"h > 1 fails (h={h})")
    if not h < k - 1:
        raise ParamViolation(f"h < k-1 fails (h={h}, k={k})")
    if not 0 < t <= k + 1:
        raise ParamViolation(f"0 < t <= n-(k-1) fails (t={t}, n-(k-1)={k + 1})")
    if eta.is_zero:
        raise ParamViolation("eta != 0 fails")
    params = TwistedRSParams(_coset_alpha(field, k, beta), k - 1, t, h, eta)
    return LinearCode(trs_generator(params), validate=False)


# ---------------------------------------------------------------------------
# construction recipes (JSON)
# ---------------------------------------------------------------------------

FAMILIES = ("lemma31", "lemma32", "grs", "trs")


def _element_in(field: Field, value) -> Element:
    if isinstance(value, str):
        return field.parse_element(value)
    return field.element(value)


def code_from_recipe(recipe: dict) -> tuple[LinearCode, dict]:
    """Build a code from a recipe dict; returns (code, canonical recipe echo)."""
    family = recipe.get("family")
    if family not in FAMILIES:
        raise ParamViolation(f"unknown family {family!r}; expected one of {FAMILIES}")
    field = make_field(recipe["field"])
    echo: dict = {"family": family, "field": field.spec_string()}

    if family in ("lemma31", "lemma32"):
        k, t, h = int(recipe["k"]), int(recipe["t"]), int(recipe["h"])
        eta = _element_in(field, recipe["eta"])
        sub = recipe.get("subfield")
        build = construct_lemma31 if family == "lemma31" else construct_lemma32
        code = build(field, k, t, h, eta, subfield_order=sub)
        echo.update(k=k, t=t, h=h, eta=str(eta))
        if sub is not None:
            echo["subfield"] = int(sub)
        return code, echo

    alpha = [_element_in(field, a) for a in recipe["alpha"]]
    k = int(recipe["k"])
    if family == "grs":
        v = [_element_in(field, x) for x in recipe.get("v", [1] * len(alpha))]
        G = grs_generator(alpha, v, k)
        echo.update(k=k, alpha=[str(a) for a in alpha], v=[str(x) for x in v])
        return LinearCode(G, validate=False), echo

    t, h = int(recipe["t"]), int(recipe["h"])
    eta = _element_in(field, recipe["eta"])
    params = TwistedRSParams(tuple(alpha), k, t, h, eta)
    G = trs_generator(params)
    echo.update(k=k, t=t, h=h, eta=str(eta), alpha=[str(a) for a in alpha])
    return LinearCode(G, validate=False), echo
