"""Exact arithmetic in GF(p^m) with a designated primitive element.

Elements are stored as integer indices v = sum(d_j * p^j) over the canonical
digit vector (d_0, ..., d_{m-1}), constant term first.  Every field carries a
full discrete-log table with respect to its primitive element ``g`` (the
residue class of the modulus root), so exponent-indexed values like ``g^i``
are exact and reproducible.

Default moduli come from a built-in Conway-polynomial table (re-verified at
construction, never trusted), which keeps ``g``-exponent bookkeeping aligned
with the usual computer-algebra defaults.  Field sizes are capped at 2^16.
"""

from __future__ import annotations

import re
from functools import cached_property

import numpy as np

FIELD_SIZE_CAP = 1 << 16

# Dense add/sub lookup tables for odd characteristic are only built for
# moderate q; larger fields fall back to digit-vector arithmetic.
_DENSE_ADD_CAP = 4096
# Dense multiplication table cap (log/exp path above it).
_DENSE_MUL_CAP = 512


class FieldError(Exception):
    """Base class for field construction and arithmetic errors."""


class NonPrimeCharacteristic(FieldError):
    pass


class ReducibleModulus(FieldError):
    pass


class NonPrimitiveModulus(FieldError):
    pass


class NoDefaultModulus(FieldError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class MixedFields(FieldError):
    pass


class NotASubfieldOrder(FieldError):
    pass


# Conway polynomials C_{p,m}, coefficients constant-first, monic.
# Generated offline by the standard lexicographic-minimal search and
# re-verified (irreducible + primitive) every time a field is built.
CONWAY_POLYNOMIALS: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    (2, 10): (1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1),
    (2, 11): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 12): (1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1),
    (2, 13): (1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 14): (1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (2, 15): (1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 16): (1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 2, 1, 0, 2, 0, 1),
    (3, 7): (1, 0, 2, 0, 0, 0, 0, 1),
    (3, 8): (2, 2, 2, 0, 1, 2, 0, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (11, 1): (9, 1),
    (11, 2): (2, 7, 1),
    (13, 1): (11, 1),
    (13, 2): (2, 12, 1),
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _factorize(n: int) -> dict[int, int]:
    fac: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            fac[d] = fac.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        fac[n] = fac.get(n, 0) + 1
    return fac


def _smallest_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    fac = _factorize(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in fac):
            return g
    raise FieldError(f"no primitive root mod {p}")  # unreachable for prime p


# -- polynomial helpers over GF(p), coefficient lists constant-first --------

def _ptrim(a: list[int]) -> list[int]:
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a: list[int], mod: tuple[int, ...], p: int) -> list[int]:
    a = _ptrim(list(a))
    dm = len(mod) - 1
    while len(a) - 1 >= dm and a != [0]:
        coef = a[-1]
        shift = len(a) - 1 - dm
        for i, mi in enumerate(mod):
            a[shift + i] = (a[shift + i] - coef * mi) % p
        _ptrim(a)
    return a


def _ppowmod(base: list[int], e: int, mod: tuple[int, ...], p: int) -> list[int]:
    result = [1]
    base = _pmod(base, mod, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), mod, p)
        base = _pmod(_pmul(base, base, p), mod, p)
        e >>= 1
    return result


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        va = a[i] if i < len(a) else 0
        vb = b[i] if i < len(b) else 0
        out[i] = (va - vb) % p
    return _ptrim(out)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b != [0]:
        a, b = b, _pmod(a, tuple(b), p) if b[-1] == 1 else _pmod_nonmonic(a, b, p)
    return a


def _pmod_nonmonic(a: list[int], mod: list[int], p: int) -> list[int]:
    inv_lead = pow(mod[-1], p - 2, p)
    scaled = tuple(c * inv_lead % p for c in mod)
    return _pmod(a, scaled, p)


def _modulus_is_irreducible(modulus: tuple[int, ...], p: int, m: int) -> bool:
    """Rabin test: x^(p^m) == x mod f, and gcd(x^(p^(m/l)) - x, f) = 1."""
    x = [0, 1]
    if _psub(_ppowmod(x, p**m, modulus, p), x, p) != [0]:
        return False
    for ell in _factorize(m):
        g = _pgcd(_psub(_ppowmod(x, p ** (m // ell), modulus, p), x, p),
                  list(modulus), p)
        if len(g) - 1 >= 1:
            return False
    return True


# -- field spec --------------------------------------------------------------

_SPEC_RE = re.compile(r"^GF\((\d+)(?:\^(\d+))?(?:;([\d,]+))?\)$")


class FieldSpec:
    """Description of a finite field: characteristic, degree, optional modulus.

    ``modulus`` is a constant-first coefficient tuple of a monic degree-m
    polynomial over GF(p); when omitted the built-in Conway polynomial is
    used (an error if no table entry exists for (p, m)).
    """

    __slots__ = ("p", "m", "modulus")

    def __init__(self, p: int, m: int = 1, modulus=None):
        self.p = int(p)
        self.m = int(m)
        self.modulus = None if modulus is None else tuple(int(c) for c in modulus)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse 'GF(p^m)', 'GF(p)' or 'GF(p^m;c0,c1,...,cm)'."""
        mt = _SPEC_RE.match(text.strip())
        if not mt:
            raise FieldError(f"cannot parse field spec {text!r}")
        p = int(mt.group(1))
        m = int(mt.group(2)) if mt.group(2) else 1
        modulus = None
        if mt.group(3):
            modulus = tuple(int(c) for c in mt.group(3).split(","))
        return cls(p, m, modulus)

    def key(self):
        return (self.p, self.m, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        base = f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"
        if self.modulus is None:
            return base
        return base[:-1] + ";" + ",".join(str(c) for c in self.modulus) + ")"


class Element:
    """A member of a :class:`Field`, stored as its canonical integer index."""

    __slots__ = ("field", "idx")

    def __init__(self, field: "Field", idx: int):
        self.field = field
        self.idx = idx

    # -- predicates / views --

    @property
    def is_zero(self) -> bool:
        return self.idx == 0

    @property
    def dlog(self) -> int:
        """Discrete log base g; raises DivisionByZero for the zero element."""
        if self.idx == 0:
            raise DivisionByZero("zero has no discrete log")
        return int(self.field._log[self.idx])

    @property
    def digits(self) -> tuple[int, ...]:
        v, p = self.idx, self.field.p
        out = []
        for _ in range(self.field.m):
            v, d = divmod(v, p)
            out.append(d)
        return tuple(out)

    def to_int(self) -> int:
        return self.idx

    # -- arithmetic --

    def _check(self, other) -> "Element":
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if other.field is not self.field:
            raise MixedFields(
                f"operands from different fields: {self.field} vs {other.field}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Element(self.field, self.field.add_idx(self.idx, other.idx))

    def __sub__(self, other):
        other = self._check(other)
        return Element(self.field, self.field.sub_idx(self.idx, other.idx))

    def __neg__(self):
        return Element(self.field, self.field.neg_idx(self.idx))

    def __mul__(self, other):
        other = self._check(other)
        return Element(self.field, self.field.mul_idx(self.idx, other.idx))

    def __truediv__(self, other):
        other = self._check(other)
        return Element(self.field, self.field.mul_idx(self.idx, self.field.inv_idx(other.idx)))

    def __pow__(self, e: int):
        return Element(self.field, self.field.pow_idx(self.idx, e))

    def inv(self) -> "Element":
        return Element(self.field, self.field.inv_idx(self.idx))

    # -- identity --

    def __eq__(self, other):
        return (isinstance(other, Element) and other.field is self.field
                and other.idx == self.idx)

    def __hash__(self):
        return hash((id(self.field), self.idx))

    def __repr__(self):
        return f"{self.field}:{self}"

    def __str__(self):
        if self.idx == 0:
            return "0"
        return f"g^{int(self.field._log[self.idx])}"


class Field:
    """GF(p^m) with verified primitive modulus and full log/exp tables.

    Immutable after construction; arithmetic methods are pure, so one Field
    object can be shared freely across threads or worker processes.
    """

    def __init__(self, spec: FieldSpec):
        p, m = spec.p, spec.m
        if not _is_prime(p):
            raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
        if m < 1:
            raise FieldError(f"extension degree must be >= 1, got {m}")
        q = p**m
        if q > FIELD_SIZE_CAP:
            raise FieldError(f"field size {q} exceeds cap {FIELD_SIZE_CAP}")

        modulus = spec.modulus
        if modulus is None:
            if m == 1:
                r = _smallest_primitive_root(p)
                modulus = ((-r) % p, 1)
            else:
                try:
                    modulus = CONWAY_POLYNOMIALS[(p, m)]
                except KeyError:
                    raise NoDefaultModulus(
                        f"no built-in modulus for GF({p}^{m}); supply one") from None
        if len(modulus) != m + 1:
            raise FieldError(f"modulus must have degree {m}, got {len(modulus) - 1}")
        if modulus[-1] != 1:
            raise FieldError("modulus must be monic")
        if any(not (0 <= c < p) for c in modulus):
            raise FieldError(f"modulus coefficients must lie in [0,{p})")
        if not _modulus_is_irreducible(modulus, p, m):
            raise ReducibleModulus(f"modulus {list(modulus)} is reducible over GF({p})")

        self.spec = FieldSpec(p, m, modulus)
        self.p = p
        self.m = m
        self.q = q
        self.modulus = modulus
        self._default_modulus = spec.modulus is None or modulus == _default_modulus_for(p, m)
        self._build_log_tables()
        self.zero = Element(self, 0)
        self.one = Element(self, 1)
        self.gamma = Element(self, int(self._exp[1])) if q > 2 else self.one

    # -- construction internals --

    def _mul_by_root(self, v: int) -> int:
        """Multiply digit-encoded v by the modulus root, reducing mod modulus."""
        p, m = self.p, self.m
        if m == 1:
            r = (-self.modulus[0]) % p
            return v * r % p
        digits = []
        for _ in range(m):
            v, d = divmod(v, p)
            digits.append(d)
        top = digits[m - 1]
        digits = [0] + digits[: m - 1]
        if top:
            for j in range(m):
                digits[j] = (digits[j] - top * self.modulus[j]) % p
        out = 0
        for d in reversed(digits):
            out = out * p + d
        return out

    def _build_log_tables(self):
        """Walk g^0, g^1, ... g^(q-2); fails if the root is not primitive."""
        q = self.q
        exp = np.zeros(max(q - 1, 1), dtype=np.int32)
        log = np.full(q, -1, dtype=np.int32)
        v = 1
        for i in range(q - 1):
            if log[v] != -1:  # cycle closed early: root order < q-1
                raise NonPrimitiveModulus(
                    f"modulus {list(self.modulus)} is irreducible but its root "
                    f"has order {i} < {q - 1}")
            exp[i] = v
            log[v] = i
            v = self._mul_by_root(v)
        if v != 1 and q > 2:
            raise NonPrimitiveModulus(
                f"modulus root does not return to 1 after {q - 1} steps")
        self._exp = exp
        self._log = log

    # -- lazily built dense operation tables (numpy) --

    @cached_property
    def _digits_table(self) -> np.ndarray:
        idx = np.arange(self.q, dtype=np.int64)
        cols = []
        for _ in range(self.m):
            cols.append(idx % self.p)
            idx //= self.p
        return np.stack(cols, axis=-1).astype(np.int16)

    @cached_property
    def _p_powers(self) -> np.ndarray:
        return (self.p ** np.arange(self.m, dtype=np.int64))

    @cached_property
    def _add_table(self) -> np.ndarray | None:
        if self.p == 2 or self.q > _DENSE_ADD_CAP:
            return None
        dig = self._digits_table.astype(np.int64)
        s = (dig[:, None, :] + dig[None, :, :]) % self.p
        return (s @ self._p_powers).astype(np.int32)

    @cached_property
    def _neg_table(self) -> np.ndarray:
        dig = self._digits_table.astype(np.int64)
        return (((-dig) % self.p) @ self._p_powers).astype(np.int32)

    @cached_property
    def _sub_table(self) -> np.ndarray | None:
        if self._add_table is None:
            return None
        return self._add_table[:, self._neg_table]

    @cached_property
    def _mul_table(self) -> np.ndarray | None:
        if self.q > _DENSE_MUL_CAP:
            return None
        a = np.arange(self.q, dtype=np.int64)
        la, lb = np.meshgrid(self._log[a], self._log[a], indexing="ij")
        out = self._exp[(la + lb) % (self.q - 1)].astype(np.int32)
        out[0, :] = 0
        out[:, 0] = 0
        return out

    @cached_property
    def _inv_table(self) -> np.ndarray:
        out = np.zeros(self.q, dtype=np.int32)
        nz = np.arange(1, self.q)
        out[nz] = self._exp[(-self._log[nz]) % (self.q - 1)]
        return out

    # -- scalar arithmetic on integer indices --

    def add_idx(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p, out, mult = self.p, 0, 1
        for _ in range(self.m):
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            out += ((da + db) % p) * mult
            mult *= p
        return out

    def neg_idx(self, a: int) -> int:
        if self.p == 2:
            return a
        return int(self._neg_table[a])

    def sub_idx(self, a: int, b: int) -> int:
        return self.add_idx(a, self.neg_idx(b))

    def mul_idx(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self._exp[(int(self._log[a]) + int(self._log[b])) % (self.q - 1)])

    def inv_idx(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("division by zero")
        return int(self._exp[(-int(self._log[a])) % (self.q - 1)])

    def pow_idx(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return 0
        return int(self._exp[(int(self._log[a]) * e) % (self.q - 1)])

    # -- vectorized arithmetic on numpy index arrays --

    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(a, b)
        t = self._add_table
        if t is not None:
            return t[a, b]
        dig = self._digits_table
        s = (dig[a].astype(np.int64) + dig[b]) % self.p
        return (s @ self._p_powers).astype(np.int32)

    def vsub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(a, b)
        t = self._sub_table
        if t is not None:
            return t[a, b]
        return self.vadd(a, self._neg_table[b])

    def vneg(self, a: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return a
        return self._neg_table[a]

    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        t = self._mul_table
        if t is not None:
            return t[a, b]
        a = np.asarray(a)
        b = np.asarray(b)
        out = self._exp[(self._log[a].astype(np.int64) + self._log[b]) % (self.q - 1)]
        out = np.where((a == 0) | (b == 0), 0, out)
        return out.astype(np.int32)

    def vinv(self, a: np.ndarray) -> np.ndarray:
        if np.any(a == 0):
            raise DivisionByZero("division by zero")
        return self._inv_table[a]

    def vpow(self, a: np.ndarray, e: int) -> np.ndarray:
        if e == 0:
            return np.ones_like(np.asarray(a), dtype=np.int32)
        out = self._exp[(self._log[a].astype(np.int64) * e) % (self.q - 1)]
        return np.where(np.asarray(a) == 0, 0, out).astype(np.int32)

    def vsum(self, a: np.ndarray, axis: int) -> np.ndarray:
        """Field-sum reduction along an axis."""
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        dig = self._digits_table[a].astype(np.int64).sum(axis=axis) % self.p
        return (dig @ self._p_powers).astype(np.int32)

    # -- element constructors / conversions --

    def element(self, value) -> Element:
        """Coerce an integer index or Element of this field to an Element."""
        if isinstance(value, Element):
            if value.field is not self:
                raise MixedFields(f"element of {value.field} is not in {self}")
            return value
        value = int(value)
        if not (0 <= value < self.q):
            raise FieldError(f"element index {value} out of range for {self}")
        return Element(self, value)

    def from_digits(self, digits) -> Element:
        if len(digits) > self.m:
            raise FieldError(f"too many digits for {self}")
        out = 0
        for d in reversed(list(digits) + [0] * (self.m - len(digits))):
            if not (0 <= d < self.p):
                raise FieldError(f"digit {d} out of range [0,{self.p})")
            out = out * self.p + d
        return Element(self, out)

    def g_pow(self, e: int) -> Element:
        """g^e for the designated primitive element g."""
        return Element(self, int(self._exp[e % (self.q - 1)]))

    def elements(self):
        """All q elements, in canonical index order."""
        return [Element(self, i) for i in range(self.q)]

    def nonzero_elements(self):
        return [Element(self, i) for i in range(1, self.q)]

    def parse_element(self, text: str) -> Element:
        """Parse '0', 'g^i', or 'poly:d0,d1,...,d{m-1}'."""
        text = text.strip()
        if text == "0":
            return self.zero
        if text.startswith("g^"):
            e = int(text[2:])
            if not (0 <= e < self.q - 1):
                raise FieldError(f"exponent {e} out of range [0,{self.q - 1})")
            return self.g_pow(e)
        if text.startswith("poly:"):
            return self.from_digits([int(c) for c in text[5:].split(",")])
        raise FieldError(f"cannot parse element {text!r} of {self}")

    def format_element(self, x: Element) -> str:
        return str(self.element(x))

    # -- subfields --

    def subfield_orders(self) -> list[int]:
        """Orders p^d for every divisor d of m, ascending."""
        return [self.p**d for d in range(1, self.m + 1) if self.m % d == 0]

    def _check_subfield_order(self, s: int) -> int:
        """Return the subfield index (q-1)//(s-1), validating s = p^d, d | m."""
        d, t = 0, 1
        while t < s:
            t *= self.p
            d += 1
        if t != s or d == 0 or self.m % d != 0:
            raise NotASubfieldOrder(f"{s} is not a subfield order of {self}")
        return (self.q - 1) // (s - 1)

    def subfield_elements(self, s: int) -> list[Element]:
        """The s elements fixed by the order-s Frobenius, canonically sorted."""
        step = self._check_subfield_order(s)
        idxs = sorted({0} | {int(self._exp[(j * step) % (self.q - 1)])
                             for j in range(s - 1)})
        return [Element(self, i) for i in idxs]

    def in_subfield(self, x: Element, s: int) -> bool:
        """True iff x^s = x."""
        step = self._check_subfield_order(s)
        x = self.element(x)
        if x.idx == 0:
            return True
        return int(self._log[x.idx]) % step == 0

    def subfield_generator(self, s: int) -> Element:
        """g^((q-1)/(s-1)), the canonical primitive element of the order-s subfield."""
        step = self._check_subfield_order(s)
        if s == 2:
            return self.one
        return self.g_pow(step)

    # -- identity / formatting --

    def spec_string(self) -> str:
        """Canonical 'GF(p^m)' form, with modulus listed when non-default."""
        base = f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"
        if self._default_modulus:
            return base
        return base[:-1] + ";" + ",".join(str(c) for c in self.modulus) + ")"

    def __repr__(self):
        return f"GF({self.q})"

    def __len__(self):
        return self.q


def _default_modulus_for(p: int, m: int) -> tuple[int, ...] | None:
    if m == 1:
        r = _smallest_primitive_root(p)
        return ((-r) % p, 1)
    return CONWAY_POLYNOMIALS.get((p, m))


_FIELD_CACHE: dict[tuple, Field] = {}


def make_field(spec) -> Field:
    """Build (or fetch the cached) field for a FieldSpec / spec string / order.

    Accepts a FieldSpec, a spec string like 'GF(2^4)' or 'GF(2^4;1,1,0,0,1)',
    or a prime-power integer order.
    """
    if isinstance(spec, str):
        spec = FieldSpec.parse(spec)
    elif isinstance(spec, int):
        fac = _factorize(spec)
        if len(fac) != 1:
            raise NonPrimeCharacteristic(f"{spec} is not a prime power")
        (p, m), = fac.items()
        spec = FieldSpec(p, m)
    key = spec.key()
    field = _FIELD_CACHE.get(key)
    if field is None:
        field = Field(spec)
        _FIELD_CACHE[key] = field
        # a default-modulus spec and its resolved form share one object
        _FIELD_CACHE.setdefault(field.spec.key(), field)
    return field
