"""Arithmetic in GF(p^k).

Elements are encoded as integers ``0 <= x < p^k`` whose base-``p`` digits
are the polynomial coefficients, lowest degree first; :class:`FieldElem`
wraps an encoded element with operator overloading for interactive use.
Multiplication goes through log/exp tables for fields of order up to
``2**16`` and through polynomial reduction above that.
"""

from __future__ import annotations

import functools
from itertools import product

from .errors import DomainError

MAX_ORDER = 1 << 20
TABLE_ORDER = 1 << 16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q = p**k``; raise for non prime powers."""
    if q < 2:
        raise DomainError(f"{q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise DomainError(f"{q} is not a prime power")
    p, k = ps[0], 0
    while q > 1:
        q //= p
        k += 1
    return p, k


# -- polynomials over GF(p): coefficient lists, lowest degree first ----------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a, f, p):
    a = list(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(_trim(a)) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
    return a


def _polymulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _polymod(out, f, p)


def _polypowmod(a, e, f, p):
    result, base = [1], _polymod(a, f, p)
    while e:
        if e & 1:
            result = _polymulmod(result, base, f, p)
        base = _polymulmod(base, base, f, p)
        e >>= 1
    return result


def _polygcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _polymod(a, b, p)
        _trim(b)
    return a


def is_irreducible(f, p: int) -> bool:
    """Rabin's test for a monic ``f`` (coefficients low-to-high) over GF(p)."""
    f = _trim(list(f))
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    if _trim(_sub(_polypowmod(x, p ** k, f, p), x, p)):
        return False
    for r in prime_factors(k):
        h = _sub(_polypowmod(x, p ** (k // r), f, p), x, p)
        if len(_polygcd(f, h, p)) != 1:
            return False
    return True


def _sub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``k``.

    Coefficient vectors ``(c_0, ..., c_{k-1})`` are compared ``c_0`` first.
    """
    if k == 1:
        return (0, 1)
    for low in product(range(p), repeat=k):
        if low[0] == 0:
            continue  # divisible by x
        f = list(low) + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise RuntimeError(f"no irreducible polynomial of degree {k} over GF({p})")  # pragma: no cover


class FiniteField:
    """GF(p^k) with a fixed monic irreducible modulus."""

    def __init__(self, p: int, k: int = 1, modulus=None):
        if not is_prime(p):
            raise DomainError(f"characteristic {p} is not prime")
        if k < 1:
            raise DomainError(f"extension degree must be >= 1, got {k}")
        if p ** k > MAX_ORDER:
            raise DomainError(f"field order {p}^{k} exceeds cap {MAX_ORDER}")
        self.p, self.k, self.order = p, k, p ** k
        if modulus is None:
            modulus = smallest_irreducible(p, k)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise DomainError(f"modulus must be monic of degree {k}")
        if k > 1 and not is_irreducible(modulus, p):
            raise DomainError(f"modulus {modulus} is reducible over GF({p})")
        self.modulus = modulus
        self._exp = self._log = None

    def __repr__(self):
        return f"FiniteField(p={self.p}, k={self.k}, modulus={self.modulus})"

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.k, self.modulus) == (
            other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    # -- encoding -------------------------------------------------------------

    def coeffs(self, x: int) -> tuple[int, ...]:
        p, out = self.p, []
        for _ in range(self.k):
            x, r = divmod(x, p)
            out.append(r)
        return tuple(out)

    def encode(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.k:
            raise DomainError(f"expected at most {self.k} coefficients")
        x = 0
        for c in reversed(coeffs):
            x = x * self.p + int(c) % self.p
        return x

    def elements(self) -> range:
        return range(self.order)

    def __call__(self, value) -> "FieldElem":
        if isinstance(value, FieldElem):
            return value
        if isinstance(value, int):
            if self.k == 1:
                return FieldElem(self, value % self.p)
            if not 0 <= value < self.order:
                raise DomainError(f"encoded element {value} out of range")
            return FieldElem(self, value)
        return FieldElem(self, self.encode(value))

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    # -- arithmetic on encoded ints -----------------------------------------

    def _check(self, *xs):
        for x in xs:
            if not 0 <= x < self.order:
                raise DomainError(f"{x} is not an element of GF({self.order})")

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self.encode(x + y for x, y in zip(self.coeffs(a), self.coeffs(b)))

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self.encode(-x for x in self.coeffs(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def poly_mul(self, a: int, b: int) -> int:
        """Multiplication by schoolbook reduction, bypassing any tables."""
        if self.k == 1:
            return a * b % self.p
        prod = _polymulmod(list(self.coeffs(a)), list(self.coeffs(b)), self.modulus, self.p)
        return self.encode(prod)

    def _tables(self):
        if self._exp is None:
            g = self.primitive_element()
            exp = [1] * (self.order - 1)
            for i in range(1, self.order - 1):
                exp[i] = self.poly_mul(exp[i - 1], g)
            log = [0] * self.order
            for i, v in enumerate(exp):
                log[v] = i
            self._exp, self._log = exp, log
        return self._exp, self._log

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self.order > TABLE_ORDER:
            return self.poly_mul(a, b)
        exp, log = self._tables()
        return exp[(log[a] + log[b]) % (self.order - 1)]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DomainError("0 has no multiplicative inverse")
        if self.k == 1:
            return pow(a, -1, self.p)
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def norm(self, a: int, sub_order: int) -> int:
        """Relative norm to the subfield of order ``sub_order``.

        ``sub_order**d`` must equal the field order; the result
        ``a**((q^d - 1)/(q - 1))`` lies in the subfield.
        """
        d, q = 0, 1
        while q < self.order:
            q *= sub_order
            d += 1
        if sub_order < 2 or q != self.order or self.k % d:
            raise DomainError(f"GF({sub_order}) is not a subfield of GF({self.order})")
        return self.pow(a, (self.order - 1) // (sub_order - 1))

    def is_square(self, a: int) -> bool:
        if a == 0:
            return True
        if self.p == 2:
            return True
        return self.pow(a, (self.order - 1) // 2) == 1

    def primitive_element(self) -> int:
        """Smallest encoded generator of the multiplicative group."""
        qs = prime_factors(self.order - 1)
        for g in range(1, self.order):
            if all(self._pow_slow(g, (self.order - 1) // r) != 1 for r in qs):
                return g
        raise RuntimeError("no primitive element")  # pragma: no cover

    def _pow_slow(self, a, e):
        result = 1
        while e:
            if e & 1:
                result = self.poly_mul(result, a)
            a = self.poly_mul(a, a)
            e >>= 1
        return result


@functools.lru_cache(maxsize=None)
def field_make(p: int, k: int = 1) -> FiniteField:
    """GF(p^k) with the lexicographically smallest monic irreducible modulus."""
    return FiniteField(p, k)


def field_of_order(q: int) -> FiniteField:
    p, k = prime_power(q)
    return field_make(p, k)


class FieldElem:
    """An element of a :class:`FiniteField` with arithmetic operators."""

    __slots__ = ("field", "value")

    def __init__(self, field: FiniteField, value: int):
        self.field = field
        self.value = value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def _other(self, other):
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise DomainError("elements belong to different fields")
            return other.value
        return self.field(other).value

    def __add__(self, other):
        return FieldElem(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElem(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElem(self.field, self.field.sub(self._other(other), self.value))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        return FieldElem(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElem(self.field, self.field.div(self.value, self._other(other)))

    def __pow__(self, e: int):
        return FieldElem(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.field, self.field.inv(self.value))

    def norm(self, sub_order: int) -> "FieldElem":
        return FieldElem(self.field, self.field.norm(self.value, sub_order))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field(other).value
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FieldElem({self.coeffs}, GF({self.field.order}))"
