"""Exact arithmetic in small finite fields F_{p^k}.

Elements are canonical integer encodings in [0, q): the base-p digit
string of the polynomial representative, low degree first.  Fields of
order up to 2^12 carry log/antilog tables (O(q) memory) so that scalar
multiplication and division are table lookups; fields small enough for
matrix-kernel work (q <= 1024) additionally carry dense q x q add/mul
tables consumed by the batch kernels.  Larger fields, up to the 2^20
desk-scale bound, fall back to polynomial arithmetic.
"""

from __future__ import annotations

import numpy as np

DESK_SCALE_BOUND = 1 << 20
LOG_TABLE_BOUND = 1 << 12
DENSE_TABLE_BOUND = 1 << 10


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a, m, p):
    """Remainder of a by monic m, coefficients mod p, low degree first."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        f = a[i] % p
        if f:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - f * m[j]) % p
    del a[dm:]
    return a


def _poly_mulmod(a, b, m, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_mod(out, m, p)


def _monic_polys(deg, p):
    """All monic polynomials of the given degree over F_p, low first."""
    for t in range(p**deg):
        c = []
        x = t
        for _ in range(deg):
            c.append(x % p)
            x //= p
        yield c + [1]


def _is_irreducible(m, p):
    k = len(m) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    for d in range(1, k // 2 + 1):
        for g in _monic_polys(d, p):
            r = list(m)
            dg = d
            for i in range(len(r) - 1, dg - 1, -1):
                f = r[i] % p
                if f:
                    for j in range(dg + 1):
                        r[i - dg + j] = (r[i - dg + j] - f * g[j]) % p
            if not any(c % p for c in r[:dg]):
                return False
    return True


def _smallest_irreducible(p, k):
    """Lexicographically smallest monic irreducible of degree k over F_p,
    ordered by the base-p integer built from the non-leading coefficients."""
    for t in range(p**k):
        c = []
        x = t
        for _ in range(k):
            c.append(x % p)
            x //= p
        m = c + [1]
        if _is_irreducible(m, p):
            return tuple(m)
    raise FieldError(f"no irreducible polynomial of degree {k} over F_{p}")


class FieldElement:
    """An element of a PrimePowerField, wrapping its integer encoding."""

    __slots__ = ("field", "val")

    def __init__(self, field: "PrimePowerField", val: int):
        if not 0 <= val < field.q:
            raise FieldError(f"encoding {val} out of range for F_{field.q}")
        self.field = field
        self.val = val

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise FieldError("field mismatch")
            return other.val
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.field, self.field.add(self.val, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.field, self.field.sub(self.val, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.field, self.field.sub(v, self.val))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.field, self.field.mul(self.val, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.field, self.field.div(self.val, v))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.val))

    def __pow__(self, m):
        return FieldElement(self.field, self.field.pow(self.val, m))

    def frobenius(self, m: int = 1) -> "FieldElement":
        """x -> x^(p^m), the m-fold Frobenius automorphism."""
        return FieldElement(self.field, self.field.frob(self.val, m))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.field.p if other or True else False
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.val))

    def __repr__(self):
        return f"F{self.field.q}({self.val})"


class PrimePowerField:
    """F_{p^k} with a verified irreducible modulus and a stored generator.

    Do not construct directly; use make_field so fields are interned and
    `is` comparisons are valid.
    """

    def __init__(self, p: int, k: int):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if k < 1:
            raise FieldError("extension degree must be positive")
        q = p**k
        if q > DESK_SCALE_BOUND:
            raise FieldError(f"field order {q} exceeds desk-scale bound {DESK_SCALE_BOUND}")
        self.p = p
        self.k = k
        self.q = q
        self.modulus = _smallest_irreducible(p, k)
        self._pp = [p**i for i in range(k)]
        self._exp = None
        self._log = None
        if q <= LOG_TABLE_BOUND:
            self._build_log_tables()
        self.gen = self._find_generator()
        # dense kernel tables, built on demand
        self._add_t = None
        self._mul_t = None
        self._neg_t = None
        self._inv_t = None
        self._frob_t = None
        self._embeddings = {}

    # -- encoding <-> polynomial digits ------------------------------------

    def digits(self, a: int):
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(a % p)
            a //= p
        return out

    def encode(self, digits) -> int:
        return sum(d % self.p * w for d, w in zip(digits, self._pp))

    # -- core arithmetic on encodings ---------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.k == 1:
            return (a + b) % p
        s = 0
        for w in self._pp:
            s += ((a % p + b % p) % p) * w
            a //= p
            b //= p
        return s

    def neg(self, a: int) -> int:
        p = self.p
        if self.k == 1:
            return (-a) % p
        s = 0
        for w in self._pp:
            s += ((-a) % p) * w
            a //= p
        return s

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        c = _poly_mulmod(self.digits(a), self.digits(b), self.modulus, self.p)
        return self.encode(c + [0] * (self.k - len(c)))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("division by zero in finite field")
        if self._log is not None:
            return self._exp[(-self._log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, m: int) -> int:
        if a == 0:
            if m == 0:
                return 1
            if m < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] * m) % (self.q - 1)]
        m %= self.q - 1
        r = 1
        b = a
        while m:
            if m & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            m >>= 1
        return r

    def frob(self, a: int, m: int = 1) -> int:
        """The field automorphism x -> x^(p^m)."""
        return self.pow(a, pow(self.p, m % self.k))

    def order_of(self, a: int) -> int:
        if a == 0:
            raise FieldError("0 has no multiplicative order")
        n = self.q - 1
        o = n
        d = 2
        m = n
        primes = []
        while d * d <= m:
            if m % d == 0:
                primes.append(d)
                while m % d == 0:
                    m //= d
            d += 1
        if m > 1:
            primes.append(m)
        for ell in primes:
            while o % ell == 0 and self.pow(a, o // ell) == 1:
                o //= ell
        return o

    def trace_to_prime(self, a: int) -> int:
        """Tr_{F_q/F_p}(a) as an integer in [0, p)."""
        t = 0
        x = a
        for _ in range(self.k):
            t = self.add(t, x)
            x = self.pow(x, self.p)
        return t % self.p  # t encodes a constant

    # -- construction helpers ------------------------------------------------

    def _build_log_tables(self):
        # provisional generator-independent construction: find a generator by
        # scanning, then fill exp/log
        n = self.q - 1
        for g in range(1, self.q):
            if self._order_noexp(g) == n:
                break
        exp = np.zeros(n, dtype=np.int64)
        log = np.zeros(self.q, dtype=np.int64)
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._mul_poly(x, g)
        self._exp = exp
        self._log = log
        self._gen_scanned = g

    def _mul_poly(self, a, b):
        if a == 0 or b == 0:
            return 0
        c = _poly_mulmod(self.digits(a), self.digits(b), self.modulus, self.p)
        return self.encode(c + [0] * (self.k - len(c)))

    def _order_noexp(self, a):
        o = 1
        x = a
        while x != 1:
            x = self._mul_poly(x, a)
            o += 1
            if o > self.q:
                raise FieldError("order computation ran away; modulus not irreducible?")
        return o

    def _find_generator(self) -> int:
        if self._log is not None:
            return self._gen_scanned
        for g in range(1, self.q):
            if self.order_of(g) == self.q - 1:
                return g
        raise FieldError("no multiplicative generator found")

    # -- dense kernel tables --------------------------------------------------

    def kernel_tables(self):
        """(add, mul, neg, inv, frob) dense int16 tables for the batch kernels."""
        if self.q > DENSE_TABLE_BOUND:
            raise FieldError(
                f"field order {self.q} too large for dense kernel tables "
                f"(bound {DENSE_TABLE_BOUND})"
            )
        if self._add_t is None:
            q = self.q
            add = np.zeros((q, q), dtype=np.int16)
            mul = np.zeros((q, q), dtype=np.int16)
            for a in range(q):
                for b in range(q):
                    add[a, b] = self.add(a, b)
                    mul[a, b] = self.mul(a, b)
            neg = np.array([self.neg(a) for a in range(q)], dtype=np.int16)
            inv = np.array([0] + [self.inv(a) for a in range(1, q)], dtype=np.int16)
            frob = np.array([self.pow(a, self.p) for a in range(q)], dtype=np.int16)
            self._add_t, self._mul_t, self._neg_t = add, mul, neg
            self._inv_t, self._frob_t = inv, frob
        return self._add_t, self._mul_t, self._neg_t, self._inv_t, self._frob_t

    # -- elements --------------------------------------------------------------

    def element(self, val: int) -> FieldElement:
        return FieldElement(self, val % self.p if self.k == 1 else val)

    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def generator(self) -> FieldElement:
        return FieldElement(self, self.gen)

    def elements(self):
        for v in range(self.q):
            yield FieldElement(self, v)

    def embedding_into(self, big: "PrimePowerField") -> np.ndarray:
        """Encoding map F_{p^k} -> F_{p^K} for k | K, realized by root-finding
        this field's modulus inside the big field; cached per pair."""
        key = id(big)
        if key in self._embeddings:
            return self._embeddings[key]
        if big.p != self.p or big.k % self.k != 0:
            raise FieldError("no subfield embedding: incompatible (p, k)")
        root = None
        for t in range(big.q):
            acc = 0
            pw = 1
            for c in self.modulus:
                acc = big.add(acc, big.mul(c % big.p, pw))
                pw = big.mul(pw, t)
            if acc == 0:
                root = t
                break
        if root is None:
            raise FieldError("modulus has no root in the big field")
        table = np.zeros(self.q, dtype=np.int64)
        for a in range(self.q):
            acc = 0
            pw = 1
            for d in self.digits(a):
                acc = big.add(acc, big.mul(d, pw))
                pw = big.mul(pw, root)
            table[a] = acc
        self._embeddings[key] = table
        return table

    def __repr__(self):
        return f"PrimePowerField(p={self.p}, k={self.k})"


_FIELD_CACHE: dict[tuple[int, int], PrimePowerField] = {}


def make_field(p: int, k: int) -> PrimePowerField:
    """Interned constructor for F_{p^k}; p prime, p^k <= 2^20."""
    key = (p, k)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = PrimePowerField(p, k)
    return _FIELD_CACHE[key]


def sqrt_minus_one(field: PrimePowerField) -> FieldElement:
    """gamma with gamma^2 = -1; exists iff q = 1 mod 4."""
    if field.q % 4 != 1:
        raise FieldError(f"-1 is not a square in F_{field.q}")
    g = field.pow(field.gen, (field.q - 1) // 4)
    assert field.mul(g, g) == field.neg(1)
    return FieldElement(field, g)

def solve_norm_minus_one(q: int, ext: PrimePowerField) -> FieldElement:
    """t in F_{q^2} with t^(q+1) = -1; for odd q also t^(-q) = -t.

    `ext` must be the quadratic extension F_{q^2}.
    """
    if ext.q != q * q:
        raise FieldError(f"expected the quadratic extension of F_{q}, got F_{ext.q}")
    if q % 2 == 0:
        return FieldElement(ext, 1)  # char 2: -1 = 1
    t = ext.pow(ext.gen, (q - 1) // 2)
    assert ext.pow(t, q + 1) == ext.neg(1)
    assert ext.pow(t, ext.q - 1 - q) == ext.neg(t)  # t^(-q) = -t
    return FieldElement(ext, t)
