"""Exact arithmetic in cyclotomic fields Q(zeta_n).

A value is stored as an integer coefficient vector over the power basis
{zeta_n^i : 0 <= i < phi(n)} (reduced modulo the n-th cyclotomic
polynomial) together with a positive common denominator.  Coefficients
are Python ints, so nothing ever rounds.  Values of different orders
compare equal after embedding into the lcm-order field; the minimal
(conductor) representation is computed only for hashing, display and
serialization, keeping the arithmetic path cheap.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
import cmath


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    out = n
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            out -= out // d
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out -= out // m
    return out


def _divisors(n: int):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _poly_divmod_exact(num, den):
    """Quotient of integer polynomials (low first), den monic; exact."""
    num = list(num)
    dd = len(den) - 1
    q = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            q[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    if any(num[:dd]):
        raise ArithmeticError("non-exact cyclotomic polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, low degree first, monic."""
    if n == 1:
        return (-1, 1)
    poly = [0] * n + [1]
    poly[0] = -1  # x^n - 1
    for d in _divisors(n):
        if d < n:
            poly = _poly_divmod_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """x^j mod Phi_n for phi(n) <= j < 2n, as phi(n)-vectors."""
    phi = euler_phi(n)
    mod = cyclotomic_polynomial(n)
    rows = []
    cur = [0] * phi  # x^(phi-1), then bumped one power at a time
    cur[phi - 1] = 1
    for _ in range(phi, 2 * n):
        # multiply by x: shift, then reduce the overflow term
        lead = cur[phi - 1]
        nxt = [0] * phi
        for i in range(phi - 1):
            nxt[i + 1] = cur[i]
        if lead:
            for i in range(phi):
                nxt[i] -= lead * mod[i]
        rows.append(tuple(nxt))
        cur = nxt
    return tuple(rows)


def _reduce(coeffs, n):
    """Reduce an integer coefficient list (any length) mod Phi_n."""
    phi = euler_phi(n)
    out = list(coeffs[:phi]) + [0] * max(0, phi - len(coeffs))
    if len(coeffs) > phi:
        rows = _reduction_rows(n)
        for j in range(phi, len(coeffs)):
            c = coeffs[j]
            if c:
                e = j
                if e >= 2 * n:
                    e = phi + (e - phi) % n  # exponents live mod n
                    # adjust: x^j = x^(j mod n) once j >= n
                    e = j % n
                    if e < phi:
                        out[e] += c
                        continue
                row = rows[e - phi]
                for i in range(phi):
                    out[i] += c * row[i]
    return out


class Cyclotomic:
    """An exact element of Q(zeta_order)."""

    __slots__ = ("order", "num", "den", "_canon")

    def __init__(self, order: int, num, den: int = 1, _normalized: bool = False):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        self.order = order
        if _normalized:
            self.num = tuple(num)
            self.den = den
        else:
            phi = euler_phi(order)
            v = list(num)
            if len(v) != phi:
                raise ValueError(f"need {phi} coefficients for order {order}")
            if den < 0:
                den = -den
                v = [-c for c in v]
            g = den
            for c in v:
                g = gcd(g, c)
                if g == 1:
                    break
            if g > 1:
                den //= g
                v = [c // g for c in v]
            self.num = tuple(v)
            self.den = den
        self._canon = None

    # -- constructors --------------------------------------------------------

    @staticmethod
    def from_rational(x) -> "Cyclotomic":
        f = Fraction(x)
        return Cyclotomic(1, (f.numerator,), f.denominator)

    @staticmethod
    def zero() -> "Cyclotomic":
        return Cyclotomic(1, (0,), 1, _normalized=True)

    @staticmethod
    def one() -> "Cyclotomic":
        return Cyclotomic(1, (1,), 1, _normalized=True)

    # -- order handling --------------------------------------------------------

    def _embedded(self, m: int):
        """Integer coefficient vector of self in Q(zeta_m); self.order | m."""
        s = m // self.order
        phi_m = euler_phi(m)
        if s == 1:
            return list(self.num)
        raw = [0] * (euler_phi(self.order) * s)
        for i, c in enumerate(self.num):
            if c:
                raw[i * s] = c
        return _reduce(raw, m)

    def astype(self, m: int) -> "Cyclotomic":
        if m % self.order:
            raise ValueError(f"order {self.order} does not divide {m}")
        return Cyclotomic(m, self._embedded(m), self.den)

    # -- ring operations ---------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.from_rational(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = lcm(self.order, o.order)
        a = self._embedded(m)
        b = o._embedded(m)
        da, db = self.den, o.den
        g = gcd(da, db)
        la, lb = db // g, da // g
        num = [x * la + y * lb for x, y in zip(a, b)]
        return Cyclotomic(m, num, da // g * db)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, tuple(-c for c in self.num), self.den, _normalized=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.order == 1:
            if o.num[0] == 0:
                return Cyclotomic(self.order, (0,) * len(self.num), 1, _normalized=True)
            return Cyclotomic(
                self.order, tuple(c * o.num[0] for c in self.num), self.den * o.den
            )
        if self.order == 1:
            return o * self
        m = lcm(self.order, o.order)
        a = self._embedded(m)
        b = o._embedded(m)
        prod = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return Cyclotomic(m, _reduce(prod, m), self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Cyclotomic):
            f = other.as_rational()
            if f is None:
                raise ArithmeticError("division only by rational values")
            other = f
        f = Fraction(other)
        if f == 0:
            raise ZeroDivisionError("division by zero")
        return self * Cyclotomic(1, (f.denominator,), f.numerator)

    # -- Galois actions --------------------------------------------------------------

    def galois(self, a: int) -> "Cyclotomic":
        """The automorphism zeta -> zeta^a; a must be coprime to the order."""
        n = self.order
        if gcd(a, n) != 1:
            raise ValueError(f"{a} is not coprime to {n}")
        a %= n
        raw = [0] * n
        for i, c in enumerate(self.num):
            if c:
                raw[(i * a) % n] += c
        return Cyclotomic(n, _reduce(raw, n), self.den)

    def conjugate(self) -> "Cyclotomic":
        return self.galois(-1 % self.order) if self.order > 1 else self

    # -- predicates / conversions ------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.num)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.num[1:])

    def as_rational(self):
        """The Fraction value if rational, else None."""
        if self.is_rational():
            return Fraction(self.num[0], self.den)
        return None

    def is_real(self) -> bool:
        return self == self.conjugate()

    def __complex__(self):
        z = 0j
        n = self.order
        for i, c in enumerate(self.num):
            if c:
                z += c * cmath.exp(2j * cmath.pi * i / n)
        return z / self.den

    # -- canonical form ------------------------------------------------------------------

    def canonical(self) -> tuple[int, tuple, int]:
        """(order, num, den) at the minimal cyclotomic order containing the value."""
        if self._canon is not None:
            return self._canon
        if self.is_rational():
            self._canon = (1, (self.num[0],), self.den)
            return self._canon
        n = self.order
        best = None
        for m in _divisors(n):
            if m == 1 or m == n:
                continue
            sol = self._rewrite_at(m)
            if sol is not None:
                best = (m, tuple(sol[0]), sol[1])
                break
        if best is None:
            best = (n, self.num, self.den)
        self._canon = best
        return best

    def _rewrite_at(self, m: int):
        """Solve for coefficients of self over the basis of Q(zeta_m) inside
        Q(zeta_n); returns (int coeffs, den) or None."""
        n = self.order
        phi_n = euler_phi(n)
        phi_m = euler_phi(m)
        s = n // m
        cols = []
        for j in range(phi_m):
            raw = [0] * (j * s + 1)
            raw[j * s] = 1
            cols.append(_reduce(raw, n))
        # solve cols^T x = num/den exactly over Q
        rows = phi_n
        A = [[Fraction(cols[j][i]) for j in range(phi_m)] for i in range(rows)]
        b = [Fraction(c, self.den) for c in self.num]
        x = _solve_exact(A, b)
        if x is None:
            return None
        d = 1
        for f in x:
            d = d * f.denominator // gcd(d, f.denominator)
        return [int(f * d) for f in x], d

    def sort_key(self):
        o, num, den = self.canonical()
        return (o, num, den)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.order == o.order:
            return self.num == o.num and self.den == o.den
        m = lcm(self.order, o.order)
        return (
            tuple(x * o.den for x in self._embedded(m))
            == tuple(y * self.den for y in o._embedded(m))
        )

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        o, num, den = self.canonical()
        if o == 1:
            f = Fraction(num[0], den)
            return str(f)
        terms = []
        for i, c in enumerate(num):
            if c:
                t = f"z{o}^{i}" if i > 1 else ("z%d" % o if i == 1 else "1")
                terms.append(f"{c}*{t}" if c != 1 or i == 0 else t)
        s = " + ".join(terms) if terms else "0"
        return s if den == 1 else f"({s})/{den}"


def _solve_exact(A, b):
    """Solve A x = b over Q (A: list of rows, possibly overdetermined).
    Returns x or None if inconsistent."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    M = [row[:] + [b[i]] for i, row in enumerate(A)]
    piv_cols = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if M[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        f = M[r][c]
        M[r] = [x / f for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                g = M[i][c]
                M[i] = [x - g * y for x, y in zip(M[i], M[r])]
        piv_cols.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if M[i][cols] != 0:
            return None
    if len(piv_cols) < cols:
        # underdetermined should not occur (basis columns are independent)
        return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(piv_cols):
        x[c] = M[i][cols]
    return x


def root_of_unity(n: int, k: int = 1) -> Cyclotomic:
    """zeta_n^k in canonical power-basis form."""
    if n < 1:
        raise ValueError("order must be positive")
    k %= n
    phi = euler_phi(n)
    if k < phi:
        v = [0] * phi
        v[k] = 1
        return Cyclotomic(n, v, 1, _normalized=True)
    raw = [0] * (k + 1)
    raw[k] = 1
    return Cyclotomic(n, _reduce(raw, n), 1)


def cyc_sum(values) -> Cyclotomic:
    acc = Cyclotomic.zero()
    for v in values:
        acc = acc + v
    return acc
