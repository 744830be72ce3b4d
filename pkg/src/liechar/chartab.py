"""Exact irreducible character tables by the Dixon-Schneider method.

Class-algebra structure constants are split into common eigenvectors over
a prime field F_P (P = 1 mod exponent, P > 2*sqrt(|G|)), the central
character values are lifted to integer root-of-unity multiplicities by
discrete Fourier inversion mod P, and the table is assembled exactly in
Q(zeta_e).  Splitting uses seeded randomness; the final table is sorted
by (degree, value vector) so tables from different seeds coincide.
"""

from __future__ import annotations

from math import isqrt

import numpy as np

from . import kernels
from .classfun import ClassFunction, fs_indicator, inner_product
from .cyclo import Cyclotomic, _reduce
from .field import is_prime
from .group import ConjugacyData, FiniteGroup


class ChartabError(RuntimeError):
    pass


class SplitError(ChartabError):
    pass


# -- class algebra ------------------------------------------------------------


class ClassAlgebraMatrix:
    """a_{ijk} = #{(x, y) in C_i x C_j : xy = z_k} for one fixed i,
    indexed (j, k); z_k is the stored representative of class k."""

    def __init__(self, i: int, entries: np.ndarray):
        self.i = i
        self.entries = entries


def all_structure_constants(G: FiniteGroup, cdata: ConjugacyData) -> np.ndarray:
    """The full integer tensor a[i, j, k], computed by running every
    x in G against each fixed class representative."""
    if getattr(cdata, "_structure", None) is not None:
        return cdata._structure
    r = cdata.num_classes
    add_t, mul_t = G.tables[0], G.tables[1]
    a = np.zeros((r, r, r), dtype=np.int64)
    cls = cdata.class_of
    inv_mats = G.inv_mats
    for k in range(r):
        zk = G.mats[int(cdata.reps[k])]
        yidx = kernels.right_mul_index(
            inv_mats, zk, add_t, mul_t, G.field.q, G.sorted_codes, G.sort_perm
        )
        if (yidx < 0).any():
            raise ChartabError("product left the group; enumeration is broken")
        flat = cls * r + cls[yidx]
        a[:, :, k] = np.bincount(flat, minlength=r * r).reshape(r, r)
    cdata._structure = a
    return a


def structure_constants(G: FiniteGroup, cdata: ConjugacyData, i: int) -> ClassAlgebraMatrix:
    return ClassAlgebraMatrix(i, all_structure_constants(G, cdata)[i])


# -- linear algebra mod P ---------------------------------------------------------


def _inv_mod(x: int, P: int) -> int:
    return pow(int(x), P - 2, P)


def _rref_mod(M: np.ndarray, P: int):
    """Reduced row echelon form mod P; returns (R, pivot column list)."""
    R = M % P
    R = R.astype(np.int64)
    rows, cols = R.shape
    piv = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if R[i, c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        R[r] = (R[r] * _inv_mod(R[r, c], P)) % P
        for i in range(rows):
            if i != r and R[i, c]:
                R[i] = (R[i] - R[i, c] * R[r]) % P
        piv.append(c)
        r += 1
        if r == rows:
            break
    return R, piv


def _nullspace_mod(M: np.ndarray, P: int) -> np.ndarray:
    """Columns spanning the kernel of M mod P, deterministic basis."""
    R, piv = _rref_mod(M, P)
    cols = M.shape[1]
    free = [c for c in range(cols) if c not in piv]
    out = np.zeros((cols, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        out[f, j] = 1
        for i, c in enumerate(piv):
            out[c, j] = (-R[i, f]) % P
    return out


def _solve_coords(V: np.ndarray, W: np.ndarray, P: int) -> np.ndarray:
    """X with V @ X = W mod P; V has full column rank."""
    d = V.shape[1]
    aug = np.concatenate([V % P, W % P], axis=1)
    R, piv = _rref_mod(aug, P)
    if piv[:d] != list(range(d)):
        raise SplitError("basis lost rank during splitting")
    if len(piv) > d:
        raise SplitError("inconsistent restriction; subspace not invariant")
    return R[:d, d:]


def _det_mod(M: np.ndarray, P: int) -> int:
    A = (M % P).astype(np.int64).copy()
    n = A.shape[0]
    det = 1
    for c in range(n):
        pr = None
        for i in range(c, n):
            if A[i, c]:
                pr = i
                break
        if pr is None:
            return 0
        if pr != c:
            A[[c, pr]] = A[[pr, c]]
            det = -det % P
        det = (det * A[c, c]) % P
        inv = _inv_mod(A[c, c], P)
        for i in range(c + 1, n):
            if A[i, c]:
                f = (A[i, c] * inv) % P
                A[i, c:] = (A[i, c:] - f * A[c, c:]) % P
    return det % P


def _charpoly_mod(M: np.ndarray, P: int) -> np.ndarray:
    """Coefficients of det(xI - M) mod P, low degree first, by
    interpolation at x = 0..d."""
    d = M.shape[0]
    if d + 1 > P:
        raise SplitError("prime too small to interpolate the char poly")
    xs = np.arange(d + 1, dtype=np.int64)
    ys = np.array(
        [_det_mod((x * np.eye(d, dtype=np.int64) - M) % P, P) for x in xs],
        dtype=np.int64,
    )
    # Lagrange interpolation mod P
    coeffs = np.zeros(d + 1, dtype=np.int64)
    for i in range(d + 1):
        basis = np.zeros(d + 1, dtype=np.int64)
        basis[0] = 1
        deg = 0
        denom = 1
        for j in range(d + 1):
            if j == i:
                continue
            # multiply basis by (x - xs[j])
            nb = np.zeros(d + 1, dtype=np.int64)
            nb[1 : deg + 2] = basis[: deg + 1]
            nb[: deg + 1] = (nb[: deg + 1] - xs[j] * basis[: deg + 1]) % P
            basis = nb % P
            deg += 1
            denom = (denom * (xs[i] - xs[j])) % P
        coeffs = (coeffs + ys[i] * basis * _inv_mod(denom, P)) % P
    return coeffs % P


def _roots_mod(coeffs: np.ndarray, P: int) -> np.ndarray:
    xs = np.arange(P, dtype=np.int64)
    acc = np.zeros(P, dtype=np.int64)
    for c in coeffs[::-1]:
        acc = (acc * xs + int(c)) % P
    return xs[acc == 0]


def _primitive_root(P: int) -> int:
    n = P - 1
    fac = []
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            fac.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        fac.append(m)
    for g in range(2, P):
        if all(pow(g, n // f, P) != 1 for f in fac):
            return g
    raise ChartabError("no primitive root found")


def choose_prime(order: int, exponent: int, num_classes: int) -> int:
    """Smallest P = 1 mod exponent with P > 2*ceil(sqrt(|G|)); also kept
    above the class count so char polys can be interpolated."""
    s = isqrt(order)
    if s * s < order:
        s += 1
    lo = max(2 * s, num_classes, 2)
    P = (lo // exponent) * exponent + 1
    while P <= lo or not is_prime(P):
        P += exponent
    return P


# -- the table ------------------------------------------------------------------


class CharacterTable:
    """Exact irreducible character table of a FiniteGroup."""

    def __init__(self, group, irreducibles, seed, prime):
        self.group = group
        self.cdata = group.conjugacy()
        self.exponent = self.cdata.exponent
        self.irreducibles = tuple(irreducibles)
        self.degrees = tuple(int(chi.degree()) for chi in self.irreducibles)
        self.seed = seed
        self.prime = prime
        self._indicators = None
        self._partners = None

    @property
    def num_classes(self) -> int:
        return self.cdata.num_classes

    def indicators(self) -> tuple[int, ...]:
        """Frobenius-Schur indicators of all irreducibles."""
        if self._indicators is None:
            out = []
            for chi in self.irreducibles:
                f = fs_indicator(chi, irreducible=True).as_rational()
                out.append(int(f))
            self._indicators = tuple(out)
        return self._indicators

    def conjugate_partners(self) -> tuple[int, ...]:
        """Index of the complex-conjugate character of each irreducible."""
        if self._partners is None:
            keyed = {}
            for i, chi in enumerate(self.irreducibles):
                keyed[tuple(v.canonical() for v in chi.values)] = i
            out = []
            for chi in self.irreducibles:
                k = tuple(v.conjugate().canonical() for v in chi.values)
                if k not in keyed:
                    raise ChartabError("conjugate character missing from table")
                out.append(keyed[k])
            self._partners = tuple(out)
        return self._partners

    def index_of(self, chi: ClassFunction) -> int:
        for i, x in enumerate(self.irreducibles):
            if x == chi:
                return i
        raise ChartabError("class function is not an irreducible of this table")


def _split_eigenvectors(class_mats: np.ndarray, P: int, rng, max_rounds: int):
    r = class_mats.shape[0]
    spaces = [np.eye(r, dtype=np.int64)]
    rounds = 0
    while any(s.shape[1] > 1 for s in spaces):
        if rounds >= max_rounds:
            raise SplitError(f"eigenspaces not fully split after {max_rounds} rounds")
        rounds += 1
        c = rng.integers(1, P, size=r)
        M = np.tensordot(c, class_mats, axes=(0, 0)) % P
        nxt = []
        for V in spaces:
            d = V.shape[1]
            if d == 1:
                nxt.append(V)
                continue
            W = (M @ V) % P
            X = _solve_coords(V, W, P)
            roots = _roots_mod(_charpoly_mod(X, P), P)
            found = 0
            for lam in roots:
                NS = _nullspace_mod((X - lam * np.eye(d, dtype=np.int64)) % P, P)
                if NS.shape[1]:
                    nxt.append((V @ NS) % P)
                    found += NS.shape[1]
            if found != d:
                raise SplitError("restriction matrix was not diagonalizable mod P")
        spaces = nxt
    return [s[:, 0] % P for s in spaces]


def dixon_table(
    G: FiniteGroup,
    cdata: ConjugacyData | None = None,
    seed: int = 0,
    max_rounds: int = 64,
) -> CharacterTable:
    """Compute the exact character table.

    Deterministic given the seed; tables computed with different seeds
    agree after the canonical (degree, value-vector) sort.
    """
    cdata = cdata or G.conjugacy()
    r = cdata.num_classes
    e = cdata.exponent
    P = choose_prime(G.order, e, r)
    a = all_structure_constants(G, cdata)
    rng = np.random.default_rng(seed)
    omegas = _split_eigenvectors(a % P, P, rng, max_rounds)
    if len(omegas) != r:
        raise SplitError("wrong number of one-dimensional eigenspaces")

    sizes = cdata.sizes
    inv_sizes = np.array([_inv_mod(int(s), P) for s in sizes], dtype=np.int64)
    istar = cdata.inverse_class

    # power-map classes: pm[i, j] = class of rep_i^j for j in [0, e)
    pm = np.zeros((r, e), dtype=np.int64)
    for i in range(r):
        o = int(cdata.orders[i])
        cls_pows = [cdata.power_class_map(j)[i] for j in range(o)]
        for j in range(e):
            pm[i, j] = cls_pows[j % o]

    w = pow(_primitive_root(P), (P - 1) // e, P)
    winv = _inv_mod(w, P)
    jk = np.outer(np.arange(e, dtype=np.int64), np.arange(e, dtype=np.int64)) % e
    base = np.array([pow(winv, t, P) for t in range(e)], dtype=np.int64)
    Wm = base[jk]  # Wm[j, k] = w^(-jk)
    inv_e = _inv_mod(e, P)

    chars = []
    for v in omegas:
        v = v % P
        if v[0] == 0:
            raise SplitError("eigenvector vanishes at the identity class")
        omega = (v * _inv_mod(int(v[0]), P)) % P
        denom = int(np.sum(omega * omega[istar] % P * inv_sizes % P) % P)
        d2 = (G.order % P) * _inv_mod(denom, P) % P
        deg = None
        for s in range(1, P // 2 + 1):
            if s * s % P == d2:
                deg = s
                break
        if deg is None:
            raise SplitError("degree recovery failed; no square root mod P")
        chi_p = deg * omega % P * inv_sizes % P  # chi at each class, mod P
        chi_pow = chi_p[pm]  # (e,) values at powers of each rep, per class
        m = chi_pow @ Wm % P * inv_e % P  # multiplicities of zeta_e^k
        if (m.sum(axis=1) != deg).any():
            raise SplitError("root-of-unity multiplicities do not sum to the degree")
        values = [Cyclotomic(e, _reduce([int(x) for x in row], e)) for row in m]
        chars.append(ClassFunction(G, values))

    degsq = sum(int(c.degree()) ** 2 for c in chars)
    if degsq != G.order:
        raise ChartabError(f"sum of squared degrees {degsq} != |G| = {G.order}")
    chars.sort(key=lambda c: (c.degree(), tuple(v.sort_key() for v in c.values)))
    return CharacterTable(G, chars, seed, P)


# -- verification ------------------------------------------------------------------


class OrthogonalityReport:
    def __init__(self, ok: bool, violations):
        self.ok = ok
        self.violations = tuple(violations)

    def __bool__(self):
        return self.ok


def orthogonality_check(table: CharacterTable) -> OrthogonalityReport:
    """Exact row and column orthogonality, plus sum of squared degrees."""
    bad = []
    G = table.group
    cd = table.cdata
    chars = table.irreducibles
    r = len(chars)
    if sum(d * d for d in table.degrees) != G.order:
        bad.append(("degree-sum", -1, -1, "sum of squared degrees differs from |G|"))
    for i in range(r):
        for j in range(i, r):
            ip = inner_product(chars[i], chars[j])
            want = 1 if i == j else 0
            if ip != want:
                bad.append(("row", i, j, f"<chi_{i}, chi_{j}> = {ip!r}"))
    for c in range(cd.num_classes):
        for cp in range(c, cd.num_classes):
            acc = Cyclotomic.zero()
            for chi in chars:
                acc = acc + chi.values[c] * chi.values[cp].conjugate()
            want = int(cd.centralizer_orders[c]) if c == cp else 0
            if acc != want:
                bad.append(("column", c, cp, f"column sum = {acc!r}"))
    return OrthogonalityReport(not bad, bad)
