"""The class-function algebra: inner products, restriction, induction,
truncation, Frobenius-Schur indicators, central characters, and exact
decomposition against a character table.

Every value is an exact Cyclotomic; inner products and multiplicities
are decided exactly, never by rounding.  Induction and truncation each
have a fast fusion-based implementation and an element-wise double-sum
oracle retained for testing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .cyclo import Cyclotomic
from .group import FiniteGroup, GroupError, Mat, is_normal_in


class ClassFunctionError(ValueError):
    pass


class DecompositionError(ClassFunctionError):
    pass


def _coerce_value(v) -> Cyclotomic:
    if isinstance(v, Cyclotomic):
        return v
    return Cyclotomic.from_rational(v)


class ClassFunction:
    """An exact cyclotomic-valued function on the conjugacy classes."""

    __slots__ = ("group", "values")

    def __init__(self, group: FiniteGroup, values):
        vals = tuple(_coerce_value(v) for v in values)
        if len(vals) != group.conjugacy().num_classes:
            raise ClassFunctionError("value count does not match class count")
        self.group = group
        self.values = vals

    def __getitem__(self, c: int) -> Cyclotomic:
        return self.values[c]

    def _check(self, other):
        if not isinstance(other, ClassFunction):
            raise ClassFunctionError("expected a class function")
        if other.group is not self.group:
            raise ClassFunctionError("class functions live on different groups")

    def __add__(self, other):
        self._check(other)
        return ClassFunction(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._check(other)
        return ClassFunction(self.group, [a - b for a, b in zip(self.values, other.values)])

    def __neg__(self):
        return ClassFunction(self.group, [-a for a in self.values])

    def __mul__(self, scalar):
        return ClassFunction(self.group, [a * scalar for a in self.values])

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, ClassFunction)
            and other.group is self.group
            and self.values == other.values
        )

    def __hash__(self):
        return hash(tuple(v.canonical() for v in self.values))

    def conjugate(self) -> "ClassFunction":
        return ClassFunction(self.group, [v.conjugate() for v in self.values])

    def degree(self):
        """Value at the identity class, as an exact Fraction."""
        f = self.values[0].as_rational()
        if f is None:
            raise ClassFunctionError("value at the identity is not rational")
        return f

    def at_element(self, i: int) -> Cyclotomic:
        return self.values[self.group.conjugacy().class_of[i]]

    def __repr__(self):
        return f"ClassFunction({[str(v) for v in self.values]})"


def trivial_character(G: FiniteGroup) -> ClassFunction:
    return ClassFunction(G, [1] * G.conjugacy().num_classes)


def regular_character(G: FiniteGroup) -> ClassFunction:
    r = G.conjugacy().num_classes
    vals = [0] * r
    vals[0] = G.order
    return ClassFunction(G, vals)


def inner_product(phi: ClassFunction, psi: ClassFunction) -> Cyclotomic:
    """(1/|G|) sum over classes of size * phi * conj(psi), exact."""
    phi._check(psi)
    cd = phi.group.conjugacy()
    acc = Cyclotomic.zero()
    for c in range(cd.num_classes):
        acc = acc + int(cd.sizes[c]) * (phi.values[c] * psi.values[c].conjugate())
    return acc / phi.group.order


def norm_squared(phi: ClassFunction) -> Fraction:
    f = inner_product(phi, phi).as_rational()
    assert f is not None
    return f


def restrict(chi: ClassFunction, H: FiniteGroup) -> ClassFunction:
    if H.parent is not chi.group:
        raise ClassFunctionError("restriction needs a subgroup of the domain group")
    fus = H.fusion()
    return ClassFunction(H, [chi.values[int(f)] for f in fus])


def induce(psi: ClassFunction, G: FiniteGroup) -> ClassFunction:
    """Induction via class fusion:
    psi^G(g) = |C_G(g)| * sum over fused H-classes of psi(c)/|C_H(c)|."""
    H = psi.group
    if H.parent is not G:
        raise ClassFunctionError("induction needs a subgroup of the target group")
    fus = H.fusion()
    gcd_ = G.conjugacy()
    hcd = H.conjugacy()
    vals = [Cyclotomic.zero() for _ in range(gcd_.num_classes)]
    for c in range(hcd.num_classes):
        g = int(fus[c])
        vals[g] = vals[g] + psi.values[c] * Fraction(
            int(gcd_.centralizer_orders[g]), int(hcd.centralizer_orders[c])
        )
    return ClassFunction(G, vals)


def induce_elementwise(psi: ClassFunction, G: FiniteGroup) -> ClassFunction:
    """Element-wise induction oracle: (1/|H|) sum over x in G of
    psi(x g x^-1) where defined.  O(|G|) per class; test use only."""
    H = psi.group
    if H.parent is not G:
        raise ClassFunctionError("induction needs a subgroup of the target group")
    add_t, mul_t = G.tables[0], G.tables[1]
    hcd = H.conjugacy()
    in_h_pos = np.full(G.order, -1, dtype=np.int64)
    in_h_pos[H.to_parent] = np.arange(H.order)
    vals = []
    for rep in G.conjugacy().reps:
        gmat = G.mats[int(rep)]
        t = kernels.matmul_many_one(G.mats, gmat, add_t, mul_t)
        t = kernels.matmul_pairs(t, G.inv_mats, add_t, mul_t)
        idx = G.index_of_mats(t)
        pos = in_h_pos[idx]
        hits = pos[pos >= 0]
        counts = np.bincount(hcd.class_of[hits], minlength=hcd.num_classes)
        acc = Cyclotomic.zero()
        for c in range(hcd.num_classes):
            if counts[c]:
                acc = acc + int(counts[c]) * psi.values[c]
        vals.append(acc / H.order)
    return ClassFunction(G, vals)


def _require_normal_pair(P: FiniteGroup, N: FiniteGroup):
    if P.parent is None or N.parent is not P.parent:
        raise ClassFunctionError("P and N must be subgroups of one parent group")
    pset = set(P.to_parent.tolist())
    if not set(N.to_parent.tolist()) <= pset:
        raise ClassFunctionError("N is not contained in P")
    if not is_normal_in(N, P):
        raise ClassFunctionError("N is not normal in P")


def truncate(chi: ClassFunction, P: FiniteGroup, N: FiniteGroup) -> ClassFunction:
    """Harish-Chandra truncation by averaging over N-translates:
    value at h is (1/|N|) * sum over x in N of chi(x h)."""
    G = chi.group
    if P.parent is not G:
        raise ClassFunctionError("P must be a subgroup of the domain group")
    _require_normal_pair(P, N)
    add_t, mul_t = G.tables[0], G.tables[1]
    n_mats = G.mats[N.to_parent]
    gcd_ = G.conjugacy()
    pcd = P.conjugacy()
    vals = []
    for rep in pcd.reps:
        hmat = G.mats[int(P.to_parent[int(rep)])]
        prods = kernels.matmul_many_one(n_mats, hmat, add_t, mul_t)
        idx = G.index_of_mats(prods)
        counts = np.bincount(gcd_.class_of[idx], minlength=gcd_.num_classes)
        acc = Cyclotomic.zero()
        for c in np.nonzero(counts)[0]:
            acc = acc + int(counts[c]) * chi.values[int(c)]
        vals.append(acc / N.order)
    return ClassFunction(P, vals)


def n_trivial_irreducibles(table, N: FiniteGroup) -> list[int]:
    """Indices of irreducibles of table.group whose kernel contains N."""
    P = table.group
    pos = np.full(P.parent.order if P.parent is not None else 0, -1, dtype=np.int64)
    if P.parent is None:
        raise ClassFunctionError("table group must be a subgroup")
    pos[P.to_parent] = np.arange(P.order)
    n_in_p = pos[N.to_parent]
    if (n_in_p < 0).any():
        raise ClassFunctionError("N is not contained in the table's group")
    pcd = P.conjugacy()
    n_classes = sorted(set(int(c) for c in pcd.class_of[n_in_p]))
    out = []
    for i, xi in enumerate(table.irreducibles):
        deg = xi.values[0]
        if all(xi.values[c] == deg for c in n_classes):
            out.append(i)
    return out


def truncate_by_projection(
    chi: ClassFunction, P: FiniteGroup, N: FiniteGroup, table_P
) -> ClassFunction:
    """Restrict to P, then project onto the constituents on which N acts
    trivially.  Independent route kept alongside the averaging formula."""
    _require_normal_pair(P, N)
    res = restrict(chi, P)
    keep = n_trivial_irreducibles(table_P, N)
    out = ClassFunction(P, [0] * P.conjugacy().num_classes)
    for i in keep:
        xi = table_P.irreducibles[i]
        m = inner_product(res, xi).as_rational()
        if m is None or m.denominator != 1:
            raise DecompositionError("restriction has a non-integer multiplicity")
        if m:
            out = out + int(m) * xi
    return out


def fs_indicator(chi: ClassFunction, irreducible: bool = False) -> Cyclotomic:
    """(1/|G|) sum of chi(g^2); for irreducible chi this is -1, 0 or 1."""
    cd = chi.group.conjugacy()
    sq = cd.power_class_map(2)
    acc = Cyclotomic.zero()
    for c in range(cd.num_classes):
        acc = acc + int(cd.sizes[c]) * chi.values[int(sq[c])]
    eps = acc / chi.group.order
    if irreducible:
        f = eps.as_rational()
        if f is None or f not in (-1, 0, 1):
            raise ClassFunctionError(f"indicator {eps!r} of an irreducible is not in -1,0,1")
    return eps


def central_character(chi: ClassFunction, z) -> Cyclotomic:
    """omega_chi(z) = chi(z)/chi(1) for central z (index or Mat)."""
    G = chi.group
    cd = G.conjugacy()
    zi = G.index_of(z) if isinstance(z, Mat) else int(z)
    c = int(cd.class_of[zi])
    if cd.sizes[c] != 1:
        raise ClassFunctionError("element is not central")
    return chi.values[c] / chi.degree()


def is_real_valued(chi: ClassFunction) -> bool:
    return all(v.is_real() for v in chi.values)


def decompose(phi: ClassFunction, table) -> tuple[int, ...]:
    """Multiplicities of phi against the table's irreducibles; exact, and
    verified by reconstruction.  Raises if any multiplicity is not a
    rational integer."""
    mults = []
    for chi in table.irreducibles:
        m = inner_product(phi, chi).as_rational()
        if m is None or m.denominator != 1:
            raise DecompositionError(
                f"non-integer multiplicity {m}; not a virtual character"
            )
        mults.append(int(m))
    recon = ClassFunction(phi.group, [0] * len(phi.values))
    for m, chi in zip(mults, table.irreducibles):
        if m:
            recon = recon + m * chi
    if recon != phi:
        raise DecompositionError("reconstruction failed; not a virtual character")
    return tuple(mults)


@dataclass
class RealBasisCertificate:
    ok: bool
    blocks: tuple  # ("orthogonal"|"symplectic"|"pair", index or (i, j), multiplicity)
    witness: str | None = None


def real_basis_decomposition(phi: ClassFunction, table) -> RealBasisCertificate:
    """Certify that phi decomposes as non-negative integer combinations of
    theta (eps=1), 2*psi (eps=-1) and eta+conj(eta) (eps=0) blocks."""
    mults = decompose(phi, table)
    eps = table.indicators()
    partner = table.conjugate_partners()
    blocks = []
    for i, m in enumerate(mults):
        if m < 0:
            return RealBasisCertificate(
                False, (), f"negative multiplicity {m} at irreducible {i}"
            )
        if m == 0:
            continue
        e = eps[i]
        if e == 1:
            blocks.append(("orthogonal", i, m))
        elif e == -1:
            if m % 2:
                return RealBasisCertificate(
                    False, (),
                    f"symplectic constituent {i} has odd multiplicity {m}",
                )
            blocks.append(("symplectic", i, m // 2))
        else:
            j = partner[i]
            if mults[j] != m:
                return RealBasisCertificate(
                    False, (),
                    f"conjugate pair ({i},{j}) has multiplicities {m} != {mults[j]}",
                )
            if i < j:
                blocks.append(("pair", (i, j), m))
    return RealBasisCertificate(True, tuple(blocks))
