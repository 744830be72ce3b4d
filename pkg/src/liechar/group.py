"""Explicit finite matrix groups over small finite fields.

A FiniteGroup stores every element as an (n, n) int16 array of field
encodings plus a packed int64 code (row-major base-q) used as the lookup
key.  Enumeration is breadth-first closure under right multiplication by
the generators, with each level appended in ascending code order, so the
element ordering is deterministic and independent of generator order.
Conjugacy is full orbit expansion by a reduced generating set.
"""

from __future__ import annotations

from math import lcm

import numpy as np

from . import kernels
from .field import FieldElement, PrimePowerField

DEFAULT_CAP = 10**6
_PAIR_CHECK_LIMIT = 4096
_SAMPLED_PAIRS = 200_000


class GroupError(ValueError):
    pass


class Mat:
    """A single invertible matrix over a PrimePowerField."""

    __slots__ = ("field", "a", "_key")

    def __init__(self, field: PrimePowerField, rows):
        self.field = field
        a = np.asarray(rows, dtype=np.int16)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GroupError("matrix must be square")
        if a.min() < 0 or a.max() >= field.q:
            raise GroupError("entry encoding out of field range")
        a.setflags(write=False)
        self.a = a
        self._key = None

    @staticmethod
    def identity(field: PrimePowerField, n: int) -> "Mat":
        return Mat(field, np.eye(n, dtype=np.int16))

    @staticmethod
    def from_elements(rows) -> "Mat":
        field = rows[0][0].field
        return Mat(field, [[e.val for e in r] for r in rows])

    @property
    def n(self) -> int:
        return self.a.shape[0]

    @property
    def key(self) -> int:
        if self._key is None:
            acc = 0
            q = self.field.q
            for v in self.a.reshape(-1):
                acc = acc * q + int(v)
            self._key = acc
        return self._key

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.field is other.field
            and self.key == other.key
        )

    def __hash__(self):
        return hash((id(self.field), self.key))

    def __repr__(self):
        return f"Mat({self.a.tolist()} over F_{self.field.q})"

    def __getitem__(self, ij) -> FieldElement:
        return FieldElement(self.field, int(self.a[ij]))

    def __mul__(self, other: "Mat") -> "Mat":
        if self.field is not other.field:
            raise GroupError("field mismatch")
        F = self.field
        n = self.n
        out = np.zeros((n, n), dtype=np.int16)
        for i in range(n):
            for j in range(n):
                acc = 0
                for l in range(n):
                    acc = F.add(acc, F.mul(int(self.a[i, l]), int(other.a[l, j])))
                out[i, j] = acc
        return Mat(F, out)

    def det(self) -> int:
        F = self.field
        a = [[int(v) for v in row] for row in self.a]
        n = self.n
        det = 1
        for c in range(n):
            piv = None
            for r in range(c, n):
                if a[r][c]:
                    piv = r
                    break
            if piv is None:
                return 0
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                det = F.neg(det)
            det = F.mul(det, a[c][c])
            ic = F.inv(a[c][c])
            for r in range(c + 1, n):
                if a[r][c]:
                    f = F.mul(a[r][c], ic)
                    for j in range(c, n):
                        a[r][j] = F.sub(a[r][j], F.mul(f, a[c][j]))
        return det

    def inverse(self) -> "Mat":
        F = self.field
        n = self.n
        a = [[int(v) for v in row] for row in self.a]
        b = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for c in range(n):
            piv = None
            for r in range(c, n):
                if a[r][c]:
                    piv = r
                    break
            if piv is None:
                raise GroupError("matrix not invertible")
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                b[c], b[piv] = b[piv], b[c]
            ic = F.inv(a[c][c])
            a[c] = [F.mul(v, ic) for v in a[c]]
            b[c] = [F.mul(v, ic) for v in b[c]]
            for r in range(n):
                if r != c and a[r][c]:
                    f = a[r][c]
                    a[r] = [F.sub(v, F.mul(f, w)) for v, w in zip(a[r], a[c])]
                    b[r] = [F.sub(v, F.mul(f, w)) for v, w in zip(b[r], b[c])]
        return Mat(F, b)

    def __pow__(self, m: int) -> "Mat":
        base = self if m >= 0 else self.inverse()
        m = abs(m)
        out = Mat.identity(self.field, self.n)
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    def order(self) -> int:
        ident = Mat.identity(self.field, self.n)
        x = self
        o = 1
        while x != ident:
            x = x * self
            o += 1
        return o


class FiniteGroup:
    """An enumerated matrix group, frozen after construction."""

    def __init__(self, field, mats, codes, gen_indices, parent=None, to_parent=None):
        self.field = field
        self.n = mats.shape[1]
        mats.setflags(write=False)
        codes.setflags(write=False)
        self.mats = mats
        self.codes = codes
        self.order = mats.shape[0]
        self.identity_index = 0
        self.gen_indices = gen_indices
        self.parent = parent
        self.to_parent = to_parent
        self.sort_perm = np.argsort(codes, kind="stable").astype(np.int64)
        self.sorted_codes = codes[self.sort_perm]
        add_t, mul_t, neg_t, inv_t, frob_t = field.kernel_tables()
        self.tables = (add_t, mul_t, neg_t, inv_t, frob_t)
        if self.n <= 3:
            inv_mats = kernels.inverse_many(mats, add_t, mul_t, neg_t, inv_t)
        else:
            inv_mats = np.stack(
                [Mat(field, m).inverse().a for m in mats]
            ).astype(np.int16)
        self.inv = self.index_of_mats(inv_mats)
        if (self.inv < 0).any():
            raise GroupError("element set is not closed under inversion")
        self._inv_mats = None
        self._conjugacy = None
        self._fusion = None
        self._reduced_gens = None

    # -- basic access -----------------------------------------------------------

    def element(self, i: int) -> Mat:
        return Mat(self.field, self.mats[i])

    @property
    def inv_mats(self):
        if self._inv_mats is None:
            m = self.mats[self.inv]
            m.setflags(write=False)
            self._inv_mats = m
        return self._inv_mats

    def index_of_codes(self, codes) -> np.ndarray:
        return kernels.lookup_codes(
            np.asarray(codes, dtype=np.int64), self.sorted_codes, self.sort_perm
        )

    def index_of_mats(self, mats) -> np.ndarray:
        return self.index_of_codes(kernels.pack_codes(mats, self.field.q))

    def index_of(self, m: Mat) -> int:
        i = int(self.index_of_codes(np.array([m.key], dtype=np.int64))[0])
        if i < 0:
            raise GroupError("element is not in the group")
        return i

    def contains(self, m: Mat) -> bool:
        return int(self.index_of_codes(np.array([m.key], dtype=np.int64))[0]) >= 0

    def right_mul_index(self, b: Mat) -> np.ndarray:
        """Index array of x @ b over all stored x."""
        add_t, mul_t = self.tables[0], self.tables[1]
        return kernels.right_mul_index(
            self.mats, b.a, add_t, mul_t, self.field.q, self.sorted_codes, self.sort_perm
        )

    def conj_index(self, g: Mat) -> np.ndarray:
        """Index array of g @ x @ g^-1 over all stored x."""
        add_t, mul_t = self.tables[0], self.tables[1]
        return kernels.conj_index(
            self.mats, g.a, g.inverse().a, add_t, mul_t,
            self.field.q, self.sorted_codes, self.sort_perm,
        )

    # -- generators -----------------------------------------------------------------

    def reduced_generators(self) -> list[int]:
        """A small generating set, greedily harvested by ascending index."""
        if self._reduced_gens is not None:
            return self._reduced_gens
        candidates = self.gen_indices if self.gen_indices else range(self.order)
        gens: list[int] = []
        known = np.zeros(self.order, dtype=bool)
        known[self.identity_index] = True
        for idx in sorted(candidates):
            if not known[idx]:
                gens.append(int(idx))
                known = self._index_closure(gens)
                if known.all():
                    break
        self._reduced_gens = gens
        return gens

    def _index_closure(self, gen_idx: list[int]) -> np.ndarray:
        """Boolean membership of the subgroup generated by the given indices."""
        perms = [self.right_mul_index(self.element(i)) for i in gen_idx]
        known = np.zeros(self.order, dtype=bool)
        known[self.identity_index] = True
        frontier = np.array([self.identity_index], dtype=np.int64)
        while frontier.size:
            nxt = np.unique(np.concatenate([p[frontier] for p in perms]))
            nxt = nxt[~known[nxt]]
            known[nxt] = True
            frontier = nxt
        return known

    def conjugacy(self) -> "ConjugacyData":
        if self._conjugacy is None:
            self._conjugacy = conjugacy(self)
        return self._conjugacy

    def fusion(self) -> np.ndarray:
        if self.parent is None:
            raise GroupError("group has no parent to fuse into")
        if self._fusion is None:
            self._fusion = class_fusion(self)
        return self._fusion

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"FiniteGroup(order={self.order}, n={self.n}, q={self.field.q})"


class ConjugacyData:
    """Class partition with representatives, sizes and centralizer orders."""

    def __init__(self, group, class_of, reps, sizes, orders):
        self.group = group
        self.class_of = class_of
        self.reps = reps
        self.sizes = sizes
        self.orders = orders  # element order per class
        self.num_classes = len(reps)
        if sizes.sum() != group.order:
            raise GroupError("class sizes do not sum to the group order")
        if (group.order % sizes != 0).any():
            raise GroupError("orbit-stabilizer violated")
        self.centralizer_orders = group.order // sizes
        self.exponent = 1
        for o in orders:
            self.exponent = lcm(self.exponent, int(o))
        self.inverse_class = class_of[group.inv[reps]]
        self._power_maps: dict[int, np.ndarray] = {}

    def power_class_map(self, m: int) -> np.ndarray:
        """class of g -> class of g^m."""
        if m not in self._power_maps:
            G = self.group
            out = np.empty(self.num_classes, dtype=np.int64)
            for c, r in enumerate(self.reps):
                out[c] = self.class_of[G.index_of(G.element(int(r)) ** m)]
            self._power_maps[m] = out
        return self._power_maps[m]


def generate(gens: list[Mat], cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Breadth-first closure of the generators under multiplication."""
    if not gens:
        raise GroupError("need at least one generator")
    field = gens[0].field
    n = gens[0].n
    if field.q ** (n * n) >= 2**63:
        raise GroupError("matrix space too large for packed int64 codes")
    for g in gens:
        if g.field is not field:
            raise GroupError("generators live in different fields")
        if g.n != n:
            raise GroupError("generators have mixed sizes")
        if g.det() == 0:
            raise GroupError("generator is not invertible")
    add_t, mul_t = field.kernel_tables()[:2]
    q = field.q

    ident = Mat.identity(field, n)
    blocks = [ident.a[None, :, :]]
    code_list = [np.array([ident.key], dtype=np.int64)]
    known = {ident.key}
    count = 1
    gen_mats = [g.a for g in gens]
    frontier = blocks[0]
    while frontier.shape[0]:
        prods = np.concatenate(
            [kernels.matmul_many_one(frontier, ga, add_t, mul_t) for ga in gen_mats]
        )
        codes = kernels.pack_codes(prods, q)
        uniq, first = np.unique(codes, return_index=True)
        new_mask = np.fromiter((c not in known for c in uniq.tolist()), bool, len(uniq))
        if not new_mask.any():
            break
        new_codes = uniq[new_mask]
        new_mats = prods[first[new_mask]]
        count += len(new_codes)
        if count > cap:
            raise GroupError(f"closure exceeded the cap of {cap} elements")
        known.update(new_codes.tolist())
        blocks.append(new_mats)
        code_list.append(new_codes)
        frontier = new_mats

    mats = np.concatenate(blocks).astype(np.int16)
    codes = np.concatenate(code_list)
    G = FiniteGroup(field, mats, codes, gen_indices=None)
    G.gen_indices = [G.index_of(g) for g in gens]
    return G


def conjugacy(G: FiniteGroup) -> ConjugacyData:
    """Full class partition by orbit expansion over a reduced generating set."""
    gens = G.reduced_generators()
    if gens:
        perms = np.stack([G.conj_index(G.element(i)) for i in gens])
    else:  # trivial group
        perms = np.zeros((1, G.order), dtype=np.int64)
    if (perms < 0).any():
        raise GroupError("conjugation left the stored element set; group not closed")
    class_of = np.full(G.order, -1, dtype=np.int64)
    reps = []
    c = 0
    for start in range(G.order):
        if class_of[start] >= 0:
            continue
        class_of[start] = c
        frontier = np.array([start], dtype=np.int64)
        while frontier.size:
            nxt = np.unique(perms[:, frontier])
            nxt = nxt[class_of[nxt] < 0]
            class_of[nxt] = c
            frontier = nxt
        reps.append(start)
        c += 1
    reps = np.array(reps, dtype=np.int64)
    sizes = np.bincount(class_of, minlength=c).astype(np.int64)
    orders = np.array([G.element(int(r)).order() for r in reps], dtype=np.int64)
    return ConjugacyData(G, class_of, reps, sizes, orders)


def power_class_map(G: FiniteGroup, cdata: ConjugacyData, m: int) -> np.ndarray:
    return cdata.power_class_map(m)


def center(G: FiniteGroup, cdata: ConjugacyData) -> list[int]:
    """Element indices of the singleton classes, in ascending order."""
    singles = np.where(cdata.sizes == 1)[0]
    return sorted(int(cdata.reps[c]) for c in singles)


def _verify_subgroup(G: FiniteGroup, idx: np.ndarray) -> None:
    if idx.size == 0:
        raise GroupError("empty subset is not a subgroup")
    codes = np.sort(G.codes[idx])
    in_set = np.zeros(G.order, dtype=bool)
    in_set[idx] = True
    if not in_set[G.identity_index]:
        raise GroupError("subset does not contain the identity")
    if not in_set[G.inv[idx]].all():
        raise GroupError("subset is not closed under inversion")
    add_t, mul_t = G.tables[0], G.tables[1]
    sub_mats = G.mats[idx]
    if idx.size <= _PAIR_CHECK_LIMIT:
        for j in idx:
            prods = kernels.matmul_many_one(sub_mats, G.mats[j], add_t, mul_t)
            pc = kernels.pack_codes(prods, G.field.q)
            pos = np.searchsorted(codes, pc)
            pos = np.minimum(pos, len(codes) - 1)
            if not (codes[pos] == pc).all():
                raise GroupError("subset is not closed under multiplication")
    else:
        rng = np.random.default_rng(0x5EED)
        a = idx[rng.integers(0, idx.size, _SAMPLED_PAIRS)]
        b = idx[rng.integers(0, idx.size, _SAMPLED_PAIRS)]
        prods = kernels.matmul_pairs(G.mats[a], G.mats[b], add_t, mul_t)
        pc = kernels.pack_codes(prods, G.field.q)
        pos = np.searchsorted(codes, pc)
        pos = np.minimum(pos, len(codes) - 1)
        if not (codes[pos] == pc).all():
            raise GroupError("subset is not closed under multiplication (sampled)")


def subgroup(G: FiniteGroup, selector) -> FiniteGroup:
    """Subgroup from an index array, element list, or predicate on Mat.

    Elements are ordered by ascending parent index; closure under product
    and inverse is verified (exhaustively up to 4096 elements, sampled
    above that).
    """
    if callable(selector):
        idx = np.array(
            [i for i in range(G.order) if selector(G.element(i))], dtype=np.int64
        )
    else:
        sel = list(selector)
        if sel and isinstance(sel[0], Mat):
            idx = np.array(sorted(G.index_of(m) for m in sel), dtype=np.int64)
        else:
            idx = np.unique(np.asarray(sel, dtype=np.int64))
    _verify_subgroup(G, idx)
    mats = G.mats[idx].copy()
    codes = G.codes[idx].copy()
    return FiniteGroup(G.field, mats, codes, gen_indices=None, parent=G, to_parent=idx)


def class_fusion(H: FiniteGroup) -> np.ndarray:
    """H-class index -> parent-class index, via the embedding."""
    G = H.parent
    hc = H.conjugacy()
    gc = G.conjugacy()
    return gc.class_of[H.to_parent[hc.reps]]


def is_normal_in(N: FiniteGroup, P: FiniteGroup) -> bool:
    """Both must be subgroups of the same parent."""
    if N.parent is not P.parent or N.parent is None:
        raise GroupError("normality needs two subgroups of one parent")
    G = N.parent
    in_n = np.zeros(G.order, dtype=bool)
    in_n[N.to_parent] = True
    for pi in P.reduced_generators():
        g = G.element(int(P.to_parent[pi]))
        conj = G.conj_index(g)[N.to_parent]
        if not in_n[conj].all():
            return False
    return True
