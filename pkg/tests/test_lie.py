import numpy as np
import pytest

from liechar.chartab import dixon_table, orthogonality_check
from liechar.classfun import (
    central_character,
    decompose,
    fs_indicator,
    induce,
    inner_product,
    is_real_valued,
    trivial_character,
)
from liechar.cyclo import Cyclotomic
from liechar.field import make_field
from liechar.group import Mat, center, generate
from liechar.lie import (
    LieError,
    build_gl,
    build_u,
    central_element_z,
    duality,
    gelfand_graev,
    gl_order,
    nondegenerate_twists,
    prasad_element,
    regular_characters,
    regular_unipotent_average,
    regular_unipotent_classes,
    rho_stable_subsets,
    semisimple_characters,
    standard_parabolic,
    u_order,
    verify_frobenius_stability,
    verify_theorems,
)

_CACHE = {}


def built(family, n, q):
    key = (family, n, q)
    if key not in _CACHE:
        data = build_gl(n, q) if family == "gl" else build_u(n, q)
        _CACHE[key] = (data, dixon_table(data.group))
    return _CACHE[key]


# -- constructors ----------------------------------------------------------------


@pytest.mark.parametrize(
    "n,q,order", [(2, 2, 6), (2, 3, 48), (3, 2, 168)]
)
def test_build_gl_orders(n, q, order):
    data, _ = built("gl", n, q)
    assert data.group.order == order == gl_order(n, q)


@pytest.mark.parametrize(
    "n,q,order", [(2, 2, 18), (2, 3, 96), (3, 2, 648)]
)
def test_build_u_orders(n, q, order):
    data, _ = built("u", n, q)
    assert data.group.order == order == u_order(n, q)


@pytest.mark.parametrize("q", [2, 3])
def test_u2_matches_fixed_point_enumeration(q):
    # oracle: enumerate GL(2, q^2) and filter the unitary fixed points
    data, _ = built("u", 2, q)
    E = data.field
    gens = [Mat(E, [[E.gen, 0], [0, 1]]), Mat(E, [[1, 1], [0, 1]]), Mat(E, [[0, 1], [1, 0]])]
    big = generate(gens)
    assert big.order == gl_order(2, q * q)
    fixed = set()
    for i in range(big.order):
        g = big.element(i)
        inv = g.inverse()
        out = np.zeros((2, 2), dtype=np.int16)
        for r in range(2):
            for c in range(2):
                out[r, c] = E.pow(int(inv.a[c, r]), q)
        m = Mat(E, out[::-1, ::-1])
        if m == g:
            fixed.add(g.key)
    assert fixed == set(data.group.codes.tolist())


def test_u_frobenius_stability_batch():
    for q in (2, 3):
        data, _ = built("u", 2, q)
        assert verify_frobenius_stability(data)
    data, _ = built("u", 3, 2)
    assert verify_frobenius_stability(data)


def test_u_center_is_scalars_of_norm_one():
    # Z(U(n,q)) = {alpha I : alpha^(q+1) = 1}, so q + 1 elements
    for n, q in [(2, 2), (2, 3), (3, 2)]:
        data, _ = built("u", n, q)
        E = data.field
        z = center(data.group, data.group.conjugacy())
        assert len(z) == q + 1
        for i in z:
            m = data.group.mats[i]
            alpha = int(m[0, 0])
            assert (m == np.diag([alpha] * n).astype(np.int16)).all()
            assert E.pow(alpha, q + 1) == 1


def test_standard_subgroup_orders():
    data, _ = built("gl", 2, 3)
    assert data.T0.order == 4 and data.N0.order == 3 and data.B0.order == 12
    data, _ = built("u", 2, 3)
    assert data.T0.order == 8 and data.N0.order == 3 and data.B0.order == 24
    data, _ = built("u", 3, 2)
    assert data.T0.order == 9 and data.N0.order == 8 and data.B0.order == 72


def test_build_gl_cap():
    with pytest.raises(LieError):
        build_gl(3, 3, cap=1000)


# -- parabolic machinery ---------------------------------------------------------------


def test_rho_stable_subsets_gl3():
    data, _ = built("gl", 3, 2)
    subsets = rho_stable_subsets(data)
    assert len(subsets) == 4
    assert sorted(o for _, o in subsets) == [0, 1, 1, 2]


def test_rho_stable_subsets_u3():
    data, _ = built("u", 3, 2)
    subsets = rho_stable_subsets(data)
    assert [(sorted(J), o) for J, o in subsets] == [([], 0), ([1, 2], 1)]


def test_rho_stable_subsets_u2():
    data, _ = built("u", 2, 3)
    subsets = rho_stable_subsets(data)
    assert [(sorted(J), o) for J, o in subsets] == [([], 0), ([1], 1)]


def test_standard_parabolic_extremes():
    data, _ = built("gl", 2, 3)
    P, N = standard_parabolic(data, frozenset())
    assert P is data.B0 and N is data.N0
    Pf, Nf = standard_parabolic(data, frozenset({1}))
    assert Pf.order == data.group.order and Nf.order == 1


def test_standard_parabolic_gl32_block():
    data, _ = built("gl", 3, 2)
    P, N = standard_parabolic(data, frozenset({1}))
    # block-upper-triangular of shape (2,1): |GL(2,2)| * |GL(1,2)| * q^2 = 24
    assert P.order == 24
    assert data.group.order // P.order == 7
    assert N.order == 4  # q^2 entries in the (2,1)-block corner


def test_standard_parabolic_rejects_unstable_J():
    data, _ = built("u", 3, 2)
    with pytest.raises(LieError):
        standard_parabolic(data, frozenset({1}))


# -- duality ---------------------------------------------------------------------------


def test_duality_trivial_gl22_by_hand():
    # two-term sum: ind_B(1) - 1 = the degree-2 irreducible, sign +1
    data, table = built("gl", 2, 2)
    triv = trivial_character(data.group)
    byhand = induce(trivial_character(data.B0), data.group) - triv
    res = duality(data, triv)
    assert res.sign == 1
    assert res.virtual == byhand
    assert res.normalized.degree() == 2
    assert res.normalized in table.irreducibles


@pytest.mark.parametrize("key", [("gl", 2, 2), ("gl", 2, 3), ("u", 2, 3), ("u", 3, 2)])
def test_duality_involution(key):
    data, table = built(*key)
    for chi in table.irreducibles:
        assert duality(data, duality(data, chi).virtual).virtual == chi


def test_duality_trivial_gl23_degree_is_sylow_p():
    data, _ = built("gl", 2, 3)
    res = duality(data, trivial_character(data.group))
    assert res.normalized.degree() == 3  # |GL(2,3)|_3


def test_duality_isometry_gl23():
    data, table = built("gl", 2, 3)
    duals = [duality(data, chi).virtual for chi in table.irreducibles]
    r = len(duals)
    for i in range(r):
        for j in range(i, r):
            assert inner_product(duals[i], duals[j]) == (1 if i == j else 0)


# -- Gelfand-Graev -----------------------------------------------------------------------


def test_gelfand_graev_gl22():
    data, table = built("gl", 2, 2)
    gamma = gelfand_graev(data)
    assert gamma.degree() == 3  # [G : N0]
    reg = regular_characters(data, table)
    assert len(reg) == 2
    assert inner_product(gamma, gamma).as_rational() == len(reg)
    assert decompose(gamma, table).count(1) == len(reg)


@pytest.mark.parametrize("key", [("gl", 2, 3), ("u", 2, 2), ("u", 2, 3), ("u", 3, 2)])
def test_gelfand_graev_degree_and_multiplicity_free(key):
    data, table = built(*key)
    gamma = gelfand_graev(data)
    assert gamma.degree() == data.group.order // data.N0.order
    mults = decompose(gamma, table)
    assert set(mults) <= {0, 1}
    # <Gamma, Gamma> equals the number of regular characters
    assert inner_product(gamma, gamma).as_rational() == mults.count(1)


def test_gelfand_graev_choice_independence():
    data, _ = built("u", 2, 3)
    twists = nondegenerate_twists(data, 2)
    assert len(twists) == 2 and twists[0] != twists[1]
    assert gelfand_graev(data, twists[0]) == gelfand_graev(data, twists[1])


def test_gelfand_graev_untwisted_character_is_degenerate_for_u():
    # the plain trace character vanishes on the trace-zero line, so the
    # smallest nondegenerate twist is not forced to be 1
    data, _ = built("u", 2, 3)
    from liechar.lie import _is_nondegenerate, _linear_character_values

    lam1 = _linear_character_values(data, 1)
    assert not _is_nondegenerate(data, lam1)


def test_regular_characters_steinberg_and_trivial():
    data, table = built("gl", 2, 3)
    reg = regular_characters(data, table)
    st = duality(data, trivial_character(data.group)).normalized
    assert table.index_of(st) in reg
    assert table.index_of(trivial_character(data.group)) not in reg
    assert inner_product(gelfand_graev(data), trivial_character(data.group)).is_zero()


def test_semisimple_gl23_degree_criterion():
    data, table = built("gl", 2, 3)
    ss = semisimple_characters(data, table)
    assert ss == tuple(i for i, d in enumerate(table.degrees) if d % 3 != 0)
    assert table.index_of(trivial_character(data.group)) in ss
    reg = regular_characters(data, table)
    assert len(reg) == len(ss)


# -- regular unipotent classes -------------------------------------------------------------


@pytest.mark.parametrize("n,q", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_regular_unipotent_centralizer_gl(n, q):
    if (n, q) == (3, 3):
        data = build_gl(3, 3)  # order 11232; not part of the fixed roster
    else:
        data, _ = built("gl", n, q)
    cls = regular_unipotent_classes(data)
    assert len(cls) == 1
    cd = data.group.conjugacy()
    # single Jordan block: centralizer order q^(n-1) * (q-1)
    assert int(cd.centralizer_orders[cls[0]]) == q ** (n - 1) * (q - 1)


def test_regular_unipotent_average_trivial_and_sign():
    data, table = built("gl", 2, 3)
    assert regular_unipotent_average(data, trivial_character(data.group)) == 1
    ss = semisimple_characters(data, table)
    for i, chi in enumerate(table.irreducibles):
        nz = not regular_unipotent_average(data, chi).is_zero()
        assert nz == (i in ss)


# -- Prasad element and the closed-form z ----------------------------------------------------


def test_prasad_even_q_is_identity():
    for key in [("gl", 2, 2), ("u", 2, 2), ("u", 3, 2)]:
        data, _ = built(*key)
        s, z = prasad_element(data)
        ident = Mat.identity(data.field, data.n)
        assert s == ident and z == ident


def test_prasad_gl23():
    data, _ = built("gl", 2, 3)
    s, z = prasad_element(data)
    assert z == Mat.identity(data.field, 2)
    F = data.field
    # alternating pattern diag(t, -t)
    assert int(s.a[1, 1]) == F.neg(int(s.a[0, 0]))


def test_prasad_u23_case3():
    data, _ = built("u", 2, 3)
    s, z = prasad_element(data)
    E = data.field
    t = int(s.a[0, 0])
    assert int(s.a[1, 1]) == E.neg(t)
    assert E.pow(t, 4) == E.neg(1)  # t^(q+1) = -1
    beta = E.mul(t, t)
    assert z == Mat(E, [[beta, 0], [0, beta]])
    zc = central_element_z("u", 2, 3)
    assert z == zc
    # the paper's novel case: z is a non-(+-I) central element
    assert zc != Mat.identity(E, 2)
    assert zc != Mat(E, np.diag([E.neg(1)] * 2).astype(np.int16))


def test_prasad_u25_case2():
    data, _ = built("u", 2, 5)
    s, z = prasad_element(data)
    E = data.field
    g = int(s.a[0, 0])
    assert E.mul(g, g) == E.neg(1)  # gamma^2 = -1
    assert int(s.a[1, 1]) == E.neg(g)
    minus_i = Mat(E, np.diag([E.neg(1)] * 2).astype(np.int16))
    assert z == minus_i
    assert central_element_z("u", 2, 5) == minus_i


def test_central_element_z_closed_forms():
    E = make_field(2, 2)
    assert central_element_z("u", 3, 2) == Mat.identity(E, 3)
    with pytest.raises(LieError):
        central_element_z("gl", 2, 3)


@pytest.mark.slow
def test_prasad_u33_odd_n_odd_q():
    # n odd, q odd: s = diag(-1, 1, -1) pattern, z = I
    data = build_u(3, 3)
    s, z = prasad_element(data)
    E = data.field
    assert z == Mat.identity(E, 3)
    assert int(s.a[1, 1]) == E.neg(int(s.a[0, 0]))
    assert int(s.a[2, 2]) == int(s.a[0, 0])
    assert E.mul(int(s.a[0, 0]), int(s.a[0, 0])) == 1  # entries are +-1


# -- theorem verification ----------------------------------------------------------------


@pytest.mark.parametrize(
    "key",
    [("gl", 2, 2), ("gl", 2, 3), ("u", 2, 2), ("u", 2, 3), ("u", 3, 2)],
)
def test_verify_theorems_all(key):
    data, table = built(*key)
    report = verify_theorems(data, table, "all")
    assert report["all_pass"], [c for c in report["checks"] if not c["pass"]]


def test_verify_unitary_case1_values():
    # U(3,2): every real-valued regular or semisimple character has eps = 1
    data, table = built("u", 3, 2)
    reg = regular_characters(data, table)
    ss = semisimple_characters(data, table)
    hit = 0
    for i in set(reg) | set(ss):
        chi = table.irreducibles[i]
        if is_real_valued(chi):
            assert fs_indicator(chi, irreducible=True) == 1
            hit += 1
    assert hit > 0


def test_verify_unitary_case3_values():
    # U(2,3): eps(chi) = omega_chi(beta I) on real-valued regular/semisimple
    data, table = built("u", 2, 3)
    z = central_element_z("u", 2, 3)
    zi = data.group.index_of(z)
    reg = set(regular_characters(data, table))
    ss = set(semisimple_characters(data, table))
    hit = symp = 0
    for i in reg | ss:
        chi = table.irreducibles[i]
        if is_real_valued(chi):
            eps = fs_indicator(chi, irreducible=True)
            assert central_character(chi, zi) == eps
            hit += 1
            if eps == -1:
                symp += 1
    assert hit > 0 and symp > 0  # the case genuinely exercises eps = -1


def test_theorem_selector_subsets():
    data, table = built("gl", 2, 2)
    rep = verify_theorems(data, table, "fs-dual")
    names = {c["name"] for c in rep["checks"]}
    assert names == {"duality-involution", "duality-isometry", "steinberg", "fs-preservation"}
    with pytest.raises(LieError):
        verify_theorems(data, table, "bogus")


def test_center_contained_in_every_parabolic():
    for key in [("gl", 3, 2), ("u", 3, 2)]:
        data, _ = built(*key)
        zs = center(data.group, data.group.conjugacy())
        for J, _o in rho_stable_subsets(data):
            P, _n = standard_parabolic(data, J)
            pset = set(P.to_parent.tolist())
            assert all(z in pset for z in zs)


def test_torus_conjugation_acts_linearly_on_fused_coordinate():
    # U(3,q): conjugating x(a, c) by diag(t1, t2, t3) scales a by t1/t2
    data, _ = built("u", 3, 2)
    G, E = data.group, data.field
    n0 = [G.element(int(i)) for i in data.N0.to_parent]
    for ti in range(data.T0.order):
        t = G.element(int(data.T0.to_parent[ti]))
        scale = E.div(int(t.a[0, 0]), int(t.a[1, 1]))
        for x in n0[:5]:
            y = t * x * t.inverse()
            assert int(y.a[0, 1]) == E.mul(scale, int(x.a[0, 1]))
