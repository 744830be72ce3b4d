"""Acceptance suite: exhaustive exactness on the fixed roster.

Every criterion is exact (no tolerances); runtime budgets are asserted
where stated.  One line per criterion is printed; run with `pytest
tests/test_acceptance.py -v -s` to see them.
"""

import json
import time

import numpy as np
import pytest

from liechar import kernels
from liechar.chartab import dixon_table, orthogonality_check
from liechar.classfun import (
    central_character,
    decompose,
    fs_indicator,
    inner_product,
    is_real_valued,
    real_basis_decomposition,
    trivial_character,
    truncate,
    truncate_by_projection,
)
from liechar.cli import main as cli_main
from liechar.group import Mat, center
from liechar.lie import (
    build_gl,
    build_u,
    central_element_z,
    duality,
    gelfand_graev,
    prasad_element,
    regular_characters,
    rho_stable_subsets,
    semisimple_characters,
    semisimple_criteria,
    standard_parabolic,
    verify_theorems,
)

ROSTER = [
    ("gl", 2, 2, 6),
    ("gl", 2, 3, 48),
    ("gl", 3, 2, 168),
    ("gl", 2, 5, 480),
    ("u", 2, 2, 18),
    ("u", 2, 3, 96),
    ("u", 2, 5, 720),
    ("u", 3, 2, 648),
]

_STATE = {}


def roster():
    if not _STATE:
        for fam, n, q, order in ROSTER:
            t0 = time.time()
            data = build_gl(n, q) if fam == "gl" else build_u(n, q)
            build_s = time.time() - t0
            t0 = time.time()
            table = dixon_table(data.group)
            table_s = time.time() - t0
            _STATE[(fam, n, q)] = {
                "data": data,
                "table": table,
                "order": order,
                "build_s": build_s,
                "table_s": table_s,
            }
    return _STATE


def _announce(num, ok, text):
    print(f"ACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} - {text}")


def criterion(num, text):
    def deco(fn):
        def wrapped():
            try:
                fn()
            except BaseException:
                _announce(num, False, text)
                raise
            _announce(num, True, text)

        wrapped.__name__ = fn.__name__
        return wrapped

    return deco


@criterion(1, "group orders match closed forms; each build < 30 s")
def test_criterion_01_orders():
    for (fam, n, q), st in roster().items():
        assert st["data"].group.order == st["order"], (fam, n, q)
        assert st["build_s"] < 30.0, (fam, n, q, st["build_s"])


@criterion(2, "exact row/column orthogonality and sum deg^2 = |G|; each table < 60 s")
def test_criterion_02_orthogonality():
    total = 0.0
    for (fam, n, q), st in roster().items():
        table = st["table"]
        assert sum(d * d for d in table.degrees) == st["order"]
        rep = orthogonality_check(table)
        assert rep.ok, (fam, n, q, rep.violations[:3])
        assert st["table_s"] < 60.0, (fam, n, q, st["table_s"])
        total += st["table_s"]
    assert total < 600.0


@criterion(3, "involution count: sum of eps(chi) chi(1) equals #{g : g^2 = 1}")
def test_criterion_03_involution_count():
    for (fam, n, q), st in roster().items():
        table = st["table"]
        lhs = sum(
            e * d for e, d in zip(table.indicators(), table.degrees)
        )
        # independent oracle: square every element with the batch kernels
        G = st["data"].group
        add_t, mul_t = G.tables[0], G.tables[1]
        sq = kernels.matmul_pairs(G.mats, G.mats, add_t, mul_t)
        rhs = int((kernels.pack_codes(sq, G.field.q) == G.codes[0]).sum())
        assert lhs == rhs, (fam, n, q, lhs, rhs)


@criterion(4, "duality is an order-2 isometry; dual of trivial has degree |G|_p")
def test_criterion_04_duality():
    for (fam, n, q), st in roster().items():
        data, table = st["data"], st["table"]
        duals = [duality(data, chi) for chi in table.irreducibles]
        st["duals"] = duals
        for chi, d in zip(table.irreducibles, duals):
            assert duality(data, d.virtual).virtual == chi, (fam, n, q)
        r = len(duals)
        for i in range(r):
            for j in range(i, r):
                want = 1 if i == j else 0
                assert inner_product(duals[i].virtual, duals[j].virtual) == want
        triv = table.index_of(trivial_character(data.group))
        stb = duals[triv]
        p_part = 1
        o = st["order"]
        while o % data.p == 0:
            p_part *= data.p
            o //= data.p
        assert stb.sign == 1
        assert int(stb.normalized.degree()) == p_part, (fam, n, q)


@criterion(5, "Frobenius-Schur indicators are preserved by duality, exhaustively")
def test_criterion_05_fs_preservation():
    for (fam, n, q), st in roster().items():
        table = st["table"]
        eps = table.indicators()
        for i, d in enumerate(st["duals"]):
            j = table.index_of(d.normalized)
            assert eps[i] == eps[j], (fam, n, q, i)


@criterion(6, "central characters are preserved by duality, all central elements")
def test_criterion_06_central_preservation():
    for (fam, n, q), st in roster().items():
        data, table = st["data"], st["table"]
        zs = center(data.group, table.cdata)
        for i, d in enumerate(st["duals"]):
            j = table.index_of(d.normalized)
            for z in zs:
                assert central_character(table.irreducibles[i], z) == central_character(
                    table.irreducibles[j], z
                ), (fam, n, q, i, z)


@criterion(7, "Gamma multiplicity-free; |regular| = |semisimple|; criteria agree; "
             "orthogonal/symplectic counts match")
def test_criterion_07_gelfand_graev():
    for (fam, n, q), st in roster().items():
        data, table = st["data"], st["table"]
        gamma = gelfand_graev(data)
        mults = decompose(gamma, table)
        assert set(mults) <= {0, 1}, (fam, n, q)
        reg = regular_characters(data, table)
        by_dual, by_degree, by_average = semisimple_criteria(data, table)
        assert by_dual == by_degree == by_average, (fam, n, q)
        ss = by_dual
        assert len(reg) == len(ss), (fam, n, q)
        steinberg = duality(data, trivial_character(data.group)).normalized
        assert table.index_of(steinberg) in reg, (fam, n, q)
        eps = table.indicators()
        for sgn in (1, -1):
            assert sum(1 for i in reg if eps[i] == sgn) == sum(
                1 for i in ss if eps[i] == sgn
            ), (fam, n, q, sgn)
        st["regular"], st["semisimple"] = reg, ss


@criterion(8, "unitary indicator theorem: case (1) on U(3,2)/U(2,2), case (2) on "
             "U(2,5), case (3) on U(2,3) with z = beta I != +-I")
def test_criterion_08_unitary():
    for (fam, n, q) in [("u", 3, 2), ("u", 2, 2), ("u", 2, 5), ("u", 2, 3)]:
        st = roster()[(fam, n, q)]
        data, table = st["data"], st["table"]
        z = central_element_z("u", n, q)
        zi = data.group.index_of(z)
        eps = table.indicators()
        checked = 0
        for i in sorted(set(st["regular"]) | set(st["semisimple"])):
            chi = table.irreducibles[i]
            if not is_real_valued(chi):
                continue
            checked += 1
            if n % 2 == 1 or q % 2 == 0:
                assert eps[i] == 1, (fam, n, q, i)
            assert central_character(chi, zi) == eps[i], (fam, n, q, i)
        assert checked > 0, (fam, n, q)
    # the novel non-central-sign case is exhibited concretely
    E = roster()[("u", 2, 3)]["data"].field
    z = central_element_z("u", 2, 3)
    assert z != Mat.identity(E, 2)
    assert z != Mat(E, np.diag([E.neg(1)] * 2).astype(np.int16))


@criterion(9, "searched torus element s satisfies s^2 = closed-form z; s = 1 for even q")
def test_criterion_09_prasad_consistency():
    for (fam, n, q), st in roster().items():
        if fam != "u":
            continue
        data = st["data"]
        s, z = prasad_element(data)
        assert z == central_element_z("u", n, q), (fam, n, q)
        if q % 2 == 0:
            assert s == Mat.identity(data.field, n), (fam, n, q)


@criterion(10, "truncation via the averaging formula equals restrict-then-project "
              "for all irreducibles and all (P_J, N_J); orthogonal truncations certify")
def test_criterion_10_truncation_equivalence():
    for (fam, n, q), st in roster().items():
        data, table = st["data"], st["table"]
        eps = table.indicators()
        for J, _orb in rho_stable_subsets(data):
            P, N = standard_parabolic(data, J)
            ptable = data.parabolic_table(J)
            for i, chi in enumerate(table.irreducibles):
                t1 = truncate(chi, P, N)
                t2 = truncate_by_projection(chi, P, N, ptable)
                assert t1 == t2, (fam, n, q, sorted(J), i)
                if eps[i] == 1:
                    cert = real_basis_decomposition(t1, ptable)
                    assert cert.ok, (fam, n, q, sorted(J), i, cert.witness)


@criterion(11, "determinism: same seed gives byte-identical reports; different "
              "seeds give equal tables")
def test_criterion_11_determinism(tmp_path_factory=None):
    import tempfile

    with tempfile.TemporaryDirectory() as d1, tempfile.TemporaryDirectory() as d2:
        args = ["verify", "--family", "u", "--n", "2", "--q", "3", "--theorem", "all"]
        assert cli_main(args + ["--cache-dir", d1]) == 0
        assert cli_main(args + ["--cache-dir", d2]) == 0
        b1 = open(f"{d1}/u2q3/verify-all-seed0.json", "rb").read()
        b2 = open(f"{d2}/u2q3/verify-all-seed0.json", "rb").read()
        assert b1 == b2
    for key in [("gl", 2, 3), ("u", 2, 3)]:
        st = roster()[key]
        t_a = dixon_table(st["data"].group, seed=1)
        t_b = dixon_table(st["data"].group, seed=2)
        assert set(t_a.irreducibles) == set(t_b.irreducibles)


def test_roster_reports_all_pass():
    # the full per-group verification reports, as the CLI would emit them
    for (fam, n, q), st in roster().items():
        rep = verify_theorems(st["data"], st["table"], "all")
        assert rep["all_pass"], (fam, n, q, [c for c in rep["checks"] if not c["pass"]])
