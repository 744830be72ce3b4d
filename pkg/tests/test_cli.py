import csv
import io
import json
import os

import pytest

from liechar.cli import main


def run(tmp_path, *args):
    return main(list(args) + ["--cache-dir", str(tmp_path)])


def test_build_and_cache_hit(tmp_path, capsys):
    assert run(tmp_path, "build", "--family", "u", "--n", "2", "--q", "3") == 0
    out1 = capsys.readouterr().out
    assert "|G|=96" in out1 and "[built]" in out1
    assert run(tmp_path, "build", "--family", "u", "--n", "2", "--q", "3") == 0
    out2 = capsys.readouterr().out
    assert "[cache hit]" in out2
    h1 = out1.split("sha256=")[1].strip()
    h2 = out2.split("sha256=")[1].strip()
    assert h1 == h2


def test_chartab_and_verify_exit_codes(tmp_path, capsys):
    assert run(tmp_path, "chartab", "--family", "gl", "--n", "2", "--q", "3") == 0
    out = capsys.readouterr().out
    assert "sum deg^2 = 48" in out and "orthogonality=pass" in out
    assert (
        run(tmp_path, "verify", "--family", "gl", "--n", "2", "--q", "3",
            "--theorem", "fs-dual") == 0
    )
    out = capsys.readouterr().out
    assert "all checks pass" in out


def test_verify_unitary_u23(tmp_path, capsys):
    rc = run(tmp_path, "verify", "--family", "u", "--n", "2", "--q", "3",
             "--theorem", "unitary")
    assert rc == 0
    jpath = tmp_path / "u2q3" / "verify-unitary-seed0.json"
    blob = json.loads(jpath.read_text())
    rep = blob["payload"]
    assert rep["all_pass"]
    assert not rep["z_is_identity"] and not rep["z_is_minus_identity"]
    md = (tmp_path / "u2q3" / "verify-unitary-seed0.md").read_text()
    assert "unitary-indicator" in md


def test_verify_report_determinism(tmp_path, capsys):
    args = ("verify", "--family", "u", "--n", "2", "--q", "2", "--seed", "5")
    assert run(tmp_path, *args) == 0
    jpath = tmp_path / "u2q2" / "verify-all-seed5.json"
    first = jpath.read_bytes()
    jpath.unlink()
    assert run(tmp_path, *args) == 0
    assert jpath.read_bytes() == first


def test_usage_errors_exit_two(tmp_path):
    with pytest.raises(SystemExit) as e:
        main(["build", "--family", "sp", "--n", "2", "--q", "3"])
    assert e.value.code == 2
    # unitary theorem for GL is a usage error
    with pytest.raises(SystemExit) as e:
        run(tmp_path, "verify", "--family", "gl", "--n", "2", "--q", "3",
            "--theorem", "unitary")
    assert e.value.code == 2
    # outside the roster without --allow-large
    with pytest.raises(SystemExit) as e:
        run(tmp_path, "build", "--family", "u", "--n", "3", "--q", "4")
    assert e.value.code == 2


def test_corrupted_cache_exit_one(tmp_path, capsys):
    assert run(tmp_path, "build", "--family", "u", "--n", "2", "--q", "2") == 0
    gpath = tmp_path / "u2q2" / "group.json"
    blob = json.loads(gpath.read_text())
    blob["payload"]["order"] = 19
    gpath.write_text(json.dumps(blob))
    rc = run(tmp_path, "build", "--family", "u", "--n", "2", "--q", "2")
    assert rc == 1
    assert "checksum" in capsys.readouterr().err


def test_injected_sign_flip_fails_orthogonality(tmp_path, capsys):
    assert run(tmp_path, "chartab", "--family", "u", "--n", "2", "--q", "2") == 0
    capsys.readouterr()
    tpath = tmp_path / "u2q2" / "table-seed0.json"
    blob = json.loads(tpath.read_text())
    # flip the sign of one nonzero non-identity value and re-seal the digest
    from liechar.cache import digest

    row = blob["payload"]["irreducibles"][-1]
    target = next(
        c for c in range(1, len(row)) if any(a != 0 for a, _ in row[c]["coeffs"])
    )
    row[target]["coeffs"] = [[-a, b] for a, b in row[target]["coeffs"]]
    blob["digest"] = digest(blob["payload"])
    tpath.write_text(json.dumps(blob))
    rc = run(tmp_path, "chartab", "--family", "u", "--n", "2", "--q", "2")
    assert rc == 1
    err = capsys.readouterr().err
    assert "orthogonality" in err


def test_report_roundtrip_csv(tmp_path, capsys):
    assert run(tmp_path, "verify", "--family", "u", "--n", "2", "--q", "3") == 0
    capsys.readouterr()
    assert run(tmp_path, "report", "--family", "u", "--n", "2", "--q", "3",
               "--format", "csv") == 0
    text = capsys.readouterr().out
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["chi", "degree", "eps", "omega_z", "real", "regular",
                       "semisimple", "dual"]
    # round-trip: re-serialize parses back to identical values
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    assert list(csv.reader(io.StringIO(buf.getvalue()))) == rows
    # the Steinberg row of U(2,3): degree 3 = |G|_p, eps 1, omega(z) 1,
    # regular but not semisimple (p divides the Steinberg degree)
    st = [r for r in rows[1:] if r[1] == "3" and r[2] == "1"]
    assert st
    assert all(r[3] == "1" and r[4] == "yes" and r[5] == "yes" and r[6] == "no" for r in st)


def test_report_missing_artifacts_is_actionable(tmp_path, capsys):
    rc = run(tmp_path, "report", "--family", "u", "--n", "2", "--q", "5")
    assert rc == 1
    err = capsys.readouterr().err
    assert "liechar verify --family u --n 2 --q 5" in err


def test_report_md_contains_steinberg_row(tmp_path, capsys):
    assert run(tmp_path, "verify", "--family", "u", "--n", "2", "--q", "3") == 0
    capsys.readouterr()
    assert run(tmp_path, "report", "--family", "u", "--n", "2", "--q", "3",
               "--format", "md") == 0
    out = capsys.readouterr().out
    lines = [l for l in out.splitlines() if l.startswith("|")]
    assert any("| 3 | 1 | 1 | yes | yes | no |" in l for l in lines)
