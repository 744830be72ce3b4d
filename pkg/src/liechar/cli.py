"""Batch front door: build groups, compute cached tables, verify theorems,
render reports.

Exit codes: 0 all good, 1 verification or integrity failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys

from .cache import (
    CacheError,
    check_group_payload,
    group_payload,
    read_payload,
    table_from_payload,
    table_payload,
    write_payload,
)
from .chartab import dixon_table, orthogonality_check
from .group import GroupError
from .lie import (
    LARGE_ROSTER,
    SUPPORTED_ROSTER,
    LieError,
    build_gl,
    build_u,
    verify_theorems,
)

THEOREMS = ("fs-dual", "central-dual", "fs-central", "unitary", "all")


def default_cache_dir() -> str:
    return os.environ.get("LIECHAR_CACHE_DIR", ".liechar-cache")


def _group_dir(args) -> str:
    return os.path.join(args.cache_dir, f"{args.family}{args.n}q{args.q}")


def _build_data(args):
    if args.family == "gl":
        return build_gl(args.n, args.q)
    return build_u(args.n, args.q)


def _check_roster(args, parser):
    key = (args.family, args.n, args.q)
    if key in SUPPORTED_ROSTER:
        return
    if args.allow_large:
        return
    if key in LARGE_ROSTER:
        parser.error(
            f"{args.family}({args.n},{args.q}) is large; pass --allow-large to build it"
        )
    parser.error(
        f"{args.family}({args.n},{args.q}) is outside the supported roster; "
        "pass --allow-large to override"
    )


def _load_or_build_group(args) -> tuple[object, str]:
    """Returns (LieGroupData, group digest); builds and caches on miss."""
    path = os.path.join(_group_dir(args), "group.json")
    data = _build_data(args)
    payload = group_payload(args.family, args.n, args.q, data.group)
    if os.path.exists(path):
        cached, h = read_payload(path)
        check_group_payload(cached, args.family, args.n, args.q)
        if cached != payload:
            raise CacheError(f"{path}: cached group disagrees with a fresh rebuild")
        return data, h
    h = write_payload(path, payload)
    return data, h


def cmd_build(args, parser) -> int:
    _check_roster(args, parser)
    path = os.path.join(_group_dir(args), "group.json")
    had_cache = os.path.exists(path)
    data, h = _load_or_build_group(args)
    cd = data.group.conjugacy()
    tag = "cache hit" if had_cache else "built"
    print(
        f"{args.family.upper()}({args.n},{args.q}) |G|={data.group.order} "
        f"classes={cd.num_classes} exponent={cd.exponent} [{tag}] sha256={h[:16]}"
    )
    return 0


def _load_or_build_table(args, data, group_digest):
    path = os.path.join(_group_dir(args), f"table-seed{args.seed}.json")
    if os.path.exists(path):
        payload, _ = read_payload(path)
        table = table_from_payload(payload, data.group, group_digest)
        cached = True
    else:
        table = dixon_table(data.group, seed=args.seed)
        write_payload(path, table_payload(table, group_digest))
        cached = False
    report = orthogonality_check(table)
    if not report.ok:
        for kind, i, j, msg in report.violations[:10]:
            print(f"orthogonality violation ({kind}, {i}, {j}): {msg}", file=sys.stderr)
        raise CacheError("character table failed the orthogonality check")
    return table, cached


def cmd_chartab(args, parser) -> int:
    _check_roster(args, parser)
    data, h = _load_or_build_group(args)
    table, cached = _load_or_build_table(args, data, h)
    tag = "cache hit" if cached else "computed"
    print(
        f"{args.family.upper()}({args.n},{args.q}) table: {len(table.irreducibles)} "
        f"irreducibles, sum deg^2 = {sum(d * d for d in table.degrees)}, "
        f"prime={table.prime} seed={table.seed} [{tag}] orthogonality=pass"
    )
    return 0


def _verify_paths(args):
    base = _group_dir(args)
    stem = f"verify-{args.theorem}-seed{args.seed}"
    return os.path.join(base, stem + ".json"), os.path.join(base, stem + ".md")


def _render_verify_md(report: dict) -> str:
    out = []
    out.append(
        f"# {report['family'].upper()}({report['n']},{report['q']}) "
        f"theorem check: {report['theorem']}"
    )
    out.append("")
    out.append(
        f"|G| = {report['order']}, classes = {report['num_classes']}, "
        f"all_pass = {report['all_pass']}"
    )
    out.append("")
    out.append(f"z = {report['z']} (identity: {report['z_is_identity']}, "
               f"minus identity: {report['z_is_minus_identity']})")
    out.append("")
    out.append("| check | pass | witnesses |")
    out.append("|---|---|---|")
    for c in report["checks"]:
        w = "" if c["pass"] else "; ".join(str(x) for x in c["witnesses"][:4])
        out.append(f"| {c['name']} | {'yes' if c['pass'] else 'NO'} | {w} |")
    out.append("")
    out.append("| chi | degree | eps | omega(z) | real | regular | semisimple | dual |")
    out.append("|---|---|---|---|---|---|---|---|")
    for ch in report["characters"]:
        out.append(
            f"| {ch['index']} | {ch['degree']} | {ch['indicator']} | {ch['omega_z']} | "
            f"{'yes' if ch['real'] else 'no'} | {'yes' if ch['regular'] else 'no'} | "
            f"{'yes' if ch['semisimple'] else 'no'} | {ch['dual']} |"
        )
    return "\n".join(out) + "\n"


def cmd_verify(args, parser) -> int:
    _check_roster(args, parser)
    if args.theorem == "unitary" and args.family != "u":
        parser.error("--theorem unitary applies only to --family u")
    data, h = _load_or_build_group(args)
    table, _ = _load_or_build_table(args, data, h)
    report = verify_theorems(data, table, args.theorem)
    jpath, mpath = _verify_paths(args)
    write_payload(jpath, report)
    from .cache import atomic_write_text

    atomic_write_text(mpath, _render_verify_md(report))
    ok = report["all_pass"]
    print(
        f"{args.family.upper()}({args.n},{args.q}) theorem={args.theorem}: "
        f"{'all checks pass' if ok else 'FAILURES'} -> {jpath}"
    )
    if not ok:
        for c in report["checks"]:
            if not c["pass"]:
                print(f"  {c['name']}: {c['witnesses'][:3]}", file=sys.stderr)
    return 0 if ok else 1


def _report_rows(report: dict):
    head = ["chi", "degree", "eps", "omega_z", "real", "regular", "semisimple", "dual"]
    rows = [
        [
            str(ch["index"]), str(ch["degree"]), str(ch["indicator"]), ch["omega_z"],
            "yes" if ch["real"] else "no",
            "yes" if ch["regular"] else "no",
            "yes" if ch["semisimple"] else "no",
            str(ch["dual"]),
        ]
        for ch in report["characters"]
    ]
    return head, rows


def cmd_report(args, parser) -> int:
    _check_roster(args, parser)
    jpath, _ = _verify_paths(args)
    if not os.path.exists(jpath):
        print(
            f"no verification artifact at {jpath}; run\n"
            f"  liechar verify --family {args.family} --n {args.n} --q {args.q} "
            f"--theorem {args.theorem} --seed {args.seed}",
            file=sys.stderr,
        )
        return 1
    report, _ = read_payload(jpath)
    head, rows = _report_rows(report)
    if args.format == "csv":
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(head)
        wr.writerows(rows)
        print(buf.getvalue(), end="")
    elif args.format == "md":
        print("| " + " | ".join(head) + " |")
        print("|" + "---|" * len(head))
        for r in rows:
            print("| " + " | ".join(r) + " |")
    else:
        from .cache import canonical_json

        print(canonical_json(report))
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liechar",
        description="Exact character tables, duality and Frobenius-Schur "
        "indicators for small finite groups of Lie type.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn in (
        ("build", cmd_build),
        ("chartab", cmd_chartab),
        ("verify", cmd_verify),
        ("report", cmd_report),
    ):
        sp = sub.add_parser(name)
        sp.add_argument("--family", choices=("gl", "u"), required=True)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--q", type=int, required=True)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--cache-dir", default=default_cache_dir())
        sp.add_argument("--allow-large", action="store_true",
                        help="override the supported-roster restriction")
        sp.add_argument("--theorem", choices=THEOREMS, default="all")
        sp.add_argument("--format", choices=("json", "md", "csv"), default="md")
        sp.set_defaults(fn=fn)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args, parser)
    except (CacheError, GroupError, LieError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
