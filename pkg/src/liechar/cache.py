"""Cache files: canonical JSON with content digests, written atomically.

Group caches record the field, generators and class data and are verified
against a deterministic rebuild.  Table caches store exact serialized
cyclotomics and must pass the orthogonality check before use.  Identical
inputs always serialize to byte-identical files.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from fractions import Fraction
from math import gcd

from .chartab import CharacterTable
from .classfun import ClassFunction
from .cyclo import Cyclotomic, euler_phi
from .field import make_field
from .group import FiniteGroup

ENGINE_VERSION = "liechar-1"


class CacheError(RuntimeError):
    pass


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def digest(obj) -> str:
    return hashlib.sha256(canonical_json(obj).encode()).hexdigest()


def atomic_write_text(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_payload(path: str, payload: dict) -> str:
    h = digest(payload)
    atomic_write_text(path, canonical_json({"digest": h, "payload": payload}) + "\n")
    return h


def read_payload(path: str) -> tuple[dict, str]:
    with open(path) as fh:
        blob = json.load(fh)
    if set(blob) != {"digest", "payload"}:
        raise CacheError(f"{path}: malformed cache file")
    h = digest(blob["payload"])
    if h != blob["digest"]:
        raise CacheError(f"{path}: checksum mismatch; cache is corrupted")
    return blob["payload"], h


# -- cyclotomics ----------------------------------------------------------------


def cyclotomic_to_json(v: Cyclotomic) -> dict:
    order, num, den = v.canonical()
    return {"order": order, "coeffs": [[int(c), int(den)] for c in num]}


def cyclotomic_from_json(d: dict) -> Cyclotomic:
    order = d["order"]
    coeffs = d["coeffs"]
    if len(coeffs) != euler_phi(order):
        raise CacheError("serialized cyclotomic has the wrong length")
    fracs = [Fraction(a, b) for a, b in coeffs]
    den = 1
    for f in fracs:
        den = den * f.denominator // gcd(den, f.denominator)
    return Cyclotomic(order, [int(f * den) for f in fracs], den)


# -- group cache -------------------------------------------------------------------


def group_payload(family: str, n: int, q: int, group: FiniteGroup) -> dict:
    cd = group.conjugacy()
    F = group.field
    return {
        "schema": "liechar.group/1",
        "engine": ENGINE_VERSION,
        "family": family,
        "n": n,
        "q": q,
        "field": {"p": F.p, "k": F.k, "modulus": list(F.modulus)},
        "generators": [group.mats[i].tolist() for i in group.gen_indices],
        "order": group.order,
        "num_classes": cd.num_classes,
        "class_reps": [group.mats[int(r)].tolist() for r in cd.reps],
        "class_sizes": cd.sizes.tolist(),
        "centralizer_orders": cd.centralizer_orders.tolist(),
        "exponent": cd.exponent,
    }


def check_group_payload(payload: dict, family: str, n: int, q: int) -> None:
    if payload.get("schema") != "liechar.group/1":
        raise CacheError("not a group cache file")
    if payload.get("engine") != ENGINE_VERSION:
        raise CacheError("cache written by a different engine version")
    if (payload.get("family"), payload.get("n"), payload.get("q")) != (family, n, q):
        raise CacheError("cache file is for a different group")
    F = make_field(payload["field"]["p"], payload["field"]["k"])
    if list(F.modulus) != payload["field"]["modulus"]:
        raise CacheError("cache file uses a different field modulus")


# -- table cache --------------------------------------------------------------------


def table_payload(table: CharacterTable, group_digest: str) -> dict:
    return {
        "schema": "liechar.chartab/1",
        "engine": ENGINE_VERSION,
        "group_digest": group_digest,
        "seed": table.seed,
        "prime": table.prime,
        "exponent": table.exponent,
        "degrees": list(table.degrees),
        "irreducibles": [
            [cyclotomic_to_json(v) for v in chi.values] for chi in table.irreducibles
        ],
    }


def table_from_payload(payload: dict, group: FiniteGroup, group_digest: str) -> CharacterTable:
    if payload.get("schema") != "liechar.chartab/1":
        raise CacheError("not a character table cache file")
    if payload.get("engine") != ENGINE_VERSION:
        raise CacheError("cache written by a different engine version")
    if payload.get("group_digest") != group_digest:
        raise CacheError("table cache does not match the group cache")
    chars = [
        ClassFunction(group, [cyclotomic_from_json(v) for v in row])
        for row in payload["irreducibles"]
    ]
    table = CharacterTable(group, chars, payload["seed"], payload["prime"])
    if list(table.degrees) != payload["degrees"]:
        raise CacheError("cached degrees disagree with cached values")
    return table
