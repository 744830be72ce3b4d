import json

import pytest

from liechar.cache import (
    CacheError,
    canonical_json,
    cyclotomic_from_json,
    cyclotomic_to_json,
    group_payload,
    read_payload,
    table_from_payload,
    table_payload,
    write_payload,
)
from liechar.chartab import dixon_table, orthogonality_check
from liechar.cyclo import Cyclotomic, root_of_unity
from liechar.lie import build_u


def test_cyclotomic_json_roundtrip():
    vals = [
        Cyclotomic.from_rational(-3) / 2,
        root_of_unity(8, 3) + 1,
        root_of_unity(6, 1),  # canonicalizes into order 3
        Cyclotomic.zero(),
    ]
    for v in vals:
        blob = cyclotomic_to_json(v)
        json.dumps(blob)
        assert cyclotomic_from_json(blob) == v


def test_group_and_table_payload_roundtrip(tmp_path):
    data = build_u(2, 2)
    payload = group_payload("u", 2, 2, data.group)
    path = str(tmp_path / "group.json")
    h1 = write_payload(path, payload)
    loaded, h2 = read_payload(path)
    assert h1 == h2 and loaded == payload
    # byte-exact re-serialization
    h3 = write_payload(path, loaded)
    assert h3 == h1

    table = dixon_table(data.group)
    tp = table_payload(table, h1)
    tpath = str(tmp_path / "table.json")
    write_payload(tpath, tp)
    tl, _ = read_payload(tpath)
    restored = table_from_payload(tl, data.group, h1)
    assert restored.degrees == table.degrees
    assert all(a == b for a, b in zip(restored.irreducibles, table.irreducibles))
    assert orthogonality_check(restored).ok


def test_corrupted_cache_detected(tmp_path):
    data = build_u(2, 2)
    path = str(tmp_path / "group.json")
    write_payload(path, group_payload("u", 2, 2, data.group))
    blob = json.loads(open(path).read())
    blob["payload"]["order"] = 17
    open(path, "w").write(json.dumps(blob))
    with pytest.raises(CacheError):
        read_payload(path)


def test_wrong_group_digest_rejected(tmp_path):
    data = build_u(2, 2)
    table = dixon_table(data.group)
    tp = table_payload(table, "0" * 64)
    with pytest.raises(CacheError):
        table_from_payload(tp, data.group, "1" * 64)


def test_canonical_json_is_sorted_and_compact():
    s = canonical_json({"b": 1, "a": [1, 2]})
    assert s == '{"a":[1,2],"b":1}'
