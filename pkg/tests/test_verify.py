import json
from pathlib import Path

import pytest

from overparity import verify as V
from overparity.counting import parity_pair
from overparity.verify import (
    GROUPS, MAP_CHECKS, REGISTRY, REQUIRED_IDS, Identity, resolve, run_all, run_tasks,
    verify_identity, verify_map,
)

GOLDEN = Path(__file__).parent / "golden"


def test_registry_is_complete():
    missing = [i for i in REQUIRED_IDS if i not in REGISTRY and i not in GROUPS]
    assert missing == []


def test_every_identity_has_a_channel_and_claim():
    for ident in REGISTRY.values():
        assert ident.modes, ident.id
        assert ident.claim
        if ident.kind == "ineq":
            assert ident.strict is not None and ident.enum is not None


@pytest.mark.parametrize("key,strict_at", [
    ("C13a", {1: True, 2: False, 3: True}),
    ("C13b", {1: True, 2: True}),
    ("C13c", {1: False, 2: False, 3: True}),
    ("C13d", {1: False, 2: True}),
])
def test_strictness_predicates(key, strict_at):
    for n, expected in strict_at.items():
        assert REGISTRY[key].strict(n) is expected


def test_groups_expand():
    assert resolve("GF_2_1") == [f"GF_2_1[t={t}]" for t in range(-2, 4)]
    assert resolve("T14_3") == ["T14_3"]
    with pytest.raises(KeyError):
        resolve("nope")


def test_t12b_trace_at_three():
    rep = verify_identity("T12b", 3, "enum")
    assert rep.status == "pass"
    assert parity_pair("barNgtO", 3) == (4, 1)
    assert [(r.n, r.lhs, r.rhs) for r in rep.rows][-1] == (3, 3, 3)


def test_t14_1_at_three():
    rep = verify_identity("T14_1", 3, "enum")
    assert rep.status == "pass" and rep.rows[-1].lhs == 2 == rep.rows[-1].rhs


def test_c13a_equality_at_two():
    rep = verify_identity("C13a", 2, "enum")
    assert rep.status == "pass"
    assert [(r.n, r.lhs) for r in rep.rows] == [(1, 1), (2, 0)]


def test_smallest_range():
    assert verify_identity("T12b", 1, "both", order=10).status == "pass"


def test_channels_present():
    rep = verify_identity("T12d", 5, "both", order=20)
    channels = {r.channel for r in rep.rows}
    assert channels == {"enum", "cross", "series:SUM_BAR_OGTN/form1", "series:RAW_BAR_OGTN", "series:2*SUM_H_ON_O"}


def test_missing_channel_is_skipped():
    assert verify_identity("T11a", 5, "series").status == "skipped"
    assert verify_identity("GF_2_3", 5, "enum").status == "skipped"


def test_order_must_cover_max_n():
    with pytest.raises(ValueError):
        verify_identity("T12b", 30, "both", order=20)
    with pytest.raises(ValueError):
        verify_identity("T12b", 0, "enum")
    with pytest.raises(ValueError):
        verify_identity("T12b", 3, "sideways")


def test_failure_reports_smallest_counterexample(monkeypatch):
    bogus = Identity("BOGUS", "n = 5 only", enum=lambda n: (n, 5 if n < 4 else n))
    monkeypatch.setitem(REGISTRY, "BOGUS", bogus)
    rep = verify_identity("BOGUS", 8, "enum")
    assert rep.status == "fail"
    assert rep.first_failure.n == 1
    bogus = Identity("BOGUS", "late", enum=lambda n: (n, n if n < 6 else 0))
    monkeypatch.setitem(REGISTRY, "BOGUS", bogus)
    assert verify_identity("BOGUS", 8, "enum").first_failure.n == 6


def test_strictness_violation_is_a_failure(monkeypatch):
    ident = Identity("BOGUS", "zero is not positive", kind="ineq",
                     enum=lambda n: (0, 0), strict=lambda n: n >= 3)
    monkeypatch.setitem(REGISTRY, "BOGUS", ident)
    rep = verify_identity("BOGUS", 5, "enum")
    assert rep.status == "fail" and rep.first_failure.n == 3


def test_module_errors_become_error_status(monkeypatch):
    from overparity.errors import OddCoefficient

    def boom(order):
        raise OddCoefficient("odd")

    ident = Identity("BOGUS", "raises", series_forms=(("a", boom), ("b", boom)))
    monkeypatch.setitem(REGISTRY, "BOGUS", ident)
    rep = verify_identity("BOGUS", 5, "series", order=10)
    assert rep.status == "error" and "OddCoefficient" in rep.error


@pytest.mark.parametrize("m", ["phi", "varphi"])
def test_map_examples_at_three(m):
    rep = verify_map(m, 3)
    assert rep.status == "pass"
    assert rep.rows[-1].lhs == rep.rows[-1].rhs == 8


def test_double_half_map_check():
    rep = verify_map("double_half", 10)
    assert rep.status == "pass"


def test_map_failure_names_the_input(monkeypatch):
    bad = V.MapCheck("bad", "always wrong", lambda n: (1, 0, f"input-{n}"))
    monkeypatch.setitem(MAP_CHECKS, "bad", bad)
    rep = verify_map("bad", 4)
    assert rep.status == "fail" and rep.detail == "first violating input: input-1"


def test_report_json_schema():
    rep = verify_identity("C15_1", 3, "enum")
    data = json.loads(json.dumps(rep.to_json()))
    assert set(data) >= {"identity", "mode", "range", "rows", "status"}
    assert data["rows"][2] == {"n": 3, "lhs": [5, 3], "rhs": [5, 3], "channel": "enum"}
    assert "wall_time" not in data and "wall_time" in rep.to_json(timings=True)


def test_run_all_small_matches_golden():
    summary = run_all(3, 50)
    assert summary.ok and summary.failed == summary.errors == 0
    text = summary.text()
    assert text == (GOLDEN / "run_all_3_50.txt").read_text().rstrip("\n")


def test_run_all_full_scale():
    summary = run_all(25, 200)
    assert summary.ok, summary.text()
    assert summary.passed == len(REGISTRY) + len(MAP_CHECKS)


def test_parallel_run_is_identical():
    tasks = V.all_tasks()[:12] + [("map", "phi")]
    serial = run_tasks(tasks, 6, 30, "both", jobs=1)
    parallel = run_tasks(tasks, 6, 30, "both", jobs=2)
    assert serial.to_json() == parallel.to_json()
