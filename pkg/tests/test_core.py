import json
import math

import pytest
from hypothesis import given, strategies as st

from overparity.core import (
    INF, Overpartition, Part, Partition, canonicalize, format_ext, parse, parse_partition,
    size_counts, stat_profile,
)
from overparity.errors import DuplicateOverline, NotInDomain


def op(text):
    return parse(text)


# Both n=3 statistic tables, row for row: (LN, SN, LO, SO, l_NgeO, l_NgtO, l_OgeN, l_OgtN)
ZERO_TABLE = {
    "3": (3, 3, 0, 0, 1, 1, 0, 0),
    "3~": (0, 0, 3, 3, 0, 0, 1, 1),
    "2,1": (2, 1, 0, 0, 2, 2, 0, 0),
    "2~,1": (1, 1, 2, 2, 0, 0, 1, 1),
    "2,1~": (2, 2, 1, 1, 1, 1, 0, 0),
    "2~,1~": (0, 0, 2, 1, 0, 0, 2, 2),
    "1,1,1": (1, 1, 0, 0, 3, 3, 0, 0),
    "1~,1,1": (1, 1, 1, 1, 2, 0, 1, 0),
}

# (LNx, SNx, LOx, SOx, l_NleO, l_NltO, l_OleN, l_OltN)
INF_TABLE = {
    "3": (3, 3, INF, INF, 1, 1, 0, 0),
    "3~": (INF, INF, 3, 3, 0, 0, 1, 1),
    "2,1": (2, 1, INF, INF, 2, 2, 0, 0),
    "2~,1": (1, 1, 2, 2, 1, 1, 0, 0),
    "2,1~": (2, 2, 1, 1, 0, 0, 1, 1),
    "2~,1~": (INF, INF, 2, 1, 0, 0, 2, 2),
    "1,1,1": (1, 1, INF, INF, 3, 3, 0, 0),
    "1~,1,1": (1, 1, 1, 1, 2, 0, 1, 0),
}


@pytest.mark.parametrize("text,expected", ZERO_TABLE.items())
def test_zero_convention_table(text, expected):
    s = stat_profile(op(text))
    assert (s.LN, s.SN, s.LO, s.SO, s.l_NgeO, s.l_NgtO, s.l_OgeN, s.l_OgtN) == expected


@pytest.mark.parametrize("text,expected", INF_TABLE.items())
def test_inf_convention_table(text, expected):
    s = stat_profile(op(text))
    assert (s.LNx, s.SNx, s.LOx, s.SOx, s.l_NleO, s.l_NltO, s.l_OleN, s.l_OltN) == expected


def test_worked_phi_input_statistics():
    s = stat_profile(op("8~,7,5,3~,2~"))
    assert (s.LN, s.SN, s.l_OleN, s.l_OgeN) == (7, 5, 2, 1)


def test_empty_profile():
    s = stat_profile(Overpartition(()))
    assert (s.LN, s.SN, s.LO, s.SO) == (0, 0, 0, 0)
    assert all(math.isinf(v) for v in (s.LNx, s.SNx, s.LOx, s.SOx))
    assert s.l_total == s.l_over == s.l_plain == 0


def test_single_overlined_one():
    s = stat_profile(op("1~"))
    assert (s.LO, s.SO, s.LN, s.SN, s.SNx) == (1, 1, 0, 0, INF)
    assert s.l_OgeN == 1 and s.l_OleN == 1


def test_repeated_overline_rejected():
    with pytest.raises(DuplicateOverline):
        parse("2~,2~")
    with pytest.raises(DuplicateOverline):
        Overpartition((Part(2, True), Part(2, True)))


def test_non_canonical_constructor_rejected():
    with pytest.raises(ValueError):
        Overpartition((Part(1), Part(2)))
    with pytest.raises(ValueError):
        Overpartition((Part(2), Part(2, True)))


def test_canonicalize_puts_overlined_copy_first():
    pi = canonicalize([Part(1), Part(2), Part(1, True), Part(3)])
    assert str(pi) == "3,2,1~,1"


@pytest.mark.parametrize("text", ["", "()", " ( ) "])
def test_parse_empty(text):
    assert parse(text) == Overpartition(())


def test_display_forms():
    pi = parse("(8~, 7, 5, 3~, 2~)")
    assert str(pi) == "8~,7,5,3~,2~"
    assert pi.display() == "(8~,7,5,3~,2~)"
    assert Overpartition(()).display() == "()"
    assert pi.weight == 25 and len(pi) == 5


def test_partition_roundtrip_and_domain():
    lam = parse_partition("4,2,2")
    assert lam == Partition((4, 2, 2)) and lam.weight == 8
    assert Overpartition.from_partition(lam).to_partition() == lam
    with pytest.raises(NotInDomain):
        parse("2~,1").to_partition()


def test_format_ext():
    assert format_ext(INF) == "+inf"
    assert format_ext(4) == "4"


part_lists = st.lists(st.tuples(st.integers(1, 9), st.booleans()), max_size=10)


def _legal(pairs):
    seen, out = set(), []
    for size, over in pairs:
        if over and size in seen:
            over = False
        if over:
            seen.add(size)
        out.append(Part(size, over))
    return out


@given(part_lists)
def test_text_and_json_roundtrip(pairs):
    pi = canonicalize(_legal(pairs))
    assert parse(str(pi)) == pi
    assert Overpartition.from_json(json.loads(json.dumps(pi.to_json()))) == pi


@given(part_lists)
def test_profile_invariants(pairs):
    pi = canonicalize(_legal(pairs))
    s = stat_profile(pi)
    sizes_plain = [p.size for p in pi.parts if not p.overlined]
    sizes_over = [p.size for p in pi.parts if p.overlined]
    assert s.l_total == len(pi) == s.l_plain + s.l_over
    assert s.LN == max(sizes_plain, default=0) and s.SN == min(sizes_plain, default=0)
    assert s.SOx == min(sizes_over, default=INF)
    # independent recount of the comparison statistics
    assert s.l_NgeO == sum(x >= s.SO for x in sizes_plain)
    assert s.l_OgtN == sum(x > s.SN for x in sizes_over)
    assert s.l_NleO == sum(x <= s.LOx for x in sizes_plain)
    assert s.l_OltN == sum(x < s.LNx for x in sizes_over)
    assert s.l_NgtO <= s.l_NgeO and s.l_OltN <= s.l_OleN


@given(part_lists)
def test_size_counts_matches_parts(pairs):
    pi = canonicalize(_legal(pairs))
    counts = size_counts(pi)
    assert sum(k * v for k, v in counts.items()) == pi.weight
    for size, k in counts.items():
        assert pi.multiplicity(size) == k
