"""Exhaustive generation of partition families and membership in named sets.

Generators are lazy.  Output order is deterministic: underlying partitions
in reverse lexicographic order, and for each partition the overline choices
counted in binary with the largest distinct size as the low bit.  For n=3
this reproduces the familiar listing

    (3), (3~), (2,1), (2~,1), (2,1~), (2~,1~), (1,1,1), (1~,1,1)
"""

from __future__ import annotations

from enum import Enum
from typing import Iterator

from .core import INF, Overpartition, Part, Partition, StatProfile, size_counts, stat_profile


class FamilyId(str, Enum):
    P = "P"
    D = "D"
    OP = "OP"
    OD = "OD"
    PN = "PN"
    PO = "PO"


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as weakly decreasing tuples, reverse lex order."""
    if n == 0:
        yield ()
        return
    top = n if largest is None else min(n, largest)
    for first in range(top, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def distinct_partitions(n: int, below: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` into distinct parts, each part < ``below``."""
    if n == 0:
        yield ()
        return
    top = n if below is None else min(n, below - 1)
    for first in range(top, 0, -1):
        for rest in distinct_partitions(n - first, first):
            yield (first,) + rest


def _overline_choices(parts: tuple[int, ...]) -> Iterator[Overpartition]:
    sizes = sorted(set(parts), reverse=True)
    counts = size_counts(Partition(parts))
    for mask in range(1 << len(sizes)):
        out = []
        for bit, size in enumerate(sizes):
            k = counts[size]
            if mask >> bit & 1:
                out.append(Part(size, True))
                k -= 1
            out.extend([Part(size, False)] * k)
        yield Overpartition(tuple(out))


def overpartitions(n: int) -> Iterator[Overpartition]:
    for parts in partitions(n):
        yield from _overline_choices(parts)


def enumerate_family(family: FamilyId | str, n: int) -> Iterator[Overpartition]:
    """Yield every member of ``family`` of weight ``n`` exactly once."""
    family = FamilyId(family)
    if n < 0:
        raise ValueError("weight must be nonnegative")
    if family is FamilyId.P:
        return (Overpartition.from_partition(p) for p in partitions(n))
    if family is FamilyId.D:
        return (Overpartition.from_partition(p) for p in distinct_partitions(n))
    if family is FamilyId.OD:
        return (Overpartition(tuple(Part(s, True) for s in p)) for p in distinct_partitions(n))
    if family is FamilyId.OP:
        return overpartitions(n)
    if family is FamilyId.PN:
        return (pi for pi in overpartitions(n) if any(not p.overlined for p in pi.parts))
    return (pi for pi in overpartitions(n) if any(p.overlined for p in pi.parts))


def in_family(family: FamilyId | str, pi: Overpartition) -> bool:
    family = FamilyId(family)
    plain = sum(1 for p in pi.parts if not p.overlined)
    over = len(pi) - plain
    if family is FamilyId.OP:
        return True
    if family is FamilyId.P:
        return over == 0
    if family is FamilyId.D:
        return over == 0 and len(set(p.size for p in pi.parts)) == len(pi)
    if family is FamilyId.OD:
        return plain == 0
    if family is FamilyId.PN:
        return plain > 0
    return over > 0


class SetId(str, Enum):
    # overpartition sets
    H1_ON = "H'_ON"
    Ho_ON = "Ho_ON"
    He_ON = "He_ON"
    H_NltO = "H_NltO"
    Ho_NltO = "Ho_NltO"
    C_OleN = "C_OleN"
    F_OleN = "F_OleN"
    H_OleN = "H_OleN"
    C_OltN = "C_OltN"
    F_OltN = "F_OltN"
    H_OltN = "H_OltN"
    Ctilde_NO = "Ctilde_NO"
    Ftilde_NO = "Ftilde_NO"
    Htilde_NO = "Htilde_NO"
    # partition classes
    Phat_o = "Phat_o"
    p_e = "p_e"
    p_o = "p_o"
    D_e = "D_e"
    D_o = "D_o"
    pe_o = "p^e_o"
    po_e = "p^o_e"
    po = "p^o"
    pe = "p^e"
    p1_o = "p'_o"
    p1_e = "p'_e"
    p2_o = "p''_o"
    p2_e = "p''_e"


#: Sets whose members are ordinary partitions (no overlines).
PARTITION_CLASSES = frozenset({
    SetId.Phat_o, SetId.p_e, SetId.p_o, SetId.D_e, SetId.D_o,
    SetId.pe_o, SetId.po_e, SetId.po, SetId.pe,
    SetId.p1_o, SetId.p1_e, SetId.p2_o, SetId.p2_e,
})

# The set cut out by SOx >= LNx = SNx is named H_{N<O} in the theorem and
# H_{O<N} in the combinatorial proof; both ids refer to it.
SET_ALIASES = {SetId.H_OltN: SetId.H_NltO}


def base_family(s: SetId) -> FamilyId:
    """Family to enumerate and then filter when counting members of ``s``."""
    return FamilyId.P if s in PARTITION_CLASSES else FamilyId.OP


def _h_on(st: StatProfile) -> bool:
    return st.LN == st.SN >= 1 and st.SN >= st.LO


def _h_nlto(st: StatProfile) -> bool:
    return st.l_plain > 0 and st.SOx >= st.LNx == st.SNx


def _partition_member(s: SetId, pi: Overpartition) -> bool:
    if not pi.is_partition or not pi.parts:
        return False
    sizes = [p.size for p in pi.parts]
    largest, smallest = sizes[0], sizes[-1]
    count = len(sizes)
    if s is SetId.p_e:
        return count % 2 == 0
    if s is SetId.p_o:
        return count % 2 == 1
    if s in (SetId.D_e, SetId.D_o):
        distinct = len(set(sizes)) == count
        return distinct and count % 2 == (0 if s is SetId.D_e else 1)
    if s is SetId.pe_o:
        return largest % 2 == 0 and smallest % 2 == 1
    if s is SetId.po_e:
        return largest % 2 == 1 and smallest % 2 == 0
    if s in (SetId.po, SetId.pe):
        return sizes.count(largest) % 2 == (1 if s is SetId.po else 0)
    if s in (SetId.p1_o, SetId.p1_e):
        return sizes.count(smallest) % 2 == (1 if s is SetId.p1_o else 0)
    if s in (SetId.p2_o, SetId.p2_e):
        above = sum(1 for x in sizes if x > smallest)
        return above % 2 == 1 and sizes.count(smallest) % 2 == (1 if s is SetId.p2_o else 0)
    if s is SetId.Phat_o:
        if largest % 2:
            return False
        half = largest // 2
        return (count == 1 or sizes[1] <= half) and sizes.count(half) % 2 == 0
    raise AssertionError(s)


def member(s: SetId | str, pi: Overpartition, profile: StatProfile | None = None) -> bool:
    """Decide membership of ``pi`` in the named set.

    ``profile`` may be passed when the caller already holds ``stat_profile(pi)``.
    """
    s = SET_ALIASES.get(SetId(s), SetId(s))
    if s in PARTITION_CLASSES:
        return _partition_member(s, pi)
    st = profile if profile is not None else stat_profile(pi)
    plain, over = st.l_plain, st.l_over
    if s is SetId.H1_ON:
        return _h_on(st)
    if s is SetId.Ho_ON:
        return _h_on(st) and over % 2 == 1
    if s is SetId.He_ON:
        return _h_on(st) and over % 2 == 0
    if s is SetId.H_NltO:
        return _h_nlto(st)
    if s is SetId.Ho_NltO:
        return _h_nlto(st) and over % 2 == 1
    if s is SetId.C_OleN:
        return plain > 0 and over > 0 and st.SNx >= st.SOx
    if s is SetId.F_OleN:
        return plain >= 2 and st.SOx > st.SNx
    if s is SetId.H_OleN:
        return plain == 1 and st.SOx > st.SNx
    if s is SetId.C_OltN:
        return plain > 0 and over > 0 and st.SNx >= st.SOx and st.LNx > st.SOx
    if s is SetId.F_OltN:
        return plain >= 2 and st.SOx > st.SNx and st.LNx > st.SNx
    if s is SetId.Ctilde_NO:
        return plain > 0 and over > 0 and st.SNx < st.SOx
    if s is SetId.Ftilde_NO:
        return over >= 2 and st.SOx <= st.SNx
    if s is SetId.Htilde_NO:
        return over == 1 and st.SOx <= st.SNx
    raise AssertionError(s)


def count_plain_at_smallest_overlined(pi: Overpartition, profile: StatProfile | None = None) -> int:
    """Number of non-overlined parts whose size equals SOx (0 if no overlined part)."""
    st = profile if profile is not None else stat_profile(pi)
    if st.SOx == INF:
        return 0
    return sum(1 for p in pi.parts if not p.overlined and p.size == st.SOx)
