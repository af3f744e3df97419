"""Parity pairs (A, B), right-hand-side counts and signed sums, all by enumeration.

Everything here is a plain count over an enumerated family.  The q-series
module never gets imported, which keeps the two verification channels
independent of each other.

Profiles of a family at a given weight are memoised (``profiled``) since
the harness asks for the same weight dozens of times.  Call
``profiled.cache_clear()`` to release them.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable

from .core import STATISTICS, Overpartition, StatProfile, stat_profile
from .families import FamilyId, SetId, base_family, enumerate_family, member


@lru_cache(maxsize=None)
def profiled(family: FamilyId, n: int) -> tuple[tuple[Overpartition, StatProfile], ...]:
    return tuple((pi, stat_profile(pi)) for pi in enumerate_family(family, n))


class Restriction(str, Enum):
    ALL = "all overpartitions"
    SN_POS = "SN >= 1"
    SO_POS = "SO >= 1"
    PLAIN_APPEARS = "non-overlined parts appear"
    OVER_APPEARS = "overlined parts appear"

    def admits(self, st: StatProfile) -> bool:
        if self is Restriction.ALL:
            return True
        if self in (Restriction.SN_POS, Restriction.PLAIN_APPEARS):
            return st.l_plain > 0
        return st.l_over > 0


class ParityFamilyId(str, Enum):
    NgeO = "NgeO"
    NgtO = "NgtO"
    OgeN = "OgeN"
    OgtN = "OgtN"
    barNgeO = "barNgeO"
    barNgtO = "barNgtO"
    barOgeN = "barOgeN"
    barOgtN = "barOgtN"
    OleN = "OleN"
    tildeOleN = "tildeOleN"
    OltN = "OltN"
    tildeOltN = "tildeOltN"
    NleO = "NleO"
    tildeNleO = "tildeNleO"
    NltO = "NltO"
    tildeNltO = "tildeNltO"


@dataclass(frozen=True)
class ParityFamily:
    statistic: str
    restriction: Restriction


PARITY_FAMILIES: dict[ParityFamilyId, ParityFamily] = {
    ParityFamilyId.NgeO: ParityFamily("l_NgeO", Restriction.ALL),
    ParityFamilyId.NgtO: ParityFamily("l_NgtO", Restriction.ALL),
    ParityFamilyId.OgeN: ParityFamily("l_OgeN", Restriction.SN_POS),
    ParityFamilyId.OgtN: ParityFamily("l_OgtN", Restriction.SN_POS),
    ParityFamilyId.barNgeO: ParityFamily("l_NgeO", Restriction.SO_POS),
    ParityFamilyId.barNgtO: ParityFamily("l_NgtO", Restriction.SO_POS),
    ParityFamilyId.barOgeN: ParityFamily("l_OgeN", Restriction.ALL),
    ParityFamilyId.barOgtN: ParityFamily("l_OgtN", Restriction.ALL),
    ParityFamilyId.OleN: ParityFamily("l_OleN", Restriction.ALL),
    ParityFamilyId.tildeOleN: ParityFamily("l_OleN", Restriction.PLAIN_APPEARS),
    ParityFamilyId.OltN: ParityFamily("l_OltN", Restriction.ALL),
    ParityFamilyId.tildeOltN: ParityFamily("l_OltN", Restriction.PLAIN_APPEARS),
    ParityFamilyId.NleO: ParityFamily("l_NleO", Restriction.ALL),
    ParityFamilyId.tildeNleO: ParityFamily("l_NleO", Restriction.OVER_APPEARS),
    ParityFamilyId.NltO: ParityFamily("l_NltO", Restriction.ALL),
    ParityFamilyId.tildeNltO: ParityFamily("l_NltO", Restriction.OVER_APPEARS),
}


def parity_pair(f: ParityFamilyId | str, n: int) -> tuple[int, int]:
    """Return (A, B): members of the restricted family with the statistic even, odd.

    A statistic equal to 0 counts as even.
    """
    fam = PARITY_FAMILIES[ParityFamilyId(f)]
    a = b = 0
    for _, st in profiled(FamilyId.OP, n):
        if fam.restriction.admits(st):
            if getattr(st, fam.statistic) % 2:
                b += 1
            else:
                a += 1
    return a, b


def restricted_total(f: ParityFamilyId | str, n: int) -> int:
    fam = PARITY_FAMILIES[ParityFamilyId(f)]
    return sum(1 for _, st in profiled(FamilyId.OP, n) if fam.restriction.admits(st))


class RhsId(str, Enum):
    p = "p"
    p_e = "p_e"
    p_o = "p_o"
    D = "D"
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
    phat_o = "phat_o"
    H1_ON = "H'_ON"
    Ho_ON = "Ho_ON"
    He_ON = "He_ON"
    H_NltO = "H_NltO"
    Ho_NltO = "Ho_NltO"


_RHS_DOMAIN: dict[RhsId, FamilyId | SetId] = {
    RhsId.p: FamilyId.P,
    RhsId.D: FamilyId.D,
    RhsId.phat_o: SetId.Phat_o,
    **{r: SetId(r.value) for r in RhsId if r.value in SetId._value2member_map_},
}


def members(domain: FamilyId | SetId | str, n: int) -> list[tuple[Overpartition, StatProfile]]:
    """Profiled members of a family or named set at weight ``n``."""
    if isinstance(domain, str) and not isinstance(domain, Enum):
        domain = FamilyId(domain) if domain in FamilyId._value2member_map_ else SetId(domain)
    if isinstance(domain, FamilyId):
        return list(profiled(domain, n))
    return [(pi, st) for pi, st in profiled(base_family(domain), n) if member(domain, pi, st)]


def count(domain: FamilyId | SetId | str, n: int) -> int:
    return len(members(domain, n))


def rhs_count(r: RhsId | str, n: int) -> int:
    return count(_RHS_DOMAIN[RhsId(r)], n)


def signed_sum(domain: FamilyId | SetId | str, stat: str, n: int) -> int:
    """Sum of (-1)**stat(pi) over the domain at weight ``n``."""
    if stat not in STATISTICS:
        raise ValueError(f"unknown statistic {stat!r}")
    return sum(-1 if getattr(st, stat) % 2 else 1 for _, st in members(domain, n))


def signed_sum_where(domain: FamilyId | SetId, stat: str, n: int,
                     keep: Callable[[Overpartition, StatProfile], bool]) -> int:
    return sum(-1 if getattr(st, stat) % 2 else 1
               for pi, st in members(domain, n) if keep(pi, st))
