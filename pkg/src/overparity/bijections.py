"""Executable involutions and bijections on overpartitions and partitions.

All maps take and return immutable values; inputs are never modified.
"""

from __future__ import annotations

from enum import Enum

from .core import Overpartition, Part, Partition, canonicalize, stat_profile
from .errors import EmptyInput, NotInDomain, PreconditionViolated, UndefinedWitness
from .families import SetId, member


class MapId(str, Enum):
    varphi = "varphi"
    phi = "phi"
    double_half = "double_half"
    toggle_all = "toggle_all"
    flip_largest = "flip_largest"
    odd_largest_witness = "odd_largest_witness"


def _retag(pi: Overpartition, changes: dict[tuple[int, bool], bool]) -> Overpartition:
    """Flip the overline on one part for each ``(size, overlined) -> new flag`` entry."""
    pending = dict(changes)
    out = []
    for part in pi.parts:
        key = (part.size, part.overlined)
        if key in pending:
            out.append(Part(part.size, pending.pop(key)))
        else:
            out.append(part)
    if pending:
        raise KeyError(f"no part matching {sorted(pending)} in {pi.display()}")
    return canonicalize(out)


def varphi(pi: Overpartition) -> Overpartition:
    """Overline the smallest plain part if SNx < SOx, else un-overline the smallest overlined part."""
    if not pi.parts:
        raise EmptyInput("varphi is not defined on the empty overpartition")
    st = stat_profile(pi)
    if st.SNx < st.SOx:
        return _retag(pi, {(st.SN, False): True})
    return _retag(pi, {(st.SO, True): False})


def phi(pi: Overpartition) -> Overpartition:
    """Involution carrying the parity of l_{O>=N} to that of l_{O<=N}.

    Fixed when the two parities already agree.  Otherwise let SN, LN be the
    smallest and largest plain sizes.

    * If SN and LN each occur exactly once and no part lies strictly between
      them (this includes SN == LN with a single part of that size), two
      overlines move: when l_{O>=N} is odd the smallest plain part gains one
      and the smallest overlined part above LN loses its own; when l_{O<=N}
      is odd the largest plain part gains one and the largest overlined part
      below SN loses its own.
    * Otherwise take k = the next occupied size above SN when SN occurs once,
      else k = SN, and toggle the overline on size k.
    """
    st = stat_profile(pi)
    if st.l_OleN % 2 == st.l_OgeN % 2:
        return pi
    if st.l_plain == 0:
        raise PreconditionViolated(f"parities differ but {pi.display()} has no plain part")
    sn, ln = st.SN, st.LN
    sizes = [p.size for p in pi.parts]
    lone_ends = (sizes.count(sn) == 1 and sizes.count(ln) == 1
                 and not any(sn < s < ln for s in sizes))
    over = [p.size for p in pi.parts if p.overlined]
    if lone_ends:
        if st.l_OgeN % 2:
            above = [s for s in over if s > ln]
            if not above:
                raise PreconditionViolated(f"no overlined part above LN={ln} in {pi.display()}")
            return _retag(pi, {(sn, False): True, (min(above), True): False})
        below = [s for s in over if s < sn]
        if not below:
            raise PreconditionViolated(f"no overlined part below SN={sn} in {pi.display()}")
        return _retag(pi, {(ln, False): True, (max(below), True): False})
    if sizes.count(sn) == 1:
        k = min(s for s in sizes if s > sn)
    else:
        k = sn
    if pi.has_overlined(k):
        return _retag(pi, {(k, True): False})
    return _retag(pi, {(k, False): True})


def double_half(p: Partition) -> Partition:
    """(pi_1, pi_2, ...) -> (pi_1/2, pi_1/2, pi_2, ...) on the Phat_o class."""
    if not member(SetId.Phat_o, Overpartition.from_partition(p)):
        raise NotInDomain(f"{p.display()} is not counted by phat_o")
    half = p.parts[0] // 2
    return Partition((half, half) + p.parts[1:])


def double_half_inverse(lam: Partition) -> Partition:
    """(l_1, l_2, l_3, ...) -> (2 l_1, l_3, ...) on partitions whose largest part has even multiplicity."""
    if not member(SetId.pe, Overpartition.from_partition(lam)):
        raise NotInDomain(f"largest part of {lam.display()} does not appear an even number of times")
    return Partition((2 * lam.parts[0],) + lam.parts[2:])


def toggle_all(pi: Overpartition) -> Overpartition:
    """Swap an all-overlined overpartition with the distinct partition of the same sizes."""
    flags = {p.overlined for p in pi.parts}
    if flags == {False} and len(set(p.size for p in pi.parts)) != len(pi):
        raise NotInDomain(f"{pi.display()} has a repeated plain part")
    if len(flags) > 1:
        raise NotInDomain(f"{pi.display()} mixes overlined and plain parts")
    return Overpartition(tuple(Part(p.size, not p.overlined) for p in pi.parts))


def flip_largest(pi: Overpartition) -> Overpartition:
    """Toggle the overline on the first (largest) part; domain H'_ON together with OD."""
    if not pi.parts:
        raise NotInDomain("flip_largest needs a nonempty overpartition")
    all_overlined = all(p.overlined for p in pi.parts)
    if not all_overlined and not member(SetId.H1_ON, pi):
        raise NotInDomain(f"{pi.display()} is in neither H'_ON nor OD")
    first = pi.parts[0]
    return canonicalize((Part(first.size, not first.overlined),) + pi.parts[1:])


def odd_largest_witness(n: int) -> Partition:
    """A partition of n whose largest part is odd and appears an odd number of times."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 2:
        raise UndefinedWitness("no witness exists for n = 2")
    if n % 2:
        return Partition((1,) * n)
    return Partition((3,) + (1,) * (n - 3))


def apply_map(m: MapId | str, value):
    """Dispatch by id; the inverse of double_half is reached via ``double_half_inverse``."""
    m = MapId(m)
    return {
        MapId.varphi: varphi,
        MapId.phi: phi,
        MapId.double_half: double_half,
        MapId.toggle_all: toggle_all,
        MapId.flip_largest: flip_largest,
        MapId.odd_largest_witness: odd_largest_witness,
    }[m](value)

