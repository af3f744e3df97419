"""Overpartitions, partitions and the boundary/count statistics attached to them.

An overpartition is stored as a tuple of :class:`Part` in canonical order:
sizes weakly decreasing and, among parts of equal size, the overlined copy
first.  So ``(1~, 1, 1)`` is canonical while ``(1, 1~, 1)`` is not.

Two conventions coexist for absent parts.  The plain boundaries ``LN``,
``SN``, ``LO``, ``SO`` use 0, the tilde boundaries ``LNx`` ... ``SOx`` use
``INF``.  The ``>=``/``>`` counts compare against the 0-convention smallest
parts and the ``<=``/``<`` counts against the INF-convention largest parts.
Both conventions are kept in :class:`StatProfile` so that nothing downstream
has to remember which one a statistic wants.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Union

from .errors import DuplicateOverline, NotInDomain

INF = math.inf

#: A part size extended with +infinity; finite values are plain ints.
ExtSize = Union[int, float]


class Part(NamedTuple):
    size: int
    overlined: bool = False

    def __str__(self) -> str:
        return f"{self.size}~" if self.overlined else str(self.size)


def _sort_key(part: Part) -> tuple[int, bool]:
    return (-part.size, not part.overlined)


@dataclass(frozen=True)
class Overpartition:
    """A canonical overpartition.

    Build one with :func:`canonicalize` (any order) or :func:`parse`; the
    constructor itself only accepts parts that are already canonical.
    """

    parts: tuple[Part, ...] = ()

    def __post_init__(self):
        prev = None
        for part in self.parts:
            if part.size < 1:
                raise ValueError(f"part sizes must be positive, got {part.size}")
            if prev is not None:
                if part.size > prev.size:
                    raise ValueError("parts must be weakly decreasing")
                if part.size == prev.size and part.overlined:
                    if prev.overlined:
                        raise DuplicateOverline(f"size {part.size} overlined twice")
                    raise ValueError("the overlined copy must precede plain copies")
            prev = part

    @property
    def weight(self) -> int:
        return sum(p.size for p in self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def display(self) -> str:
        """Parenthesised text form, ``()`` for the empty overpartition."""
        return f"({self})"

    def multiplicity(self, size: int) -> int:
        """Number of parts of the given size, overlined or not."""
        return sum(1 for p in self.parts if p.size == size)

    def has_overlined(self, size: int) -> bool:
        return Part(size, True) in self.parts

    @property
    def is_partition(self) -> bool:
        """True when no part is overlined."""
        return not any(p.overlined for p in self.parts)

    def to_partition(self) -> Partition:
        if not self.is_partition:
            raise NotInDomain(f"{self.display()} has overlined parts")
        return Partition(tuple(p.size for p in self.parts))

    @classmethod
    def from_partition(cls, partition: Partition | Iterable[int]) -> Overpartition:
        sizes = partition.parts if isinstance(partition, Partition) else tuple(partition)
        return cls(tuple(Part(s, False) for s in sizes))

    def to_json(self) -> list[dict]:
        return [{"size": p.size, "overlined": p.overlined} for p in self.parts]

    @classmethod
    def from_json(cls, data: list[dict]) -> Overpartition:
        return canonicalize(Part(int(d["size"]), bool(d["overlined"])) for d in data)


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise ValueError("part sizes must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be weakly decreasing")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def display(self) -> str:
        return f"({self})"

    def multiplicity(self, size: int) -> int:
        return self.parts.count(size)


def canonicalize(parts: Iterable[Part | tuple[int, bool]]) -> Overpartition:
    """Sort a multiset of parts into canonical order.

    >>> canonicalize([Part(1), Part(1), Part(1, True)]).display()
    '(1~,1,1)'
    """
    items = [Part(int(s), bool(o)) for s, o in parts]
    seen = set()
    for part in items:
        if part.overlined:
            if part.size in seen:
                raise DuplicateOverline(f"size {part.size} overlined twice")
            seen.add(part.size)
    return Overpartition(tuple(sorted(items, key=_sort_key)))


def parse(text: str) -> Overpartition:
    """Parse the comma-separated text form, e.g. ``"8~,7,5,3~,2~"``.

    Whitespace and surrounding parentheses are ignored; ``""`` and ``"()"``
    denote the empty overpartition.
    """
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    body = body.strip()
    if not body:
        return Overpartition()
    parts = []
    for token in body.split(","):
        token = token.strip()
        overlined = token.endswith("~")
        if overlined:
            token = token[:-1]
        try:
            size = int(token)
        except ValueError:
            raise ValueError(f"bad part {token!r} in {text!r}") from None
        if size < 1:
            raise ValueError(f"part sizes must be positive, got {size}")
        parts.append(Part(size, overlined))
    return canonicalize(parts)


def parse_partition(text: str) -> Partition:
    return parse(text).to_partition()


@dataclass(frozen=True, slots=True)
class StatProfile:
    LN: int
    SN: int
    LO: int
    SO: int
    LNx: ExtSize
    SNx: ExtSize
    LOx: ExtSize
    SOx: ExtSize
    l_NgeO: int
    l_NgtO: int
    l_OgeN: int
    l_OgtN: int
    l_NleO: int
    l_NltO: int
    l_OleN: int
    l_OltN: int
    l_total: int
    l_over: int

    @property
    def l_plain(self) -> int:
        return self.l_total - self.l_over


#: The ten statistics a parity or signed sum can be taken over.
STATISTICS = (
    "l_NgeO", "l_NgtO", "l_OgeN", "l_OgtN",
    "l_NleO", "l_NltO", "l_OleN", "l_OltN",
    "l_total", "l_over",
)


def stat_profile(pi: Overpartition) -> StatProfile:
    plain = [p.size for p in pi.parts if not p.overlined]
    over = [p.size for p in pi.parts if p.overlined]
    # parts are decreasing, so the first entry is the largest
    LN, SN = (plain[0], plain[-1]) if plain else (0, 0)
    LO, SO = (over[0], over[-1]) if over else (0, 0)
    LNx, SNx = (LN, SN) if plain else (INF, INF)
    LOx, SOx = (LO, SO) if over else (INF, INF)
    return StatProfile(
        LN=LN, SN=SN, LO=LO, SO=SO,
        LNx=LNx, SNx=SNx, LOx=LOx, SOx=SOx,
        l_NgeO=sum(1 for s in plain if s >= SO),
        l_NgtO=sum(1 for s in plain if s > SO),
        l_OgeN=sum(1 for s in over if s >= SN),
        l_OgtN=sum(1 for s in over if s > SN),
        l_NleO=sum(1 for s in plain if s <= LOx),
        l_NltO=sum(1 for s in plain if s < LOx),
        l_OleN=sum(1 for s in over if s <= LNx),
        l_OltN=sum(1 for s in over if s < LNx),
        l_total=len(plain) + len(over),
        l_over=len(over),
    )


def size_counts(pi: Overpartition | Partition) -> Counter:
    """Multiplicity of every part size."""
    if isinstance(pi, Partition):
        return Counter(pi.parts)
    return Counter(p.size for p in pi.parts)


def format_ext(value: ExtSize) -> str:
    return "+inf" if value == INF else str(value)
