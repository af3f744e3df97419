"""Parity identities on overpartition statistics, checked by enumeration and by q-series."""

from .core import Overpartition, Part, Partition, StatProfile, parse, parse_partition, stat_profile
from .counting import ParityFamilyId, RhsId, parity_pair, rhs_count, signed_sum
from .families import FamilyId, SetId, enumerate_family, member
from .qseries import ExprId, Series, build
from .verify import run_all, verify_identity, verify_map

__version__ = "0.1.0"

__all__ = [
    "ExprId", "FamilyId", "Overpartition", "ParityFamilyId", "Part", "Partition", "RhsId",
    "Series", "SetId", "StatProfile", "build", "enumerate_family", "member", "parity_pair",
    "parse", "parse_partition", "rhs_count", "run_all", "signed_sum", "stat_profile",
    "verify_identity", "verify_map",
]
