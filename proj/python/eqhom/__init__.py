"""Finite equivariant homotopy toolkit."""

from ._core import (
    GSSet,
    Group,
    InputError,
    OrbitCategory,
    Ring,
    Subgroup,
    VerificationError,
    all_subgroups,
    are_conjugate,
    homology,
    invariant_homology,
    run_cli,
)

__all__ = [
    "GSSet",
    "Group",
    "InputError",
    "OrbitCategory",
    "Ring",
    "Subgroup",
    "VerificationError",
    "all_subgroups",
    "are_conjugate",
    "homology",
    "invariant_homology",
    "run_cli",
]
