"""Superelliptic family tables: signatures, repair, classification."""

from ._supell import (
    Dataset,
    FamilyRecord,
    InconsistentSignature,
    ReducedGroup,
    RepairOutcome,
    SchemaError,
    Signature,
    classify,
    classify_signature,
    complete_signature,
    cyclic_branch_data_valid,
    enumerate_levels,
    expected_blue,
    from_json,
    full_group_order,
    is_odd_signature,
    load_embedded,
    moduli_dimension,
    possibly_not_definable,
    quotient_genus,
    superelliptic_genus,
    verify,
)

__all__ = [
    "Dataset",
    "FamilyRecord",
    "InconsistentSignature",
    "ReducedGroup",
    "RepairOutcome",
    "SchemaError",
    "Signature",
    "classify",
    "classify_signature",
    "complete_signature",
    "cyclic_branch_data_valid",
    "enumerate_levels",
    "expected_blue",
    "from_json",
    "full_group_order",
    "is_odd_signature",
    "load_embedded",
    "moduli_dimension",
    "possibly_not_definable",
    "quotient_genus",
    "superelliptic_genus",
    "verify",
]
