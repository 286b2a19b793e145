"""Constructions that map one local search problem onto another."""

from __future__ import annotations

from .bundle import ReductionBundle, identity_bundle
from .maxcut_wis import (DEFAULT_PARTITION_BUDGET, MaxCutWisBundle, NotAnImprovingFlip, PartitionBudgetExceeded,
                         direct_sequence, improving_partitions, normalization_scale, reduce_maxcut_to_wis)
from .mis_wis import (InputContractError, MisWisLayout, MisWisResult, MulticoloredGraph, reduce_mis_to_wis_pivot)
from .swop_circuit import (FORMS, StructuredString, build_h_circuit, decode_structured, h_value, psi_value,
                           reduce_swop_to_maxcircuit, structured_strings, walk_strings)

__all__ = [
    "DEFAULT_PARTITION_BUDGET", "FORMS", "InputContractError", "MaxCutWisBundle", "MisWisLayout", "MisWisResult",
    "MulticoloredGraph", "NotAnImprovingFlip", "PartitionBudgetExceeded", "ReductionBundle", "StructuredString",
    "build_h_circuit", "decode_structured", "direct_sequence", "h_value", "identity_bundle", "improving_partitions",
    "normalization_scale", "psi_value", "reduce_maxcut_to_wis", "reduce_mis_to_wis_pivot", "reduce_swop_to_maxcircuit",
    "structured_strings", "walk_strings",
]
