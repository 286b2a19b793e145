"""Local search laboratory: pivoting over subset and circuit problems,
gadget reductions between them, weight reduction and brute-force checks."""

from __future__ import annotations

from .core import (CertificationError, EnumerationOverflow, ImprovingSequence, LocalSearchInstance, PivotingRule,
                   Sense, SequenceCheck, TransitionGraph, apply_pivot, build_transition_graph, from_bitstring,
                   from_indices, is_local_optimum, to_bitstring, to_indices, verify_improving_sequence)
from .problems import (Certifier, CircuitInstance, Gate, MaxCutInstance, SwopInstance, embed_maxcut_as_swop,
                       identity_circuit, independent_set_instance, max_circuit_weights)
from .reductions import (ReductionBundle, direct_sequence, reduce_maxcut_to_wis, reduce_mis_to_wis_pivot,
                         reduce_swop_to_maxcircuit)
from .solvers import (SolveReport, circuit_output_bounded_solve, fpt_distinct_weights_solve, pivot_search_bounded,
                      standard_local_search)
from .verify import check_l_tight, check_tight_reduction, growth_experiment, measure_shortest_max_sequence
from .weight_reduction import frank_tardos_reduce, lll_reduce, verify_sign_preservation

__version__ = "0.1.0"

__all__ = [
    "CertificationError", "Certifier", "CircuitInstance", "EnumerationOverflow", "Gate", "ImprovingSequence",
    "LocalSearchInstance", "MaxCutInstance", "PivotingRule", "ReductionBundle", "Sense", "SequenceCheck",
    "SolveReport", "SwopInstance", "TransitionGraph", "apply_pivot", "build_transition_graph", "check_l_tight",
    "check_tight_reduction", "circuit_output_bounded_solve", "direct_sequence", "embed_maxcut_as_swop",
    "fpt_distinct_weights_solve", "frank_tardos_reduce", "from_bitstring", "from_indices", "growth_experiment",
    "identity_circuit", "independent_set_instance", "is_local_optimum", "lll_reduce", "max_circuit_weights",
    "measure_shortest_max_sequence", "pivot_search_bounded", "reduce_maxcut_to_wis", "reduce_mis_to_wis_pivot",
    "reduce_swop_to_maxcircuit", "standard_local_search", "to_bitstring", "to_indices", "verify_improving_sequence",
    "verify_sign_preservation",
]
