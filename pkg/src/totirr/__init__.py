"""Total irregularity of graphs and digraphs: exact values, incremental
deltas under edits, closed forms for standard families, and differential
audits of the prediction formulas against a brute-force oracle."""

from .audit import (
    AuditReport,
    AuditRow,
    FormulaStat,
    PredictionOutcome,
    lemma34_suite,
    root_derivative_walk,
    run_arc_transform_suite,
    run_closed_form_suite,
    run_edge_joint_suite,
    run_edge_transform_suite,
)
from .fileio import FormatError, graph_to_text, parse_graph_text, read_graph_file, write_graph_file
from .graphs import (
    AnyGraph,
    ComponentPart,
    DegreeMultiset,
    Digraph,
    EditError,
    EditKind,
    EditOp,
    Graph,
    GraphError,
    apply_edit,
    degree_multiset,
    edit_degree_changes,
    is_cut_edge,
    split_at_cut_edge,
)
from .irregularity import (
    IrrPair,
    delta_for_degree_change,
    exact_delta_for_edit,
    irr_digraph,
    irr_fast,
    irr_graph,
    irr_naive,
    union_cross_term,
)
from .partitions import (
    ArcPartitionCounts,
    JointPartitionCounts,
    Relation,
    TransformPartitionCounts,
    arc_partition,
    joint_partition,
    transform_counts,
    transform_partition,
)
from .predictors import (
    FORMULA_IS_DELTA,
    FormulaId,
    Prediction,
    bipartite_closed_form,
    complete_closed_form,
    cycle_closed_form,
    path_closed_form,
    prop27,
    prop27_formula_id,
    prop47_formula_id,
    prop47_predict,
    thm21_final,
    thm21_interim,
    thm33_formula_id,
    thm33_predict,
)
from .rng import SplitMix64
from .transforms import (
    arc_transformation,
    branch_transformation,
    disjoint_union,
    edge_joint,
    edge_transformation,
    reverse_arc,
)

__version__ = "0.1.0"

__all__ = [
    "AnyGraph",
    "ArcPartitionCounts",
    "AuditReport",
    "AuditRow",
    "ComponentPart",
    "DegreeMultiset",
    "Digraph",
    "EditError",
    "EditKind",
    "EditOp",
    "FORMULA_IS_DELTA",
    "FormatError",
    "FormulaId",
    "FormulaStat",
    "Graph",
    "GraphError",
    "IrrPair",
    "JointPartitionCounts",
    "Prediction",
    "PredictionOutcome",
    "Relation",
    "SplitMix64",
    "TransformPartitionCounts",
    "apply_edit",
    "arc_partition",
    "arc_transformation",
    "bipartite_closed_form",
    "branch_transformation",
    "complete_closed_form",
    "cycle_closed_form",
    "degree_multiset",
    "delta_for_degree_change",
    "disjoint_union",
    "edge_joint",
    "edge_transformation",
    "edit_degree_changes",
    "exact_delta_for_edit",
    "graph_to_text",
    "irr_digraph",
    "irr_fast",
    "irr_graph",
    "irr_naive",
    "is_cut_edge",
    "joint_partition",
    "lemma34_suite",
    "parse_graph_text",
    "path_closed_form",
    "prop27",
    "prop27_formula_id",
    "prop47_formula_id",
    "prop47_predict",
    "read_graph_file",
    "reverse_arc",
    "root_derivative_walk",
    "run_arc_transform_suite",
    "run_closed_form_suite",
    "run_edge_joint_suite",
    "run_edge_transform_suite",
    "split_at_cut_edge",
    "thm21_final",
    "thm21_interim",
    "thm33_formula_id",
    "thm33_predict",
    "transform_counts",
    "transform_partition",
    "union_cross_term",
]
