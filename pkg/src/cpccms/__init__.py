"""Criterion weighting from pairwise judgments, classification metrics, and
weighted decision-matrix model ranking, with a small text pipeline that
generates real evaluation records to rank."""

from .decision import (
    CriteriaMismatchError,
    DecisionMatrix,
    RankedModel,
    Ranking,
    assemble_matrix,
    rank,
    rank_models,
    ranking_report,
    weighted_scores,
    with_efficiency_column,
)
from .metrics import (
    CRITERIA_ORDER,
    EFFICIENCY,
    ConfusionMatrix,
    CriterionScores,
    OneVsRestCounts,
    confusion_from_labels,
    criterion_scores,
    efficiency,
    one_vs_rest,
)
from .pairwise import (
    AccordanceReport,
    AccordanceVerdict,
    InvalidMatrixError,
    MatrixStructureError,
    NegativeUtilityWarning,
    PairwiseOppositeMatrix,
    UtilityVector,
    ValidationResult,
    Violation,
    WeightVector,
    accordance_index,
    accordance_report,
    classify_accordance,
    normalize_weights,
    rau_utilities,
    validate_pom,
    weights_from_pom,
)

__version__ = "0.1.0"
