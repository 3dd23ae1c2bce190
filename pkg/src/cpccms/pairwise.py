"""Pairwise opposite matrices: validation, consistency checking, and weight derivation.

A pairwise opposite matrix (POM) holds additive expert judgments ``b[i][j]``
meaning "criterion i is b units more important than criterion j" on a scale
bounded by the normal utility ``kappa``. The matrix is antisymmetric with a
zero diagonal. Utilities come from the row-average-plus-utility (RAU)
operator and are rescaled to weights that always sum to one.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Sequence

import numpy as np

DEFAULT_KAPPA = 8.0

#: Accordance index at or below this value counts as fully consistent.
CONSISTENT_TOLERANCE = 1e-9
#: Accordance index above this value means the judgments need revision.
REVISION_THRESHOLD = 0.1


class MatrixStructureError(ValueError):
    """The input cannot even be interpreted as a judgment matrix."""


class InvalidMatrixError(ValueError):
    """A structurally sound matrix violates one or more invariants."""

    def __init__(self, violations: Sequence["Violation"]):
        self.violations = tuple(violations)
        lines = "; ".join(v.message for v in self.violations)
        super().__init__(f"invalid pairwise opposite matrix: {lines}")


class NegativeUtilityWarning(UserWarning):
    """Some derived utilities are negative; downstream weights may be too."""


@dataclass(frozen=True)
class Violation:
    """One violated matrix invariant, pinned to a cell."""

    kind: str  # "diagonal" | "antisymmetry" | "range"
    row: int
    col: int
    message: str


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    violations: tuple[Violation, ...]


@dataclass(frozen=True)
class PairwiseOppositeMatrix:
    """Expert judgments over ``criteria`` with judgment bound ``kappa``.

    ``entries`` is an n x n float array; treat instances as immutable.
    """

    criteria: tuple[str, ...]
    entries: np.ndarray
    kappa: float = DEFAULT_KAPPA

    def __post_init__(self) -> None:
        object.__setattr__(self, "criteria", tuple(self.criteria))
        try:
            arr = np.array(self.entries, dtype=float)
        except (TypeError, ValueError) as exc:
            raise MatrixStructureError(f"entries are not a rectangular numeric matrix: {exc}") from exc
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)
        object.__setattr__(self, "kappa", float(self.kappa))

    @property
    def n(self) -> int:
        return len(self.criteria)

    @classmethod
    def zero(cls, criteria: Sequence[str], kappa: float = DEFAULT_KAPPA) -> "PairwiseOppositeMatrix":
        return cls(tuple(criteria), np.zeros((len(criteria), len(criteria))), kappa)

    @classmethod
    def from_upper_triangle(
        cls,
        criteria: Sequence[str],
        judgments: Mapping[tuple[int, int], float],
        kappa: float = DEFAULT_KAPPA,
    ) -> "PairwiseOppositeMatrix":
        """Build a matrix from upper-triangle judgments, mirroring b[j][i] = -b[i][j]."""
        n = len(criteria)
        entries = np.zeros((n, n))
        for (i, j), value in judgments.items():
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise MatrixStructureError(f"judgment index ({i}, {j}) is not an off-diagonal cell")
            entries[i, j] = value
            entries[j, i] = -value
        return cls(tuple(criteria), entries, kappa)


@dataclass(frozen=True)
class UtilityVector:
    """Per-criterion utilities in judgment units; they sum to n * kappa."""

    criteria: tuple[str, ...]
    values: tuple[float, ...]


@dataclass(frozen=True)
class WeightVector:
    """Dimensionless criterion weights.

    Weights derived through :func:`normalize_weights` sum to one; the class
    itself stays permissive so callers can build what-if variants (scaled or
    zero-padded) for sensitivity checks.
    """

    criteria: tuple[str, ...]
    weights: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "criteria", tuple(self.criteria))
        object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))
        if len(self.criteria) != len(self.weights):
            raise ValueError("criteria and weights differ in length")

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.criteria, self.weights))


class AccordanceVerdict(str, Enum):
    CONSISTENT = "Consistent"
    ACCEPTABLE = "Acceptable"
    NEEDS_REVISION = "NeedsRevision"


@dataclass(frozen=True)
class AccordanceReport:
    ai: float
    verdict: AccordanceVerdict


def _check_structure(pom: PairwiseOppositeMatrix) -> None:
    if pom.entries.ndim != 2 or pom.entries.shape[0] != pom.entries.shape[1]:
        raise MatrixStructureError(f"entries must be square, got shape {pom.entries.shape}")
    if pom.entries.shape[0] != pom.n:
        raise MatrixStructureError(
            f"{pom.n} criteria but entries are {pom.entries.shape[0]}x{pom.entries.shape[1]}"
        )
    if pom.n < 2:
        raise MatrixStructureError("at least two criteria are required")
    if not math.isfinite(pom.kappa) or pom.kappa <= 0:
        raise MatrixStructureError(f"kappa must be a positive finite number, got {pom.kappa}")
    if len(set(pom.criteria)) != pom.n:
        raise MatrixStructureError("criteria names must be unique")
    if not np.all(np.isfinite(pom.entries)):
        raise MatrixStructureError("entries must all be finite")


def validate_pom(pom: PairwiseOppositeMatrix) -> ValidationResult:
    """Check the diagonal, antisymmetry, and range invariants cell by cell.

    Structural problems (non-square entries, n < 2, kappa <= 0) raise
    :class:`MatrixStructureError`; invariant violations are returned.
    """
    _check_structure(pom)
    b = pom.entries
    violations: list[Violation] = []
    for i in range(pom.n):
        if b[i, i] != 0.0:
            violations.append(
                Violation("diagonal", i, i, f"diagonal cell ({i}, {i}) is {b[i, i]}, expected 0")
            )
    for i in range(pom.n):
        for j in range(i + 1, pom.n):
            if b[i, j] != -b[j, i]:
                violations.append(
                    Violation(
                        "antisymmetry",
                        i,
                        j,
                        f"cells ({i}, {j})={b[i, j]} and ({j}, {i})={b[j, i]} are not opposite",
                    )
                )
    rows, cols = np.nonzero(np.abs(b) > pom.kappa)
    for i, j in zip(rows.tolist(), cols.tolist()):
        violations.append(
            Violation("range", i, j, f"|cell ({i}, {j})| = {abs(b[i, j])} exceeds kappa = {pom.kappa}")
        )
    return ValidationResult(ok=not violations, violations=tuple(violations))


def require_valid(pom: PairwiseOppositeMatrix) -> None:
    """Raise :class:`InvalidMatrixError` unless every invariant holds."""
    result = validate_pom(pom)
    if not result.ok:
        raise InvalidMatrixError(result.violations)


def accordance_index(pom: PairwiseOppositeMatrix) -> float:
    """Consistency of the judgments; 0 means perfectly consistent.

    Averages, over all cell pairs, the root-mean-square transitivity gap
    (b[i][p] + b[p][j] - b[i][j]) / kappa across intermediate criteria p.
    """
    require_valid(pom)
    b = pom.entries
    gaps = (b[:, None, :] + b.T[None, :, :] - b[:, :, None]) / pom.kappa
    return float(np.mean(np.sqrt(np.mean(gaps * gaps, axis=2))))


def classify_accordance(ai: float) -> AccordanceVerdict:
    """Map an accordance index to Consistent / Acceptable / NeedsRevision."""
    if ai < 0 or not math.isfinite(ai):
        raise ValueError(f"accordance index must be a nonnegative number, got {ai}")
    if ai <= CONSISTENT_TOLERANCE:
        return AccordanceVerdict.CONSISTENT
    if ai > REVISION_THRESHOLD:
        return AccordanceVerdict.NEEDS_REVISION
    return AccordanceVerdict.ACCEPTABLE


def accordance_report(pom: PairwiseOppositeMatrix) -> AccordanceReport:
    ai = accordance_index(pom)
    return AccordanceReport(ai=ai, verdict=classify_accordance(ai))


def rau_utilities(pom: PairwiseOppositeMatrix) -> UtilityVector:
    """Row average plus normal utility: v[i] = kappa + mean_j b[i][j].

    Row sums use :func:`math.fsum` so the result does not depend on column
    order; permuting criteria therefore permutes the utilities exactly.
    For a range-valid matrix every utility is at least kappa / n > 0.
    """
    require_valid(pom)
    values = tuple(pom.kappa + math.fsum(row) / pom.n for row in pom.entries.tolist())
    return UtilityVector(criteria=pom.criteria, values=values)


def normalize_weights(utilities: UtilityVector, kappa: float, n: int) -> WeightVector:
    """Rescale utilities to weights w[i] = v[i] / (n * kappa), summing to one.

    Negative utilities (possible only for hand-built vectors, never from a
    validated matrix) are passed through with a warning rather than clamped.
    """
    if n != len(utilities.values):
        raise ValueError(f"n = {n} does not match {len(utilities.values)} utilities")
    if n * kappa == 0:
        raise ValueError("n * kappa must be nonzero")
    if any(v < 0 for v in utilities.values):
        warnings.warn(
            "some utilities are negative; derived weights will be negative too",
            NegativeUtilityWarning,
            stacklevel=2,
        )
    return WeightVector(
        criteria=utilities.criteria,
        weights=tuple(v / (n * kappa) for v in utilities.values),
    )


def weights_from_pom(pom: PairwiseOppositeMatrix) -> WeightVector:
    """Convenience chain: RAU utilities rescaled to a normalized weight vector."""
    return normalize_weights(rau_utilities(pom), pom.kappa, pom.n)
