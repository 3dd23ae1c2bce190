"""Judgment-matrix validation, consistency, and weight derivation."""

import math
import warnings

import numpy as np
import pytest

from cpccms import fileio
from cpccms.pairwise import (
    AccordanceVerdict,
    InvalidMatrixError,
    MatrixStructureError,
    NegativeUtilityWarning,
    PairwiseOppositeMatrix,
    accordance_index,
    classify_accordance,
    normalize_weights,
    rau_utilities,
    validate_pom,
    weights_from_pom,
)


def brute_force_accordance(entries, kappa):
    """Independent triple-loop evaluation of the accordance index."""
    n = len(entries)
    total = 0.0
    for i in range(n):
        for j in range(n):
            inner = 0.0
            for p in range(n):
                inner += ((entries[i][p] + entries[p][j] - entries[i][j]) / kappa) ** 2
            total += math.sqrt(inner / n)
    return total / (n * n)


def random_valid_pom(rng, n=None, kappa=8.0, integer=False):
    n = n or int(rng.integers(2, 11))
    if integer:
        upper = rng.integers(-int(kappa), int(kappa) + 1, size=(n, n)).astype(float)
    else:
        upper = rng.uniform(-kappa, kappa, size=(n, n))
    b = np.triu(upper, k=1)
    b = b - b.T
    return PairwiseOppositeMatrix(tuple(f"c{i}" for i in range(n)), b, kappa)


@pytest.fixture(scope="module")
def pom7(fixtures_dir):
    return fileio.load_pom(fixtures_dir / "pom_seven_criteria.json")


@pytest.fixture(scope="module")
def pom8(fixtures_dir):
    return fileio.load_pom(fixtures_dir / "pom_eight_criteria.json")


class TestValidation:
    def test_reference_matrix_is_valid(self, pom7):
        assert validate_pom(pom7).ok

    def test_zero_matrix_is_valid(self):
        assert validate_pom(PairwiseOppositeMatrix.zero(["a", "b"])).ok

    def test_antisymmetry_violation_reported_with_cell(self):
        pom = PairwiseOppositeMatrix(("a", "b"), [[0, 3], [2, 0]])
        result = validate_pom(pom)
        assert not result.ok
        kinds = {(v.kind, v.row, v.col) for v in result.violations}
        assert ("antisymmetry", 0, 1) in kinds

    def test_diagonal_and_range_violations(self):
        pom = PairwiseOppositeMatrix(("a", "b"), [[1, 9], [-9, 0]], kappa=8)
        result = validate_pom(pom)
        kinds = {v.kind for v in result.violations}
        assert kinds == {"diagonal", "range"}

    def test_structural_errors(self):
        with pytest.raises(MatrixStructureError):
            validate_pom(PairwiseOppositeMatrix(("a", "b"), [[0, 1, 2], [3, 4, 5]]))
        with pytest.raises(MatrixStructureError):
            validate_pom(PairwiseOppositeMatrix(("a",), [[0]]))
        with pytest.raises(MatrixStructureError):
            validate_pom(PairwiseOppositeMatrix(("a", "b"), [[0, 1], [-1, 0]], kappa=0))

    def test_loader_rejects_invalid_with_diagnostics(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"kappa": 8, "criteria": ["a", "b"], "entries": [[0, 3], [2, 0]]}')
        with pytest.raises(InvalidMatrixError, match=r"\(0, 1\)"):
            fileio.load_pom(bad)


class TestAccordanceIndex:
    def test_reference_values(self, pom7, pom8):
        assert accordance_index(pom7) == pytest.approx(0.0747, abs=5e-4)
        assert accordance_index(pom8) == pytest.approx(0.0647, abs=5e-4)

    def test_difference_matrix_is_consistent(self):
        utilities = [3.0, 1.5, -2.0, 0.25]
        b = [[u - v for v in utilities] for u in utilities]
        pom = PairwiseOppositeMatrix(("a", "b", "c", "d"), b, kappa=8)
        assert accordance_index(pom) <= 1e-9

    def test_matches_brute_force_on_random_matrices(self):
        rng = np.random.default_rng(42)
        for _ in range(25):
            pom = random_valid_pom(rng, n=4)
            expected = brute_force_accordance(pom.entries.tolist(), pom.kappa)
            assert accordance_index(pom) == pytest.approx(expected, abs=1e-12)

    def test_verdict_thresholds(self):
        assert classify_accordance(0.0747) is AccordanceVerdict.ACCEPTABLE
        assert classify_accordance(0.0) is AccordanceVerdict.CONSISTENT
        assert classify_accordance(0.2) is AccordanceVerdict.NEEDS_REVISION
        assert classify_accordance(0.1) is AccordanceVerdict.ACCEPTABLE
        with pytest.raises(ValueError):
            classify_accordance(-0.1)


class TestUtilitiesAndWeights:
    def test_first_row_utility(self, pom7):
        utilities = rau_utilities(pom7)
        assert utilities.values[0] == pytest.approx(4.428, abs=1e-3)

    def test_zero_matrix_gives_kappa(self):
        pom = PairwiseOppositeMatrix.zero(["a", "b", "c"], kappa=8)
        assert rau_utilities(pom).values == (8.0, 8.0, 8.0)

    def test_mcc_row_of_eight_criteria_matrix(self, pom8):
        # hand arithmetic: 8 + (7+5+4+3+6+0+2+8)/8 = 12.375, weight 12.375/64
        utilities = rau_utilities(pom8)
        assert utilities.values[5] == pytest.approx(12.375, abs=1e-12)
        weights = normalize_weights(utilities, pom8.kappa, pom8.n)
        assert weights.weights[5] == pytest.approx(0.193, abs=1e-3)

    def test_first_weight(self, pom7):
        weights = weights_from_pom(pom7)
        assert weights.weights[0] == pytest.approx(0.079, abs=1e-3)

    def test_uniform_weights_for_zero_matrix(self):
        weights = weights_from_pom(PairwiseOppositeMatrix.zero(["a", "b", "c", "d"]))
        assert all(w == pytest.approx(0.25, abs=1e-12) for w in weights.weights)

    def test_eight_criteria_weights(self, pom8):
        expected = (0.090, 0.117, 0.133, 0.150, 0.104, 0.193, 0.166, 0.047)
        for got, want in zip(weights_from_pom(pom8).weights, expected):
            assert got == pytest.approx(want, abs=1e-3)

    def test_normalize_rejects_zero_denominator(self, pom7):
        utilities = rau_utilities(pom7)
        with pytest.raises(ValueError):
            normalize_weights(utilities, 0.0, pom7.n)

    def test_validated_utilities_are_positive(self):
        # with |b| <= kappa enforced, every utility is at least kappa / n
        rng = np.random.default_rng(14)
        for _ in range(30):
            pom = random_valid_pom(rng)
            assert min(rau_utilities(pom).values) >= pom.kappa / pom.n - 1e-12

    def test_negative_utilities_warn_not_clamp(self):
        from cpccms.pairwise import UtilityVector

        handmade = UtilityVector(("a", "b"), (-1.0, 3.0))
        with pytest.warns(NegativeUtilityWarning):
            weights = normalize_weights(handmade, kappa=1.0, n=2)
        assert weights.weights == (-0.5, 1.5)
        assert math.fsum(weights.weights) == pytest.approx(1.0, abs=1e-9)


class TestProperties:
    def test_weight_sum_is_one(self):
        rng = np.random.default_rng(7)
        for _ in range(100):
            pom = random_valid_pom(rng)
            assert math.fsum(weights_from_pom(pom).weights) == pytest.approx(1.0, abs=1e-9)

    def test_permutation_equivariance_exact(self):
        rng = np.random.default_rng(8)
        for _ in range(50):
            pom = random_valid_pom(rng)
            perm = rng.permutation(pom.n)
            permuted = PairwiseOppositeMatrix(
                tuple(pom.criteria[k] for k in perm),
                pom.entries[np.ix_(perm, perm)],
                pom.kappa,
            )
            base = weights_from_pom(pom).weights
            assert weights_from_pom(permuted).weights == tuple(base[k] for k in perm)

    def test_negation_symmetry(self):
        rng = np.random.default_rng(9)
        for _ in range(50):
            pom = random_valid_pom(rng)
            negated = PairwiseOppositeMatrix(pom.criteria, -pom.entries, pom.kappa)
            v = rau_utilities(pom).values
            v_neg = rau_utilities(negated).values
            for a, b in zip(v, v_neg):
                assert b == pytest.approx(2 * pom.kappa - a, abs=1e-9)
            assert accordance_index(negated) == pytest.approx(accordance_index(pom), abs=1e-12)

    def test_rank_ordering_monotone_in_row_sums(self):
        rng = np.random.default_rng(10)
        for _ in range(50):
            pom = random_valid_pom(rng)
            sums = pom.entries.sum(axis=1)
            weights = weights_from_pom(pom).weights
            for i in range(pom.n):
                for j in range(pom.n):
                    if sums[i] > sums[j] + 1e-12:
                        assert weights[i] > weights[j]
