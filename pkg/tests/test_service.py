"""HTTP session API: elicitation, ranking, what-ifs, and persistence."""

import json
import random

import pytest
from fastapi.testclient import TestClient

from cpccms import fileio
from cpccms.pairwise import PairwiseOppositeMatrix, accordance_index, weights_from_pom
from cpccms.service import create_app

CRITERIA7 = ["accuracy", "precision", "recall", "f1", "specificity", "mcc", "kappa"]
CRITERIA8 = CRITERIA7 + ["efficiency"]


@pytest.fixture()
def client(tmp_path):
    app = create_app(state_dir=tmp_path / "state")
    with TestClient(app) as test_client:
        yield test_client


def new_session(client, criteria=None, kappa=8.0):
    response = client.post("/sessions", json={"criteria": criteria or CRITERIA7, "kappa": kappa})
    assert response.status_code == 201, response.text
    return response.json()["id"]


def enter_matrix(client, session_id, entries):
    last = None
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            if entries[i][j] != 0:
                response = client.put(
                    f"/sessions/{session_id}/judgments/{i}/{j}",
                    json={"value": entries[i][j]},
                )
                assert response.status_code == 200, response.text
                last = response.json()
    return last


def attach_case1(client, session_id, fixtures_dir):
    matrix = fileio.load_decision_matrix_csv(fixtures_dir / "case1_scores.csv")
    response = client.put(
        f"/sessions/{session_id}/scores",
        json={
            "models": list(matrix.models),
            "criteria": list(matrix.criteria),
            "scores": matrix.scores.tolist(),
        },
    )
    assert response.status_code == 200, response.text
    timings = fileio.load_timings_csv(fixtures_dir / "case1_timings.csv")
    response = client.put(f"/sessions/{session_id}/timings", json={"timings": timings})
    assert response.status_code == 200, response.text


class TestSessionLifecycle:
    def test_create_starts_consistent_and_uniform(self, client):
        session_id = new_session(client)
        snapshot = client.get(f"/sessions/{session_id}").json()
        assert snapshot["revision"] == 0
        assert snapshot["verdict"] == "Consistent"
        assert all(w == pytest.approx(1 / 7) for w in snapshot["weights"].values())

    def test_single_criterion_rejected(self, client):
        response = client.post("/sessions", json={"criteria": ["only"], "kappa": 8})
        assert response.status_code == 400
        assert response.json()["code"] == "too_few_criteria"

    def test_duplicate_criteria_rejected(self, client):
        response = client.post("/sessions", json={"criteria": ["a", "a"], "kappa": 8})
        assert response.status_code == 400
        assert response.json()["code"] == "duplicate_criteria"

    def test_eight_criteria_session(self, client):
        session_id = new_session(client, CRITERIA8)
        snapshot = client.get(f"/sessions/{session_id}").json()
        assert len(snapshot["criteria"]) == 8

    def test_unknown_session_is_404(self, client):
        response = client.get("/sessions/nope")
        assert response.status_code == 404
        assert response.json()["code"] == "unknown_session"


class TestJudgments:
    def test_write_mirrors_and_bumps_revision(self, client):
        session_id = new_session(client)
        payload = client.put(f"/sessions/{session_id}/judgments/0/1", json={"value": -2}).json()
        assert payload["revision"] == 1
        snapshot = client.get(f"/sessions/{session_id}").json()
        assert snapshot["entries"][0][1] == -2
        assert snapshot["entries"][1][0] == 2

    def test_full_reference_matrix(self, client, fixtures_dir):
        pom = fileio.load_pom(fixtures_dir / "pom_seven_criteria.json")
        session_id = new_session(client)
        last = enter_matrix(client, session_id, pom.entries.tolist())
        assert last["ai"] == pytest.approx(0.0747, abs=5e-4)
        assert last["verdict"] == "Acceptable"
        assert last["weights"]["accuracy"] == pytest.approx(0.079, abs=1e-3)
        assert last["weights"]["mcc"] == pytest.approx(0.237, abs=1e-3)

    def test_set_then_zero_restores(self, client):
        session_id = new_session(client)
        before = client.get(f"/sessions/{session_id}/weights").json()
        client.put(f"/sessions/{session_id}/judgments/2/4", json={"value": 5})
        client.put(f"/sessions/{session_id}/judgments/2/4", json={"value": 0})
        after = client.get(f"/sessions/{session_id}/weights").json()
        assert after["ai"] == before["ai"]
        assert after["weights"] == before["weights"]
        assert after["revision"] == 2

    def test_rejections_leave_revision_unchanged(self, client):
        session_id = new_session(client)
        for path, body, code in [
            ("/judgments/3/3", {"value": 1}, "diagonal_write"),
            ("/judgments/0/1", {"value": 9}, "value_out_of_range"),
            ("/judgments/0/99", {"value": 1}, "index_out_of_range"),
        ]:
            response = client.put(f"/sessions/{session_id}{path}", json=body)
            assert response.status_code == 400
            assert response.json()["code"] == code
        assert client.get(f"/sessions/{session_id}").json()["revision"] == 0

    def test_antisymmetry_unbreakable_under_random_mutations(self, client):
        rng = random.Random(41)
        session_id = new_session(client)
        for _ in range(60):
            i, j = rng.randrange(7), rng.randrange(7)
            value = rng.uniform(-10, 10)
            client.put(f"/sessions/{session_id}/judgments/{i}/{j}", json={"value": value})
        entries = client.get(f"/sessions/{session_id}").json()["entries"]
        for i in range(7):
            assert entries[i][i] == 0
            for j in range(7):
                assert entries[i][j] == -entries[j][i]
                assert abs(entries[i][j]) <= 8

    def test_replay_determinism(self, client):
        rng = random.Random(43)
        mutations = []
        for _ in range(25):
            i, j = rng.sample(range(7), 2)
            mutations.append((i, j, rng.randint(-8, 8)))

        def play(session_id):
            for i, j, value in mutations:
                response = client.put(
                    f"/sessions/{session_id}/judgments/{i}/{j}", json={"value": value}
                )
                assert response.status_code == 200
            return client.get(f"/sessions/{session_id}/weights").json()

        first = play(new_session(client))
        second = play(new_session(client))
        assert first["ai"] == second["ai"]
        assert first["weights"] == second["weights"]
        assert first["revision"] == second["revision"] == 25


class TestRanking:
    def test_case1_without_efficiency(self, client, fixtures_dir):
        pom = fileio.load_pom(fixtures_dir / "pom_seven_criteria.json")
        session_id = new_session(client)
        enter_matrix(client, session_id, pom.entries.tolist())
        attach_case1(client, session_id, fixtures_dir)
        report = client.get(f"/sessions/{session_id}/ranking?efficiency=false").json()
        assert report["best"] == ["ALBERT"]
        by_model = {r["model"]: r for r in report["results"]}
        assert by_model["ALBERT"]["score"] == pytest.approx(0.811, abs=2e-3)

    def test_case1_with_efficiency_flips_best(self, client, fixtures_dir):
        pom = fileio.load_pom(fixtures_dir / "pom_eight_criteria.json")
        session_id = new_session(client, CRITERIA8)
        enter_matrix(client, session_id, pom.entries.tolist())
        attach_case1(client, session_id, fixtures_dir)
        report = client.get(f"/sessions/{session_id}/ranking?efficiency=true").json()
        assert report["best"] == ["XGBoost"]
        by_model = {r["model"]: r for r in report["results"]}
        assert by_model["XGBoost"]["score"] == pytest.approx(0.802, abs=2e-3)

    def test_missing_scores_is_conflict(self, client):
        session_id = new_session(client)
        response = client.get(f"/sessions/{session_id}/ranking")
        assert response.status_code == 409
        assert response.json()["code"] == "missing_scores"

    def test_missing_timings_is_conflict(self, client, fixtures_dir):
        session_id = new_session(client)
        matrix = fileio.load_decision_matrix_csv(fixtures_dir / "case1_scores.csv")
        client.put(
            f"/sessions/{session_id}/scores",
            json={
                "models": list(matrix.models),
                "criteria": list(matrix.criteria),
                "scores": matrix.scores.tolist(),
            },
        )
        response = client.get(f"/sessions/{session_id}/ranking?efficiency=true")
        assert response.status_code == 409
        assert response.json()["code"] == "missing_timings"

    def test_criteria_mismatch_is_conflict(self, client, fixtures_dir):
        session_id = new_session(client, ["speed", "quality"])
        matrix = fileio.load_decision_matrix_csv(fixtures_dir / "case1_scores.csv")
        client.put(
            f"/sessions/{session_id}/scores",
            json={
                "models": list(matrix.models),
                "criteria": list(matrix.criteria),
                "scores": matrix.scores.tolist(),
            },
        )
        response = client.get(f"/sessions/{session_id}/ranking")
        assert response.status_code == 409
        assert response.json()["code"] == "criteria_mismatch"


class TestWhatIf:
    def _prepared_session(self, client, fixtures_dir):
        pom = fileio.load_pom(fixtures_dir / "pom_seven_criteria.json")
        session_id = new_session(client)
        enter_matrix(client, session_id, pom.entries.tolist())
        attach_case1(client, session_id, fixtures_dir)
        return session_id

    def test_empty_override_equals_ranking(self, client, fixtures_dir):
        session_id = self._prepared_session(client, fixtures_dir)
        ranking = client.get(f"/sessions/{session_id}/ranking").json()
        whatif = client.post(f"/sessions/{session_id}/whatif", json={}).json()
        assert whatif == ranking

    def test_judgment_override_matches_in_process_oracle(self, client, fixtures_dir):
        session_id = self._prepared_session(client, fixtures_dir)
        # zero out the mcc-vs-accuracy judgment (cell 5,0) and recompute
        response = client.post(
            f"/sessions/{session_id}/whatif",
            json={"judgment_overrides": [{"i": 5, "j": 0, "value": 0}]},
        )
        assert response.status_code == 200
        report = response.json()

        pom = fileio.load_pom(fixtures_dir / "pom_seven_criteria.json")
        edited = pom.entries.copy()
        edited[5, 0] = 0
        edited[0, 5] = 0
        oracle_pom = PairwiseOppositeMatrix(pom.criteria, edited, pom.kappa)
        oracle_weights = weights_from_pom(oracle_pom)
        for criterion, weight in zip(oracle_weights.criteria, oracle_weights.weights):
            assert report["weights"][criterion] == pytest.approx(weight, abs=1e-12)
        assert report["accordance_index"] == pytest.approx(accordance_index(oracle_pom), abs=1e-12)

    def test_whatif_does_not_mutate_session(self, client, fixtures_dir):
        session_id = self._prepared_session(client, fixtures_dir)
        before = client.get(f"/sessions/{session_id}").json()
        client.post(
            f"/sessions/{session_id}/whatif",
            json={
                "judgment_overrides": [{"i": 0, "j": 1, "value": 3}],
                "score_overrides": [{"model": "LSVC", "criterion": "mcc", "value": 0.1}],
                "efficiency": True,
            },
        )
        after = client.get(f"/sessions/{session_id}").json()
        assert json.dumps(before, sort_keys=True) == json.dumps(after, sort_keys=True)

    def test_invalid_overrides_rejected(self, client, fixtures_dir):
        session_id = self._prepared_session(client, fixtures_dir)
        response = client.post(
            f"/sessions/{session_id}/whatif",
            json={"judgment_overrides": [{"i": 0, "j": 1, "value": 99}]},
        )
        assert response.status_code == 400
        assert response.json()["code"] == "value_out_of_range"
        response = client.post(
            f"/sessions/{session_id}/whatif",
            json={"score_overrides": [{"model": "LSVC", "criterion": "nope", "value": 0.5}]},
        )
        assert response.status_code == 400
        assert response.json()["code"] == "unknown_criterion"


class TestPersistence:
    def test_sessions_survive_restart(self, tmp_path, fixtures_dir):
        state_dir = tmp_path / "state"
        app = create_app(state_dir=state_dir)
        with TestClient(app) as client:
            pom = fileio.load_pom(fixtures_dir / "pom_seven_criteria.json")
            session_id = new_session(client)
            enter_matrix(client, session_id, pom.entries.tolist())
            expected = client.get(f"/sessions/{session_id}/weights").json()

        reloaded = create_app(state_dir=state_dir)
        with TestClient(reloaded) as client:
            snapshot = client.get(f"/sessions/{session_id}/weights").json()
            assert snapshot == expected

    def test_snapshot_written_per_mutation(self, tmp_path):
        state_dir = tmp_path / "state"
        app = create_app(state_dir=state_dir)
        with TestClient(app) as client:
            session_id = new_session(client)
            client.put(f"/sessions/{session_id}/judgments/0/1", json={"value": 4})
            path = state_dir / f"{session_id}.json"
            assert path.exists()
            stored = json.loads(path.read_text())
            assert stored["revision"] == 1
            assert stored["entries"][1][0] == -4
