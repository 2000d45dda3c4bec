import pytest
from fastapi.testclient import TestClient

from ngramspell.service import create_app


@pytest.fixture(scope="module")
def client(paper_index, tmp_path_factory):
    path = tmp_path_factory.mktemp("service") / "paper.ngidx"
    paper_index.save(path)
    with TestClient(create_app(path)) as tc:
        yield tc


@pytest.fixture(scope="module")
def bare_client():
    with TestClient(create_app()) as tc:
        yield tc


class TestHealth:
    def test_reports_loaded_index(self, client):
        body = client.get("/health").json()
        assert body["status"] == "ok"
        assert body["index_loaded"] is True
        assert body["orders"]["1"] > 0

    def test_reports_missing_index(self, bare_client):
        body = bare_client.get("/health").json()
        assert body["index_loaded"] is False
        assert body["orders"] is None


class TestCheck:
    def test_corrects_text(self, client):
        resp = client.post(
            "/check", json={"text": "they also work with plastic modil kits"}
        )
        assert resp.status_code == 200
        body = resp.json()
        assert body["corrected_text"] == "they also work with plastic model kits"
        (rec,) = body["corrections"]
        assert rec["original"] == "modil"
        assert rec["chosen"] == "model"
        assert rec["kind"] == "non-word"
        assert rec["nominee_frequency"] == 17

    def test_options_pass_through(self, client):
        resp = client.post(
            "/check",
            json={"text": "plastic modil kits", "k": 3, "threads": 2, "backoff": False},
        )
        assert resp.status_code == 200

    def test_unloaded_service_is_unavailable(self, bare_client):
        resp = bare_client.post("/check", json={"text": "hello"})
        assert resp.status_code == 503

    def test_validation_error(self, client):
        resp = client.post("/check", json={"text": "x", "k": 0})
        assert resp.status_code == 422


class TestDetect:
    def test_lists_errors(self, client):
        resp = client.post("/detect", json={"text": "plastic modil kits", "threads": 2})
        assert resp.status_code == 200
        assert resp.json()["errors"] == [
            {"token_index": 1, "word": "modil", "kind": "non-word"}
        ]


class TestCandidates:
    def test_ranked_candidates(self, client):
        resp = client.post("/candidates", json={"word": "modil", "k": 5})
        assert resp.status_code == 200
        body = resp.json()
        assert body["error_word"] == "modil"
        words = [c["word"] for c in body["candidates"]]
        assert "model" in words and "modal" in words

    def test_degenerate_word(self, client):
        resp = client.post("/candidates", json={"word": "a"})
        assert resp.status_code == 422


class TestBaselines:
    def test_soundex(self, client):
        resp = client.post("/baseline/soundex", json={"word": "Robert"})
        assert resp.json() == {"code": "R163"}

    def test_soundex_rejects_nonalpha(self, client):
        assert client.post("/baseline/soundex", json={"word": "v2"}).status_code == 422

    def test_editdist(self, client):
        resp = client.post("/baseline/editdist", json={"a": "rick", "b": "rocky"})
        assert resp.json() == {"distance": 2}

    def test_hamming_unequal(self, client):
        resp = client.post("/baseline/hamming", json={"a": "rick", "b": "rocky"})
        assert resp.status_code == 422

    def test_lcs(self, client):
        resp = client.post("/baseline/lcs", json={"a": "abcde", "b": "ace"})
        assert resp.json() == {"length": 3, "subsequence": "ace"}
