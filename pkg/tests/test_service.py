import json

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from mwfilt import __version__
from mwfilt.cli import main as cli_main
from mwfilt.service import create_app

LP_BODY = {
    "family": "chebyshev",
    "kind": "lowpass",
    "insertion_loss_db": 40,
    "return_loss_db": 20,
    "band_edges_ghz": [1, 2],
}


@pytest.fixture()
def client():
    return TestClient(create_app())


class TestHealth:
    def test_ok(self, client):
        r = client.get("/api/v1/health")
        assert r.status_code == 200
        assert r.json() == {"status": "ok", "version": __version__}


class TestDesign:
    def test_lowpass(self, client):
        r = client.post("/api/v1/design", json=LP_BODY)
        assert r.status_code == 200
        doc = r.json()
        assert doc["order"] == 6
        assert doc["elements"]["type"] == "ladder"
        assert doc["compute_ms"] > 0

    def test_explicit_grid(self, client):
        body = dict(LP_BODY, grid={"start_ghz": 0.5, "stop_ghz": 1.5, "step_ghz": 0.5})
        r = client.post("/api/v1/design", json=body)
        assert r.status_code == 200
        assert r.json()["response_emulated"]["freq_ghz"] == [0.5, 1.0, 1.5]

    def test_method_selection(self, client):
        r = client.post("/api/v1/design", json=dict(LP_BODY, method="simulate"))
        doc = r.json()
        assert doc["response_emulated"] is None
        assert doc["response_simulated"] is not None

    def test_idempotent(self, client):
        a = client.post("/api/v1/design", json=LP_BODY).json()
        b = client.post("/api/v1/design", json=LP_BODY).json()
        a.pop("compute_ms")
        b.pop("compute_ms")
        assert a == b

    def test_cli_byte_parity(self, client):
        runner = CliRunner()
        cli = runner.invoke(
            cli_main,
            ["design", "--kind", "lp", "--family", "chebyshev", "--la", "40",
             "--lr", "20", "--fp", "1", "--fs", "2"],
        )
        assert cli.exit_code == 0
        http = client.post("/api/v1/design", json=LP_BODY)
        # The service body is the CLI's canonical JSON with one trailing
        # compute_ms field spliced in before the closing brace.
        body = http.text
        stripped = body[: body.rindex(',"compute_ms":')] + "}\n"
        assert stripped == cli.stdout


class TestErrors:
    def test_bad_edge_ordering(self, client):
        r = client.post("/api/v1/design", json=dict(LP_BODY, band_edges_ghz=[2, 1]))
        assert r.status_code == 400
        doc = r.json()
        assert doc["code"] == "invalid_spec"
        assert doc["message"]
        assert "constraint" in doc

    def test_infeasible_coupled(self, client):
        body = {
            "family": "chebyshev",
            "kind": "coupled_bandpass",
            "insertion_loss_db": 40,
            "return_loss_db": 20,
            "band_edges_ghz": [2, 2.5, 5],
        }
        r = client.post("/api/v1/design", json=body)
        assert r.status_code == 400
        assert r.json()["code"] in ("invalid_spec", "infeasible_design")

    def test_grid_cap(self, client):
        body = dict(LP_BODY, grid={"start_ghz": 0.001, "stop_ghz": 300.0, "step_ghz": 1e-5})
        r = client.post("/api/v1/design", json=body)
        assert r.status_code == 400
        assert r.json()["code"] == "invalid_spec"

    def test_non_json_body(self, client):
        r = client.post(
            "/api/v1/design", content=b"not json", headers={"content-type": "application/json"}
        )
        assert r.status_code == 400
        assert r.json()["code"] == "invalid_spec"

    def test_missing_edges(self, client):
        r = client.post("/api/v1/design", json={"family": "chebyshev", "kind": "lowpass"})
        assert r.status_code == 400
