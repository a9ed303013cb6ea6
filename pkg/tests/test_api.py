import inspect

from fastapi.testclient import TestClient

from app.main import app

client = TestClient(app)


def test_root_and_health():
    assert client.get("/").json()["status"] == "running"
    assert client.get("/api/v1/health").json()["status"] == "healthy"
    capabilities = client.get("/api/v1/capabilities").json()
    assert "set-graph" in capabilities["families"]
    assert capabilities["max_order"] == 62


def test_invariants_by_family():
    response = client.post("/api/v1/invariants", json={"family": "set-graph", "n": 3})
    assert response.status_code == 200
    row = response.json()["result"]
    assert (row["omega"], row["chi"], row["chi_imax"]) == (4, 4, 5)


def test_invariants_by_graph6():
    response = client.post("/api/v1/invariants", json={"graph6": "Bg"})
    assert response.status_code == 200
    assert response.json()["result"]["r_plus"] == 3


def test_invalid_inputs():
    assert client.post("/api/v1/invariants", json={"graph6": "B!"}).status_code == 400
    assert client.post("/api/v1/invariants", json={"family": "petersen", "n": 3}).status_code == 400
    assert client.post("/api/v1/invariants", json={"graph6": "Bg", "family": "path", "n": 3}).status_code == 422
    assert client.post("/api/v1/invariants", json={}).status_code == 422


def test_colourings_rainbow_perfection():
    colour = client.post("/api/v1/colourings", json={"family": "path", "n": 4, "rule": "imax"}).json()
    assert colour["result"]["num_colours"] == 3
    assert len(colour["result"]["trace"]) == 3
    rainbow = client.post("/api/v1/rainbow", json={"family": "complete", "n": 4}).json()
    assert rainbow["result"]["r_minus"] == 4
    perfection = client.post("/api/v1/perfection", json={"family": "cycle", "n": 5}).json()
    assert perfection["result"]["perfect_hole_based"] is False


def test_budget_error_maps_to_422():
    response = client.post(
        "/api/v1/colourings",
        json={"family": "cycle", "n": 9, "mode": "exhaustive", "budget": 1},
    )
    assert response.status_code == 422
    assert response.json()["error_type"] == "BudgetExceededError"


def test_claims_endpoints():
    listing = client.get("/api/v1/claims").json()
    assert any(c["claim_id"] == "thm-2.2" for c in listing["claims"])
    assert listing["groups"]["prop-3.1"][0] == "prop-3.1a"
    response = client.post("/api/v1/claims/thm-2.2", json={"lo": 1, "hi": 3})
    assert response.status_code == 200
    body = response.json()
    assert body["results"][0]["verdict"] == "verified-on-scope"
    assert body["verdicts"] == {"verified-on-scope": 1}
    assert client.post("/api/v1/claims/thm-9.9", json={}).status_code == 404


def test_conjecture_endpoint():
    response = client.post("/api/v1/conjecture", json={"max_order": 4})
    assert response.status_code == 200
    assert response.json()["results"][0]["claim_id"] == "conj-2.4"


def test_metrics_and_version():
    client.post("/api/v1/invariants", json={"graph6": "Bg"})
    metrics = client.get("/metrics").text
    assert "chromatic_harness_graphs_total" in metrics
    version = client.get("/version").json()
    assert version["service"] == "chromatic-harness"


def test_compute_routes_run_in_threadpool():
    from app.api import routes
    for handler in (routes.invariants, routes.colourings, routes.rainbow,
                    routes.perfection, routes.check_claim, routes.conjecture):
        assert not inspect.iscoroutinefunction(handler)
