import pytest

from src.app import create_app

@pytest.fixture
def client():
    app = create_app()
    app.config["TESTING"] = True
    return app.test_client()

def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.get_json()["status"] == "healthy"

def test_parse(client, lcc_definitions):
    response = client.post("/parse", json={"definitions": lcc_definitions})
    assert response.status_code == 200
    body = response.get_json()
    assert body["status"] == "success"
    assert body["data"]["schema_version"] == "1"
    assert len(body["data"]["definitions"]) == 4

def test_leq_and_distinguish(client, lcc_definitions):
    response = client.post(
        "/leq", json={"definitions": lcc_definitions, "p": "id", "q": "nil", "calculus": "vccs"}
    )
    assert response.status_code == 200
    assert response.get_json()["data"]["holds"] is False

    response = client.post(
        "/distinguish", json={"definitions": lcc_definitions, "p": "id", "q": "nil", "calculus": "vccs"}
    )
    data = response.get_json()["data"]
    assert data["must_p"] is True
    assert data["must_q"] is False

def test_must(client):
    response = client.post("/must", json={"server": "'a.0", "client": "a.1", "calculus": "ccs"})
    assert response.status_code == 200
    assert response.get_json()["data"]["holds"] is True

def test_axioms(client):
    response = client.post(
        "/axioms", json={"target": "multiset", "channels": ["a"], "val": ["0"], "mail_capacity": 2}
    )
    assert response.status_code == 200
    data = response.get_json()["data"]
    assert data["holds"] is True
    assert data["states"] == 3

def test_lts(client):
    response = client.post("/lts", json={"name": "tau.1", "calculus": "ccs"})
    assert response.status_code == 200
    graph = response.get_json()["data"]["graph"]
    assert len(graph["states"]) == 2

def test_bad_requests(client, lcc_definitions):
    response = client.post("/leq", json={"definitions": lcc_definitions, "p": "id"})
    assert response.status_code == 400
    assert response.get_json()["status"] == "error"
    response = client.post("/must", json={"server": "a!0.b!1.0", "client": "1"})
    assert response.status_code == 400
    response = client.post("/parse", json={"definitions": "x = 0", "calculus": "pi"})
    assert response.status_code == 400

def test_bound_exceeded(client, lcc_definitions):
    response = client.post(
        "/lts", json={"definitions": lcc_definitions, "name": "id", "target": "fw", "bound": 2}
    )
    assert response.status_code == 422
    assert response.get_json()["status"] == "error"
