"""HTTP surface tests driven through the ASGI app."""

import pytest
from fastapi.testclient import TestClient

from exactcat.serialize import canonical_json
from exactcat.service import create_app


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


TWO = {"category": "LatticeZ", "dom": {"rank": 1}, "cod": {"rank": 1}, "matrix": [[2]]}
SUM = {"category": "FinVectQ", "dom": {"dim": 2}, "cod": {"dim": 1}, "matrix": [[1, 1]]}
DIAG = {"category": "FinVectQ", "dom": {"dim": 1}, "cod": {"dim": 2}, "matrix": [[1], [-1]]}
WITNESS = {
    "category": "MonoPairsQ",
    "dom": {"dim": 1, "sub": []},
    "cod": {"dim": 1, "sub": [[1]]},
    "matrix": [[1]],
}


def test_health(client):
    body = client.get("/v1/health").json()
    assert body["status"] == "ok"
    assert body["categories"] == ["FinVectQ", "LatticeZ", "MonoPairsQ"]


def test_kernel_endpoint(client):
    body = client.post("/v1/morphism/kernel", json={"morphism": SUM}).json()
    assert body["object"] == {"dim": 1}
    assert body["inclusion"]["matrix"] == [[-1], [1]]


def test_cokernel_endpoint(client):
    body = client.post("/v1/morphism/cokernel", json={"morphism": TWO}).json()
    assert body["object"] == {"rank": 0}


def test_classify_endpoint(client):
    body = client.post("/v1/morphism/classify", json={"morphism": TWO}).json()
    assert body == {
        "mono": True,
        "epi": True,
        "iso": False,
        "is_kernel": False,
        "is_cokernel": False,
        "strict": False,
    }


def test_classify_monopairs_witness(client):
    body = client.post("/v1/morphism/classify", json={"morphism": WITNESS}).json()
    assert body["mono"] and body["epi"]
    assert not body["iso"] and not body["strict"]


def test_strict_endpoint(client):
    body = client.post("/v1/morphism/strict", json={"morphism": TWO}).json()
    assert body["strict"] is False
    assert body["induced"]["matrix"] == [[2]]


def test_pullback_endpoint(client):
    three = {"category": "LatticeZ", "dom": {"rank": 1}, "cod": {"rank": 1}, "matrix": [[3]]}
    body = client.post("/v1/square/pullback", json={"g": TWO, "t": three}).json()
    assert body["P"] == {"rank": 1}
    assert body["p_Y"]["matrix"] == [[3]]
    assert body["p_T"]["matrix"] == [[2]]


def test_pushout_endpoint(client):
    f = {"category": "LatticeZ", "dom": {"rank": 1}, "cod": {"rank": 2}, "matrix": [[1], [0]]}
    t = TWO
    body = client.post("/v1/square/pushout", json={"f": f, "t": t}).json()
    assert body["S"] == {"rank": 2}


def test_semistable_cokernel_yes(client):
    body = client.post("/v1/semistable/cokernel", json={"morphism": SUM}).json()
    assert body["outcome"] == "yes"
    assert body["justification"] == "retraction"


def test_semistable_rejects_non_cokernel(client):
    response = client.post("/v1/semistable/cokernel", json={"morphism": TWO})
    assert response.status_code == 400
    assert "cokernel" in response.json()["error"]


def test_semistable_kernel_yes(client):
    body = client.post("/v1/semistable/kernel", json={"morphism": DIAG}).json()
    assert body["outcome"] == "yes"


def test_pair_maximal_yes(client):
    body = client.post("/v1/pair/maximal", json={"f": DIAG, "g": SUM}).json()
    assert body["outcome"] == "yes"


def test_pair_maximal_no_with_reason(client):
    zero_in = {"category": "LatticeZ", "dom": {"rank": 0}, "cod": {"rank": 1}, "matrix": [[]]}
    zero_out = {"category": "LatticeZ", "dom": {"rank": 1}, "cod": {"rank": 0}, "matrix": []}
    body = client.post("/v1/pair/maximal", json={"f": zero_in, "g": zero_out}).json()
    assert body["outcome"] == "no"
    assert body["witness"]["reason"] == "not-kernel-cokernel-pair"


def test_pair_split(client):
    body = client.post("/v1/pair/split", json={"f": DIAG, "g": SUM}).json()
    assert body["split"] is True


def test_suite_endpoint_and_determinism(client):
    payload = {
        "suite": "kelly",
        "category": "LatticeZ",
        "config": {"seed": 42, "samples": 7, "max_dim": 2, "max_entry": 2},
    }
    a = client.post("/v1/suite", json=payload).json()
    b = client.post("/v1/suite", json=payload).json()
    assert a["violations"] == []
    assert canonical_json(a) == canonical_json(b)


def test_schema_error_names_field(client):
    bad = dict(SUM, matrix=[[1], [1]])
    response = client.post("/v1/morphism/kernel", json={"morphism": bad})
    assert response.status_code == 400
    assert "matrix" in response.json()["field"]


def test_unknown_category_is_400(client):
    bad = dict(SUM, category="Nope")
    response = client.post("/v1/morphism/kernel", json={"morphism": bad})
    assert response.status_code == 400
    assert "category" in response.json()["field"]


def test_pydantic_shape_error_is_422(client):
    response = client.post("/v1/morphism/kernel", json={"morphism": {"category": "FinVectQ"}})
    assert response.status_code == 422


def test_suite_rejects_unknown_name(client):
    payload = {"suite": "bogus", "category": "FinVectQ"}
    assert client.post("/v1/suite", json=payload).status_code == 422
