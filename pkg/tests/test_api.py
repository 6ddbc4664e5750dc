"""
Test suite for the Gysin Pushforward API
"""

import pytest
from httpx import ASGITransport, AsyncClient

from gysin.main import app

GRASSMANN_JOB = {
    "geometry": {"family": "A", "n": 4, "dims": [2], "base": "trivial"},
    "f": "(x1+x2)^4",
}


@pytest.fixture
async def client():
    async with AsyncClient(transport=ASGITransport(app=app), base_url="http://test") as ac:
        yield ac


@pytest.mark.asyncio
class TestGysinAPI:

    async def test_root_endpoint(self, client):
        response = await client.get("/")
        assert response.status_code == 200
        data = response.json()
        assert "message" in data
        assert "version" in data

    async def test_health_check(self, client):
        response = await client.get("/health")
        assert response.status_code == 200
        data = response.json()
        assert data["status"] == "healthy"

    async def test_compute(self, client):
        response = await client.post("/compute", json=GRASSMANN_JOB)
        assert response.status_code == 200

        data = response.json()
        assert data["value"] == [{"coeff": "2", "monomial": []}]
        assert data["fiber_dim"] == 4
        assert data["degree"] == 4
        assert data["halved"] is False

    async def test_compute_with_symbols(self, client):
        job = {"geometry": {"family": "KL_A", "n": 4, "mu": [3, 1]}, "f": "x1^2"}
        response = await client.post("/compute", json=job)
        assert response.status_code == 200

        value = response.json()["value"]
        assert value == [
            {"coeff": "-1", "monomial": [{"bundle": "E_1", "kind": "segre", "index": 1}]},
            {"coeff": "1", "monomial": [{"bundle": "E_3", "kind": "segre", "index": 1}]},
        ]

    async def test_compute_inhomogeneous(self, client):
        job = {"geometry": {"family": "A", "n": 3, "dims": [1]}, "f": "x1^2 + x1^3"}
        response = await client.post("/compute", json=job)
        assert response.status_code == 200
        assert response.json()["degree"] == "inhomogeneous"

    async def test_oracle(self, client):
        response = await client.post("/oracle", json=GRASSMANN_JOB)
        assert response.status_code == 200
        assert response.json()["value"] == [{"coeff": "2", "monomial": []}]

    async def test_check(self, client):
        job = {"geometry": {"family": "KL_A", "n": 5, "mu": [5, 3]}, "f": "x1^5*x2 - s[1](E)*x1^3*x2^2"}
        response = await client.post("/check", json=job)
        assert response.status_code == 200

        data = response.json()
        assert data["matches"] is True
        assert data["diffs"] == []
        assert data["stepwise"] == data["closed_form"]["value"]

    async def test_degree(self, client):
        response = await client.get("/degree/grassmannian", params={"d": 2, "n": 5})
        assert response.status_code == 200
        data = response.json()
        assert data["degree"] == 5
        assert data["parameters"] == {"d": 2, "n": 5}

        response = await client.get("/degree/quadric", params={"rank": 5})
        assert response.json()["degree"] == 2

    async def test_unknown_degree_kind(self, client):
        response = await client.get("/degree/flag")
        assert response.status_code == 400
        assert response.json()["detail"]["code"] == "invalid_job"

    async def test_invalid_geometry(self, client):
        job = {"geometry": {"family": "A", "n": 4, "dims": [4]}, "f": "x1"}
        response = await client.post("/compute", json=job)
        assert response.status_code == 400
        assert response.json()["detail"]["code"] == "invalid_geometry"

    async def test_parse_error(self, client):
        job = {"geometry": {"family": "A", "n": 4, "dims": [2]}, "f": "(x1+x2"}
        response = await client.post("/compute", json=job)
        assert response.status_code == 400
        detail = response.json()["detail"]
        assert detail["code"] == "parse_error"
        assert "column 7" in detail["message"]

    async def test_oracle_unavailable(self, client):
        job = {"geometry": {"family": "BD", "rank": 5, "dims": [1]}, "f": "x1^3"}
        response = await client.post("/oracle", json=job)
        assert response.status_code == 400
        assert response.json()["detail"]["code"] == "oracle_unavailable"

    async def test_job_validation(self, client):
        # Unknown fields and bad values are rejected by the schema
        response = await client.post("/compute", json={**GRASSMANN_JOB, "colour": "red"})
        assert response.status_code == 422

        response = await client.post("/compute", json={"geometry": {"family": "A", "n": 4}, "f": ""})
        assert response.status_code == 422

    async def test_zero_denominator(self, client):
        job = {"geometry": {"family": "A", "n": 4, "dims": [2]}, "f": "1/0*x1"}
        response = await client.post("/compute", json=job)
        assert response.status_code == 400
        detail = response.json()["detail"]
        assert detail["code"] == "parse_error"
        assert "zero denominator" in detail["message"]
