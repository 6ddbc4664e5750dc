# Gysin Pushforward API
# A FastAPI service exposing the compute, oracle, check and degree verbs

import asyncio
import logging
from datetime import datetime, timezone
from typing import Optional

from fastapi import FastAPI, HTTPException

from gysin.core.config import settings, setup_logging
from gysin.core.exceptions import GysinError
from gysin.core.job_runner import JobRunner, check_model, result_model, terms_model
from gysin.models.pydantic_models import CheckModel, DegreeModel, JobSpec, ResultModel, ValueModel

setup_logging()
logger = logging.getLogger(__name__)

runner = JobRunner()

app = FastAPI(
    title=settings.project_name,
    description="Exact Gysin pushforwards from flag bundles and Kempf-Laksov bundles",
    version=settings.app_version,
)


async def run_or_400(func, *args, **kwargs):
    """Run a computation off the event loop; library errors become 400s."""
    try:
        return await asyncio.to_thread(func, *args, **kwargs)
    except GysinError as e:
        logger.warning("request failed: %s: %s", e.code, e.message)
        raise HTTPException(status_code=400, detail=e.to_dict())


@app.get("/")
async def root():
    return {"message": settings.project_name, "version": settings.app_version}


@app.post("/compute", response_model=ResultModel)
async def compute(spec: JobSpec):
    """Closed-form pushforward of a job"""
    result = await run_or_400(runner.compute, spec)
    return result_model(result)


@app.post("/oracle", response_model=ValueModel)
async def oracle(spec: JobSpec):
    """Pushforward through the tower of projective bundles"""
    value = await run_or_400(runner.oracle, spec)
    return ValueModel(value=terms_model(value))


@app.post("/check", response_model=CheckModel)
async def check(spec: JobSpec):
    """Both paths and their difference"""
    report = await run_or_400(runner.check, spec)
    return check_model(report)


@app.get("/degree/{kind}", response_model=DegreeModel)
async def degree(kind: str, d: Optional[int] = None, n: Optional[int] = None, rank: Optional[int] = None):
    return await run_or_400(runner.degree, kind, d=d, n=n, rank=rank)


# Health check endpoint
@app.get("/health")
async def health_check():
    return {"status": "healthy", "timestamp": datetime.now(timezone.utc)}


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(app, host="0.0.0.0", port=8000)
