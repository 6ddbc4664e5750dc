"""Read job descriptions from JSON files and merge inline overrides."""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import ValidationError

from gysin.core.exceptions import JobSpecError
from gysin.models.pydantic_models import JobSpec

logger = logging.getLogger(__name__)

GEOMETRY_FIELDS = ("family", "n", "rank", "dims", "mu", "twist", "base")
JOB_FIELDS = ("f", "halve", "cutoff", "format")


def parse_job_file(filename) -> Dict[str, Any]:
    """Parse a JSON job file into a plain dictionary."""
    path = Path(filename)
    try:
        with open(path, "r") as handle:
            data = json.load(handle)
    except FileNotFoundError:
        raise JobSpecError(f"job file {path} not found")
    except json.JSONDecodeError as e:
        raise JobSpecError(f"job file {path} is not valid JSON: line {e.lineno} column {e.colno}: {e.msg}")
    if not isinstance(data, dict):
        raise JobSpecError(f"job file {path} must contain an object")
    logger.debug("loaded job file %s", path)
    return data


def merge_job(data: Optional[Dict[str, Any]], overrides: Dict[str, Any]) -> Dict[str, Any]:
    """Inline values win over the file; ``None`` means "not given"."""
    merged: Dict[str, Any] = dict(data or {})
    geometry = dict(merged.get("geometry") or {})
    for key in GEOMETRY_FIELDS:
        if overrides.get(key) is not None:
            geometry[key] = overrides[key]
    for key in JOB_FIELDS:
        if overrides.get(key) is not None:
            merged[key] = overrides[key]
    if geometry:
        merged["geometry"] = geometry
    return merged


def build_job(data: Dict[str, Any]) -> JobSpec:
    try:
        return JobSpec.model_validate(data)
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(part) for part in err['loc']) or 'job'}: {err['msg']}" for err in e.errors()
        )
        raise JobSpecError(f"invalid job: {problems}")


def load_job(filename=None, **overrides) -> JobSpec:
    data = parse_job_file(filename) if filename else {}
    return build_job(merge_job(data, overrides))
