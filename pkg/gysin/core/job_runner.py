import json
import logging
from dataclasses import dataclass
from typing import List

from gysin.core.coeffring import ClassPoly, format_rational
from gysin.core.config import settings
from gysin.core.exceptions import JobSpecError
from gysin.core.geometry import FlagGeometry
from gysin.core.oracle import grassmannian_degree, lagrangian_degree, quadric_degree, stepwise_pushforward
from gysin.core.pushforward import PushforwardResult, pushforward
from gysin.core.tpoly import TPoly
from gysin.models.pydantic_models import (
    CheckModel,
    DegreeModel,
    JobSpec,
    OutputFormat,
    ResultModel,
    SymbolModel,
    TermModel,
    ValueModel,
)
from gysin.utils.expression import parse_polynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckReport:
    closed_form: PushforwardResult
    stepwise: ClassPoly

    @property
    def difference(self) -> ClassPoly:
        return self.closed_form.value - self.stepwise

    @property
    def matches(self) -> bool:
        return self.difference.is_zero


def terms_model(value: ClassPoly) -> List[TermModel]:
    return [
        TermModel(
            coeff=format_rational(coeff),
            monomial=[SymbolModel(bundle=s.bundle, kind=s.kind.value, index=s.index) for s in mono.symbols()],
        )
        for mono, coeff in value.items()
    ]


def result_model(result: PushforwardResult) -> ResultModel:
    return ResultModel(
        value=terms_model(result.value),
        fiber_dim=result.fiber_dim,
        degree=result.input_degree,
        halved=result.halved,
    )


def check_model(report: CheckReport) -> CheckModel:
    return CheckModel(
        closed_form=result_model(report.closed_form),
        stepwise=terms_model(report.stepwise),
        diffs=terms_model(report.difference),
        matches=report.matches,
    )


def _dump(model) -> str:
    return json.dumps(model.model_dump(mode="json"), indent=2, sort_keys=True)


def _value_block(value: ClassPoly) -> List[str]:
    return [f"  {line}" for line in value.term_lines()]


def render_result(result: PushforwardResult, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.STRUCTURED:
        return _dump(result_model(result))
    lines = [
        f"fiber_dim: {result.fiber_dim}",
        f"degree: {result.input_degree}",
        f"halved: {'true' if result.halved else 'false'}",
        "value:",
        *_value_block(result.value),
    ]
    return "\n".join(lines)


def render_value(value: ClassPoly, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.STRUCTURED:
        return _dump(ValueModel(value=terms_model(value)))
    return "\n".join(["value:", *_value_block(value)])


def render_check(report: CheckReport, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.STRUCTURED:
        return _dump(check_model(report))
    diffs = report.difference
    lines = ["closed form:", *_value_block(report.closed_form.value),
             "stepwise:", *_value_block(report.stepwise),
             f"diffs: {len(diffs)}"]
    if diffs:
        lines.extend(_value_block(diffs))
    return "\n".join(lines)


def render_degree(model: DegreeModel, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.STRUCTURED:
        return _dump(model)
    params = ", ".join(f"{k}={v}" for k, v in sorted(model.parameters.items()))
    return f"{model.kind}({params}): {model.degree}"


class JobRunner:
    """Evaluates job specifications through the closed form and the oracle."""

    def prepare(self, spec: JobSpec):
        geometry: FlagGeometry = spec.geometry.to_geometry()
        f: TPoly = parse_polynomial(spec.f, geometry.d)
        return geometry, f

    def compute(self, spec: JobSpec) -> PushforwardResult:
        geometry, f = self.prepare(spec)
        logger.info("computing pushforward on %s", geometry.describe())
        return pushforward(f, geometry, halve=spec.halve, cutoff=spec.cutoff, chunk_size=settings.chunk_size)

    def oracle(self, spec: JobSpec) -> ClassPoly:
        geometry, f = self.prepare(spec)
        if spec.halve:
            raise JobSpecError("the stepwise construction has no halving option")
        logger.info("running stepwise tower on %s", geometry.describe())
        return stepwise_pushforward(f, geometry).truncate(spec.cutoff)

    def check(self, spec: JobSpec) -> CheckReport:
        report = CheckReport(self.compute(spec), self.oracle(spec))
        if not report.matches:
            logger.warning("closed form and stepwise tower differ in %d terms", len(report.difference))
        return report

    def degree(self, kind: str, d=None, n=None, rank=None) -> DegreeModel:
        if kind == "grassmannian":
            if d is None or n is None:
                raise JobSpecError("grassmannian degree needs d and n")
            value, params = grassmannian_degree(d, n), {"d": d, "n": n}
        elif kind == "lagrangian":
            if n is None:
                raise JobSpecError("lagrangian degree needs n")
            value, params = lagrangian_degree(n), {"n": n}
        elif kind == "quadric":
            if rank is None:
                raise JobSpecError("quadric degree needs rank")
            value, params = quadric_degree(rank), {"rank": rank}
        else:
            raise JobSpecError(f"unknown degree kind {kind!r}; use grassmannian, lagrangian or quadric")
        return DegreeModel(kind=kind, degree=value, parameters=params)


def run_job(spec: JobSpec, runner: JobRunner = None) -> str:
    """Compute ``spec`` and format it for output."""
    runner = runner or JobRunner()
    return render_result(runner.compute(spec), spec.format)
