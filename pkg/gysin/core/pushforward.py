"""Closed-form Gysin pushforwards to the base."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from gysin.core.coeffring import ClassPoly
from gysin.core.exceptions import ArityError, GeometryError, HalvingError
from gysin.core.geometry import (
    BaseMode,
    Family,
    FlagGeometry,
    Partition,
    fiber_dim,
    nu_from_lambda_A,
    nu_from_lambda_C,
)
from gysin.core.kernels import build_kernel_spec
from gysin.core.tpoly import TPoly, extract_with_segre

logger = logging.getLogger(__name__)

INHOMOGENEOUS = "inhomogeneous"


@dataclass(frozen=True)
class PushforwardResult:
    value: ClassPoly
    fiber_dim: int
    input_degree: Union[int, str]
    halved: bool = False

    @property
    def output_grade(self) -> Optional[int]:
        if isinstance(self.input_degree, int):
            return self.input_degree - self.fiber_dim
        return None


def input_degree_of(f: TPoly) -> Union[int, str]:
    if f.is_zero:
        return 0
    degree = f.degree
    return INHOMOGENEOUS if degree is None else degree


def finish_value(value: ClassPoly, g: FlagGeometry, halve: bool = False, cutoff: Optional[int] = None) -> ClassPoly:
    """Base specialization, halving and grade cutoff, applied after extraction."""
    if g.base_mode == BaseMode.TRIVIAL:
        value = value.trivialize_segre()
    if halve:
        value = value * Fraction(1, 2)
    return value.truncate(cutoff)


def pushforward(
    f: TPoly,
    g: FlagGeometry,
    halve: bool = False,
    cutoff: Optional[int] = None,
    chunk_size: Optional[int] = None,
) -> PushforwardResult:
    """``pi_* f(xi_1, ..., xi_d)`` by coefficient extraction.

    ``f`` is not checked for the block symmetries that make it a class on the
    flag bundle; for non-symmetric ``f`` the number returned is still the
    bracket of the formula.
    """
    if f.num_vars != g.d:
        raise ArityError(f"{g.describe()} has {g.d} variables but f has {f.num_vars}")
    if halve and not g.halvable:
        raise HalvingError(
            "halving applies only to orthogonal bundles of even rank 2n with flags ending in dimension n"
        )

    spec = build_kernel_spec(g)
    integrand = f * spec.kernel
    value = extract_with_segre(integrand, spec.exponents, spec.assign, chunk_size)
    value = finish_value(value, g, halve, cutoff)

    result = PushforwardResult(value, fiber_dim(g), input_degree_of(f), halve)
    logger.debug("pushforward on %s: %d integrand terms, value has %d terms",
                 g.describe(), len(integrand), len(value))
    return result


def kempf_laksov_for(lam: Sequence[int], g: FlagGeometry) -> FlagGeometry:
    """The Kempf-Laksov model ``F_nu`` of the Schubert bundle of ``lam``.

    ``g`` supplies the family, ``n``, ``d``, twist and base; its own ``mu``
    only fixes ``d``.
    """
    if not g.family.is_kempf_laksov:
        raise GeometryError(f"Schubert bundles are modelled by KL families, not {g.family.value}")
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    if g.family == Family.KL_A:
        nu = nu_from_lambda_A(lam, g.n, g.d)
        return FlagGeometry.kl_a(g.n, nu, g.base_mode)
    nu = nu_from_lambda_C(lam, g.n, g.d)
    return FlagGeometry.kl_c(g.n, nu, g.twist, g.base_mode)


def schubert_class_to_base(
    lam: Sequence[int],
    g: FlagGeometry,
    f: Optional[TPoly] = None,
    cutoff: Optional[int] = None,
) -> ClassPoly:
    """Push ``f`` (default 1) from the Schubert bundle of ``lam`` to the base
    through its Kempf-Laksov desingularization ``(theta_nu)_*``.
    """
    model = kempf_laksov_for(lam, g)
    if f is None:
        f = TPoly.one(model.d)
    return pushforward(f, model, cutoff=cutoff).value
