"""Step-by-step pushforwards along towers of projective bundles.

Each step pushes one variable forward through ``P(Q) -> Y`` with
``[t^{rk Q - 1}] (f(t) s_{1/t}(Q))``. The Segre series of the quotient ``Q``
is the series of a reference bundle times one factor ``(1 - t_j/t)`` for every
line ``U_j`` split off earlier in the tower, since that line has first Chern
class ``-xi_j``. The innermost projective bundle is pushed first.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from gysin.core.coeffring import ClassPoly
from gysin.core.exceptions import ArityError, GeometryError, OracleUnavailableError
from gysin.core.geometry import BaseMode, Family, FlagGeometry, Partition, reference_bundle, syt_count
from gysin.core.pushforward import finish_value, pushforward
from gysin.core.tpoly import TPoly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuotientSeries:
    """``s_{1/t}(base_bundle) * prod (1 + sign * t_j / t)`` over ``line_corrections``."""

    base_bundle: str
    line_corrections: Tuple[Tuple[int, int], ...] = ()

    def correction_polys(self, num_vars: int) -> List[TPoly]:
        """``E_k``, with ``prod (1 + sign t_j / t) = sum_k E_k t^{-k}``."""
        table = [TPoly.one(num_vars)]
        for var, sign in self.line_corrections:
            line = TPoly.variable(num_vars, var) * sign
            table.append(TPoly.zero(num_vars))
            for k in range(len(table) - 1, 0, -1):
                table[k] = table[k] + table[k - 1] * line
        return table


def single_step_pushforward(P: TPoly, var: int, rank: int, series: QuotientSeries) -> TPoly:
    """Eliminate ``t_var`` by pushing forward from ``P(Q)`` with ``rk Q = rank``.

    The result keeps the arity of ``P`` with ``t_var`` absent.
    """
    d = P.num_vars
    if not 1 <= var <= d:
        raise ArityError(f"variable t{var} does not exist in {d} variables")
    if rank < 1:
        raise GeometryError(f"projective bundle of a rank {rank} bundle")
    if any(j == var or not 1 <= j <= d for j, _ in series.line_corrections):
        raise ArityError(f"corrections {series.line_corrections} must use other variables than t{var}")

    corrections = series.correction_polys(d)
    result = TPoly.zero(d)
    for exps, coeff in P.items():
        power = exps[var - 1]
        rest = list(exps)
        rest[var - 1] = 0
        base_term = TPoly(d, {tuple(rest): coeff})
        for k, correction in enumerate(corrections):
            m = power - k - (rank - 1)
            if m < 0:
                break
            result = result + base_term * correction * ClassPoly.segre(series.base_bundle, m)
    return result


def run_tower(f: TPoly, steps: Sequence[Tuple[int, int, QuotientSeries]]) -> ClassPoly:
    """Apply ``single_step_pushforward`` along ``(var, rank, series)`` steps."""
    current = f
    for var, rank, series in steps:
        current = single_step_pushforward(current, var, rank, series)
        logger.debug("pushed t%d through rank %d over %s: %d terms left", var, rank, series.base_bundle, len(current))
    leftover = [exps for exps, _ in current.items() if any(exps)]
    if leftover:
        raise ArityError(f"tower left variables unresolved in {leftover[:3]}")
    return current.coefficient((0,) * f.num_vars)


def _complete_flag_steps(d: int, ranks: Sequence[int], bundles: Sequence[str]) -> List[Tuple[int, int, QuotientSeries]]:
    # xi_i lives on the (d+1-i)-th projective bundle of the tower; the lines
    # of the variables after it were split off before it.
    return [
        (i, ranks[i - 1], QuotientSeries(bundles[i - 1], tuple((j, -1) for j in range(i + 1, d + 1))))
        for i in range(1, d + 1)
    ]


def stepwise_pushforward_A(
    f: TPoly,
    n: int,
    dims: Sequence[int],
    base_mode: BaseMode = BaseMode.FORMAL,
) -> ClassPoly:
    """Pushforward from ``F(d_1, ..., d_m)(E)`` through the tower of ``F(1, ..., d)(E)``.

    A class on the partial flag bundle is lifted to the complete flags of
    ``U_d`` by multiplying with the point class ``t^{i-1}`` of each block's
    fibre, then pushed one projective bundle at a time.
    """
    g = FlagGeometry.type_a(n, dims, base_mode)
    d = g.d
    if f.num_vars != d:
        raise ArityError(f"{g.describe()} has {d} variables but f has {f.num_vars}")
    lift = {}
    previous = 0
    for d_k in g.dims:
        # the block of U_{d_k}/U_{d_{k-1}} owns variables d-d_k+1 .. d-d_{k-1}
        for i in range(2, d_k - previous + 1):
            lift[d - d_k + i] = i - 1
        previous = d_k
    lifted = f * TPoly.monomial(d, lift) if lift else f
    steps = _complete_flag_steps(d, [n - d + i for i in range(1, d + 1)], [g.bundle] * d)
    return finish_value(run_tower(lifted, steps), g)


def stepwise_pushforward_KLA(
    f: TPoly,
    mu: Sequence[int],
    n: int,
    base_mode: BaseMode = BaseMode.FORMAL,
) -> ClassPoly:
    """Pushforward from ``F_mu(E_.)`` through ``P(E_{mu_1}/U_{d-1}) -> ... -> P(E_{mu_d})``."""
    g = FlagGeometry.kl_a(n, mu, base_mode)
    d = g.d
    if f.num_vars != d:
        raise ArityError(f"{g.describe()} has {d} variables but f has {f.num_vars}")
    ranks = [m - (d - i) for i, m in enumerate(g.mu, start=1)]
    bundles = [reference_bundle(m, n) for m in g.mu]
    return finish_value(run_tower(f, _complete_flag_steps(d, ranks, bundles)), g)


def stepwise_pushforward(f: TPoly, g: FlagGeometry) -> ClassPoly:
    if g.family == Family.A_FLAG:
        return stepwise_pushforward_A(f, g.n, g.dims, g.base_mode)
    if g.family == Family.KL_A:
        return stepwise_pushforward_KLA(f, g.mu.parts, g.n, g.base_mode)
    raise OracleUnavailableError(f"no stepwise construction is implemented for family {g.family.value}")


# Enumerative oracles

def _hyperplane_power(d: int, power: int) -> TPoly:
    hyperplane = sum((TPoly.variable(d, i) for i in range(1, d + 1)), TPoly.zero(d))
    return hyperplane ** power


def grassmannian_degree(d: int, n: int) -> int:
    """Degree of ``G(d, n)`` in its Plucker embedding."""
    g = FlagGeometry.grassmann(n, d, BaseMode.TRIVIAL)
    value = pushforward(_hyperplane_power(d, d * (n - d)), g).value
    return int(value.constant_value())


def lagrangian_degree(n: int) -> int:
    """Degree of the Lagrangian Grassmannian ``LG(n, 2n)``."""
    g = FlagGeometry.lagrangian(n, base_mode=BaseMode.TRIVIAL)
    value = pushforward(_hyperplane_power(n, n * (n + 1) // 2), g).value
    return int(value.constant_value())


def quadric_degree(rank: int) -> int:
    """Degree of the quadric of isotropic lines in a rank ``rank`` orthogonal space."""
    g = FlagGeometry.quadric(rank, base_mode=BaseMode.TRIVIAL)
    value = pushforward(TPoly.variable(1, 1) ** (rank - 2), g).value
    return int(value.constant_value())


def hook_length_degree(d: int, n: int) -> int:
    return syt_count(Partition.rectangle(d, n - d))
