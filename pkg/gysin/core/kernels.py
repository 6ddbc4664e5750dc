"""Theorem kernels: the factor multiplying ``f`` inside each bracket formula."""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence, Tuple

from gysin.core.coeffring import ClassPoly
from gysin.core.geometry import (
    Family,
    FlagGeometry,
    Twist,
    check_symplectic_admissible,
    exponents_for,
    reference_bundle,
)
from gysin.core.tpoly import SegreAssignment, TPoly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KernelSpec:
    kernel: TPoly
    exponents: Tuple[int, ...]
    assign: SegreAssignment
    halvable: bool = False


def _line_class(twist: Twist) -> ClassPoly:
    return ClassPoly.c1("L") if twist == Twist.FORMAL else ClassPoly.zero()


def _t(d: int, i: int) -> TPoly:
    return TPoly.variable(d, i)


def kernel_A(d: int) -> TPoly:
    """Vandermonde product ``prod_{i<j} (t_i - t_j)``."""
    kernel = TPoly.one(d)
    for i, j in combinations(range(1, d + 1), 2):
        kernel = kernel * (_t(d, i) - _t(d, j))
    return kernel


def _pair_factor(d: int, i: int, j: int, line: ClassPoly) -> TPoly:
    return _t(d, i) + _t(d, j) + line


def kernel_C(d: int, twist: Twist = Twist.FORMAL) -> TPoly:
    """``prod_{i<j} (c_1(L) + t_i + t_j)(t_i - t_j)``."""
    line = _line_class(twist)
    kernel = TPoly.one(d)
    for i, j in combinations(range(1, d + 1), 2):
        kernel = kernel * (_pair_factor(d, i, j, line) * (_t(d, i) - _t(d, j)))
    return kernel


def kernel_BD(d: int, twist: Twist = Twist.FORMAL) -> TPoly:
    """Type C kernel times ``prod_i (2 t_i + c_1(L))``."""
    line = _line_class(twist)
    kernel = kernel_C(d, twist)
    for i in range(1, d + 1):
        kernel = kernel * (_t(d, i) * 2 + line)
    return kernel


def kernel_KLC(mu: Sequence[int], n: int, twist: Twist = Twist.FORMAL) -> TPoly:
    """Vandermonde times ``c_1(L) + t_i + t_j`` for the pairs with ``mu_i + mu_j > 2n + 1``."""
    mu = tuple(mu)
    check_symplectic_admissible(mu, n)
    d = len(mu)
    line = _line_class(twist)
    kernel = kernel_A(d)
    for i, j in combinations(range(1, d + 1), 2):
        if mu[i - 1] + mu[j - 1] > 2 * n + 1:
            kernel = kernel * _pair_factor(d, i, j, line)
    return kernel


def build_kernel_spec(g: FlagGeometry) -> KernelSpec:
    d = g.d
    if g.family == Family.A_FLAG:
        kernel = kernel_A(d)
    elif g.family == Family.C_FLAG:
        kernel = kernel_C(d, g.twist)
    elif g.family == Family.BD_FLAG:
        kernel = kernel_BD(d, g.twist)
    elif g.family == Family.KL_A:
        kernel = kernel_A(d)
    else:
        kernel = kernel_KLC(g.mu.parts, g.n, g.twist)

    if g.family.is_kempf_laksov:
        assign = SegreAssignment(tuple(reference_bundle(m, g.rank_e) for m in g.mu))
    else:
        assign = SegreAssignment.uniform(g.bundle, d)

    spec = KernelSpec(kernel, exponents_for(g), assign, g.halvable)
    logger.debug("kernel for %s: %d terms, exponents %s", g.describe(), len(kernel), spec.exponents)
    return spec
