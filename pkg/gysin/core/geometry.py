"""Bundle situations, partitions and the bookkeeping attached to them."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable, Optional, Sequence, Tuple

from gysin.core.exceptions import (
    GeometryError,
    InadmissiblePartitionError,
    PartitionError,
)

logger = logging.getLogger(__name__)


class Family(str, Enum):
    A_FLAG = "A"
    C_FLAG = "C"
    BD_FLAG = "BD"
    KL_A = "KL_A"
    KL_C = "KL_C"

    @property
    def is_kempf_laksov(self) -> bool:
        return self in (Family.KL_A, Family.KL_C)


class Twist(str, Enum):
    FORMAL = "formal"
    ZERO = "zero"


class BaseMode(str, Enum):
    FORMAL = "formal"
    TRIVIAL = "trivial"


@dataclass(frozen=True)
class Partition:
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise PartitionError(f"partition {parts} has negative parts")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PartitionError(f"partition {parts} is not weakly decreasing")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def part(self, i: int) -> int:
        """``lambda_i`` (1-based), zero past the last part."""
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def require_inside(self, rows: int, cols: int) -> None:
        if len(self.parts) > rows:
            raise PartitionError(f"partition {self.parts} has more than {rows} parts")
        if self.parts and self.parts[0] > cols:
            raise PartitionError(f"partition {self.parts} has a part larger than {cols}")

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def hooks(self) -> Iterable[int]:
        conj = self.conjugate().parts
        for i, row in enumerate(self.parts):
            for j in range(row):
                yield (row - j - 1) + (conj[j] - i - 1) + 1

    @classmethod
    def rectangle(cls, rows: int, cols: int) -> "Partition":
        return cls((cols,) * rows if cols else ())

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class StrictPartition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts:
            raise PartitionError("a strict partition needs at least one part")
        if any(p < 1 for p in parts):
            raise PartitionError(f"strict partition {parts} has non-positive parts")
        if any(a <= b for a, b in zip(parts, parts[1:])):
            raise PartitionError(f"{parts} is not strictly decreasing")
        object.__setattr__(self, "parts", parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def reference_bundle(index: int, top: int) -> str:
    """Name of ``E_index`` in a reference flag whose top member ``E_top`` is ``E``."""
    return "E" if index == top else f"E_{index}"


def _pairs(mu: Sequence[int]):
    return combinations(range(len(mu)), 2)


def check_symplectic_admissible(mu: Sequence[int], n: int) -> None:
    """``mu_i + mu_j != 2n + 1`` for ``i != j``."""
    for i, j in _pairs(mu):
        if mu[i] + mu[j] == 2 * n + 1:
            raise InadmissiblePartitionError(
                f"{tuple(mu)} is not admissible for rank {2 * n}: "
                f"parts {mu[i]} + {mu[j]} = {2 * n + 1}"
            )


def validate_symplectic(mu: StrictPartition, n: int) -> StrictPartition:
    if mu[0] > 2 * n:
        raise PartitionError(f"{mu} does not fit in ({2 * n})^{len(mu)}")
    if len(mu) > n:
        raise PartitionError(f"{mu} has more than {n} parts; isotropic subspaces have dimension <= {n}")
    check_symplectic_admissible(mu.parts, n)
    return mu


@dataclass(frozen=True)
class FlagGeometry:
    """One of the five bundle situations.

    ``n`` is the rank of ``E`` for type A and the half-rank for the isotropic
    families; ``rank_e`` is always the rank of ``E``.
    """

    family: Family
    n: int
    rank_e: int
    dims: Tuple[int, ...] = ()
    mu: Optional[StrictPartition] = None
    twist: Twist = Twist.ZERO
    base_mode: BaseMode = BaseMode.FORMAL
    bundle: str = field(default="E")

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))
        if self.family.is_kempf_laksov:
            self._validate_kempf_laksov()
        else:
            self._validate_flags()
        if self.family in (Family.A_FLAG, Family.KL_A) and self.twist != Twist.ZERO:
            raise GeometryError(f"family {self.family.value} has no line bundle L; twist must be 'zero'")

    def _validate_flags(self):
        if self.mu is not None:
            raise GeometryError(f"family {self.family.value} takes dims, not mu")
        if not self.dims:
            raise GeometryError("a flag bundle needs at least one dimension")
        if any(a >= b for a, b in zip(self.dims, self.dims[1:])):
            raise GeometryError(f"dims {self.dims} must be strictly increasing")
        if self.family == Family.A_FLAG:
            expected_rank, top = self.n, self.n - 1
        elif self.family == Family.C_FLAG:
            expected_rank, top = 2 * self.n, self.n
        else:
            expected_rank, top = None, self.n
            if self.rank_e not in (2 * self.n, 2 * self.n + 1):
                raise GeometryError(f"rank {self.rank_e} does not match half-rank {self.n}")
        if expected_rank is not None and self.rank_e != expected_rank:
            raise GeometryError(f"rank {self.rank_e} does not match family {self.family.value} with n={self.n}")
        if self.dims[0] < 1 or self.dims[-1] > top:
            raise GeometryError(f"dims {self.dims} must lie between 1 and {top}")

    def _validate_kempf_laksov(self):
        if self.dims:
            raise GeometryError(f"family {self.family.value} takes mu, not dims")
        if self.mu is None:
            raise GeometryError(f"family {self.family.value} needs a strict partition mu")
        if self.family == Family.KL_A:
            if self.rank_e != self.n:
                raise GeometryError(f"rank {self.rank_e} does not match n={self.n}")
            if self.mu[0] > self.n:
                raise PartitionError(f"{self.mu} does not fit in ({self.n})^{len(self.mu)}")
        else:
            if self.rank_e != 2 * self.n:
                raise GeometryError(f"rank {self.rank_e} does not match half-rank {self.n}")
            validate_symplectic(self.mu, self.n)

    # Named constructors

    @classmethod
    def type_a(cls, n: int, dims: Sequence[int], base_mode: BaseMode = BaseMode.FORMAL) -> "FlagGeometry":
        return cls(Family.A_FLAG, n, n, tuple(dims), base_mode=base_mode)

    @classmethod
    def type_c(cls, n: int, dims: Sequence[int], twist: Twist = Twist.FORMAL,
               base_mode: BaseMode = BaseMode.FORMAL) -> "FlagGeometry":
        return cls(Family.C_FLAG, n, 2 * n, tuple(dims), twist=twist, base_mode=base_mode)

    @classmethod
    def type_bd(cls, rank: int, dims: Sequence[int], twist: Twist = Twist.FORMAL,
                base_mode: BaseMode = BaseMode.FORMAL) -> "FlagGeometry":
        if rank < 2:
            raise GeometryError(f"an orthogonal bundle needs rank >= 2, got {rank}")
        return cls(Family.BD_FLAG, rank // 2, rank, tuple(dims), twist=twist, base_mode=base_mode)

    @classmethod
    def kl_a(cls, n: int, mu: Sequence[int], base_mode: BaseMode = BaseMode.FORMAL) -> "FlagGeometry":
        return cls(Family.KL_A, n, n, mu=_strict(mu), base_mode=base_mode)

    @classmethod
    def kl_c(cls, n: int, mu: Sequence[int], twist: Twist = Twist.FORMAL,
             base_mode: BaseMode = BaseMode.FORMAL) -> "FlagGeometry":
        return cls(Family.KL_C, n, 2 * n, mu=_strict(mu), twist=twist, base_mode=base_mode)

    @classmethod
    def full_flag(cls, n: int, base_mode: BaseMode = BaseMode.FORMAL) -> "FlagGeometry":
        return cls.type_a(n, range(1, n), base_mode)

    @classmethod
    def grassmann(cls, n: int, d: int, base_mode: BaseMode = BaseMode.FORMAL) -> "FlagGeometry":
        return cls.type_a(n, (d,), base_mode)

    @classmethod
    def lagrangian(cls, n: int, twist: Twist = Twist.ZERO,
                   base_mode: BaseMode = BaseMode.FORMAL) -> "FlagGeometry":
        return cls.type_c(n, (n,), twist, base_mode)

    @classmethod
    def quadric(cls, rank: int, twist: Twist = Twist.ZERO,
                base_mode: BaseMode = BaseMode.FORMAL) -> "FlagGeometry":
        return cls.type_bd(rank, (1,), twist, base_mode)

    # Derived data

    @property
    def d(self) -> int:
        return len(self.mu) if self.mu is not None else self.dims[-1]

    @property
    def block_sizes(self) -> Tuple[int, ...]:
        previous = (0,) + self.dims[:-1]
        return tuple(b - a for a, b in zip(previous, self.dims))

    @property
    def halvable(self) -> bool:
        """Even orthogonal bundle with maximal isotropic flags: two components."""
        return self.family == Family.BD_FLAG and self.rank_e == 2 * self.n and self.d == self.n

    def with_base_mode(self, base_mode: BaseMode) -> "FlagGeometry":
        return FlagGeometry(self.family, self.n, self.rank_e, self.dims, self.mu,
                            self.twist, base_mode, self.bundle)

    def describe(self) -> str:
        shape = f"mu={self.mu}" if self.mu is not None else f"dims={self.dims}"
        return f"{self.family.value}(rank {self.rank_e}, {shape}, twist={self.twist.value}, base={self.base_mode.value})"


def _strict(mu) -> StrictPartition:
    return mu if isinstance(mu, StrictPartition) else StrictPartition(tuple(mu))


# Partition conversions

def nu_from_lambda_A(lam: Partition, n: int, d: int) -> StrictPartition:
    """``nu_i = n - lambda_{d+1-i} + 1 - i``: the reference dimensions, largest first."""
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    if not 1 <= d <= n - 1:
        raise GeometryError(f"Grassmann bundle G_{d} of a rank {n} bundle is not defined")
    lam.require_inside(d, n - d)
    return StrictPartition(tuple(n - lam.part(d + 1 - i) + 1 - i for i in range(1, d + 1)))


def lambda_from_nu_A(nu: StrictPartition, n: int) -> Partition:
    d = len(nu)
    parts = [0] * d
    for i in range(1, d + 1):
        parts[d - i] = n + 1 - i - nu[i - 1]
    lam = Partition(tuple(parts))
    lam.require_inside(d, n - d)
    return lam


def nu_from_lambda_C(lam: Partition, n: int, d: int) -> StrictPartition:
    """``nu_{d+1-i} = 2n - d + i - lambda_i``, rejecting pairs summing to ``2n + 1``."""
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    if not 1 <= d <= n:
        raise GeometryError(f"isotropic Grassmann bundle of {d}-planes in rank {2 * n} is not defined")
    lam.require_inside(d, 2 * n - d)
    parts = [0] * d
    for i in range(1, d + 1):
        parts[d - i] = 2 * n - d + i - lam.part(i)
    check_symplectic_admissible(parts, n)
    return StrictPartition(tuple(parts))


def lambda_from_nu_C(nu: StrictPartition, n: int) -> Partition:
    d = len(nu)
    lam = Partition(tuple(2 * n - d + i - nu[d - i] for i in range(1, d + 1)))
    lam.require_inside(d, 2 * n - d)
    return lam


# Exponents and degrees

def exponents_for(g: FlagGeometry) -> Tuple[int, ...]:
    if g.family.is_kempf_laksov:
        return tuple(m - 1 for m in g.mu)
    top = {Family.A_FLAG: g.n, Family.C_FLAG: 2 * g.n, Family.BD_FLAG: g.rank_e}[g.family]
    d = g.d
    e = [0] * d
    previous = 0
    for d_k in g.dims:
        for i in range(1, d_k - previous + 1):
            e[d - d_k + i - 1] = top - i
        previous = d_k
    return tuple(e)


def kernel_degree(g: FlagGeometry) -> int:
    """Top degree of the kernel in the variables (``c_1(L)`` counts as a class)."""
    pairs = math.comb(g.d, 2)
    if g.family in (Family.A_FLAG, Family.KL_A):
        return pairs
    if g.family == Family.C_FLAG:
        return 2 * pairs
    if g.family == Family.BD_FLAG:
        return 2 * pairs + g.d
    twisted = sum(1 for i, j in _pairs(g.mu) if g.mu[i] + g.mu[j] > 2 * g.n + 1)
    return pairs + twisted


def fiber_dim(g: FlagGeometry) -> int:
    return sum(exponents_for(g)) - kernel_degree(g)


def syt_count(shape: Partition) -> int:
    """Number of standard Young tableaux, by the hook-length formula."""
    shape = shape if isinstance(shape, Partition) else Partition(tuple(shape))
    return math.factorial(shape.size) // math.prod(shape.hooks())
