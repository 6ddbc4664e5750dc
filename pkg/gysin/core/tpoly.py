"""Sparse polynomials in ``t_1..t_d`` over the class ring, and coefficient
extraction against formal Segre series.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from gysin.core.coeffring import ClassMonomial, ClassPoly, ClassSymbol, Scalar, SymbolKind
from gysin.core.config import settings
from gysin.core.exceptions import ArityError, InvalidArgumentError, PartitionError, TermLimitError

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]
Coefficient = Union[ClassPoly, int, Fraction]


class TPoly:
    """Polynomial in ``num_vars`` variables with ``ClassPoly`` coefficients.

    Variables are numbered from 1 in the public API; exponent vectors are
    plain tuples of length ``num_vars``.
    """

    __slots__ = ("num_vars", "_terms")

    def __init__(self, num_vars: int, terms: Optional[Mapping[Exponent, Coefficient]] = None):
        if num_vars < 1:
            raise InvalidArgumentError(f"a polynomial needs at least one variable, got {num_vars}")
        self.num_vars = num_vars
        self._terms: Dict[Exponent, ClassPoly] = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != num_vars or any(a < 0 for a in exps):
                    raise ArityError(f"exponent {exps} does not fit {num_vars} variables")
                coeff = ClassPoly.coerce(coeff)
                if coeff:
                    current = self._terms.get(exps)
                    coeff = coeff if current is None else current + coeff
                    if coeff:
                        self._terms[exps] = coeff
                    else:
                        del self._terms[exps]

    @classmethod
    def _from_clean(cls, num_vars: int, terms: Dict[Exponent, ClassPoly]) -> "TPoly":
        poly = cls.__new__(cls)
        poly.num_vars = num_vars
        poly._terms = terms
        return poly

    # Constructors

    @classmethod
    def zero(cls, num_vars: int) -> "TPoly":
        return cls(num_vars)

    @classmethod
    def constant(cls, num_vars: int, value: Coefficient) -> "TPoly":
        return cls(num_vars, {(0,) * num_vars: value})

    @classmethod
    def one(cls, num_vars: int) -> "TPoly":
        return cls.constant(num_vars, 1)

    @classmethod
    def variable(cls, num_vars: int, index: int) -> "TPoly":
        """The variable ``t_index`` (1-based)."""
        return cls.monomial(num_vars, {index: 1})

    @classmethod
    def monomial(cls, num_vars: int, powers: Mapping[int, int], coeff: Coefficient = 1) -> "TPoly":
        exps = [0] * num_vars
        for index, power in powers.items():
            if not 1 <= index <= num_vars:
                raise ArityError(f"variable t{index} does not exist in {num_vars} variables")
            exps[index - 1] += power
        return cls(num_vars, {tuple(exps): coeff})

    # Inspection

    def items(self) -> List[Tuple[Exponent, ClassPoly]]:
        return sorted(self._terms.items(), key=lambda item: (-sum(item[0]), tuple(-a for a in item[0])))

    def __iter__(self):
        return iter(self.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exps: Sequence[int]) -> ClassPoly:
        return self._terms.get(tuple(exps), ClassPoly.zero())

    @property
    def t_degree(self) -> int:
        """Largest total degree in the variables alone (-1 for zero)."""
        return max((sum(exps) for exps in self._terms), default=-1)

    def total_degrees(self) -> List[int]:
        """Total degrees (variables plus coefficient grade) present."""
        degrees = set()
        for exps, coeff in self._terms.items():
            for grade in coeff.grades():
                degrees.add(sum(exps) + grade)
        return sorted(degrees)

    @property
    def is_homogeneous(self) -> bool:
        return len(self.total_degrees()) <= 1

    @property
    def degree(self) -> Optional[int]:
        """Total degree of a nonzero homogeneous polynomial, otherwise ``None``."""
        degrees = self.total_degrees()
        return degrees[0] if len(degrees) == 1 else None

    def homogeneous_components(self) -> Dict[int, "TPoly"]:
        parts: Dict[int, Dict[Exponent, ClassPoly]] = {}
        for exps, coeff in self._terms.items():
            for grade in coeff.grades():
                piece = coeff.homogeneous_component(grade)
                parts.setdefault(sum(exps) + grade, {})[exps] = piece
        return {deg: TPoly._from_clean(self.num_vars, terms) for deg, terms in sorted(parts.items())}

    def is_symmetric(self, variables: Optional[Sequence[int]] = None) -> bool:
        """Invariance under transpositions of the given variables (all by default)."""
        indices = [i - 1 for i in (variables or range(1, self.num_vars + 1))]
        for a, b in zip(indices, indices[1:]):
            swapped = {}
            for exps, coeff in self._terms.items():
                new = list(exps)
                new[a], new[b] = new[b], new[a]
                swapped[tuple(new)] = coeff
            if swapped != self._terms:
                return False
        return True

    # Arithmetic

    def _check_arity(self, other: "TPoly"):
        if other.num_vars != self.num_vars:
            raise ArityError(f"cannot combine polynomials in {self.num_vars} and {other.num_vars} variables")

    def _coerce(self, other) -> Optional["TPoly"]:
        if isinstance(other, TPoly):
            self._check_arity(other)
            return other
        if isinstance(other, (ClassPoly, int, Fraction)):
            return TPoly.constant(self.num_vars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for exps, coeff in other._terms.items():
            total = terms[exps] + coeff if exps in terms else coeff
            if total:
                terms[exps] = total
            else:
                terms.pop(exps, None)
        return TPoly._from_clean(self.num_vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return TPoly._from_clean(self.num_vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (ClassPoly, int, Fraction)):
            if isinstance(other, ClassPoly) or other != 1:
                return self.scale(other)
            return self
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        limit = settings.max_terms
        if len(self) * len(other) > limit and self._product_size_bound(other) > limit:
            raise TermLimitError(
                f"product of {len(self)} by {len(other)} terms would exceed the ceiling of {limit} terms; "
                "raise GYSIN_MAX_TERMS or reduce the number of variables"
            )
        terms: Dict[Exponent, ClassPoly] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                product = c1 * c2
                if exps in terms:
                    terms[exps] = terms[exps] + product
                else:
                    terms[exps] = product
                    if len(terms) > limit:
                        raise TermLimitError(
                            f"product exceeds the ceiling of {limit} terms; "
                            "raise GYSIN_MAX_TERMS or reduce the number of variables"
                        )
        return TPoly._from_clean(self.num_vars, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def _product_size_bound(self, other: "TPoly") -> int:
        """Number of exponent vectors of degree at most the sum of both t-degrees."""
        top = self.t_degree + other.t_degree
        return math.comb(top + self.num_vars, self.num_vars)

    def scale(self, factor: Coefficient) -> "TPoly":
        return TPoly._from_clean(
            self.num_vars,
            {e: p for e, c in self._terms.items() if (p := c * factor)},
        )

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise InvalidArgumentError("polynomials only take non-negative integer powers")
        result = TPoly.one(self.num_vars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (ClassPoly, int, Fraction)):
            other = TPoly.constant(self.num_vars, other)
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self._terms == other._terms

    def __hash__(self):
        return hash((self.num_vars, frozenset(self._terms.items())))

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for exps, coeff in self.items():
            mono = "*".join(
                f"t{i}" if a == 1 else f"t{i}^{a}" for i, a in enumerate(exps, start=1) if a
            )
            if not mono:
                pieces.append(f"({coeff})" if len(coeff) > 1 else str(coeff))
            elif coeff == 1:
                pieces.append(mono)
            elif len(coeff) == 1:
                pieces.append(f"{coeff}*{mono}")
            else:
                pieces.append(f"({coeff})*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self):
        return f"TPoly({self.num_vars}, {self})"


@dataclass(frozen=True)
class SegreAssignment:
    """The bundle whose Segre series ``s_{1/t_i}`` accompanies each variable."""

    bundles: Tuple[str, ...]

    @classmethod
    def uniform(cls, bundle: str, d: int) -> "SegreAssignment":
        return cls((bundle,) * d)

    def __len__(self):
        return len(self.bundles)


def _segre_monomial(assign: SegreAssignment, shifts: Sequence[int]) -> ClassMonomial:
    return ClassMonomial.of(
        ClassSymbol(bundle, SymbolKind.SEGRE, k) for bundle, k in zip(assign.bundles, shifts) if k
    )


def _extract_chunk(terms: Iterable[Tuple[Exponent, ClassPoly]], e: Exponent, assign: SegreAssignment) -> ClassPoly:
    grouped: Dict[ClassMonomial, ClassPoly] = {}
    for exps, coeff in terms:
        shifts = [a - b for a, b in zip(exps, e)]
        if any(k < 0 for k in shifts):
            continue
        mono = _segre_monomial(assign, shifts)
        grouped[mono] = grouped[mono] + coeff if mono in grouped else coeff
    total = ClassPoly.zero()
    for mono, coeff in grouped.items():
        total = total + coeff * ClassPoly({mono: 1})
    return total


def extract_with_segre(
    P: TPoly,
    e: Sequence[int],
    assign: SegreAssignment,
    chunk_size: Optional[int] = None,
) -> ClassPoly:
    """``[t^e] (P * prod_i s_{1/t_i}(B_i))``.

    A term ``c t^a`` of ``P`` contributes ``c * prod_i s_{a_i - e_i}(B_i)``,
    where ``s_0 = 1`` and negative indices vanish, so only finitely many
    Segre terms are ever touched.
    """
    e = tuple(e)
    if len(e) != P.num_vars or len(assign) != P.num_vars:
        raise ArityError(
            f"extraction needs {P.num_vars} exponents and bundles, got {len(e)} and {len(assign)}"
        )
    if any(a < 0 for a in e):
        raise InvalidArgumentError(f"exponent vector {e} has negative entries")

    chunk_size = chunk_size or settings.chunk_size
    terms = P.items()
    if not chunk_size or len(terms) <= chunk_size:
        return _extract_chunk(terms, e, assign)
    chunks = [terms[i:i + chunk_size] for i in range(0, len(terms), chunk_size)]
    logger.debug("extracting %d terms in %d chunks", len(terms), len(chunks))
    return reduce(lambda acc, chunk: acc + _extract_chunk(chunk, e, assign), chunks, ClassPoly.zero())


@lru_cache(maxsize=None)
def _schur_terms(parts: Tuple[int, ...], d: int) -> Tuple[Tuple[Exponent, int], ...]:
    # Tableaux with entries <= d: the boxes holding d form a horizontal strip
    # lambda / mu, and mu is filled with entries <= d - 1.
    if not parts:
        return (((0,) * d, 1),)
    if d == 0 or len(parts) > d:
        return ()
    padded = list(parts) + [0]
    result: Dict[Exponent, int] = {}

    def interlacing(i: int, prefix: List[int]):
        if i == len(parts):
            yield tuple(p for p in prefix if p)
            return
        for mu_i in range(padded[i + 1], padded[i] + 1):
            yield from interlacing(i + 1, prefix + [mu_i])

    for mu in interlacing(0, []):
        if len(mu) > d - 1:
            continue
        strip = sum(parts) - sum(mu)
        for exps, count in _schur_terms(mu, d - 1):
            key = exps + (strip,)
            result[key] = result.get(key, 0) + count
    return tuple(sorted(result.items()))


def schur_in_t(partition: Sequence[int], d: int) -> TPoly:
    """Schur polynomial ``s_lambda(t_1..t_d)`` as a sum over semistandard tableaux."""
    parts = tuple(p for p in partition if p)
    if any(a < b for a, b in zip(parts, parts[1:])) or any(p < 0 for p in partition):
        raise PartitionError(f"{tuple(partition)} is not a partition")
    if len(parts) > d:
        raise PartitionError(f"partition {parts} has more than {d} parts")
    return TPoly(d, dict(_schur_terms(parts, d)))
