"""Exact graded ring of formal characteristic classes.

Segre classes ``s_i(B)`` are the primitive generators; Chern classes of a
bundle are derived from them through ``c(B) s(B) = 1``. The only Chern
symbols stored as generators are first Chern classes of line bundles such
as ``c_1(L)``.
"""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from gysin.core.exceptions import InvalidArgumentError, UnknownBundleError

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


class SymbolKind(str, Enum):
    CHERN = "chern"
    SEGRE = "segre"


@dataclass(frozen=True, order=True)
class ClassSymbol:
    bundle: str
    kind: SymbolKind
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise InvalidArgumentError(f"class symbol index must be >= 1, got {self.index}")
        if self.kind == SymbolKind.CHERN and self.bundle == "L" and self.index != 1:
            raise InvalidArgumentError("the only Chern symbol of L is c_1(L)")

    @property
    def grade(self) -> int:
        return self.index

    def __str__(self):
        letter = "s" if self.kind == SymbolKind.SEGRE else "c"
        return f"{letter}_{self.index}({self.bundle})"


@dataclass(frozen=True)
class ClassMonomial:
    """A multiset of symbols, stored as sorted ``(symbol, power)`` pairs."""

    powers: Tuple[Tuple[ClassSymbol, int], ...] = ()

    @classmethod
    def of(cls, symbols: Iterable[ClassSymbol]) -> "ClassMonomial":
        counts = Counter(symbols)
        return cls(tuple(sorted(counts.items())))

    @property
    def grade(self) -> int:
        return sum(sym.grade * power for sym, power in self.powers)

    @property
    def is_unit(self) -> bool:
        return not self.powers

    def symbols(self) -> Iterator[ClassSymbol]:
        for sym, power in self.powers:
            for _ in range(power):
                yield sym

    def __mul__(self, other: "ClassMonomial") -> "ClassMonomial":
        if not other.powers:
            return self
        if not self.powers:
            return other
        merged: Dict[ClassSymbol, int] = dict(self.powers)
        for sym, power in other.powers:
            merged[sym] = merged.get(sym, 0) + power
        return ClassMonomial(tuple(sorted(merged.items())))

    def sort_key(self):
        return (self.grade, self.powers)

    def __str__(self):
        if not self.powers:
            return "1"
        return "*".join(str(sym) if power == 1 else f"{sym}^{power}" for sym, power in self.powers)


UNIT = ClassMonomial()


def _format_coefficient(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class ClassPoly:
    """Exact rational combination of class monomials. Treated as immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Dict[ClassMonomial, Scalar]] = None):
        self._terms: Dict[ClassMonomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff != 0:
                    self._terms[mono] = Fraction(coeff)

    @classmethod
    def _from_clean(cls, terms: Dict[ClassMonomial, Fraction]) -> "ClassPoly":
        poly = cls.__new__(cls)
        poly._terms = terms
        return poly

    # Constructors

    @classmethod
    def zero(cls) -> "ClassPoly":
        return cls()

    @classmethod
    def one(cls) -> "ClassPoly":
        return cls({UNIT: 1})

    @classmethod
    def constant(cls, value: Scalar) -> "ClassPoly":
        return cls({UNIT: value})

    @classmethod
    def from_symbol(cls, symbol: ClassSymbol, coeff: Scalar = 1) -> "ClassPoly":
        return cls({ClassMonomial(((symbol, 1),)): coeff})

    @classmethod
    def segre(cls, bundle: str, index: int) -> "ClassPoly":
        """``s_index(bundle)``, with ``s_0 = 1`` and ``s_k = 0`` for ``k < 0``."""
        if index < 0:
            return cls.zero()
        if index == 0:
            return cls.one()
        return cls.from_symbol(ClassSymbol(bundle, SymbolKind.SEGRE, index))

    @classmethod
    def c1(cls, bundle: str = "L") -> "ClassPoly":
        return cls.from_symbol(ClassSymbol(bundle, SymbolKind.CHERN, 1))

    @classmethod
    def coerce(cls, value: Union["ClassPoly", Scalar]) -> "ClassPoly":
        if isinstance(value, ClassPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.constant(value)
        raise TypeError(f"cannot use {type(value).__name__} as a class polynomial")

    # Inspection

    def items(self) -> List[Tuple[ClassMonomial, Fraction]]:
        """Terms in canonical order: by grade, then lexicographically."""
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def __iter__(self):
        return iter(self.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def grades(self) -> List[int]:
        return sorted({mono.grade for mono in self._terms})

    @property
    def is_homogeneous(self) -> bool:
        return len(self.grades()) <= 1

    @property
    def grade(self) -> Optional[int]:
        """Grade of a nonzero homogeneous element, otherwise ``None``."""
        grades = self.grades()
        return grades[0] if len(grades) == 1 else None

    def homogeneous_component(self, grade: int) -> "ClassPoly":
        return ClassPoly._from_clean({m: c for m, c in self._terms.items() if m.grade == grade})

    def constant_value(self) -> Fraction:
        return self._terms.get(UNIT, Fraction(0))

    @property
    def is_constant(self) -> bool:
        return all(mono.is_unit for mono in self._terms)

    def bundles(self) -> set:
        return {sym.bundle for mono in self._terms for sym, _ in mono.powers}

    # Arithmetic

    def __add__(self, other):
        try:
            other = ClassPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            total = terms.get(mono, 0) + coeff
            if total:
                terms[mono] = total
            else:
                terms.pop(mono, None)
        return ClassPoly._from_clean(terms)

    __radd__ = __add__

    def __neg__(self):
        return ClassPoly._from_clean({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = ClassPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return ClassPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ClassPoly.zero()
            return ClassPoly._from_clean({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, ClassPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return ClassPoly.zero()
        terms: Dict[ClassMonomial, Fraction] = defaultdict(Fraction)
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                terms[m1 * m2] += c1 * c2
        return ClassPoly._from_clean({m: c for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise InvalidArgumentError("class polynomials only take non-negative integer powers")
        result = ClassPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ClassPoly.constant(other)
        if not isinstance(other, ClassPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # Substitution

    def substitute(self, image: Callable[[ClassSymbol], Optional["ClassPoly"]]) -> "ClassPoly":
        """Apply the ring homomorphism sending each symbol to ``image(symbol)``.

        Symbols for which ``image`` returns ``None`` are kept as they are.
        """
        cache: Dict[ClassSymbol, ClassPoly] = {}
        result = ClassPoly.zero()
        for mono, coeff in self._terms.items():
            value = ClassPoly.constant(coeff)
            for sym, power in mono.powers:
                if sym not in cache:
                    mapped = image(sym)
                    cache[sym] = ClassPoly.from_symbol(sym) if mapped is None else mapped
                value = value * cache[sym] ** power
                if value.is_zero:
                    break
            result = result + value
        return result

    def trivialize_segre(self) -> "ClassPoly":
        """Set every ``s_i(B)`` with ``i >= 1`` to zero (trivial base bundle)."""
        return ClassPoly._from_clean({
            m: c for m, c in self._terms.items()
            if all(sym.kind != SymbolKind.SEGRE for sym, _ in m.powers)
        })

    def truncate(self, max_grade: Optional[int]) -> "ClassPoly":
        """Zero all monomials of grade above ``max_grade`` (e.g. ``dim X``)."""
        if max_grade is None:
            return self
        return ClassPoly._from_clean({m: c for m, c in self._terms.items() if m.grade <= max_grade})

    # Printing

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for mono, coeff in self.items():
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            if mono.is_unit:
                body = _format_coefficient(magnitude)
            elif magnitude == 1:
                body = str(mono)
            else:
                body = f"{_format_coefficient(magnitude)}*{mono}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"ClassPoly({self})"

    def term_lines(self) -> List[str]:
        """One signed term per line, in canonical order."""
        if not self._terms:
            return ["0"]
        lines = []
        for mono, coeff in self.items():
            if mono.is_unit:
                lines.append(_format_coefficient(coeff))
            elif coeff == 1:
                lines.append(str(mono))
            elif coeff == -1:
                lines.append(f"-{mono}")
            else:
                lines.append(f"{_format_coefficient(coeff)}*{mono}")
        return lines


def format_rational(value: Fraction) -> str:
    return _format_coefficient(Fraction(value))


@lru_cache(maxsize=None)
def chern_from_segre(bundle: str, i: int) -> ClassPoly:
    """``c_i(bundle)`` from the Segre symbols via ``c_i = -sum_{k=1..i} s_k c_{i-k}``."""
    if i < 0:
        raise InvalidArgumentError(f"Chern class index must be non-negative, got {i}")
    if i == 0:
        return ClassPoly.one()
    total = ClassPoly.zero()
    for k in range(1, i + 1):
        total = total + ClassPoly.segre(bundle, k) * chern_from_segre(bundle, i - k)
    return -total


def elementary_symmetric(values: Sequence[ClassPoly], k: int) -> ClassPoly:
    """``e_k`` of a list of class polynomials."""
    table = [ClassPoly.one()] + [ClassPoly.zero()] * k
    for value in values:
        for j in range(k, 0, -1):
            table[j] = table[j] + table[j - 1] * value
    return table[k]


def substitute_flag_relations(p: ClassPoly, chain: Sequence[str], y: Sequence[ClassPoly]) -> ClassPoly:
    """Rewrite ``s_*(E_i)`` of a flag ``E_1 < ... < E_n`` through ``s_*(E_n)``.

    ``y[k]`` is the class ``y_{k+2}`` of the step ``E_{k+1} < E_{k+2}``, so that
    ``s(E_i) = s(E_{i+1}) (1 + y_{i+1})`` and hence
    ``s(E_i) = s(E_n) * prod_{k=i+1..n} (1 + y_k)``.
    """
    n = len(chain)
    if len(y) != n - 1:
        raise InvalidArgumentError(f"a flag of length {n} needs {n - 1} line classes, got {len(y)}")
    for value in y:
        if not value.is_zero and value.grade != 1:
            raise InvalidArgumentError(f"line classes must have grade 1, got {value}")

    position = {name: i for i, name in enumerate(chain, start=1)}
    top = chain[-1]
    allowed = set(position)
    for value in y:
        allowed |= value.bundles()

    def image(sym: ClassSymbol) -> Optional[ClassPoly]:
        if sym.bundle not in allowed:
            raise UnknownBundleError(f"{sym} does not belong to the flag {' < '.join(chain)}")
        i = position.get(sym.bundle)
        if i is None:
            return None
        if sym.kind != SymbolKind.SEGRE:
            raise UnknownBundleError(f"{sym}: only Segre symbols of the flag bundles can be rewritten")
        if i == n:
            return None
        lines = y[i - 1:]  # y_{i+1}, ..., y_n
        m = sym.index
        return sum(
            (ClassPoly.segre(top, m - j) * elementary_symmetric(lines, j) for j in range(0, min(m, len(lines)) + 1)),
            ClassPoly.zero(),
        )

    return p.substitute(image)
