"""
Tests for polynomials in the Chern roots and Segre coefficient extraction
"""

import pytest
from hypothesis import given, settings

from gysin.core.coeffring import ClassPoly
from gysin.core.exceptions import ArityError, PartitionError, TermLimitError
from gysin.core.tpoly import SegreAssignment, TPoly, extract_with_segre, schur_in_t

from strategies import class_polys, tpolys


def t(d, i):
    return TPoly.variable(d, i)


class TestTPolyArithmetic:

    def test_constructors(self):
        assert TPoly.monomial(2, {1: 2, 2: 1}) == t(2, 1) ** 2 * t(2, 2)
        assert TPoly.zero(3).is_zero
        assert TPoly.one(2).coefficient((0, 0)) == ClassPoly.one()

    def test_arity_mismatch(self):
        with pytest.raises(ArityError):
            t(2, 1) + t(3, 1)
        with pytest.raises(ArityError):
            TPoly(2, {(1, 0, 0): 1})

    def test_binomial_expansion(self):
        p = (t(2, 1) + t(2, 2)) ** 4
        assert p.coefficient((2, 2)) == ClassPoly.constant(6)
        assert p.coefficient((3, 1)) == ClassPoly.constant(4)
        assert p.degree == 4

    def test_small_products(self):
        a, b = t(2, 1), t(2, 2)
        assert (a + b) * 1 == a + b
        assert (a - b) * (a + b) == a ** 2 - b ** 2
        assert (a + b) ** 2 * (a - b) == a ** 3 + a ** 2 * b - a * b ** 2 - b ** 3

    @settings(max_examples=20)
    @given(tpolys(2, max_degree=8), tpolys(2, max_degree=8), tpolys(2, max_degree=8))
    def test_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c
        assert (a - b) + b == a

    def test_degrees_count_class_grades(self):
        p = t(2, 1) * ClassPoly.segre("E", 2) + t(2, 2) ** 3
        assert p.degree == 3
        assert p.t_degree == 3
        q = p + TPoly.one(2)
        assert not q.is_homogeneous
        assert sorted(q.homogeneous_components()) == [0, 3]

    def test_symmetry(self):
        assert ((t(3, 1) + t(3, 2)) * t(3, 3)).is_symmetric([1, 2])
        assert not ((t(3, 1) + t(3, 2)) * t(3, 3)).is_symmetric()

    def test_term_limit(self, monkeypatch):
        from gysin.core import tpoly as tpoly_module
        monkeypatch.setattr(tpoly_module.settings, "max_terms", 5)
        with pytest.raises(TermLimitError):
            (t(2, 1) + t(2, 2) + 1) ** 3

    def test_huge_power_fails_before_expanding(self, monkeypatch):
        from gysin.core import tpoly as tpoly_module
        monkeypatch.setattr(tpoly_module.settings, "max_terms", 1000)
        with pytest.raises(TermLimitError) as info:
            (t(2, 1) + t(2, 2)) ** 100000
        assert "would exceed" in info.value.message

    def test_many_operand_terms_with_few_product_terms(self, monkeypatch):
        from gysin.core import tpoly as tpoly_module
        monkeypatch.setattr(tpoly_module.settings, "max_terms", 10)
        p = sum((TPoly.monomial(1, {1: i}) for i in range(5)), TPoly.zero(1))
        # 25 pairs but only 9 exponents of degree <= 8
        assert len(p * p) == 9


class TestSegreExtraction:

    def test_single_variable(self):
        # t^4 against t^2 s_{1/t}(E) gives s_2(E)
        result = extract_with_segre(TPoly.monomial(1, {1: 4}), (2,), SegreAssignment.uniform("E", 1))
        assert result == ClassPoly.segre("E", 2)

    def test_below_the_exponent_vanishes(self):
        result = extract_with_segre(TPoly.one(1), (1,), SegreAssignment.uniform("E", 1))
        assert result.is_zero

    def test_grassmannian_of_planes_in_four_space(self):
        p = (t(2, 1) + t(2, 2)) ** 4 * (t(2, 1) - t(2, 2))
        result = extract_with_segre(p, (3, 2), SegreAssignment.uniform("E", 2))
        assert result.trivialize_segre() == ClassPoly.constant(2)

    def test_per_variable_bundles(self):
        p = t(2, 1) ** 3 * t(2, 2)
        result = extract_with_segre(p, (2, 0), SegreAssignment(("E_3", "E_1")))
        assert result == ClassPoly.segre("E_3", 1) * ClassPoly.segre("E_1", 1)

    @settings(max_examples=10)
    @given(tpolys(3, max_degree=12))
    def test_chunking_does_not_change_the_result(self, p):
        assign = SegreAssignment.uniform("E", 3)
        whole = extract_with_segre(p, (2, 1, 1), assign)
        for chunk_size in (1, 2, 5):
            assert extract_with_segre(p, (2, 1, 1), assign, chunk_size=chunk_size) == whole

    @settings(max_examples=25)
    @given(tpolys(3, max_degree=10), tpolys(3, max_degree=10), class_polys(("E", "F")))
    def test_linear_over_the_class_ring(self, p, q, a):
        assign = SegreAssignment(("E", "E_2", "E"))
        e = (3, 2, 1)
        lhs = extract_with_segre(p * a + q, e, assign)
        assert lhs == extract_with_segre(p, e, assign) * a + extract_with_segre(q, e, assign)

    def test_arity_checked(self):
        with pytest.raises(ArityError):
            extract_with_segre(t(2, 1), (1,), SegreAssignment.uniform("E", 2))


class TestSchurPolynomials:

    def test_small_shapes(self):
        assert schur_in_t((1,), 2) == t(2, 1) + t(2, 2)
        assert schur_in_t((1, 1), 2) == t(2, 1) * t(2, 2)
        assert schur_in_t((2,), 2) == t(2, 1) ** 2 + t(2, 1) * t(2, 2) + t(2, 2) ** 2

    def test_empty_partition_is_one(self):
        assert schur_in_t((), 3) == TPoly.one(3)

    def test_pieri_rule_for_one_box(self):
        d = 3
        lhs = schur_in_t((2, 1), d) * schur_in_t((1,), d)
        rhs = schur_in_t((3, 1), d) + schur_in_t((2, 2), d) + schur_in_t((2, 1, 1), d)
        assert lhs == rhs

    def test_symmetric(self):
        assert schur_in_t((3, 1), 3).is_symmetric()

    def test_invalid_shapes(self):
        with pytest.raises(PartitionError):
            schur_in_t((1, 2), 2)
        with pytest.raises(PartitionError):
            schur_in_t((1, 1, 1), 2)
