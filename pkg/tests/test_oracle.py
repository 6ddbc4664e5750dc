"""
Tests for the stepwise towers and the enumerative degrees
"""

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gysin.core.coeffring import ClassPoly, substitute_flag_relations
from gysin.core.exceptions import OracleUnavailableError
from gysin.core.geometry import BaseMode, FlagGeometry, Partition, reference_bundle, syt_count
from gysin.core.oracle import (
    QuotientSeries,
    grassmannian_degree,
    hook_length_degree,
    lagrangian_degree,
    quadric_degree,
    single_step_pushforward,
    stepwise_pushforward,
    stepwise_pushforward_A,
    stepwise_pushforward_KLA,
)
from gysin.core.pushforward import pushforward
from gysin.core.tpoly import TPoly

from strategies import symmetric_tpolys, tpolys


def t(d, i):
    return TPoly.variable(d, i)


def increasing_dims(n):
    for size in range(1, n):
        yield from combinations(range(1, n), size)


class TestSingleStep:

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_projective_bundle_steps(self, n):
        plain = QuotientSeries("E")
        assert single_step_pushforward(TPoly.monomial(1, {1: n - 1}), 1, n, plain) == TPoly.one(1)
        assert single_step_pushforward(TPoly.monomial(1, {1: n}), 1, n, plain) == \
            TPoly.constant(1, ClassPoly.segre("E", 1))

    def test_other_variables_pass_through(self):
        n = 3
        P = TPoly.monomial(2, {1: n - 1, 2: 1})
        assert single_step_pushforward(P, 1, n, QuotientSeries("E")) == t(2, 2)

    def test_line_corrections(self):
        # s_{1/t}(E) (1 - t_2/t) against t_1^2 on a rank 2 quotient
        series = QuotientSeries("E", ((2, -1),))
        result = single_step_pushforward(TPoly.monomial(2, {1: 2}), 1, 2, series)
        assert result == TPoly.constant(2, ClassPoly.segre("E", 1)) - t(2, 2)


class TestTypeATower:

    def test_projective_line(self):
        assert stepwise_pushforward_A(t(1, 1), 2, [1]) == ClassPoly.one()

    def test_grassmannian_of_planes(self):
        f = (t(2, 1) + t(2, 2)) ** 4
        assert stepwise_pushforward_A(f, 4, [2], BaseMode.TRIVIAL) == ClassPoly.constant(2)

    def test_complete_flags_of_rank_three(self):
        f = TPoly.monomial(2, {1: 2, 2: 2})
        g = FlagGeometry.type_a(3, [1, 2])
        assert stepwise_pushforward_A(f, 3, [1, 2]) == pushforward(f, g).value

    @pytest.mark.parametrize("n,dims", [(n, dims) for n in range(2, 6) for dims in increasing_dims(n)])
    @settings(max_examples=25)
    @given(data=st.data())
    def test_matches_closed_form(self, n, dims, data):
        g = FlagGeometry.type_a(n, dims)
        f = data.draw(tpolys(g.d), label="f")
        assert stepwise_pushforward(f, g) == pushforward(f, g).value

    @pytest.mark.parametrize("d,n", [(d, n) for n in range(2, 7) for d in range(1, n)])
    def test_grassmannian_degree_by_hook_lengths(self, d, n):
        hyperplane = sum((t(d, i) for i in range(1, d + 1)), TPoly.zero(d))
        value = stepwise_pushforward_A(hyperplane ** (d * (n - d)), n, [d], BaseMode.TRIVIAL)
        assert value == ClassPoly.constant(syt_count(Partition.rectangle(d, n - d)))


class TestKempfLaksovTower:

    @pytest.mark.parametrize("m,k", [(1, 0), (2, 3), (3, 5), (4, 3)])
    def test_single_step(self, m, k):
        n = 4
        value = stepwise_pushforward_KLA(TPoly.monomial(1, {1: k}), [m], n)
        assert value == ClassPoly.segre(reference_bundle(m, n), k - m + 1)

    @pytest.mark.parametrize("n,d", [(n, d) for n in range(2, 7) for d in (1, 2, 3) if d <= n])
    @settings(max_examples=25)
    @given(data=st.data())
    def test_matches_closed_form(self, n, d, data):
        mu = data.draw(st.sampled_from(list(combinations(range(n, 0, -1), d))), label="mu")
        g = FlagGeometry.kl_a(n, mu)
        bundles = tuple(reference_bundle(m, n) for m in mu)
        f = data.draw(tpolys(d, bundles, max_degree=5), label="f")
        assert stepwise_pushforward(f, g) == pushforward(f, g).value

    @pytest.mark.parametrize("n,d", [(2, 1), (3, 1), (3, 2), (4, 2), (5, 1), (5, 2)])
    @settings(max_examples=5)
    @given(data=st.data())
    def test_birational_to_the_grassmann_bundle(self, n, d, data):
        mu = tuple(range(n, n - d, -1))
        chain = [reference_bundle(m, n) for m in reversed(mu)]
        weights = data.draw(st.lists(st.integers(-3, 3), min_size=d - 1, max_size=d - 1), label="weights")
        ys = [ClassPoly.c1(f"Y{k}") * w for k, w in zip(range(2, d + 1), weights)]
        model = FlagGeometry.kl_a(n, mu)
        grassmann = FlagGeometry.grassmann(n, d)
        f = data.draw(symmetric_tpolys(d), label="f")
        lhs = substitute_flag_relations(pushforward(f, model).value, chain, ys)
        rhs = substitute_flag_relations(pushforward(f, grassmann).value, chain, ys)
        assert lhs == rhs
        assert stepwise_pushforward(f, model) == pushforward(f, model).value

    def test_trivial_base(self):
        g = FlagGeometry.kl_a(4, [3, 1], BaseMode.TRIVIAL)
        assert stepwise_pushforward(TPoly.monomial(2, {1: 2}), g).is_zero


class TestUnavailableFamilies:

    @pytest.mark.parametrize("g", [
        FlagGeometry.type_c(2, [1]),
        FlagGeometry.type_bd(4, [1]),
        FlagGeometry.kl_c(2, [4, 3]),
    ])
    def test_isotropic_families_have_no_tower(self, g):
        with pytest.raises(OracleUnavailableError):
            stepwise_pushforward(TPoly.one(g.d), g)


class TestEnumerativeDegrees:

    @pytest.mark.parametrize("d,n", [(d, n) for n in range(2, 8) for d in range(1, n)])
    def test_grassmannian_matches_hook_lengths(self, d, n):
        assert grassmannian_degree(d, n) == syt_count(Partition.rectangle(d, n - d))
        assert hook_length_degree(d, n) == grassmannian_degree(d, n)

    @pytest.mark.parametrize("n,degree", [(1, 1), (2, 2), (3, 16)])
    def test_lagrangian_grassmannian(self, n, degree):
        assert lagrangian_degree(n) == degree

    @pytest.mark.parametrize("rank", [3, 4, 5, 6, 7])
    def test_quadric(self, rank):
        assert quadric_degree(rank) == 2
