"""
Tests for the kernel polynomials of each family
"""

import pytest

from gysin.core.coeffring import ClassPoly
from gysin.core.exceptions import InadmissiblePartitionError
from gysin.core.geometry import FlagGeometry, Twist, kernel_degree
from gysin.core.kernels import build_kernel_spec, kernel_A, kernel_BD, kernel_C, kernel_KLC
from gysin.core.tpoly import SegreAssignment, TPoly


def t(d, i):
    return TPoly.variable(d, i)


L = ClassPoly.c1("L")


class TestKernels:

    def test_vandermonde(self):
        assert kernel_A(1) == TPoly.one(1)
        assert kernel_A(2) == t(2, 1) - t(2, 2)
        k3 = kernel_A(3)
        assert len(k3) == 6
        assert k3 == (t(3, 1) - t(3, 2)) * (t(3, 1) - t(3, 3)) * (t(3, 2) - t(3, 3))

    def test_symplectic(self):
        assert kernel_C(1) == TPoly.one(1)
        assert kernel_C(2, Twist.ZERO) == t(2, 1) ** 2 - t(2, 2) ** 2
        assert kernel_C(2, Twist.FORMAL) == (t(2, 1) + t(2, 2) + L) * (t(2, 1) - t(2, 2))

    def test_orthogonal(self):
        assert kernel_BD(1, Twist.ZERO) == t(1, 1) * 2
        assert kernel_BD(1, Twist.FORMAL) == t(1, 1) * 2 + L
        expected = t(2, 1) * t(2, 2) * (t(2, 1) + t(2, 2)) * (t(2, 1) - t(2, 2)) * 4
        assert kernel_BD(2, Twist.ZERO) == expected

    def test_kempf_laksov_symplectic(self):
        full = (t(2, 1) - t(2, 2)) * (t(2, 1) + t(2, 2) + L)
        assert kernel_KLC((4, 3), 2) == full
        assert kernel_KLC((2, 1), 2) == t(2, 1) - t(2, 2)
        with pytest.raises(InadmissiblePartitionError):
            kernel_KLC((4, 1), 2)

    @pytest.mark.parametrize("g", [
        FlagGeometry.type_a(5, [1, 3]),
        FlagGeometry.type_c(3, [3]),
        FlagGeometry.type_bd(7, [1, 3]),
        FlagGeometry.kl_c(3, [6, 4, 2]),
    ])
    def test_kernel_degree_is_top_degree(self, g):
        assert build_kernel_spec(g).kernel.t_degree == kernel_degree(g)


class TestKernelSpecs:

    def test_grassmann_bundle(self):
        spec = build_kernel_spec(FlagGeometry.type_a(4, [2]))
        assert spec.kernel == t(2, 1) - t(2, 2)
        assert spec.exponents == (3, 2)
        assert spec.assign == SegreAssignment(("E", "E"))

    def test_kempf_laksov_bundle(self):
        spec = build_kernel_spec(FlagGeometry.kl_a(4, [3, 1]))
        assert spec.kernel == t(2, 1) - t(2, 2)
        assert spec.exponents == (2, 0)
        assert spec.assign == SegreAssignment(("E_3", "E_1"))

    def test_top_reference_bundle_is_e(self):
        spec = build_kernel_spec(FlagGeometry.kl_c(2, [4, 3]))
        assert spec.assign == SegreAssignment(("E", "E_3"))

    def test_halvable_flag(self):
        assert build_kernel_spec(FlagGeometry.type_bd(6, [3])).halvable
        assert not build_kernel_spec(FlagGeometry.type_bd(6, [2])).halvable
