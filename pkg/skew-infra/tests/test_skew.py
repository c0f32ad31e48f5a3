import pytest

from skew_infra.algebra import GroupElement, IntegerMatrix
from skew_infra.errors import CocycleGenerationError, DimensionMismatchError
from skew_infra.skew import (
    SkewCocycle,
    birkhoff_sum_at_return,
    check_periodic_type,
    eigencocycle,
    eigencocycles,
    normalize_cocycle,
    renormalized_phi,
)
from tests.base_test import BaseTest

TORUS_PHI = SkewCocycle.from_rows([[0], [1], [-1]])


class TestEigencocycles(BaseTest):

    def test_torus_eigencocycle(self, torus):
        assert eigencocycles(torus.instance.A) == (1, [(0, 1, -1)])
        assert eigencocycle(torus.instance.A) == TORUS_PHI
        assert torus.phi == TORUS_PHI

    def test_rotation_has_none(self, rotation):
        assert eigencocycles(rotation.instance.A) == (0, [])
        assert eigencocycle(rotation.instance.A) is None
        assert rotation.phi is None
        assert rotation.m == 0

    def test_identity_matrix(self):
        m, basis = eigencocycles(IntegerMatrix.identity(3))
        assert m == 3
        assert SkewCocycle.from_basis(basis, 3).generates_lattice()

    def test_default_cocycle_is_first_basis_vector(self):
        A = IntegerMatrix.identity(3)
        _, basis = eigencocycles(A)
        phi = eigencocycle(A)
        assert phi.m == 1
        assert phi == SkewCocycle.from_basis(basis[:1], 3)
        assert phi.generates_lattice()
        assert check_periodic_type(A, phi)

    def test_eigencocycles_are_fixed(self, torus):
        A = torus.instance.A
        for vector in eigencocycles(A)[1]:
            assert A.T @ vector == vector


class TestPeriodicType(BaseTest):

    def test_periodic_type(self, torus):
        assert check_periodic_type(torus.instance.A, TORUS_PHI)
        assert not check_periodic_type(torus.instance.A, TORUS_PHI.perturbed(2))

    def test_renormalization_is_stationary(self, torus):
        A = torus.instance.A
        assert renormalized_phi(A, TORUS_PHI, 0) == TORUS_PHI
        assert renormalized_phi(A, TORUS_PHI, 3) == TORUS_PHI
        with pytest.raises(ValueError):
            renormalized_phi(A, TORUS_PHI, -1)

    def test_renormalization_of_a_perturbation(self, torus):
        perturbed = TORUS_PHI.perturbed(1)
        image = renormalized_phi(torus.instance.A, perturbed, 1)
        # A^T phi sums phi over the words; label 1 occurs once in every word
        assert image.values == (GroupElement.of(1), GroupElement.of(2), GroupElement.of(0))

    def test_word_sums(self, torus):
        for j in (1, 2, 3):
            assert birkhoff_sum_at_return(torus.instance.tower, TORUS_PHI, j) == TORUS_PHI.value(j)

    def test_shape_mismatch(self, torus):
        with pytest.raises(DimensionMismatchError):
            check_periodic_type(torus.instance.A, SkewCocycle.from_rows([[0], [1]]))


class TestSkewCocycle(BaseTest):

    def test_mixed_fiber_dimensions(self):
        with pytest.raises(DimensionMismatchError):
            SkewCocycle.from_rows([[0], [1, 2]])

    def test_from_basis(self):
        phi = SkewCocycle.from_basis([(1, 0, 2), (0, 1, 1)], 3)
        assert phi.values == (GroupElement.of(1, 0), GroupElement.of(0, 1), GroupElement.of(2, 1))
        assert phi.m == 2 and phi.d == 3

    def test_perturbed(self):
        assert TORUS_PHI.perturbed(3, delta=-2).value(3) == GroupElement.of(-3)

    def test_generation(self):
        assert TORUS_PHI.generates_lattice()
        scaled = SkewCocycle.from_rows([[0], [2], [-2]])
        assert not scaled.generates_lattice()
        with pytest.raises(CocycleGenerationError) as e:
            scaled.require_generating()
        assert e.value.factors == (2,)

    def test_normalize_scaled(self):
        assert normalize_cocycle(SkewCocycle.from_rows([[0], [2], [-2]])) == TORUS_PHI

    def test_normalize_drops_dead_coordinates(self):
        normalized = normalize_cocycle(SkewCocycle.from_rows([[1, 2], [0, 0], [-1, -2]]))
        assert normalized.m == 1
        assert normalized.generates_lattice()
        assert normalized.value(2).is_zero()
        assert normalized.value(1) == -normalized.value(3)

    def test_normalize_keeps_generating_values(self):
        phi = SkewCocycle.from_rows([[1, 0], [0, 1], [1, 1]])
        normalized = normalize_cocycle(phi)
        assert normalized.m == 2
        assert normalized.generates_lattice()
