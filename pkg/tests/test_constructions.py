from fractions import Fraction as F

import pytest

from homalg import (Morphism, check_derivation, check_hom_f_manifold,
                    check_morphism, commutator_bracket, derivation_product,
                    direct_sum, subadjacent_from_admissible,
                    subadjacent_from_pre_f, symmetrized_product,
                    tensor_product, yau_twist)
from homalg.errors import PreconditionError
from homalg.fixtures import (a2, a2_derivation, a2_dot_algebra, a3,
                             a3_derivation, a3_dot_algebra, a3_star_algebra,
                             abelian_algebra, rota_baxter_r3)
from homalg.linalg import BilinearMap, Matrix
from homalg.operators import induced_pre_f
from homalg.representations import adjoint_f_manifold


class TestDerivation:
    def test_a3_grading_derivation(self):
        assert check_derivation(a3_dot_algebra(1), a3_derivation()).passed

    def test_a2_derivation(self):
        assert check_derivation(a2_dot_algebra(2), a2_derivation(3)).passed

    def test_identity_fails_on_a3(self):
        rep = check_derivation(a3_dot_algebra(1), Matrix.identity(3))
        assert not rep.passed
        # the product of the top generator with itself breaks the count
        assert any(c.identity == "leibniz" and c.indices == (2, 2)
                   for c in rep.all_counterexamples())

    def test_derivation_product_values(self):
        star = a3_star_algebra(1)
        assert star.product.value(1, 2) == (F(1), F(0), F(0))
        assert star.product.value(2, 1) == (F(2), F(0), F(0))
        assert commutator_bracket(star.product).value(1, 2) == (F(-1), F(0), F(0))

    def test_a2_derivation_product_values(self):
        star = derivation_product(a2_dot_algebra(2), a2_derivation(3))
        assert star.product.value(0, 1) == (F(0), F(6))
        assert star.product.value(1, 0) == (F(0), F(0))

    def test_zero_derivation_zero_product(self):
        star = derivation_product(a3_dot_algebra(1), Matrix.zero(3, 3))
        assert star.product.is_zero()

    def test_non_derivation_rejected(self):
        with pytest.raises(PreconditionError):
            derivation_product(a3_dot_algebra(1), Matrix.identity(3))

    def test_lambda_does_not_change_bracket(self):
        b0 = commutator_bracket(a3_star_algebra(2, lam=0).product)
        b1 = commutator_bracket(a3_star_algebra(2, lam=F(5, 7)).product)
        assert b0 == b1


class TestSymmetrizeCommutate:
    def test_symmetric_star_zero_bracket(self):
        assert commutator_bracket(a3_dot_algebra(1).product).is_zero()

    def test_antisymmetric_diamond_zero_product(self):
        br = BilinearMap.from_entries(2, {(0, 1, 0): 1, (1, 0, 0): -1})
        assert symmetrized_product(br).is_zero()

    def test_induced_products_on_a3(self):
        fm = a3(1)
        pf = induced_pre_f(rota_baxter_r3(), fm, adjoint_f_manifold(fm))
        assert symmetrized_product(pf.diamond).value(1, 2) == (F(3, 2), F(0), F(0))
        assert symmetrized_product(pf.diamond).value(2, 2) == (F(0), F(2), F(0))
        assert commutator_bracket(pf.star).value(1, 2) == (F(-3, 2), F(0), F(0))


class TestSubadjacent:
    def test_from_admissible_matches_fixture(self):
        fm = subadjacent_from_admissible(a3_dot_algebra(1), a3_star_algebra(1, lam=1))
        assert fm.bracket == a3(1).bracket
        assert check_hom_f_manifold(fm).passed

    def test_from_pre_f(self):
        base = a3(1)
        pf = induced_pre_f(rota_baxter_r3(), base, adjoint_f_manifold(base))
        fm = subadjacent_from_pre_f(pf)
        assert check_hom_f_manifold(fm).passed
        assert fm.dot.value(1, 2) == (F(3, 2), F(0), F(0))
        assert fm.bracket.value(1, 2) == (F(-3, 2), F(0), F(0))

    def test_gate_rejects_invalid_pair(self):
        from homalg import HomPreF
        bad = HomPreF(3, a3_dot_algebra(1).product, a3_dot_algebra(1).product,
                      Matrix.identity(3))
        with pytest.raises(PreconditionError):
            subadjacent_from_pre_f(bad)


class TestYauTwist:
    def test_identity_morphism_is_noop(self):
        fm = a3(2)
        out = yau_twist(fm, Morphism(Matrix.identity(3)))
        assert out.dot == fm.dot and out.bracket == fm.bracket
        assert out.twist == fm.twist

    def test_a3_b1_twisted_by_grading_gives_a3_b(self):
        fm = a3(1)
        b = F(2)
        phi = Matrix.diagonal([b ** 3, b ** 2, b])
        out = yau_twist(fm, Morphism(phi))
        expected = a3(b)
        assert out.dot == expected.dot
        assert out.bracket == expected.bracket
        assert out.twist == phi
        assert out.dot.value(1, 2) == (F(8), F(0), F(0))
        assert check_hom_f_manifold(out).passed

    def test_zero_algebra(self):
        z = BilinearMap.zero(2)
        from homalg import HomFManifold
        fm = HomFManifold(2, z, z, Matrix.identity(2))
        out = yau_twist(fm, Morphism(Matrix.diagonal([2, 3])))
        assert out.dot.is_zero() and out.bracket.is_zero()

    def test_non_morphism_rejected(self):
        with pytest.raises(PreconditionError):
            yau_twist(a3(1), Morphism(Matrix.diagonal([1, 1, 2])))

    def test_weak_morphism_rejected(self):
        with pytest.raises(PreconditionError):
            yau_twist(a3(1), Morphism(Matrix.identity(3), weak=True))


class TestDirectSum:
    def test_a2_plus_a3(self):
        s = direct_sum(a2(2, 3), a3(1))
        assert s.dim == 5
        # cross terms vanish
        assert all(v == 0 for v in s.dot.value(0, 3))
        assert all(v == 0 for v in s.bracket.value(1, 2))
        assert check_hom_f_manifold(s).passed

    def test_sum_with_zero_dim(self):
        from homalg import HomFManifold
        zero = HomFManifold(0, BilinearMap.zero(0), BilinearMap.zero(0),
                            Matrix.zero(0, 0), ())
        s = direct_sum(a2(2, 3), zero)
        assert s.dot == a2(2, 3).dot

    def test_blocks_reproduce_factors(self):
        left, right = a2(2, 3), a3(2)
        s = direct_sum(left, right)
        for i in range(2):
            for j in range(2):
                assert s.dot.value(i, j)[:2] == left.dot.value(i, j)
        for i in range(3):
            for j in range(3):
                assert s.bracket.value(2 + i, 2 + j)[2:] == right.bracket.value(i, j)


class TestTensorProduct:
    def test_unit_factor_is_identity(self):
        from homalg import HomFManifold
        unital = HomFManifold(1, BilinearMap.from_entries(1, {(0, 0, 0): 1}),
                              BilinearMap.zero(1), Matrix.identity(1))
        fm = a2(2, 3)
        t = tensor_product(fm, unital)
        assert t.dot == fm.dot and t.bracket == fm.bracket and t.twist == fm.twist

    def test_a2_square_bracket_value(self):
        fm = a2(2, 3)
        t = tensor_product(fm, fm)
        # [e1 (x) e1, e1 (x) e2] = [e1,e1](x)(e1.e2) + (e1.e1)(x)[e1,e2]
        #                        = e1 (x) 6 e2 = 6 (basis index 1)
        assert t.bracket.value(0, 1) == (F(0), F(6), F(0), F(0))

    def test_a2_square_full_recheck_passes(self):
        fm = a2(2, 3)
        assert check_hom_f_manifold(tensor_product(fm, fm)).passed

    def test_dimensions_and_twist(self):
        t = tensor_product(a2(2, 3), a3(1))
        assert t.dim == 6
        assert t.twist == Matrix.diagonal([1, 1, 1, 2, 2, 2])


class TestMorphismCheck:
    def test_identity_passes(self):
        fm = a3(1)
        assert check_morphism(fm, fm, Morphism(Matrix.identity(3))).passed

    def test_operator_is_morphism_from_subadjacent(self):
        fm = a3(1)
        pf = induced_pre_f(rota_baxter_r3(), fm, adjoint_f_manifold(fm))
        sub = subadjacent_from_pre_f(pf)
        assert check_morphism(sub, fm, Morphism(rota_baxter_r3())).passed

    def test_zero_map_passes(self):
        fm = a3(1)
        assert check_morphism(fm, fm, Morphism(Matrix.zero(3, 3))).passed

    def test_weak_morphism_skips_product(self):
        # scaling by 2 preserves a zero bracket but not the product
        fm = a2(2, 3)
        m = Matrix.diagonal([2, 2])
        full = check_morphism(fm, fm, Morphism(m))
        assert not full.passed
        from homalg import HomFManifold
        zfm = HomFManifold(2, fm.dot, BilinearMap.zero(2), fm.twist)
        weak = check_morphism(zfm, zfm, Morphism(m, weak=True))
        assert weak.passed
