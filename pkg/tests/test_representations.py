from fractions import Fraction as F
from itertools import product as iproduct

import pytest

from homalg import (HomAlgebra, HomFManifold, Representation, adjoint_assoc,
                    adjoint_f_manifold, adjoint_lie, adjoint_pre_lie,
                    check_coherence, check_dual_rep_conditions,
                    check_hom_f_manifold, check_rep_comm_assoc,
                    check_rep_f_manifold, check_rep_hom_lie,
                    check_rep_hom_pre_lie, coadjoint_rep, dual_rep_assoc,
                    dual_rep_f_manifold, dual_rep_lie, dual_rep_pre_lie,
                    eval_l1, eval_l2, eval_l3, leibnizator, semidirect_product)
from homalg.errors import PreconditionError
from homalg.fixtures import (a2, a2_star_algebra, a3, a3_dot_algebra,
                             a3_star_algebra, bracket_only_2d,
                             non_coherent_fm, poisson_zero_bracket,
                             zero_representation)
from homalg.linalg import Matrix, basis_vector, pair, vec_is_zero
from homalg.representations import mu_star_matrices, rho_star_matrices


def perturbed_adjoint(fm):
    rep = adjoint_f_manifold(fm)
    mu = list(rep.mu)
    bumped = [list(r) for r in mu[0].entries]
    bumped[0][1] += F(1)
    mu[0] = Matrix.from_rows(bumped)
    return Representation(rep.alg_dim, rep.mod_dim, rep.rho, tuple(mu), rep.phi)


class TestAssocRep:
    def test_adjoint_passes(self):
        alg = a3_dot_algebra(1)
        assert check_rep_comm_assoc(alg, adjoint_assoc(alg)).passed

    def test_dual_of_adjoint_passes(self):
        alg = a3_dot_algebra(1)
        dual = dual_rep_assoc(alg, adjoint_assoc(alg))
        assert check_rep_comm_assoc(alg, dual).passed

    def test_identity_phi_fails_on_a2(self):
        alg = a2(2, 3).dot_algebra()
        rep = adjoint_assoc(alg)
        broken = Representation(2, 2, None, rep.mu, Matrix.identity(2))
        assert not check_rep_comm_assoc(alg, broken).passed


class TestLieRep:
    def test_adjoint_passes(self):
        alg = a3(1).bracket_algebra()
        assert check_rep_hom_lie(alg, adjoint_lie(alg)).passed

    def test_dual_of_adjoint_passes(self):
        alg = a3(1).bracket_algebra()
        dual = dual_rep_lie(alg, adjoint_lie(alg))
        assert check_rep_hom_lie(alg, dual).passed

    def test_scaled_phi_fails_with_nonzero_bracket(self):
        alg = bracket_only_2d().bracket_algebra()
        rep = adjoint_lie(alg)
        scaled = Representation(2, 2, rep.rho, None, Matrix.identity(2).scale(2))
        assert not check_rep_hom_lie(alg, scaled).passed


class TestPreLieRep:
    @pytest.mark.parametrize("alg", [a3_star_algebra(1), a3_star_algebra(2),
                                     a2_star_algebra(2, 3)],
                             ids=["a3b1", "a3b2", "a2"])
    def test_adjoint_passes(self, alg):
        assert check_rep_hom_pre_lie(alg, adjoint_pre_lie(alg)).passed

    @pytest.mark.parametrize("alg", [a3_star_algebra(1), a2_star_algebra(2, 3)],
                             ids=["a3b1", "a2"])
    def test_dual_of_adjoint_passes(self, alg):
        dual = dual_rep_pre_lie(alg, adjoint_pre_lie(alg))
        assert check_rep_hom_pre_lie(alg, dual).passed

    def test_zero_mu_with_lie_rho(self):
        alg = a3_star_algebra(1)
        rep = adjoint_pre_lie(alg)
        z = tuple(Matrix.zero(3, 3) for _ in range(3))
        degenerate = Representation(3, 3, rep.rho, z, rep.phi)
        assert check_rep_hom_pre_lie(alg, degenerate).passed


class TestTrilinearMaps:
    def test_l1_is_leibnizator_on_adjoint(self):
        fm = a3(1)
        rep = adjoint_f_manifold(fm)
        for idx in iproduct(range(3), repeat=3):
            x, y, u = (basis_vector(3, i) for i in idx)
            assert eval_l1(fm, rep, x, y, u) == leibnizator(fm, x, y, u)

    def test_l2_is_rotated_leibnizator_on_adjoint(self):
        fm = a2(2, 3)
        rep = adjoint_f_manifold(fm)
        for idx in iproduct(range(2), repeat=3):
            x, y, u = (basis_vector(2, i) for i in idx)
            assert eval_l2(fm, rep, x, y, u) == leibnizator(fm, u, x, y)

    def test_zero_module_argument(self):
        fm = a3(2)
        rep = adjoint_f_manifold(fm)
        z = (F(0),) * 3
        assert vec_is_zero(eval_l1(fm, rep, fm.basis(1), fm.basis(2), z))
        assert vec_is_zero(eval_l3(fm, rep, fm.basis(1), fm.basis(2), z))


class TestFManifoldRep:
    @pytest.mark.parametrize("fm", [a3(1), a2(2, 3), a3(2)],
                             ids=["a3b1", "a2", "a3b2"])
    def test_adjoint_passes(self, fm):
        assert check_rep_f_manifold(fm, adjoint_f_manifold(fm)).passed

    def test_poisson_rep_with_vanishing_maps(self):
        fm = poisson_zero_bracket(2)
        rep = adjoint_f_manifold(fm)
        for idx in iproduct(range(3), repeat=2):
            x, y = (basis_vector(3, i) for i in idx)
            for u in range(3):
                assert vec_is_zero(eval_l1(fm, rep, x, y, basis_vector(3, u)))
                assert vec_is_zero(eval_l2(fm, rep, x, y, basis_vector(3, u)))
        assert check_rep_f_manifold(fm, rep).passed

    def test_perturbed_adjoint_fails(self):
        fm = a3(1)
        assert not check_rep_f_manifold(fm, perturbed_adjoint(fm)).passed


class TestDualPairings:
    @pytest.mark.parametrize("fm", [a3(1), a3(2), a2(2, 3)],
                             ids=["a3b1", "a3b2", "a2"])
    def test_mu_star_pairing(self, fm):
        rep = adjoint_f_manifold(fm)
        stars = mu_star_matrices(fm.twist, rep)
        ainv = fm.twist.inverse()
        phin2 = rep.phi.power(-2)
        d = fm.dim
        for i, j, k in iproduct(range(d), repeat=3):
            lhs = pair(stars[i].apply(basis_vector(d, j)), basis_vector(d, k))
            rhs = -pair(basis_vector(d, j),
                        rep.mu_of(ainv.column(i)).apply(phin2.column(k)))
            assert lhs == rhs

    @pytest.mark.parametrize("fm", [a3(1), a2(2, 3)], ids=["a3b1", "a2"])
    def test_rho_star_pairing(self, fm):
        rep = adjoint_f_manifold(fm)
        stars = rho_star_matrices(fm.twist, rep)
        ainv = fm.twist.inverse()
        phin2 = rep.phi.power(-2)
        d = fm.dim
        for i, j, k in iproduct(range(d), repeat=3):
            lhs = pair(stars[i].apply(basis_vector(d, j)), basis_vector(d, k))
            rhs = -pair(basis_vector(d, j),
                        rep.rho_of(ainv.column(i)).apply(phin2.column(k)))
            assert lhs == rhs

    @pytest.mark.parametrize("fm", [a3(1), a3(2), a2(2, 3)],
                             ids=["a3b1", "a3b2", "a2"])
    def test_l_star_lemma(self, fm):
        rep = adjoint_f_manifold(fm)
        d = fm.dim
        a = fm.twist
        rs = rho_star_matrices(a, rep)
        ms = mu_star_matrices(a, rep)
        phis = rep.phi.inverse().transpose()
        an2 = a.power(-2)
        phin4 = rep.phi.power(-4)

        def opify(mats, x):
            out = Matrix.zero(d, d)
            for t, c in enumerate(x):
                if c:
                    out = out + mats[t].scale(c)
            return out

        for i, j in iproduct(range(d), repeat=2):
            x, y = basis_vector(d, i), basis_vector(d, j)
            ax, ay = a.apply(x), a.apply(y)
            for kk in range(d):
                xi = basis_vector(d, kk)
                l1s = tuple(
                    -p + q + r for p, q, r in zip(
                        opify(rs, ax).apply(opify(ms, y).apply(xi)),
                        opify(ms, ay).apply(opify(rs, x).apply(xi)),
                        opify(ms, fm.bracket.apply(x, y)).apply(phis.apply(xi))))
                l2s = tuple(
                    -p - q - r for p, q, r in zip(
                        opify(ms, ax).apply(opify(rs, y).apply(xi)),
                        opify(ms, ay).apply(opify(rs, x).apply(xi)),
                        opify(rs, fm.dot.apply(x, y)).apply(phis.apply(xi))))
                for uu in range(d):
                    u = basis_vector(d, uu)
                    assert pair(l1s, u) == pair(
                        xi, eval_l1(fm, rep, an2.apply(x), an2.apply(y),
                                    phin4.apply(u)))
                    assert pair(l2s, u) == -pair(
                        xi, eval_l3(fm, rep, an2.apply(x), an2.apply(y),
                                    phin4.apply(u)))


class TestDualGates:
    @pytest.mark.parametrize("fm", [a3(1), a2(2, 3), a3(2)],
                             ids=["a3b1", "a2", "a3b2"])
    def test_adjoint_satisfies_dual_conditions(self, fm):
        assert check_dual_rep_conditions(fm, adjoint_f_manifold(fm)).passed

    @pytest.mark.parametrize("fm", [poisson_zero_bracket(2), bracket_only_2d()],
                             ids=["zero-bracket", "zero-product"])
    def test_poisson_fixtures_pass_conditions(self, fm):
        assert check_dual_rep_conditions(fm, adjoint_f_manifold(fm)).passed

    @pytest.mark.parametrize("fm", [a3(1), a2(2, 3)], ids=["a3b1", "a2"])
    def test_f_dual_passes_rep_check(self, fm):
        dual = dual_rep_f_manifold(fm, adjoint_f_manifold(fm))
        assert check_rep_f_manifold(fm, dual).passed

    def test_double_dual_assoc_passes(self):
        alg = a3_dot_algebra(1)
        d1 = dual_rep_assoc(alg, adjoint_assoc(alg))
        d2 = dual_rep_assoc(alg, d1)
        assert check_rep_comm_assoc(alg, d2).passed

    def test_singular_phi_rejected(self):
        alg = a3_dot_algebra(1)
        rep = adjoint_assoc(alg)
        singular = Representation(3, 3, None, rep.mu, Matrix.zero(3, 3))
        with pytest.raises(PreconditionError):
            dual_rep_assoc(alg, singular)

    def test_classical_specialization_is_negative_transpose(self):
        alg = bracket_only_2d().bracket_algebra()  # identity twist
        rep = adjoint_lie(alg)
        dual = dual_rep_lie(alg, rep)
        for i in range(2):
            assert dual.rho[i] == -rep.rho[i].transpose()


class TestCoherence:
    @pytest.mark.parametrize("fm", [a3(1), a3(2), a2(2, 3), poisson_zero_bracket(2),
                                    bracket_only_2d()],
                             ids=["a3b1", "a3b2", "a2", "poisson", "bracket2"])
    def test_fixtures_coherent(self, fm):
        assert check_coherence(fm).passed

    def test_tensor_square_not_coherent(self):
        fm = non_coherent_fm()
        assert check_hom_f_manifold(fm).passed
        assert not check_coherence(fm).passed

    @pytest.mark.parametrize("fm", [a3(1), a2(2, 3)], ids=["a3b1", "a2"])
    def test_coadjoint_passes(self, fm):
        co = coadjoint_rep(fm)
        assert check_rep_f_manifold(fm, co).passed

    def test_coadjoint_rejected_when_incoherent(self):
        with pytest.raises(PreconditionError):
            coadjoint_rep(non_coherent_fm())


class TestSemidirect:
    def test_adjoint_gives_valid_structure(self):
        fm = a3(1)
        sd = semidirect_product(fm, adjoint_f_manifold(fm))
        assert sd.dim == 6
        assert check_hom_f_manifold(sd).passed

    def test_zero_rep_is_abelian_extension(self):
        fm = a3(2)
        sd = semidirect_product(fm, zero_representation(3, 2))
        assert check_hom_f_manifold(sd).passed
        assert all(vec_is_zero(sd.dot.value(3 + i, 3 + j))
                   for i in range(2) for j in range(2))

    def test_iff_both_directions(self):
        pairs = [
            (a3(1), adjoint_f_manifold(a3(1))),
            (a3(1), perturbed_adjoint(a3(1))),
            (a2(2, 3), adjoint_f_manifold(a2(2, 3))),
            (a3(2), zero_representation(3, 2)),
        ]
        seen_invalid = False
        for fm, rep in pairs:
            rep_ok = check_rep_f_manifold(fm, rep).passed
            sd_ok = check_hom_f_manifold(semidirect_product(fm, rep)).passed
            assert rep_ok == sd_ok
            seen_invalid |= not rep_ok
        assert seen_invalid
