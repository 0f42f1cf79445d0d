"""Exact-arithmetic models, checkers and constructions for twisted
nonassociative algebras, with cohomology and deformation machinery."""

__version__ = "0.1.0"

from .algebras import (HomAlgebra, HomFManifold, HomPreF, check_comm_hom_assoc,
                       check_f_admissible, check_hertling_manin,
                       check_hom_f_manifold, check_hom_lie,
                       check_hom_lie_admissible, check_hom_poisson,
                       check_hom_pre_lie, check_hom_zinbiel,
                       check_pre_f_manifold, f1, f2, hom_associator,
                       leibnizator)
from .cohomology import (Cochain, ComplexContext, check_d_squared, coboundary,
                         cohomology_dims)
from .constructions import (Morphism, check_derivation, check_morphism,
                            commutator_bracket, derivation_product, direct_sum,
                            subadjacent_from_admissible, subadjacent_from_pre_f,
                            symmetrized_product, tensor_product, yau_twist)
from .deformations import (Deformation, check_infinitesimal_cocycle,
                           check_n_deformation, equivalence_witness,
                           extend_deformation, obstruction_theta,
                           semiclassical_limit)
from .errors import DimensionMismatch, PreconditionError
from .linalg import (BilinearMap, Matrix, MultiTensor, Scalar, kernel_basis,
                     rank, solve_linear_system)
from .operators import (SymplecticForm, check_o_operator_assoc,
                        check_o_operator_f_manifold, check_o_operator_lie,
                        check_symplectic, compatible_from_invertible_o,
                        induced_pre_f, pre_f_from_symplectic,
                        rota_baxter_induced)
from .report import CheckReport, Counterexample
from .representations import (Representation, adjoint_assoc,
                              adjoint_f_manifold, adjoint_lie, adjoint_pre_lie,
                              check_coherence, check_dual_rep_conditions,
                              check_rep_comm_assoc, check_rep_f_manifold,
                              check_rep_hom_lie, check_rep_hom_pre_lie,
                              coadjoint_rep, dual_rep_assoc,
                              dual_rep_f_manifold, dual_rep_lie,
                              dual_rep_pre_lie, eval_l1, eval_l2, eval_l3,
                              semidirect_product)
