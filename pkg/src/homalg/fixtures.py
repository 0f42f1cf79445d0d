"""Canonical small structures used by the test suite and shipped as files."""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .algebras import HomAlgebra, HomFManifold
from .constructions import commutator_bracket, derivation_product, tensor_product
from .deformations import Deformation
from .io import (doc_for, doc_for_operator, doc_for_representation,
                 doc_for_symplectic, dump_json)
from .linalg import BilinearMap, Matrix, scalar
from .operators import SymplecticForm
from .representations import (Representation, adjoint_f_manifold,
                              adjoint_pre_lie)


def a2_dot_algebra(b) -> HomAlgebra:
    """dim 2: e1.e1 = e1, e1.e2 = e2.e1 = b e2; twist = diag(1, b)."""
    b = scalar(b)
    dot = BilinearMap.from_entries(2, {(0, 0, 0): 1, (0, 1, 1): b, (1, 0, 1): b})
    return HomAlgebra(2, dot, Matrix.diagonal([1, b]))


def a2_derivation(a) -> Matrix:
    return Matrix.diagonal([0, scalar(a)])


def a2(b, a) -> HomFManifold:
    """The graded 2-dim structure; bracket [e1,e2] = a b e2 via its derivation."""
    alg = a2_dot_algebra(b)
    star = derivation_product(alg, a2_derivation(a))
    return HomFManifold(2, alg.product, commutator_bracket(star.product), alg.twist)


def a3_dot_algebra(b) -> HomAlgebra:
    """dim 3: e2.e3 = e3.e2 = b^3 e1, e3.e3 = b^2 e2; twist = diag(b^3, b^2, b)."""
    b = scalar(b)
    dot = BilinearMap.from_entries(3, {(1, 2, 0): b ** 3, (2, 1, 0): b ** 3,
                                       (2, 2, 1): b ** 2})
    return HomAlgebra(3, dot, Matrix.diagonal([b ** 3, b ** 2, b]))


def a3_derivation() -> Matrix:
    return Matrix.diagonal([3, 2, 1])


def a3(b) -> HomFManifold:
    """The graded 3-dim structure; bracket [e2,e3] = -b^3 e1 via diag(3,2,1)."""
    alg = a3_dot_algebra(b)
    star = derivation_product(alg, a3_derivation())
    return HomFManifold(3, alg.product, commutator_bracket(star.product), alg.twist)


def a3_star_algebra(b, lam=0) -> HomAlgebra:
    """The derivation product x*y = x.D(y) + lam x.y on the 3-dim structure."""
    return derivation_product(a3_dot_algebra(b), a3_derivation(), lam)


def a2_star_algebra(b, a, lam=0) -> HomAlgebra:
    return derivation_product(a2_dot_algebra(b), a2_derivation(a), lam)


def rota_baxter_r3() -> Matrix:
    """diag(1/3, 1/2, 1), a weight-zero operator for every a3(b)."""
    return Matrix.diagonal([Fraction(1, 3), Fraction(1, 2), 1])


def abelian_algebra(dim: int) -> HomAlgebra:
    return HomAlgebra(dim, BilinearMap.zero(dim), Matrix.identity(dim))


def poisson_zero_bracket(b) -> HomFManifold:
    alg = a3_dot_algebra(b)
    return HomFManifold(3, alg.product, BilinearMap.zero(3), alg.twist)


def bracket_only_2d() -> HomFManifold:
    """Zero product, bracket [e1,e2] = e2, identity twist."""
    br = BilinearMap.from_entries(2, {(0, 1, 1): 1, (1, 0, 1): -1})
    return HomFManifold(2, BilinearMap.zero(2), br, Matrix.identity(2))


def unital_2d() -> HomFManifold:
    """e1 a unit, e2.e2 = 0, bracket [e1,e2] = e2, identity twist."""
    dot = BilinearMap.from_entries(2, {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1})
    br = BilinearMap.from_entries(2, {(0, 1, 1): 1, (1, 0, 1): -1})
    return HomFManifold(2, dot, br, Matrix.identity(2))


def classical_prelie_2d() -> HomAlgebra:
    """e1*e2 = e2, everything else zero, identity twist."""
    return HomAlgebra(2, BilinearMap.from_entries(2, {(0, 1, 1): 1}),
                      Matrix.identity(2))


def symplectic_2d() -> tuple[HomFManifold, SymplecticForm]:
    """bracket_only_2d with the standard area form w(e1,e2) = 1."""
    return bracket_only_2d(), SymplecticForm(Matrix.from_rows([[0, 1], [-1, 0]]))


def non_coherent_fm() -> HomFManifold:
    """A valid structure failing the coherence identities: a2(2,3) (x) a2(2,3)."""
    base = a2(2, 3)
    return tensor_product(base, base)


def derivation_term(alg: HomAlgebra, d: Matrix) -> BilinearMap:
    """The bilinear map (x, y) -> x.d(y)."""
    return BilinearMap.from_function(
        alg.dim, lambda i, j: alg.product.apply(alg.basis(i), d.apply(alg.basis(j))))


def derivation_deformation_a3(b=1) -> Deformation:
    alg = a3_dot_algebra(b)
    return Deformation(alg, (derivation_term(alg, a3_derivation()),))


def obstructed_deformation() -> Deformation:
    """Abelian base; the first-order term is not pre-Lie, so order 2 is blocked."""
    base = abelian_algebra(2)
    mu1 = BilinearMap.from_entries(2, {(0, 0, 1): 1, (1, 0, 0): 1})
    return Deformation(base, (mu1,))


def zero_representation(alg_dim: int, mod_dim: int) -> Representation:
    z = tuple(Matrix.zero(mod_dim, mod_dim) for _ in range(alg_dim))
    return Representation(alg_dim, mod_dim, z, z, Matrix.identity(mod_dim))


# ---------------------------------------------------------------------------
# shipped corpus
# ---------------------------------------------------------------------------

def fixture_corpus() -> dict[str, dict]:
    """Filename -> document for every shipped fixture."""
    docs: dict[str, dict] = {}

    for b, a, tag in ((2, 3, "b2_a3"), (1, 1, "b1_a1")):
        docs[f"a2_{tag}.json"] = doc_for(
            a2(b, a), name=f"a2_{tag}",
            notes="2-dim graded commutative structure with derivation diag(0,a); "
                  "bracket [e1,e2] = a*b e2",
            params={"b": Fraction(b), "a": Fraction(a)},
            matrices={"derivation": a2_derivation(a)})
    for b, tag in ((Fraction(1), "b1"), (Fraction(2), "b2"), (Fraction(1, 2), "b1_2")):
        docs[f"a3_{tag}.json"] = doc_for(
            a3(b), name=f"a3_{tag}",
            notes="3-dim graded commutative structure with derivation diag(3,2,1); "
                  "bracket [e2,e3] = -b^3 e1",
            params={"b": b},
            matrices={"derivation": a3_derivation()})

    for b, tag in ((Fraction(1), "b1"), (Fraction(2), "b2")):
        fm = a3(b)
        docs[f"r3_on_a3_{tag}.json"] = doc_for_operator(
            fm, adjoint_f_manifold(fm), rota_baxter_r3(),
            name=f"r3_on_a3_{tag}",
            notes="weight-zero operator diag(1/3,1/2,1) relative to the self-action",
            params={"b": b})

    star1 = a3_star_algebra(1)
    docs["ctx_a3_b1_derivation.json"] = doc_for_representation(
        star1, adjoint_pre_lie(star1), name="ctx_a3_b1_derivation",
        notes="pre-Lie product x*y = x.D(y) on a3(b=1) with its self-action module")
    star2 = a2_star_algebra(2, 3)
    docs["ctx_a2_b2_a3.json"] = doc_for_representation(
        star2, adjoint_pre_lie(star2), name="ctx_a2_b2_a3",
        notes="pre-Lie product x*y = x.D(y) on a2(b=2,a=3) with its self-action module")
    ab1 = abelian_algebra(1)
    docs["ctx_abelian1_zero_rep.json"] = doc_for_representation(
        ab1, zero_representation(1, 1), name="ctx_abelian1_zero_rep",
        notes="1-dim zero product with the zero module; the differential vanishes")

    fm1 = a3(1)
    docs["rep_a3_b1_adjoint.json"] = doc_for_representation(
        fm1, adjoint_f_manifold(fm1), name="rep_a3_b1_adjoint",
        notes="self-action (bracketing, multiplication, twist) of a3(b=1)")

    docs["deform_a3_b1_derivation.json"] = doc_for(
        derivation_deformation_a3(1), name="deform_a3_b1_derivation",
        notes="order-1 deformation of the a3(b=1) product by mu1(x,y) = x.D(y)")
    docs["deform_abelian2_obstructed.json"] = doc_for(
        obstructed_deformation(), name="deform_abelian2_obstructed",
        notes="abelian base; mu1(e1,e1)=e2, mu1(e2,e1)=e1 passes order 1 but "
              "cannot extend to order 2")

    docs["poisson_a3_b2.json"] = doc_for(
        poisson_zero_bracket(2), name="poisson_a3_b2",
        notes="a3(b=2) product with the zero bracket; Leibniz compatibility holds")
    docs["poisson_bracket_only_2d.json"] = doc_for(
        bracket_only_2d(), name="poisson_bracket_only_2d",
        notes="zero product with bracket [e1,e2]=e2; Leibniz compatibility holds")
    docs["unital_2d.json"] = doc_for(
        unital_2d(), name="unital_2d",
        notes="2-dim unital commutative product with bracket [e1,e2]=e2")

    fm_sym, omega = symplectic_2d()
    docs["symplectic_2d.json"] = doc_for_symplectic(
        fm_sym, omega, name="symplectic_2d",
        notes="bracket-only 2-dim structure with the standard area form")

    docs["tensor_a2_a2.json"] = doc_for(
        non_coherent_fm(), name="tensor_a2_a2",
        notes="tensor square of a2(b=2,a=3); valid structure, coherence fails")
    return docs


def write_corpus(directory) -> list[str]:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    names = []
    for fname, doc in sorted(fixture_corpus().items()):
        (out / fname).write_text(dump_json(doc), encoding="ascii")
        names.append(fname)
    return names
