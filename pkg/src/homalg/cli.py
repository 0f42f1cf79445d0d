"""Command-line entry point.

Verbs: check | construct | cohomology | deform | fixtures.
Exit codes: 0 pass/success, 1 fail with witnesses, 2 input or precondition error.
Reports are deterministic: same input bytes, same report bytes.
"""
from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import __version__
from .algebras import (HomAlgebra, HomFManifold, HomPreF, check_comm_hom_assoc,
                       check_f_admissible, check_hertling_manin,
                       check_hom_f_manifold, check_hom_lie,
                       check_hom_lie_admissible, check_hom_poisson,
                       check_hom_pre_lie, check_hom_zinbiel,
                       check_pre_f_manifold)
from .cohomology import ComplexContext, check_d_squared, cohomology_dims, random_cochain
from .constructions import (Morphism, check_derivation, check_morphism,
                            derivation_product, direct_sum, tensor_product,
                            subadjacent_from_pre_f, yau_twist)
from .deformations import (Deformation, check_n_deformation, extend_deformation,
                           obstruction_theta, semiclassical_limit)
from .errors import DimensionMismatch, PreconditionError
from .fixtures import write_corpus
from .io import (Loaded, doc_for, doc_for_cochain, doc_for_representation,
                 dump_json, file_digest, format_scalar, load_file, save_file)
from .operators import (check_o_operator_assoc, check_o_operator_f_manifold,
                        check_o_operator_lie, check_symplectic,
                        compatible_from_invertible_o, induced_pre_f,
                        pre_f_from_symplectic)
from .report import DEFAULT_MAX_WITNESSES, CheckReport
from .representations import (adjoint_f_manifold, check_coherence,
                              check_dual_rep_conditions, check_rep_comm_assoc,
                              check_rep_f_manifold, check_rep_hom_lie,
                              check_rep_hom_pre_lie, coadjoint_rep,
                              dual_rep_assoc, dual_rep_lie, dual_rep_pre_lie,
                              dual_rep_f_manifold, semidirect_product)

D_SQUARED_SAMPLES = 100


def _report_doc(rep: CheckReport) -> dict:
    leaves = []
    for name, leaf in rep.flat().items():
        leaves.append({
            "name": name,
            "passed": leaf.passed,
            "counterexamples": [
                {"identity": c.identity,
                 "indices": list(c.indices),
                 "lhs": [format_scalar(v) for v in c.lhs],
                 "rhs": [format_scalar(v) for v in c.rhs]}
                for c in leaf.counterexamples],
        })
    return {"name": rep.name, "passed": rep.passed, "verdicts": leaves}


def _print_report(rep: CheckReport, fmt: str, out=None):
    out = out or sys.stdout
    if fmt == "json":
        out.write(dump_json(_report_doc(rep)))
        return
    out.write(f"check {rep.name}: {'PASS' if rep.passed else 'FAIL'}\n")
    for name, leaf in rep.flat().items():
        status = "ok" if leaf.passed else f"{len(leaf.counterexamples)} witness(es)"
        out.write(f"  {name}: {status}\n")
        for c in leaf.counterexamples:
            out.write(f"    at {c.indices}: lhs={[format_scalar(v) for v in c.lhs]} "
                      f"rhs={[format_scalar(v) for v in c.rhs]}\n")


def _full_report_doc(command: str, digests: list[str], body: dict) -> dict:
    doc = {"schema_version": 1, "tool": "homalg", "tool_version": __version__,
           "command": command, "input_digests": digests}
    doc.update(body)
    return doc


def _fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _want(loaded: Loaded, kinds: tuple[str, ...], check: str):
    if loaded.kind not in kinds:
        raise PreconditionError(
            f"{check} needs a file of kind {' or '.join(kinds)}, got {loaded.kind}")


def _as_dot_algebra(loaded: Loaded) -> HomAlgebra:
    obj = loaded.payload
    if isinstance(obj, HomFManifold):
        return obj.dot_algebra()
    if isinstance(obj, HomAlgebra):
        return obj
    raise PreconditionError("file does not carry a plain product")


def _as_bracket_algebra(loaded: Loaded) -> HomAlgebra:
    obj = loaded.payload
    if isinstance(obj, HomFManifold):
        return obj.bracket_algebra()
    if isinstance(obj, HomAlgebra):
        return obj
    raise PreconditionError("file does not carry a bracket")


def _rep_payload(loaded: Loaded):
    structure, rep = loaded.payload
    return structure, rep


def _derivation_matrix(loaded: Loaded):
    if "derivation" not in loaded.matrices:
        raise PreconditionError('file has no named matrix "derivation"')
    return loaded.matrices["derivation"]


def _run_check(name: str, inputs: list[Loaded], max_witnesses: int,
               seed: int) -> CheckReport:
    one = inputs[0]
    if name == "comm-hom-assoc":
        _want(one, ("hom-algebra", "hom-f-manifold"), name)
        return check_comm_hom_assoc(_as_dot_algebra(one), max_witnesses)
    if name == "hom-lie":
        _want(one, ("hom-algebra", "hom-f-manifold"), name)
        return check_hom_lie(_as_bracket_algebra(one), max_witnesses)
    if name == "hom-zinbiel":
        _want(one, ("hom-algebra", "hom-pre-f"), name)
        alg = one.payload if one.kind == "hom-algebra" else HomAlgebra(
            one.payload.dim, one.payload.diamond, one.payload.twist, one.payload.labels)
        return check_hom_zinbiel(alg, max_witnesses)
    if name == "hom-pre-lie":
        _want(one, ("hom-algebra", "hom-pre-f"), name)
        alg = one.payload if one.kind == "hom-algebra" else HomAlgebra(
            one.payload.dim, one.payload.star, one.payload.twist, one.payload.labels)
        return check_hom_pre_lie(alg, max_witnesses)
    if name == "hom-lie-admissible":
        _want(one, ("hom-algebra",), name)
        return check_hom_lie_admissible(one.payload, max_witnesses)
    if name == "hertling-manin":
        _want(one, ("hom-f-manifold",), name)
        return check_hertling_manin(one.payload, max_witnesses)
    if name == "hom-f-manifold":
        _want(one, ("hom-f-manifold",), name)
        return check_hom_f_manifold(one.payload, max_witnesses)
    if name == "hom-poisson":
        _want(one, ("hom-f-manifold",), name)
        return check_hom_poisson(one.payload, max_witnesses)
    if name == "coherence":
        _want(one, ("hom-f-manifold",), name)
        return check_coherence(one.payload, max_witnesses)
    if name == "derivation":
        _want(one, ("hom-algebra", "hom-f-manifold"), name)
        return check_derivation(_as_dot_algebra(one), _derivation_matrix(one),
                                max_witnesses)
    if name == "f-admissible":
        if len(inputs) != 2:
            raise PreconditionError("f-admissible takes two inputs: product file, star file")
        _want(inputs[0], ("hom-algebra", "hom-f-manifold"), name)
        _want(inputs[1], ("hom-algebra",), name)
        return check_f_admissible(_as_dot_algebra(inputs[0]), inputs[1].payload,
                                  max_witnesses)
    if name == "pre-f-manifold":
        _want(one, ("hom-pre-f",), name)
        return check_pre_f_manifold(one.payload, max_witnesses)
    if name == "rep-comm-assoc":
        _want(one, ("representation",), name)
        structure, rep = _rep_payload(one)
        return check_rep_comm_assoc(_as_dot_algebra(Loaded(one.kind, structure)),
                                    rep, max_witnesses)
    if name == "rep-hom-lie":
        _want(one, ("representation",), name)
        structure, rep = _rep_payload(one)
        return check_rep_hom_lie(_as_bracket_algebra(Loaded(one.kind, structure)),
                                 rep, max_witnesses)
    if name == "rep-hom-pre-lie":
        _want(one, ("representation",), name)
        structure, rep = _rep_payload(one)
        if not isinstance(structure, HomAlgebra):
            raise PreconditionError("rep-hom-pre-lie needs a plain product block")
        return check_rep_hom_pre_lie(structure, rep, max_witnesses)
    if name == "rep-f-manifold":
        _want(one, ("representation",), name)
        structure, rep = _rep_payload(one)
        if not isinstance(structure, HomFManifold):
            raise PreconditionError("rep-f-manifold needs an embedded two-operation block")
        return check_rep_f_manifold(structure, rep, max_witnesses)
    if name == "dual-rep-conditions":
        _want(one, ("representation",), name)
        structure, rep = _rep_payload(one)
        if not isinstance(structure, HomFManifold):
            raise PreconditionError("dual-rep-conditions needs an embedded two-operation block")
        return check_dual_rep_conditions(structure, rep, max_witnesses)
    if name == "o-operator-assoc":
        _want(one, ("operator",), name)
        fm, rep, t = one.payload
        return check_o_operator_assoc(t, fm.dot_algebra(), rep, max_witnesses)
    if name == "o-operator-lie":
        _want(one, ("operator",), name)
        fm, rep, t = one.payload
        return check_o_operator_lie(t, fm.bracket_algebra(), rep, max_witnesses)
    if name == "o-operator":
        _want(one, ("operator",), name)
        fm, rep, t = one.payload
        return check_o_operator_f_manifold(t, fm, rep, max_witnesses)
    if name == "symplectic":
        _want(one, ("symplectic",), name)
        fm, omega = one.payload
        return check_symplectic(fm, omega, max_witnesses)
    if name == "n-deformation":
        _want(one, ("deformation",), name)
        return check_n_deformation(one.payload, max_witnesses)
    if name == "d-squared":
        _want(one, ("representation",), name)
        structure, rep = _rep_payload(one)
        if not isinstance(structure, HomAlgebra):
            raise PreconditionError("d-squared needs a plain product block")
        ctx = ComplexContext(structure, rep)
        rng = random.Random(seed)
        parts = []
        for degree in (1, 2):
            bad_parts = []
            for k in range(D_SQUARED_SAMPLES):
                f = random_cochain(ctx.alg_dim, ctx.mod_dim, degree, rng)
                rep_k = check_d_squared(ctx, f, max_witnesses)
                if not rep_k.passed:
                    bad_parts.append(CheckReport(
                        name=f"d-squared-degree{degree}-sample{k}",
                        passed=False,
                        counterexamples=rep_k.counterexamples))
            parts.append(CheckReport.conjunction(f"d-squared-degree{degree}", bad_parts)
                         if bad_parts else
                         CheckReport(name=f"d-squared-degree{degree}", passed=True))
        return CheckReport.conjunction("d-squared", parts)
    raise PreconditionError(f"unknown check {name!r}")


CHECK_NAMES = ("comm-hom-assoc", "hom-lie", "hom-zinbiel", "hom-pre-lie",
               "hom-lie-admissible", "hertling-manin", "hom-f-manifold",
               "hom-poisson", "coherence", "derivation", "f-admissible",
               "pre-f-manifold", "rep-comm-assoc", "rep-hom-lie",
               "rep-hom-pre-lie", "rep-f-manifold", "dual-rep-conditions",
               "o-operator-assoc", "o-operator-lie", "o-operator", "symplectic",
               "n-deformation", "d-squared")


def cmd_check(args) -> int:
    try:
        inputs = [load_file(p) for p in args.input]
        rep = _run_check(args.name, inputs, args.max_witnesses, args.seed)
    except (ValueError, OSError) as exc:
        return _fail(str(exc))
    digests = [file_digest(p) for p in args.input]
    doc = _full_report_doc("check", digests,
                           {"check": args.name} | _report_doc(rep))
    if args.output:
        save_file(args.output, doc)
    if args.format == "json":
        sys.stdout.write(dump_json(doc))
    else:
        _print_report(rep, "human")
    return 0 if rep.passed else 1


def _construct(name: str, inputs: list[Loaded], seed: int):
    """Returns (object, recheck report, doc builder)."""
    one = inputs[0]
    if name == "derivation-product":
        _want(one, ("hom-algebra", "hom-f-manifold"), name)
        alg = _as_dot_algebra(one)
        lam = one.params.get("lambda", 0)
        star = derivation_product(alg, _derivation_matrix(one), lam)
        recheck = check_f_admissible(alg, star)
        return star, recheck, lambda obj: doc_for(obj, name="derivation-product")
    if name == "subadjacent":
        _want(one, ("hom-pre-f",), name)
        fm = subadjacent_from_pre_f(one.payload)
        return fm, check_hom_f_manifold(fm), lambda obj: doc_for(obj, name="subadjacent")
    if name == "yau-twist":
        _want(one, ("hom-f-manifold",), name)
        if "morphism" not in one.matrices:
            raise PreconditionError('yau-twist needs a named matrix "morphism"')
        fm = yau_twist(one.payload, Morphism(one.matrices["morphism"]))
        return fm, check_hom_f_manifold(fm), lambda obj: doc_for(obj, name="yau-twist")
    if name == "direct-sum":
        if len(inputs) != 2:
            raise PreconditionError("direct-sum takes two inputs")
        for l in inputs:
            _want(l, ("hom-f-manifold",), name)
        fm = direct_sum(inputs[0].payload, inputs[1].payload)
        return fm, check_hom_f_manifold(fm), lambda obj: doc_for(obj, name="direct-sum")
    if name == "tensor-product":
        if len(inputs) != 2:
            raise PreconditionError("tensor-product takes two inputs")
        for l in inputs:
            _want(l, ("hom-f-manifold",), name)
        fm = tensor_product(inputs[0].payload, inputs[1].payload)
        return fm, check_hom_f_manifold(fm), lambda obj: doc_for(obj, name="tensor-product")
    if name == "semidirect":
        _want(one, ("representation",), name)
        structure, rep = _rep_payload(one)
        if not isinstance(structure, HomFManifold):
            raise PreconditionError("semidirect needs an embedded two-operation block")
        fm = semidirect_product(structure, rep)
        return fm, check_hom_f_manifold(fm), lambda obj: doc_for(obj, name="semidirect")
    if name in ("dual-rep-assoc", "dual-rep-lie", "dual-rep-pre-lie",
                "dual-rep-f-manifold"):
        _want(one, ("representation",), name)
        structure, rep = _rep_payload(one)
        if name == "dual-rep-assoc":
            alg = _as_dot_algebra(Loaded(one.kind, structure))
            dual = dual_rep_assoc(alg, rep)
            recheck = check_rep_comm_assoc(alg, dual)
        elif name == "dual-rep-lie":
            alg = _as_bracket_algebra(Loaded(one.kind, structure))
            dual = dual_rep_lie(alg, rep)
            recheck = check_rep_hom_lie(alg, dual)
        elif name == "dual-rep-pre-lie":
            if not isinstance(structure, HomAlgebra):
                raise PreconditionError("dual-rep-pre-lie needs a plain product block")
            dual = dual_rep_pre_lie(structure, rep)
            recheck = check_rep_hom_pre_lie(structure, dual)
        else:
            if not isinstance(structure, HomFManifold):
                raise PreconditionError("dual-rep-f-manifold needs a two-operation block")
            dual = dual_rep_f_manifold(structure, rep)
            recheck = check_rep_f_manifold(structure, dual)
        return dual, recheck, lambda obj: doc_for_representation(structure, obj, name=name)
    if name == "coadjoint":
        _want(one, ("hom-f-manifold",), name)
        fm = one.payload
        dual = coadjoint_rep(fm)
        return dual, check_rep_f_manifold(fm, dual), \
            lambda obj: doc_for_representation(fm, obj, name="coadjoint")
    if name == "induced-pre-f":
        _want(one, ("operator",), name)
        fm, rep, t = one.payload
        pf = induced_pre_f(t, fm, rep)
        return pf, check_pre_f_manifold(pf), lambda obj: doc_for(obj, name="induced-pre-f")
    if name == "compatible-pre-f":
        _want(one, ("operator",), name)
        fm, rep, t = one.payload
        pf = compatible_from_invertible_o(t, fm, rep)
        return pf, check_pre_f_manifold(pf), lambda obj: doc_for(obj, name="compatible-pre-f")
    if name == "pre-f-from-symplectic":
        _want(one, ("symplectic",), name)
        fm, omega = one.payload
        pf = pre_f_from_symplectic(fm, omega)
        return pf, check_pre_f_manifold(pf), \
            lambda obj: doc_for(obj, name="pre-f-from-symplectic")
    raise PreconditionError(f"unknown construction {name!r}")


CONSTRUCT_NAMES = ("derivation-product", "subadjacent", "yau-twist", "direct-sum",
                   "tensor-product", "semidirect", "dual-rep-assoc", "dual-rep-lie",
                   "dual-rep-pre-lie", "dual-rep-f-manifold", "coadjoint",
                   "induced-pre-f", "compatible-pre-f", "pre-f-from-symplectic")


def cmd_construct(args) -> int:
    try:
        inputs = [load_file(p) for p in args.input]
        obj, recheck, to_doc = _construct(args.name, inputs, args.seed)
        if args.output:
            save_file(args.output, to_doc(obj))
    except (ValueError, OSError) as exc:
        return _fail(str(exc))
    digests = [file_digest(p) for p in args.input]
    doc = _full_report_doc("construct", digests,
                           {"construction": args.name,
                            "recheck": _report_doc(recheck)})
    if args.format == "json":
        sys.stdout.write(dump_json(doc))
    else:
        print(f"construct {args.name}: "
              f"{'ok' if recheck.passed else 'RECHECK FAILED'}")
        _print_report(recheck, "human")
    return 0 if recheck.passed else 1


def cmd_cohomology(args) -> int:
    if args.degree < 1:
        return _fail("degree must be >= 1")
    try:
        loaded = load_file(args.input[0])
        _want(loaded, ("representation",), "cohomology")
        structure, rep = _rep_payload(loaded)
        if not isinstance(structure, HomAlgebra):
            raise PreconditionError("cohomology needs a plain product block")
        ctx = ComplexContext(structure, rep)
        z, b, h = cohomology_dims(ctx, args.degree)
    except (ValueError, OSError) as exc:
        return _fail(str(exc))
    doc = _full_report_doc("cohomology", [file_digest(args.input[0])],
                           {"degree": args.degree,
                            "closed": z, "exact": b, "quotient": h})
    if args.output:
        save_file(args.output, doc)
    if args.format == "json":
        sys.stdout.write(dump_json(doc))
    else:
        print(f"degree {args.degree}: closed={z} exact={b} quotient={h}")
    return 0


def cmd_deform(args) -> int:
    try:
        loaded = load_file(args.input[0])
        _want(loaded, ("deformation",), "deform")
        dfm: Deformation = loaded.payload
    except (ValueError, OSError) as exc:
        return _fail(str(exc))
    digest = [file_digest(args.input[0])]
    try:
        if args.action == "check":
            rep = check_n_deformation(dfm, args.max_witnesses)
            doc = _full_report_doc("deform", digest,
                                   {"action": "check"} | _report_doc(rep))
            if args.output:
                save_file(args.output, doc)
            if args.format == "json":
                sys.stdout.write(dump_json(doc))
            else:
                _print_report(rep, "human")
            return 0 if rep.passed else 1
        if args.action == "limit":
            fm = semiclassical_limit(dfm)
            if args.output:
                save_file(args.output, doc_for(fm, name="semiclassical-limit"))
            rep = check_hom_f_manifold(fm, args.max_witnesses)
            doc = _full_report_doc("deform", digest,
                                   {"action": "limit",
                                    "recheck": _report_doc(rep)})
            if args.format == "json":
                sys.stdout.write(dump_json(doc))
            else:
                print(f"semiclassical limit: {'valid' if rep.passed else 'INVALID'}")
            return 0 if rep.passed else 1
        if args.action == "theta":
            theta = obstruction_theta(dfm)
            if args.output:
                from .representations import adjoint_pre_lie
                save_file(args.output,
                          doc_for_cochain(dfm.base, adjoint_pre_lie(dfm.base),
                                          theta, name="obstruction"))
            doc = _full_report_doc("deform", digest,
                                   {"action": "theta",
                                    "zero": theta.is_zero()})
            if args.format == "json":
                sys.stdout.write(dump_json(doc))
            else:
                print(f"obstruction cochain is {'zero' if theta.is_zero() else 'nonzero'}")
            return 0
        if args.action == "extend":
            psi = extend_deformation(dfm)
            if psi is None:
                doc = _full_report_doc("deform", digest,
                                       {"action": "extend", "extended": False,
                                        "reason": "obstruction class nonzero"})
                if args.format == "json":
                    sys.stdout.write(dump_json(doc))
                else:
                    print("no extension: obstruction class nonzero")
                return 1
            extended = Deformation(dfm.base, dfm.terms + (psi,))
            if args.output:
                save_file(args.output, doc_for(extended, name="extended"))
            rep = check_n_deformation(extended, args.max_witnesses)
            doc = _full_report_doc("deform", digest,
                                   {"action": "extend", "extended": True,
                                    "recheck": _report_doc(rep)})
            if args.format == "json":
                sys.stdout.write(dump_json(doc))
            else:
                print(f"extended to order {extended.order}; recheck "
                      f"{'passed' if rep.passed else 'FAILED'}")
            return 0 if rep.passed else 1
        return _fail(f"unknown action {args.action!r}")
    except (ValueError, OSError) as exc:
        return _fail(str(exc))


def cmd_fixtures(args) -> int:
    target = args.output or "fixtures"
    names = write_corpus(target)
    for n in names:
        print(n)
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="homalg",
        description="exact checks, constructions, cohomology and deformations "
                    "for twisted nonassociative structures")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_output=True):
        p.add_argument("--input", action="append", default=[],
                       help="input structure file (repeatable)")
        if with_output:
            p.add_argument("--output", help="output file path")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--max-witnesses", type=int, default=DEFAULT_MAX_WITNESSES)
        p.add_argument("--format", choices=("human", "json"), default="human")

    p_check = sub.add_parser("check", help="run a named check on a structure file")
    common(p_check)
    p_check.add_argument("name", choices=CHECK_NAMES)
    p_check.set_defaults(fn=cmd_check)

    p_con = sub.add_parser("construct", help="derive a new structure and recheck it")
    common(p_con)
    p_con.add_argument("name", choices=CONSTRUCT_NAMES)
    p_con.set_defaults(fn=cmd_construct)

    p_coh = sub.add_parser("cohomology", help="closed/exact/quotient dimensions")
    common(p_coh)
    p_coh.add_argument("degree", type=int)
    p_coh.set_defaults(fn=cmd_cohomology)

    p_def = sub.add_parser("deform", help="deformation pipeline actions")
    common(p_def)
    p_def.add_argument("action", choices=("check", "limit", "theta", "extend"))
    p_def.set_defaults(fn=cmd_deform)

    p_fix = sub.add_parser("fixtures", help="write the fixture corpus")
    p_fix.add_argument("--output", help="target directory (default ./fixtures)")
    p_fix.set_defaults(fn=cmd_fixtures)

    args = parser.parse_args(argv)
    if getattr(args, "input", None) is not None or args.command == "fixtures":
        needs_input = args.command in ("check", "construct", "cohomology", "deform")
        if needs_input and not args.input:
            return _fail("at least one --input is required")
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
