"""Command-line driver.

Exit codes: 0 when every requested check passes, 1 when a mathematical
check fails (the report names it), 2 for input or usage errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence, TextIO

from . import catalog, exact
from .calculus import frame_identity_suite
from .checks import Check, Status, ValidationReport, failed, not_applicable, passed
from .contact import (contact_dim, eta_einstein_fit, eta_einstein_suite, kenmotsu_identity_suite,
                      verify_almost_contact, verify_kenmotsu)
from .deformation import (DeformationParams, deform, deformed_connection_formula,
                          deformed_ricci_formula, formula_checks, invariance_check)
from .document import emit_manifold, parse_manifold
from .errors import AsymmetricHessian, WorkbenchError
from .frame import geometry, validate_frame
from .report import Report
from .soliton import (SolitonProblem, check_sum_constraint, classification_agreement,
                      gradient_soliton_check, solve_soliton, soliton_lemma_suite)

S = exact.to_strings


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return exact.parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _load(arg: str):
    source, text = catalog.resolve(arg)
    doc = parse_manifold(text)
    m, acs = doc.to_structures()
    return source, doc, m, acs


def _need_contact(acs):
    if acs is None:
        raise UsageError("this command needs a document with a contact block")


def _fit_quantities(prefix: str, fit) -> dict:
    out = {f"{prefix}is_eta_einstein": fit.is_eta_einstein, f"{prefix}is_einstein": fit.is_einstein}
    if fit.is_eta_einstein:
        out[f"{prefix}alpha"] = S(fit.alpha)
        out[f"{prefix}beta"] = S(fit.beta)
    return out


def _base_checks(report: Report, m, acs) -> bool:
    """Frame, contact and Kenmotsu verification. Returns the Kenmotsu verdict."""
    frame = validate_frame(m)
    report.add("frame", frame)
    if acs is None:
        return False
    if not frame.ok:
        report.add("contact", not_applicable("almost contact metric structure", "invalid frame"))
        return False
    contact = verify_almost_contact(m, acs)
    report.add("contact", contact)
    if not contact.ok:
        report.add("kenmotsu", not_applicable("Kenmotsu condition", "not an almost contact structure"))
        return False
    return verify_kenmotsu(m, geometry(m).gamma, acs).ok


def cmd_validate(args) -> Report:
    source, doc, m, acs = _load(args.file)
    report = Report("validate", f"{doc.name} ({source})")
    frame = validate_frame(m)
    report.add("frame", frame)
    report.quantities["dim"] = m.dim
    if acs is not None:
        if frame.ok:
            report.add("contact", verify_almost_contact(m, acs))
            ken = verify_kenmotsu(m, geometry(m).gamma, acs)
            report.add("kenmotsu", ken)
            report.quantities["n"] = contact_dim(m)
            report.quantities["kenmotsu"] = ken.ok
        else:
            report.add("contact", not_applicable("contact checks", "invalid frame"))
    return report


def cmd_analyze(args) -> Report:
    source, doc, m, acs = _load(args.file)
    report = Report("analyze", f"{doc.name} ({source})")
    frame = validate_frame(m)
    report.add("frame", frame)
    report.quantities["dim"] = m.dim
    if not frame.ok:
        return report
    geo = geometry(m)
    report.add("identities", frame_identity_suite(geo))
    report.quantities.update({
        "connection": S(geo.gamma),
        "curvature": S(geo.riemann),
        "ricci": S(geo.ricci),
        "ricci_operator": S(geo.ricci_op),
        "scalar_curvature": S(geo.scalar),
    })
    if acs is None:
        return report
    contact = verify_almost_contact(m, acs)
    report.add("contact", contact)
    fit = eta_einstein_fit(m, geo.ricci, acs)
    report.quantities.update(_fit_quantities("", fit))
    if not contact.ok:
        return report
    ken = verify_kenmotsu(m, geo.gamma, acs)
    report.add("kenmotsu", ken)
    report.quantities["kenmotsu"] = ken.ok
    if ken.ok:
        report.quantities["n"] = contact_dim(m)
        report.add("kenmotsu identities", kenmotsu_identity_suite(m, geo.gamma, geo.riemann, geo.ricci, acs))
        report.add("eta-Einstein", eta_einstein_suite(geo, acs, fit))
    return report


def _potential(spec: str | None, m, acs):
    if spec is None:
        return None
    if spec.strip() == "xi":
        return acs.xi
    try:
        v = [exact.parse_rational(x) for x in spec.split(",")]
    except ValueError as exc:
        raise UsageError(f"--V: {exc}") from None
    if len(v) != m.dim:
        raise UsageError(f"--V needs {m.dim} comma-separated components, got {len(v)}")
    return exact.fraction_array(v)


def _solution_quantities(report: Report, sol):
    q = report.quantities
    q["status"] = sol.status.value
    if sol.lam is not None:
        q["lambda"] = S(sol.lam)
        q["mu"] = S(sol.mu)
    if sol.classification is not None:
        q["classification"] = sol.classification.value
    if sol.directions:
        q["solution_directions"] = [S(list(d)) for d in sol.directions]
    if sol.witness is not None:
        q["inconsistent_pair"] = list(sol.witness)


def _solution_check(sol) -> Check:
    name = "unique (lambda, mu) solving the soliton equation"
    if sol.exact:
        return passed(name)
    if sol.witness is not None:
        return failed(name, status=sol.status.value, index=list(sol.witness))
    return failed(name, status=sol.status.value)


def cmd_soliton(args) -> Report:
    source, doc, m, acs = _load(args.file)
    _need_contact(acs)
    report = Report("soliton", f"{doc.name} ({source})")
    kenmotsu = _base_checks(report, m, acs)
    if report.checks and not report.ok:
        return report
    geo = geometry(m)
    v = _potential(args.V, m, acs)
    if v is None:
        raise UsageError("soliton needs --V (components or 'xi')")
    p = args.p
    prob = SolitonProblem(v, p)
    report.quantities.update({"p": S(p), "V": S(v), "kenmotsu": kenmotsu})
    if args.gradient:
        try:
            grad = gradient_soliton_check(geo, acs, v, p)
        except AsymmetricHessian as exc:
            report.add("gradient", failed("Df is a gradient candidate (symmetric Hessian)",
                                          index=list(exc.witness), reason=str(exc)))
            return report
        report.add("gradient", passed("Df is a gradient candidate (symmetric Hessian)"))
        sol = grad.solution
        report.add("soliton", _solution_check(sol))
        _solution_quantities(report, sol)
        report.quantities["hessian"] = S(grad.hessian)
        if sol.exact:
            report.quantities["residual"] = S(sol.residual)
        report.add("soliton", check_sum_constraint(sol, m, prob, kenmotsu))
        report.add("soliton", classification_agreement(sol, m, prob))
        if kenmotsu:
            report.add("gradient identities", grad.checks)
        else:
            report.add("gradient identities", not_applicable("gradient identities", "structure is not Kenmotsu"))
        return report

    sol = solve_soliton(geo, acs, prob)
    report.add("soliton", _solution_check(sol))
    _solution_quantities(report, sol)
    if sol.residual is not None:
        report.quantities["residual"] = S(sol.residual)
    report.add("soliton", check_sum_constraint(sol, m, prob, kenmotsu))
    report.add("soliton", classification_agreement(sol, m, prob))
    if kenmotsu and sol.exact:
        report.add("soliton identities", soliton_lemma_suite(geo, acs, prob, sol))
    else:
        why = "structure is not Kenmotsu" if not kenmotsu else f"status {sol.status.value}"
        report.add("soliton identities", not_applicable("soliton identities", why))
    return report


def cmd_deform(args) -> Report:
    source, doc, m, acs = _load(args.file)
    _need_contact(acs)
    params = DeformationParams(args.a, args.b)
    report = Report("deform", f"{doc.name} ({source})")
    kenmotsu = _base_checks(report, m, acs)
    if not report.ok:
        return report
    report.quantities.update({"a": S(params.a), "b": S(params.b),
                              "d_homothetic": params.d_homothetic, "conformal": params.conformal})
    if not kenmotsu:
        report.add("kenmotsu", failed("Kenmotsu condition", reason="closed forms need a Kenmotsu structure"))
        return report
    geo = geometry(m)
    ds = deform(m, acs, params)
    dgeo = geometry(ds.manifold)
    report.add("deformed structure", verify_almost_contact(ds.manifold, ds.acs))
    report.add("closed forms", formula_checks(geo, acs, params, dgeo))
    q = report.quantities
    q["deformed_metric"] = S(ds.manifold.g)
    q["deformed_xi"] = S(ds.acs.xi)
    q["deformed_eta"] = S(ds.acs.eta)
    q["deformed_connection_formula"] = S(deformed_connection_formula(m, geo.gamma, acs, params))
    q["deformed_ricci_formula"] = S(deformed_ricci_formula(m, geo.ricci, acs, params))
    q["deformed_ricci_recomputed"] = S(dgeo.ricci)
    q.update(_fit_quantities("", eta_einstein_fit(m, geo.ricci, acs)))
    q.update(_fit_quantities("deformed_", eta_einstein_fit(ds.manifold, dgeo.ricci, ds.acs)))
    # reported, not asserted: a != 1 generally breaks nabla xi* = X - eta*(X) xi*
    q["deformed_kenmotsu"] = verify_kenmotsu(ds.manifold, dgeo.gamma, ds.acs).ok

    v = _potential(args.V, m, acs)
    if v is None:
        return report
    prob = SolitonProblem(v, args.p)
    sol = solve_soliton(geo, acs, prob)
    report.add("soliton", _solution_check(sol))
    _solution_quantities(report, sol)
    q["p"] = S(prob.p)
    q["V"] = S(v)
    if not sol.exact:
        return report
    inv = invariance_check(geo, acs, prob, sol, params)
    report.add("invariance", ValidationReport(tuple(c for c in inv.checks if c.name.startswith("deformed defect"))))
    q["deformed_defect"] = S(inv.defect)
    q["closed_form_defect"] = S(inv.closed_form)
    q["expanded_defect"] = S(inv.expanded)
    q["soliton_invariant"] = inv.invariant
    if inv.condition_alpha is not None:
        q["invariance_condition_alpha"] = S(inv.condition_alpha)
        q["invariance_condition_beta"] = S(inv.condition_beta)
        q["invariance_condition_holds"] = inv.condition_holds
    return report


def cmd_catalog(args, out: TextIO) -> int:
    if args.export:
        target = Path(args.export)
        target.mkdir(parents=True, exist_ok=True)
        for name in catalog.names():
            (target / f"{name}.json").write_text(emit_manifold(catalog.load(name)), encoding="utf-8")
            out.write(f"wrote {target / (name + '.json')}\n")
        return 0
    for name in catalog.names():
        out.write(f"{name:<12} {catalog.DESCRIPTIONS[name]}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="kenmotsu-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="frame, contact and Kenmotsu verification")
    p.add_argument("file")
    p = sub.add_parser("analyze", parents=[common], help="connection, curvature and identity suites")
    p.add_argument("file")
    p = sub.add_parser("soliton", parents=[common], help="solve the conformal eta-Ricci soliton equation")
    p.add_argument("file")
    p.add_argument("--p", type=_rational, default=Fraction(0), help="conformal pressure (use --p=-1/2 for negatives)")
    p.add_argument("--V", help="potential field: comma-separated components or 'xi'")
    p.add_argument("--gradient", action="store_true", help="treat V as the gradient Df of a potential")
    p = sub.add_parser("deform", parents=[common], help="generalized D-conformal deformation")
    p.add_argument("file")
    p.add_argument("--a", type=_rational, required=True)
    p.add_argument("--b", type=_rational, required=True)
    p.add_argument("--p", type=_rational, default=Fraction(0))
    p.add_argument("--V", help="potential field for the invariance report")
    p = sub.add_parser("catalog", help="list built-in manifolds")
    p.add_argument("--export", metavar="DIR", help="write the built-in documents as JSON files")
    return parser


COMMANDS = {"validate": cmd_validate, "analyze": cmd_analyze, "soliton": cmd_soliton, "deform": cmd_deform}


def run_command(argv: Sequence[str], out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "catalog":
            return cmd_catalog(args, out)
        report = COMMANDS[args.command](args)
    except (WorkbenchError, UsageError, FileNotFoundError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    out.write(report.dumps() if args.format == "json" else report.render_text())
    return report.exit_code


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
