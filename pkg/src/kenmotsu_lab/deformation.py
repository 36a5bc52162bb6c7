"""Generalized D-conformal deformation with constant parameters.

    phi* = phi,  xi* = xi / a,  eta* = a eta,  g* = b g + (a^2 - b) eta (x) eta

Closed forms for the deformed connection and Ricci tensor are checked
against a full recomputation (Koszul + curvature) on the deformed metric.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import calculus, exact
from .checks import ValidationReport, compare
from .contact import (AlmostContactStructure, EtaEinsteinFit, contact_dim, eta_einstein_fit,
                      verify_kenmotsu)
from .errors import NonPositiveParameter
from .frame import FrameGeometry, LieFrameManifold, geometry
from .soliton import SolitonProblem, SolitonSolution, pressure_term


@dataclass(frozen=True)
class DeformationParams:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        a, b = Fraction(self.a), Fraction(self.b)
        if a <= 0 or b <= 0:
            raise NonPositiveParameter(f"deformation needs a > 0 and b > 0, got a={a}, b={b}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def correction(self) -> Fraction:
        """``(a^2 - b) / a^2``, the coefficient of the connection correction."""
        return (self.a ** 2 - self.b) / self.a ** 2

    @property
    def d_homothetic(self) -> bool:
        return self.a == self.b

    @property
    def conformal(self) -> bool:
        return self.a ** 2 == self.b


@dataclass(frozen=True, eq=False)
class DeformedStructure:
    manifold: LieFrameManifold
    acs: AlmostContactStructure


def deform(m: LieFrameManifold, acs: AlmostContactStructure, params: DeformationParams) -> DeformedStructure:
    a, b = params.a, params.b
    g_star = b * m.g + (a * a - b) * acs.eta_eta()
    dm = m.with_metric(g_star)
    # build() re-derives eta* from g* and xi* and rejects any mismatch with a*eta
    dacs = AlmostContactStructure.build(dm, acs.phi, acs.xi / a, a * acs.eta)
    return DeformedStructure(dm, dacs)


def _phi_metric(m: LieFrameManifold, acs: AlmostContactStructure) -> np.ndarray:
    """``g(phi e_i, phi e_j)``."""
    return exact.einsum("ai,ab,bj->ij", acs.phi, m.g, acs.phi)


def deformed_connection_formula(m: LieFrameManifold, gamma, acs: AlmostContactStructure,
                                params: DeformationParams) -> np.ndarray:
    """``nabla*_X Y = nabla_X Y + ((a^2-b)/a^2) g(phi X, phi Y) xi``."""
    corr = params.correction * exact.einsum("ij,k->ijk", _phi_metric(m, acs), acs.xi)
    return exact.normalize(gamma + corr)


def deformed_ricci_formula(m: LieFrameManifold, ricci, acs: AlmostContactStructure,
                           params: DeformationParams) -> np.ndarray:
    """``S* = S + (2n (a^2-b)/a^2) (g - eta (x) eta)``."""
    nn = contact_dim(m)
    return exact.normalize(ricci + 2 * nn * params.correction * (m.g - acs.eta_eta()))


def formula_checks(geo: FrameGeometry, acs: AlmostContactStructure, params: DeformationParams,
                   deformed_geo: FrameGeometry | None = None) -> ValidationReport:
    """Closed forms against recomputation on the deformed metric."""
    m = geo.manifold
    if deformed_geo is None:
        deformed_geo = geometry(deform(m, acs, params).manifold)
    return ValidationReport((
        compare("deformed connection: closed form = Koszul recomputation",
                deformed_connection_formula(m, geo.gamma, acs, params), deformed_geo.gamma, slots=2),
        compare("deformed Ricci: closed form = curvature recomputation",
                deformed_ricci_formula(m, geo.ricci, acs, params), deformed_geo.ricci),
    ))


def closed_form_defect(geo: FrameGeometry, acs: AlmostContactStructure, params: DeformationParams) -> np.ndarray:
    """``2(1-b) S + (4n(a^2-b)/a^2) g + (2n(a^2-b)(a^2-2)/a^2) eta (x) eta``.

    The constant-parameter closed form of the deformed soliton defect. It
    presumes ``L_V eta = -n eta``; on frame models where ``L_V eta = 0`` it
    disagrees with the direct defect unless ``a^2 = b``.
    """
    m = geo.manifold
    nn = contact_dim(m)
    a2, b = params.a ** 2, params.b
    return exact.normalize(2 * (1 - b) * geo.ricci + Fraction(4 * nn) * (a2 - b) / a2 * m.g
                           + Fraction(2 * nn) * (a2 - b) * (a2 - 2) / a2 * acs.eta_eta())


def expanded_defect(geo: FrameGeometry, acs: AlmostContactStructure, prob: SolitonProblem,
                    sol: SolitonSolution, params: DeformationParams) -> np.ndarray:
    """Deformed defect after substituting the undeformed soliton equation.

    ``2(1-b) S + (4n(a^2-b)/a^2) g + (a^2-b)[2lambda - (p + 2/dim) + 2mu - 4n/a^2] eta(x)eta
    + (a^2-b)[(L_V eta)(x)eta + eta(x)(L_V eta)]``
    """
    m = geo.manifold
    nn = contact_dim(m)
    a2, b = params.a ** 2, params.b
    k = 2 * sol.lam - pressure_term(prob.p, m.dim)
    lv_eta = calculus.lie_derivative(m, prob.v, acs.eta, "c")
    sym = exact.einsum("i,j->ij", lv_eta, acs.eta)
    return exact.normalize(2 * (1 - b) * geo.ricci + Fraction(4 * nn) * (a2 - b) / a2 * m.g
                           + (a2 - b) * (k + 2 * sol.mu - Fraction(4 * nn) / a2) * acs.eta_eta()
                           + (a2 - b) * (sym + sym.T))


@dataclass(frozen=True, eq=False)
class InvarianceReport:
    deformed: DeformedStructure
    defect: np.ndarray
    invariant: bool
    closed_form: np.ndarray
    expanded: np.ndarray
    checks: ValidationReport
    fit: EtaEinsteinFit
    deformed_fit: EtaEinsteinFit
    # eta-Einstein coefficients that would make the closed form vanish (b != 1)
    condition_alpha: Fraction | None
    condition_beta: Fraction | None
    condition_holds: bool | None
    deformed_kenmotsu: ValidationReport

    @property
    def closed_form_agrees(self) -> bool:
        return exact.exactly_equal(self.defect, self.closed_form)


def invariance_check(geo: FrameGeometry, acs: AlmostContactStructure, prob: SolitonProblem,
                     sol: SolitonSolution, params: DeformationParams) -> InvarianceReport:
    """Evaluate the soliton equation on the deformed structure with the same ``(V, lambda, mu)``."""
    if not sol.exact:
        raise ValueError(f"invariance check needs an exact soliton, got {sol.status.value}")
    m = geo.manifold
    nn = contact_dim(m)
    ds = deform(m, acs, params)
    dgeo = geometry(ds.manifold)
    g_star = ds.manifold.g
    lvg_star = calculus.lie_derivative_cotensor2(ds.manifold, dgeo.gamma, prob.v, g_star)
    defect = exact.normalize(lvg_star + 2 * dgeo.ricci
                             + (2 * sol.lam - pressure_term(prob.p, m.dim)) * g_star
                             + 2 * sol.mu * ds.acs.eta_eta())
    closed = closed_form_defect(geo, acs, params)
    expanded = expanded_defect(geo, acs, prob, sol, params)
    checks = formula_checks(geo, acs, params, dgeo) + ValidationReport((
        compare("deformed defect = closed form", defect, closed),
        compare("deformed defect = expanded form", defect, expanded),
    ))
    a2, b = params.a ** 2, params.b
    if b != 1:
        alpha = Fraction(4 * nn) * (a2 - b) / a2 / (2 * (b - 1))
        beta = Fraction(2 * nn) * (a2 - b) * (a2 - 2) / a2 / (2 * (b - 1))
        holds = exact.exactly_equal(geo.ricci, alpha * m.g + beta * acs.eta_eta())
    else:
        alpha = beta = holds = None
    return InvarianceReport(
        deformed=ds,
        defect=defect,
        invariant=exact.is_zero(defect),
        closed_form=closed,
        expanded=expanded,
        checks=checks,
        fit=eta_einstein_fit(m, geo.ricci, acs),
        deformed_fit=eta_einstein_fit(ds.manifold, dgeo.ricci, ds.acs),
        condition_alpha=alpha,
        condition_beta=beta,
        condition_holds=holds,
        deformed_kenmotsu=verify_kenmotsu(ds.manifold, dgeo.gamma, ds.acs),
    )
