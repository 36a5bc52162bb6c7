"""Conformal eta-Ricci solitons on frame models.

The soliton equation for a potential field ``V``, conformal pressure ``p``
and constants ``lambda, mu`` on a ``(2n+1)``-dimensional structure is

    L_V g + 2 S + [2 lambda - (p + 2/dim)] g + 2 mu eta (x) eta = 0

and its gradient form replaces ``L_V g`` by ``2 Hess f``. Given ``V`` and
``p`` the equation is linear in ``(lambda, mu)``; stacking it over all frame
pairs gives an exact overdetermined system.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import numpy as np

from . import calculus, exact
from .calculus import covariant_derivative, lie_derivative, nabla_vector
from .checks import Check, Status, ValidationReport, compare, failed, not_applicable, passed
from .contact import AlmostContactStructure, contact_dim, eta_einstein_fit
from .errors import AsymmetricHessian
from .frame import FrameGeometry, LieFrameManifold


class SolitonStatus(str, Enum):
    EXACT = "ExactSoliton"
    INCONSISTENT = "Inconsistent"
    UNDERDETERMINED = "Underdetermined"


class Classification(str, Enum):
    SHRINKING = "Shrinking"
    STEADY = "Steady"
    EXPANDING = "Expanding"


@dataclass(frozen=True, eq=False)
class SolitonProblem:
    v: np.ndarray
    p: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "v", exact.fraction_array(self.v))
        object.__setattr__(self, "p", Fraction(self.p))


@dataclass(frozen=True, eq=False)
class SolitonSolution:
    status: SolitonStatus
    lam: Fraction | None = None
    mu: Fraction | None = None
    residual: np.ndarray | None = None
    classification: Classification | None = None
    # Underdetermined: (lambda, mu) = particular + t * direction for each direction
    directions: tuple[tuple[Fraction, Fraction], ...] = field(default_factory=tuple)
    # Inconsistent: first frame pair (1-based) that cannot be satisfied
    witness: tuple[int, int] | None = None

    @property
    def exact(self) -> bool:
        return self.status is SolitonStatus.EXACT


def classify(lam: Fraction) -> Classification:
    if lam > 0:
        return Classification.SHRINKING
    if lam == 0:
        return Classification.STEADY
    return Classification.EXPANDING


def pressure_term(p: Fraction, dim: int) -> Fraction:
    """``p + 2/dim``, the constant that shifts ``2 lambda`` in the g-term."""
    return Fraction(p) + Fraction(2, dim)


def sum_target(p: Fraction, dim: int) -> Fraction:
    """``2n + p/2 + 1/(2n+1)``: the value ``lambda + mu`` must take on a Kenmotsu soliton."""
    return Fraction(dim - 1) + Fraction(p) / 2 + Fraction(1, dim)


def classify_by_mu(mu: Fraction, p: Fraction, dim: int) -> Classification:
    """Threshold form: shrinking iff ``mu < 2n + p/2 + 1/(2n+1)``."""
    t = sum_target(p, dim)
    if mu < t:
        return Classification.SHRINKING
    if mu == t:
        return Classification.STEADY
    return Classification.EXPANDING


def _equation(m: LieFrameManifold, lie_term, ricci, acs, p, lam, mu) -> np.ndarray:
    return exact.normalize(lie_term + 2 * ricci + (2 * Fraction(lam) - pressure_term(p, m.dim)) * m.g
                           + 2 * Fraction(mu) * acs.eta_eta())


def soliton_residual(geo: FrameGeometry, acs: AlmostContactStructure, prob: SolitonProblem,
                     lam, mu) -> np.ndarray:
    """Left-hand side of the soliton equation on every frame pair."""
    m = geo.manifold
    contact_dim(m)
    lvg = calculus.lie_derivative_cotensor2(m, geo.gamma, prob.v, m.g)
    return _equation(m, lvg, geo.ricci, acs, prob.p, lam, mu)


def _solve(m: LieFrameManifold, lie_term, ricci, acs, p) -> SolitonSolution:
    pairs = [(i, j) for i in range(m.dim) for j in range(m.dim)]
    const = exact.normalize(lie_term + 2 * ricci - pressure_term(p, m.dim) * m.g)
    ee = acs.eta_eta()
    cols = [[2 * m.g[q] for q in pairs], [2 * ee[q] for q in pairs]]
    rhs = [-const[q] for q in pairs]
    rank, sol, null, witness_row = exact.solve_affine(cols, rhs)
    if sol is None:
        i, j = pairs[witness_row]
        return SolitonSolution(SolitonStatus.INCONSISTENT, witness=(i + 1, j + 1))
    lam, mu = sol
    residual = _equation(m, lie_term, ricci, acs, p, lam, mu)
    if rank < 2:
        return SolitonSolution(SolitonStatus.UNDERDETERMINED, lam, mu, residual,
                               directions=tuple(tuple(d) for d in null))
    return SolitonSolution(SolitonStatus.EXACT, lam, mu, residual, classify(lam))


def solve_soliton(geo: FrameGeometry, acs: AlmostContactStructure, prob: SolitonProblem) -> SolitonSolution:
    m = geo.manifold
    contact_dim(m)
    lvg = calculus.lie_derivative_cotensor2(m, geo.gamma, prob.v, m.g)
    return _solve(m, lvg, geo.ricci, acs, prob.p)


def check_sum_constraint(sol: SolitonSolution, m: LieFrameManifold, prob: SolitonProblem,
                         kenmotsu: bool) -> Check:
    name = "lambda + mu = 2n + p/2 + 1/(2n+1)"
    if not kenmotsu:
        return not_applicable(name, "structure is not Kenmotsu")
    if not sol.exact:
        return not_applicable(name, f"no unique soliton ({sol.status.value})")
    lhs = sol.lam + sol.mu
    rhs = sum_target(prob.p, m.dim)
    if lhs == rhs:
        return passed(name)
    return failed(name, lhs=str(lhs), rhs=str(rhs), event="theorem contradiction")


def classification_agreement(sol: SolitonSolution, m: LieFrameManifold, prob: SolitonProblem) -> Check:
    name = "sign(lambda) verdict = mu-threshold verdict"
    if not sol.exact:
        return not_applicable(name, f"no unique soliton ({sol.status.value})")
    by_mu = classify_by_mu(sol.mu, prob.p, m.dim)
    if by_mu is sol.classification:
        return passed(name)
    return failed(name, by_lambda=sol.classification.value, by_mu=by_mu.value)


def soliton_lemma_suite(geo: FrameGeometry, acs: AlmostContactStructure, prob: SolitonProblem,
                        sol: SolitonSolution) -> ValidationReport:
    """Identities every conformal eta-Ricci soliton on a Kenmotsu structure satisfies."""
    if not sol.exact:
        return ValidationReport((not_applicable("soliton lemma suite", f"status {sol.status.value}"),))
    m = geo.manifold
    nn = contact_dim(m)
    dim = m.dim
    g, xi, eta, v = m.g, acs.xi, acs.eta, prob.v
    lam, mu, p, r = sol.lam, sol.mu, prob.p, geo.scalar
    q, s = geo.ricci_op, geo.ricci
    eye = exact.identity(dim)
    ee = acs.eta_eta()

    lvg = calculus.lie_derivative_cotensor2(m, geo.gamma, v, g)
    lvn = calculus.lie_derivative_connection(m, geo.gamma, geo.riemann, v)
    lvr = calculus.lie_derivative_curvature(m, geo.gamma, geo.riemann, v)
    lvs = lie_derivative(m, v, s, "cc")
    lv_eta = lie_derivative(m, v, eta, "c")
    lv_xi = calculus.lie_bracket(m, v, xi)
    dlvg = covariant_derivative(lvg, geo.gamma, "cc")
    ds = covariant_derivative(s, geo.gamma, "cc")
    dq = covariant_derivative(q, geo.gamma, "vc")
    lvn_low = exact.einsum("xyl,lz->xyz", lvn, g)

    checks: list[Check] = []
    checks.append(compare("(L_V nabla)(X,Y) symmetric", lvn, np.swapaxes(lvn, 0, 1), slots=2))
    # transpose (2,0,1) reads d[y,z,x]; (1,2,0) reads d[z,x,y]
    half = (dlvg + np.transpose(dlvg, (2, 0, 1)) - np.transpose(dlvg, (1, 2, 0))) / 2
    checks.append(compare("g((L_V nabla)(X,Y),Z) = 1/2[(nabla_X L_Vg)(Y,Z) + (nabla_Y L_Vg)(Z,X) - (nabla_Z L_Vg)(X,Y)]",
                          lvn_low, half))
    rhs37 = (np.transpose(ds, (1, 2, 0)) - ds - np.transpose(ds, (2, 0, 1))
             - 2 * mu * (exact.einsum("xy,z->xyz", g, eta) - exact.einsum("x,y,z->xyz", eta, eta, eta)))
    checks.append(compare("g((L_V nabla)(X,Y),Z) = (nabla_Z S)(X,Y) - (nabla_X S)(Y,Z) - (nabla_Y S)(Z,X) - 2mu[g(X,Y)eta(Z) - eta(X)eta(Y)eta(Z)]",
                          lvn_low, rhs37))
    checks.append(compare("(L_V nabla)(X,xi) = 2QX + 4nX",
                          exact.einsum("xyl,y->xl", lvn, xi), 2 * q.T + 4 * nn * eye, slots=1))
    lvr_xi = exact.einsum("ijkl,k->ijl", lvr, xi)
    dq_xy = np.transpose(dq, (0, 2, 1))    # [X, Y, l]: (nabla_X Q) Y
    rhs314 = (2 * (dq_xy - np.swapaxes(dq_xy, 0, 1)
                   + exact.einsum("i,lj->ijl", eta, q) - exact.einsum("j,li->ijl", eta, q))
              + 4 * nn * (exact.einsum("i,jl->ijl", eta, eye) - exact.einsum("j,il->ijl", eta, eye)))
    checks.append(compare("(L_V R)(X,Y)xi = 2[(nabla_X Q)Y - (nabla_Y Q)X + eta(X)QY - eta(Y)QX] + 4n[eta(X)Y - eta(Y)X]",
                          lvr_xi, rhs314, slots=2))
    lvr_xixi = exact.einsum("ijl,j->il", lvr_xi, xi)
    checks.append(compare("(L_V R)(X,xi)xi = 0", lvr_xixi, exact.zeros((dim, dim)), slots=1))
    coef = 2 * lam + 2 * mu - 4 * nn - pressure_term(p, dim)
    checks.append(compare("(L_V R)(X,xi)xi = [2lambda + 2mu - 4n - (p + 2/(2n+1))](X - eta(X)xi)",
                          lvr_xixi, coef * (eye - exact.einsum("i,l->il", eta, xi)), slots=1))
    lvg_xi = exact.einsum("xy,y->x", lvg, xi)
    checks.append(compare("(L_V g)(X,xi) = [4n - 2lambda - 2mu + (p + 2/(2n+1))] eta(X)",
                          lvg_xi, (4 * nn - 2 * lam - 2 * mu + pressure_term(p, dim)) * eta))
    checks.append(compare("(L_V g)(X,xi) = (L_V eta)(X) - g(X, L_V xi)",
                          lvg_xi, lv_eta - m.lower(lv_xi)))
    eta_lvxi = np.array([sum((eta * lv_xi).tolist(), Fraction(0))], dtype=object)
    target = np.array([lam + mu - 2 * nn - (p / 2 + Fraction(1, dim))], dtype=object)
    checks.append(compare("eta(L_V xi) = lambda + mu - 2n - (p/2 + 1/(2n+1))", eta_lvxi, target))
    lvs_xi = exact.einsum("yx,x->y", lvs, xi)
    checks.append(compare("(L_V S)(Y,xi) = -2[r + 2n(2n+1)] eta(Y)",
                          lvs_xi, -2 * (r + 2 * nn * (2 * nn + 1)) * eta))
    checks.append(compare("(L_V S)(xi,xi) = 0",
                          np.array([exact.einsum("y,y->", lvs_xi, xi).item()], dtype=object),
                          exact.zeros(1)))
    want_r = -2 * nn * (2 * nn + 1)
    checks.append(passed("r = -2n(2n+1)") if r == want_r else
                  failed("r = -2n(2n+1)", lhs=str(r), rhs=str(want_r)))
    checks.append(compare("(L_V S)(Y,xi) = 0", lvs_xi, exact.zeros(dim)))
    checks.append(compare("(L_V g)(X,xi) = 0", lvg_xi, exact.zeros(dim)))
    fit = eta_einstein_fit(m, s, acs)
    name = "(2n+1 + r/2n) L_V xi = 0"
    if not fit.is_eta_einstein:
        checks.append(not_applicable(name, "Ricci tensor is not eta-Einstein"))
    elif nn == 0:
        checks.append(not_applicable(name, "n = 0"))
    else:
        checks.append(compare(name, (2 * nn + 1 + r / (2 * nn)) * lv_xi, exact.zeros(dim)))
    return ValidationReport(tuple(checks))


@dataclass(frozen=True, eq=False)
class GradientReport:
    solution: SolitonSolution
    hessian: np.ndarray
    checks: ValidationReport
    collinear: bool

    @property
    def ok(self) -> bool:
        return self.solution.exact and self.checks.ok and self.collinear


def gradient_soliton_check(geo: FrameGeometry, acs: AlmostContactStructure, df, p) -> GradientReport:
    """Gradient form ``Hess f + S + [lambda - (p/2 + 1/dim)] g + mu eta(x)eta = 0``.

    Raises :class:`AsymmetricHessian` when ``df`` cannot be a gradient.
    """
    m = geo.manifold
    nn = contact_dim(m)
    df = m.check_vector(df)
    p = Fraction(p)
    hess = calculus.hessian(m, geo.gamma, df)
    if not hess.symmetric:
        i, j = hess.witness
        raise AsymmetricHessian(
            f"Hess(e_{i}, e_{j}) = {hess.values[i - 1, j - 1]} but Hess(e_{j}, e_{i}) = "
            f"{hess.values[j - 1, i - 1]}; the field is not a gradient", hess.witness)
    sol = _solve(m, 2 * hess.values, geo.ricci, acs, p)
    collinear = exact.exactly_equal(df, exact.einsum("i,i->", acs.eta, df).item() * acs.xi)
    if not sol.exact:
        reason = f"no unique soliton ({sol.status.value})"
        checks = ValidationReport((not_applicable("gradient identities", reason),))
        return GradientReport(sol, hess.values, checks, collinear)

    dim, eye = m.dim, exact.identity(m.dim)
    xi, eta, q = acs.xi, acs.eta, geo.ricci_op
    k = sol.lam - (p / 2 + Fraction(1, dim))
    dq = covariant_derivative(q, geo.gamma, "vc")
    r_df = exact.einsum("ijkl,k->ijl", geo.riemann, df)
    rhs41 = (exact.einsum("jli->ijl", dq) - exact.einsum("ilj->ijl", dq)
             + sol.mu * (exact.einsum("i,jl->ijl", eta, eye) - exact.einsum("j,il->ijl", eta, eye)))
    xf = m.lower(df)
    g_rdf_xi = exact.einsum("ijl,l->ij", r_df, eta)
    checks = ValidationReport((
        compare("nabla_X Df = -QX - [lambda - (p/2 + 1/(2n+1))]X - mu eta(X)xi",
                nabla_vector(geo.gamma, df),
                -q.T - k * eye - sol.mu * exact.einsum("a,l->al", eta, xi), slots=1),
        compare("R(X,Y)Df = (nabla_Y Q)X - (nabla_X Q)Y + mu[eta(X)Y - eta(Y)X]",
                r_df, rhs41, slots=2),
        compare("g(R(X,Y)Df, xi) = (Xf)eta(Y) - (Yf)eta(X)", g_rdf_xi,
                exact.einsum("i,j->ij", xf, eta) - exact.einsum("j,i->ij", xf, eta)),
        compare("g(R(X,Y)Df, xi) = 0", g_rdf_xi, exact.zeros((dim, dim))),
        Check("Df = eta(Df) xi", Status.PASS if collinear else Status.FAIL,
              None if collinear else {"df": exact.to_strings(df)}),
    ))
    return GradientReport(sol, hess.values, checks, collinear)
