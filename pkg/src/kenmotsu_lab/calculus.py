"""Covariant and Lie derivatives on a homogeneous frame model.

Tensors are described by their component array plus a ``kinds`` string
with one letter per axis: ``"c"`` for a covariant (argument) slot and
``"v"`` for a vector-valued (output) slot. A (0,2) tensor is ``"cc"``, the
Ricci operator ``Q[i,j]`` is ``"vc"``, the curvature ``R[i,j,k,l]`` is
``"cccv"``.

Because components are constant, ``X(T(...)) = 0`` and only the
connection/bracket terms survive.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import exact
from .checks import ValidationReport, compare
from .frame import FrameGeometry, LieFrameManifold, lower_curvature


def covariant_derivative(t: np.ndarray, gamma: np.ndarray, kinds: str) -> np.ndarray:
    """``out[a, ...] = (nabla_{e_a} T)[...]``."""
    t = np.asarray(t, dtype=object)
    if len(kinds) != t.ndim:
        raise ValueError(f"kinds {kinds!r} do not match a rank-{t.ndim} array")
    n = gamma.shape[0]
    out = exact.zeros((n,) + t.shape)
    for s, kind in enumerate(kinds):
        moved = np.moveaxis(t, s, -1)
        if kind == "c":
            term = -np.einsum("aim,...m->a...i", gamma, moved)
        elif kind == "v":
            term = np.einsum("aml,...m->a...l", gamma, moved)
        else:
            raise ValueError(f"unknown slot kind {kind!r}")
        out = out + np.moveaxis(term, -1, s + 1)
    return exact.normalize(out)


def adjoint(m: LieFrameManifold, v) -> np.ndarray:
    """``ad[j, k]``: component ``k`` of ``[V, e_j]``."""
    return exact.einsum("i,ijk->jk", m.check_vector(v), m.c)


def lie_derivative(m: LieFrameManifold, v, t: np.ndarray, kinds: str) -> np.ndarray:
    """Lie derivative of a constant-component tensor along a constant field.

    ``(L_V T)(X,..) = [V, T(X,..)] - T([V,X],..) - ...``
    """
    t = np.asarray(t, dtype=object)
    if len(kinds) != t.ndim:
        raise ValueError(f"kinds {kinds!r} do not match a rank-{t.ndim} array")
    ad = adjoint(m, v)
    out = exact.zeros(t.shape)
    for s, kind in enumerate(kinds):
        moved = np.moveaxis(t, s, -1)
        if kind == "c":
            term = -np.einsum("im,...m->...i", ad, moved)
        elif kind == "v":
            term = np.einsum("ml,...m->...l", ad, moved)
        else:
            raise ValueError(f"unknown slot kind {kind!r}")
        out = out + np.moveaxis(term, -1, s)
    return exact.normalize(out)


def lie_bracket(m: LieFrameManifold, x, y) -> np.ndarray:
    x = m.check_vector(x)
    y = m.check_vector(y)
    return exact.einsum("i,j,ijk->k", x, y, m.c)


def nabla_vector(gamma: np.ndarray, v) -> np.ndarray:
    """``out[i, k]``: component ``k`` of ``nabla_{e_i} V``."""
    return exact.einsum("j,ijk->ik", v, gamma)


def lie_derivative_cotensor2(m: LieFrameManifold, gamma: np.ndarray, v, t) -> np.ndarray:
    return lie_derivative(m, v, exact.fraction_array(t, shape=(m.dim, m.dim)), "cc")


def lie_derivative_metric_via_connection(m: LieFrameManifold, gamma: np.ndarray, v) -> np.ndarray:
    """``(L_V g)(X,Y) = g(nabla_X V, Y) + g(X, nabla_Y V)``."""
    dv = exact.einsum("ik,kj->ij", nabla_vector(gamma, m.check_vector(v)), m.g)
    return exact.normalize(dv + dv.T)


def second_covariant_derivative(gamma: np.ndarray, v) -> np.ndarray:
    """``out[i,j,:] = nabla_{e_i} nabla_{e_j} V - nabla_{nabla_{e_i} e_j} V``."""
    return covariant_derivative(nabla_vector(gamma, v), gamma, "cv")


def lie_derivative_connection(m: LieFrameManifold, gamma, riemann, v) -> np.ndarray:
    """Tensor ``B[i,j,:] = (L_V nabla)(e_i, e_j)``.

    Uses ``(L_V nabla)(X,Y) = nabla^2_{X,Y} V + R(V,X)Y``.
    """
    v = m.check_vector(v)
    return exact.normalize(second_covariant_derivative(gamma, v)
                           + exact.einsum("a,aijl->ijl", v, riemann))


def lie_derivative_connection_by_brackets(m: LieFrameManifold, gamma, v) -> np.ndarray:
    """``[V, nabla_X Y] - nabla_[V,X] Y - nabla_X [V,Y]`` on frame fields.

    Independent of the curvature route above; used as a cross-check.
    """
    return lie_derivative(m, v, gamma, "ccv")


def lie_derivative_curvature(m: LieFrameManifold, gamma, riemann, v) -> np.ndarray:
    """``D[i,j,k,:] = (L_V R)(e_i,e_j)e_k`` from the covariant derivative of ``L_V nabla``.

    ``(L_V R)(X,Y)Z = (nabla_X L_V nabla)(Y,Z) - (nabla_Y L_V nabla)(X,Z)``
    """
    lvn = lie_derivative_connection(m, gamma, riemann, v)
    d = covariant_derivative(lvn, gamma, "ccv")
    return exact.normalize(d - np.swapaxes(d, 0, 1))


def lie_derivative_curvature_direct(m: LieFrameManifold, riemann, v) -> np.ndarray:
    """Definition route: ``[V, R(X,Y)Z] - R([V,X],Y)Z - R(X,[V,Y])Z - R(X,Y)[V,Z]``."""
    return lie_derivative(m, v, riemann, "cccv")


def covariant_derivative_cotensor2(m: LieFrameManifold, gamma, t) -> np.ndarray:
    """``out[i,j,k] = (nabla_{e_i} T)(e_j, e_k)``."""
    return covariant_derivative(exact.fraction_array(t, shape=(m.dim, m.dim)), gamma, "cc")


@dataclass(frozen=True, eq=False)
class Hessian:
    values: np.ndarray
    symmetric: bool
    witness: tuple[int, int] | None = None


def hessian(m: LieFrameManifold, gamma, df) -> Hessian:
    """``Hess f(X, Y) = g(nabla_X Df, Y)`` plus a gradient-candidate flag."""
    h = exact.einsum("ik,kj->ij", nabla_vector(gamma, m.check_vector(df)), m.g)
    idx = exact.first_mismatch(h, h.T)
    return Hessian(h, idx is None, None if idx is None else (idx[0] + 1, idx[1] + 1))


def frame_identity_suite(geo: FrameGeometry) -> ValidationReport:
    """Structural identities of the Levi-Civita connection and its curvature."""
    m = geo.manifold
    gamma, riemann = geo.gamma, geo.riemann
    rm = lower_curvature(m, riemann)
    compat = exact.einsum("ijm,mk->ijk", gamma, m.g) + exact.einsum("ikm,jm->ijk", gamma, m.g)
    bianchi1 = (riemann + np.transpose(riemann, (1, 2, 0, 3))
                + np.transpose(riemann, (2, 0, 1, 3)))
    drm = covariant_derivative(rm, gamma, "cccc")   # [a, i, j, k, l]
    bianchi2 = drm + np.transpose(drm, (1, 2, 0, 3, 4)) + np.transpose(drm, (2, 0, 1, 3, 4))
    zero3 = exact.zeros((m.dim,) * 3)
    return ValidationReport((
        compare("torsion-free", gamma - np.swapaxes(gamma, 0, 1), m.c, slots=2),
        compare("metric compatibility", compat, zero3),
        compare("R(X,Y) = -R(Y,X)", riemann, -np.swapaxes(riemann, 0, 1), slots=3),
        compare("Rm(X,Y,Z,W) = -Rm(X,Y,W,Z)", rm, -np.swapaxes(rm, 2, 3)),
        compare("Rm(X,Y,Z,W) = Rm(Z,W,X,Y)", rm, np.transpose(rm, (2, 3, 0, 1))),
        compare("first Bianchi identity", bianchi1, exact.zeros(riemann.shape), slots=3),
        compare("second Bianchi identity", bianchi2, exact.zeros(drm.shape), slots=3),
        compare("Ricci symmetry", geo.ricci, geo.ricci.T),
    ))
