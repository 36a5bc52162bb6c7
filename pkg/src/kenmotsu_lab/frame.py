"""Homogeneous frame models and their Riemannian geometry.

A frame model is a global frame ``e_1..e_n`` with constant structure
constants ``[e_i, e_j] = sum_k c[i,j,k] e_k`` and a metric with constant
components ``g[i,j]``. Every tensor is stored by its constant frame
components, so directional derivatives of components vanish and the whole
calculus is finite exact linear algebra.

Index conventions (0-based arrays, 1-based in reports):

* ``gamma[i,j,k]``: ``nabla_{e_i} e_j = sum_k gamma[i,j,k] e_k``
* ``riemann[i,j,k,l]``: ``R(e_i,e_j)e_k = sum_l riemann[i,j,k,l] e_l`` with
  ``R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z``
* endomorphisms ``A[i,j]``: ``A(e_j) = sum_i A[i,j] e_i``
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import numpy as np

from . import exact
from .checks import Check, ValidationReport, compare, failed, passed
from .errors import DimensionMismatch, SingularMatrix, StructuralError


@dataclass(frozen=True, eq=False)
class LieFrameManifold:
    dim: int
    c: np.ndarray
    g: np.ndarray

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise StructuralError(f"dimension must be a positive integer, got {self.dim!r}")
        n = self.dim
        c = exact.fraction_array(self.c)
        g = exact.fraction_array(self.g)
        if c.shape != (n, n, n):
            raise StructuralError(f"structure constants must have shape {(n, n, n)}, got {c.shape}")
        if g.shape != (n, n):
            raise StructuralError(f"metric must have shape {(n, n)}, got {g.shape}")
        c.flags.writeable = False
        g.flags.writeable = False
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "g", g)

    @classmethod
    def from_brackets(
        cls,
        dim: int,
        brackets: Mapping[tuple[int, int], Mapping[int, object]] | None = None,
        metric=None,
    ) -> "LieFrameManifold":
        """Build from 1-based bracket relations.

        ``{(1, 5): {1: 1}}`` means ``[e_1, e_5] = e_1``; the antisymmetric
        partner is filled in. ``metric=None`` is the identity.
        """
        c = exact.zeros((dim, dim, dim))
        for (i, j), terms in (brackets or {}).items():
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise StructuralError(f"bracket index out of range: ({i}, {j})")
            for k, coef in terms.items():
                if not 1 <= k <= dim:
                    raise StructuralError(f"bracket term index out of range: {k}")
                q = exact.parse_rational(coef) if isinstance(coef, str) else Fraction(coef)
                c[i - 1, j - 1, k - 1] = q
                c[j - 1, i - 1, k - 1] = -q
        g = exact.identity(dim) if metric is None else metric
        return cls(dim, c, g)

    def __eq__(self, other):
        if not isinstance(other, LieFrameManifold):
            return NotImplemented
        return (self.dim == other.dim and exact.exactly_equal(self.c, other.c)
                and exact.exactly_equal(self.g, other.g))

    __hash__ = None

    def with_metric(self, g) -> "LieFrameManifold":
        return LieFrameManifold(self.dim, self.c, g)

    def check_vector(self, v) -> np.ndarray:
        v = exact.fraction_array(v)
        if v.shape != (self.dim,):
            raise DimensionMismatch(f"vector of length {v.shape} on a {self.dim}-dimensional frame")
        return v

    def inner(self, x, y) -> Fraction:
        return Fraction(exact.einsum("i,ij,j->", x, self.g, y).item())

    def lower(self, v) -> np.ndarray:
        """Metric dual one-form ``g(v, .)`` as a row of components."""
        return exact.einsum("i,ij->j", v, self.g)


def validate_frame(m: LieFrameManifold) -> ValidationReport:
    n, c, g = m.dim, m.c, m.g
    checks: list[Check] = []
    checks.append(compare("bracket antisymmetry", c, -np.swapaxes(c, 0, 1), slots=2))
    jac = (exact.einsum("ijm,mkl->ijkl", c, c)
           + exact.einsum("jkm,mil->ijkl", c, c)
           + exact.einsum("kim,mjl->ijkl", c, c))
    checks.append(compare("Jacobi identity", jac, exact.zeros(jac.shape), slots=3))
    sym = compare("metric symmetry", g, g.T)
    checks.append(sym)
    minors = exact.leading_principal_minors(g)
    bad = next((k for k, d in enumerate(minors) if d <= 0), None)
    if sym.passed and bad is None:
        checks.append(passed("metric positive definite"))
    elif bad is not None:
        checks.append(failed("metric positive definite", minor_order=bad + 1,
                             minor=exact.format_rational(minors[bad])))
    else:
        checks.append(failed("metric positive definite", reason="metric is not symmetric"))
    return ValidationReport(tuple(checks))


def lowered_brackets(m: LieFrameManifold) -> np.ndarray:
    """``cl[i,j,k] = g([e_i, e_j], e_k)``."""
    return exact.einsum("ijm,mk->ijk", m.c, m.g)


def levi_civita_connection(m: LieFrameManifold) -> np.ndarray:
    """Christoffel array from the Koszul formula with constant metric.

    ``2 g(nabla_i e_j, e_k) = -g(e_i,[e_j,e_k]) + g(e_j,[e_k,e_i]) + g(e_k,[e_i,e_j])``
    """
    cl = lowered_brackets(m)
    koszul = (-np.transpose(cl, (2, 0, 1))   # -g(e_i, [e_j, e_k]) = -cl[j,k,i]
              + np.transpose(cl, (1, 2, 0))  # g(e_j, [e_k, e_i]) = cl[k,i,j]
              + cl) / 2                      # g(e_k, [e_i, e_j]) = cl[i,j,k]
    n = m.dim
    try:
        # g x = koszul[i, j, :] for every pair (i, j), one elimination
        sol = exact.solve(m.g, koszul.reshape(n * n, n).T)
    except SingularMatrix as exc:
        raise SingularMatrix("metric is singular; cannot raise the Koszul index") from exc
    return exact.normalize(sol.T.reshape(n, n, n))


def curvature_tensor(m: LieFrameManifold, gamma: np.ndarray) -> np.ndarray:
    return (exact.einsum("jkm,iml->ijkl", gamma, gamma)
            - exact.einsum("ikm,jml->ijkl", gamma, gamma)
            - exact.einsum("ijm,mkl->ijkl", m.c, gamma))


def lower_curvature(m: LieFrameManifold, riemann: np.ndarray) -> np.ndarray:
    """``Rm[i,j,k,l] = g(R(e_i,e_j)e_k, e_l)``."""
    return exact.einsum("ijkm,ml->ijkl", riemann, m.g)


def ricci_tensor(m: LieFrameManifold, riemann: np.ndarray) -> np.ndarray:
    # S(Y,Z) = trace(X -> R(X,Y)Z)
    return exact.einsum("ijki->jk", riemann)


def ricci_operator(m: LieFrameManifold, ricci: np.ndarray) -> np.ndarray:
    """``Q`` with ``g(QX, Y) = S(X, Y)``, i.e. ``Q = g^{-1} S``."""
    return exact.solve(m.g, ricci)


def scalar_curvature(m: LieFrameManifold, ricci: np.ndarray) -> Fraction:
    q = ricci_operator(m, ricci)
    return sum((q[i, i] for i in range(m.dim)), Fraction(0))


@dataclass(frozen=True, eq=False)
class FrameGeometry:
    """Connection and curvature data of one frame model, computed once."""

    manifold: LieFrameManifold
    gamma: np.ndarray
    riemann: np.ndarray
    ricci: np.ndarray
    ricci_op: np.ndarray
    scalar: Fraction


def geometry(m: LieFrameManifold) -> FrameGeometry:
    gamma = levi_civita_connection(m)
    riemann = curvature_tensor(m, gamma)
    ricci = ricci_tensor(m, riemann)
    q = ricci_operator(m, ricci)
    r = sum((q[i, i] for i in range(m.dim)), Fraction(0))
    return FrameGeometry(m, gamma, riemann, ricci, q, r)


def change_frame(m: LieFrameManifold, p) -> LieFrameManifold:
    """Re-express ``m`` in the frame ``f_a = sum_i p[i,a] e_i``.

    The result describes the same Lie algebra and metric; only the
    components change. ``p`` must be invertible.
    """
    p = exact.fraction_array(p, shape=(m.dim, m.dim))
    pinv = exact.inverse(p)
    c = exact.einsum("ia,jb,ijk,ck->abc", p, p, m.c, pinv)
    g = exact.einsum("ia,ij,jb->ab", p, m.g, p)
    return LieFrameManifold(m.dim, c, g)
