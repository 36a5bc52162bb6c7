"""Exact workbench for Kenmotsu frame models and conformal eta-Ricci solitons."""

from .checks import Check, Status, ValidationReport
from .contact import (AlmostContactStructure, EtaEinsteinFit, eta_einstein_fit,
                      kenmotsu_identity_suite, verify_almost_contact, verify_kenmotsu)
from .deformation import (DeformationParams, DeformedStructure, deform, deformed_connection_formula,
                          deformed_ricci_formula, invariance_check)
from .document import ManifoldDocument, emit_manifold, parse_manifold
from .frame import (FrameGeometry, LieFrameManifold, curvature_tensor, geometry,
                    levi_civita_connection, ricci_operator, ricci_tensor, scalar_curvature,
                    validate_frame)
from .soliton import (Classification, SolitonProblem, SolitonSolution, SolitonStatus,
                      check_sum_constraint, gradient_soliton_check, solve_soliton,
                      soliton_lemma_suite, soliton_residual)

__version__ = "0.1.0"
