"""Rotational surfaces in Lorentz-Minkowski 3-space.

A rotational surface is determined, up to translation along its axis, by
the linear momentum of its profile curve as a function of the distance to
the axis.  This package evaluates momenta, reconstructs profile curves by
quadrature, builds surfaces and meshes, reduces curvature relations to
first-order ODEs, catalogs the closed-form families (cones, umbilics,
zero-mean-curvature surfaces, Hopf surfaces, the quadratic family, and the
sixteen quadrics of revolution), and verifies everything against a
finite-difference oracle.
"""

from ._kernels import BACKEND as kernel_backend
from .errors import (ComplexEigenvalues, ConfigError, Degenerate,
                     DegenerateMetric, DomainError, DomainExit, EmptyDomain,
                     Inadmissible, LrotorError, NotMonotone, OutOfRange,
                     SingularIntegral, StepFailure, UnsolvableForDerivative)
from .momentum import (Constant, CubicFamily, Custom, InverseLinear, Linear,
                       Momentum, Power, QuadraticFamily, RotationClass, Zero,
                       deriv, evaluate, frame_angle, generatrix_curvature,
                       momentum_from_json, momentum_to_json, validity_domain)
from .quadrature import (GraphSample, arc_length, generatrix_graph,
                         graph_to_csv, invert_graph)
from .surface import (AmbientPoint, CausalCharacter, CurvatureBundle,
                      ExplicitSurface, FundamentalForms, Mesh, SurfaceSpec,
                      causal_character, curvatures_closed,
                      fundamental_forms_numeric, implicit_residual, mesh,
                      parametrize, surface_from_json, surface_to_json,
                      write_obj)
from .weingarten import (Cubic, CustomRelation, LinearProportional,
                         Quadratic, WeingartenRelation, ZeroMeanCurvature,
                         closed_form_momentum, hopf_generatrix, ode_rhs,
                         parse_relation, quadratic_graph_closed,
                         relation_residual, solve_ode)
from .quadrics import (CausalRegion, PlaneMarker, QuadricSpec, UmbilicMarker,
                       causal_region, classify_cubic, cubic_parameters,
                       momentum_squared, quadric_implicit_residual,
                       weingarten_coefficient)
from .verify import (Tolerances, VerificationReport,
                     principal_curvatures_numeric, verify_explicit,
                     verify_surface)
from .catalog import CatalogEntry, build_catalog, catalog_keys, get_entry

__version__ = "0.1.0"
