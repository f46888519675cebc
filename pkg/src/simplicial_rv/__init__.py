"""Exact simplicial random variables on the unit interval."""
from .errors import DomainError, PrecisionError, PreconditionError
from .geodesic import phi_E, psi_E, resize, shrink
from .homotopy import (ConstantSetPath, DerivedSetPath, KeyframedSetPath, ScalarPath, overlap, phi,
                       phi_minus, phi_plus)
from .intervals import IntervalSet, canonicalize, combine, complement, measure, set_distance
from .fibration import (FiniteProjection, LiftedPath, PmfPath, d1, law, lift, lift_binary, project_finite,
                  section)
from .simplicial import Pmf, SimplicialComplex, in_L, is_face, pmf_in_realization
from .stepfn import (StepFn, distance, essential_image, level_set, mix, outside_support, pushforward,
                     truncate)

__version__ = "0.1.0"
