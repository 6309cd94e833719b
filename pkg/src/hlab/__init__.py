"""Exact Hochschild (co)homology of tilting algebras on projective space,
their rolled-up and twisted relatives, and the geometric oracles they are
compared against."""

from .algebra import (AlgebraModule, Arrow, GradedAlgebra, Quiver, Relation, build_algebra,
                      center_dim, hilbert_function, simple_module)
from .checks import CheckReport, RunConfig, run_checks, run_suite
from .constructions import (BeilinsonSpec, CyclicActionSpec, beilinson, dual_numbers, kronecker,
                            rolled_up, twisted_group_algebra, veronese_hilbert)
from .errors import (FieldMismatchError, FormatError, HlabError, InsufficientPrecisionError,
                     NotAComplexError, OutsideValidityError, RelationError, ResourceLimitError,
                     ShapeError)
from .hochschild import hh_cohomology, hh_graded, hh_homology
from .linalg import QQ, ExactMatrix, PrimeField, Subspace, homology_dim, kernel_basis, rank
from .oracle import (BottQuery, FixedPointQuery, bott, fixed_point_hh_cohomology,
                     fixed_point_hh_homology, hkr_cohomology, hodge_homology)
from .resolution import ext_algebra_dims, global_dimension, minimal_resolution, smoothness_check
from .tables import DimTable, HilbertSeries

__version__ = "0.1.0"
