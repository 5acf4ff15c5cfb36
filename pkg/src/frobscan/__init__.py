"""Exact positive-characteristic singularity invariants and mod-p scans.

Subpackages by topic:

- `polynomial`, `ideals`, `linalg`: exact sparse polynomial arithmetic and
  Groebner-free graded linear algebra over F_p and Z
- `frobenius`, `testideal`: bracket powers, Frobenius roots, test ideals
- `cohomology`: top local cohomology and the twisted Frobenius action
  (Hasse-Witt matrices)
- `charzero`: closed-form multiplier-ideal profiles and general products
- `model`, `pointcount`, `scan`: integer models, good primes, the per-prime
  experiment, and the point-count ordinarity oracle

Hot kernels run on numba when available; set FROBSCAN_BACKEND=numpy to force
the pure-numpy fallback (see `frobscan._backend`).
"""

from ._backend import get_kernels, set_backend
from .polynomial import Polynomial, parse_polynomial, poly_power, reduce_mod_p
from .ideals import (
    HomogeneousIdeal,
    contains,
    dimension_estimate,
    equals,
    graded_piece,
    hilbert_function,
    ideal,
    m_power,
    maximal_ideal,
    unit_ideal,
)
from .frobenius import FrobeniusLevel, bracket_power, frobenius_root, frobenius_root_ideal
from .testideal import (
    TestIdealResult,
    containment_power_check,
    fedder_root,
    nu_invariant,
    remark_containment_check,
    tau_equals_fedder_check,
    test_ideal,
)
from .cohomology import (
    EGradedPiece,
    FrobeniusMatrix,
    annihilator_subspace,
    check_key_proposition,
    e_multiply,
    e_piece,
    frobenius_matrix,
    is_frobenius_bijective,
)
from .charzero import (
    GeneralCombinationConfig,
    general_product,
    jumping_exponents,
    multiplier_ideal_at,
    multiplier_profile,
    predicted_test_ideal,
)
from .model import IntegerModel, build_model, good_prime, parse_model
from .pointcount import count_projective_points, point_count
from .scan import PrimeReport, ScanOptions, emit_report, scan, summarize

__version__ = "0.1.0"
