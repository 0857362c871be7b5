"""Euler-identity matrix algebra for 2x2 structured complex matrices."""
from .duct import (
    AcousticState,
    DuctSegment,
    Medium,
    SweepRow,
    cascade,
    frequency_sweep,
    propagate,
    segment_alpha,
    segment_matrix,
)
from .errors import (
    AlphaMismatchError,
    EmptyChainError,
    EmptySweepError,
    EulerMatError,
    MatrixOverflowError,
    NoConvergenceError,
    SingularMatrixError,
    ZeroAlphaError,
)
from .kernels import BACKEND
from .mat2c import (
    Mat2c,
    diag,
    identity,
    mat_add,
    mat_det,
    mat_mul,
    mat_scale,
    max_abs_diff,
    zero,
)
from .matexp import (
    IdentityReport,
    SeriesConfig,
    classic_euler,
    exp_phi,
    exp_series,
    exp_t,
    run_identity_suite,
    sigma1_via_exp,
)
from .tclass import (
    TMatrix,
    make_t,
    phi_dense,
    psi_dense,
    psi_pow,
    psi_pow_repeated,
    t_inverse,
    t_mul,
    to_dense,
)

__version__ = "0.1.0"
