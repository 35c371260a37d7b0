"""Window-overlap functionals on circular arc sets.

Exact evaluation of the pair functional phi on finite unions of circular
arcs, closed-form lower bounds with numerical certification, rediscovery
of the extremal configurations by projected-gradient search, and exact
solvers for the companion colouring problem on path powers.
"""

__version__ = "0.1.0"

from ._kernels import BACKEND as KERNEL_BACKEND
from .bounds import (
    BoundReport,
    Lemma3Case,
    W,
    colouring_bound,
    density_bound,
    discrete_bound,
    fact21_check,
    lemma3_envelope,
    lemma3_random_check,
    phi_coeff,
)
from .circle import (
    Arc,
    ArcSet,
    Circle,
    Partition,
    complement,
    intersection_measure,
    is_partition,
    measure,
    normalize,
    reflect,
    rotate,
)
from .constructions import (
    alternating_partition,
    block_colouring,
    blowup,
    equispaced_density,
)
from .discrete import (
    DiscreteColouring,
    DiscreteInstance,
    alpha_estimate,
    check_thm3,
    f_brute,
    f_exact_dp,
    mono_edges,
    psi_m,
    subadditivity_check,
)
from .engine import (
    eta,
    eval_f,
    eval_g,
    g_profile,
    mc_phi_estimate,
    mc_phi_zscore,
    phi,
    phi_partition,
)
from .errors import (
    ArcphiError,
    CapacityError,
    DegenerateConfigError,
    DomainError,
    InvalidInputError,
)
from .optimizer import (
    ConfigPoint,
    OptResult,
    StationarityReport,
    eta_gradient,
    minimize_eta,
    minimize_eta_sweep,
    minimize_partition,
    stationarity_report,
)
from .piecewise import PiecewiseLinear

__all__ = [
    "__version__",
    "KERNEL_BACKEND",
    "Arc",
    "ArcSet",
    "ArcphiError",
    "BoundReport",
    "CapacityError",
    "Circle",
    "ConfigPoint",
    "DegenerateConfigError",
    "DiscreteColouring",
    "DiscreteInstance",
    "DomainError",
    "InvalidInputError",
    "Lemma3Case",
    "OptResult",
    "Partition",
    "PiecewiseLinear",
    "StationarityReport",
    "W",
    "alpha_estimate",
    "alternating_partition",
    "block_colouring",
    "blowup",
    "check_thm3",
    "colouring_bound",
    "complement",
    "density_bound",
    "discrete_bound",
    "equispaced_density",
    "eta",
    "eta_gradient",
    "eval_f",
    "eval_g",
    "f_brute",
    "f_exact_dp",
    "fact21_check",
    "g_profile",
    "intersection_measure",
    "is_partition",
    "lemma3_envelope",
    "lemma3_random_check",
    "mc_phi_estimate",
    "mc_phi_zscore",
    "measure",
    "minimize_eta",
    "minimize_eta_sweep",
    "minimize_partition",
    "mono_edges",
    "normalize",
    "phi",
    "phi_coeff",
    "phi_partition",
    "psi_m",
    "reflect",
    "rotate",
    "stationarity_report",
    "subadditivity_check",
]
