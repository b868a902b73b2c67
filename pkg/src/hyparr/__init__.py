"""Exact degree-2 invariants of line arrangements and Milnor-fiber formality verdicts."""

__version__ = "0.1.0"

from .arrangement import (  # noqa: E402
    Arrangement,
    ArrangementError,
    FlatL2,
    Hypothesis,
    IncidenceL2,
    compute_L2,
    family_braid3,
    family_hessian,
    family_monomial,
    family_pencil,
    from_combinatorial,
    moebius_betti,
    multiplicity_hypothesis,
)
from .milnor import delta1, e_p_from_beta  # noqa: E402
from .multinet import Multinet, enumerate_k_nets, enumerate_reduced_3_multinets, verify  # noqa: E402
from .oscomplex import OSDeg2, aomoto_nullity, beta_p  # noqa: E402
from .pipeline import analyze  # noqa: E402
from .resonance import catalog, depth_stratification, isotropy_check  # noqa: E402
from .verdict import Status, assess  # noqa: E402
