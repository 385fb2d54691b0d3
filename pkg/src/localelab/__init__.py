"""Finite frames, Ω-frames, nuclei, overlap algebras and finite spaces."""
from .config import Caps, caps, set_caps
from .errors import InvariantViolation, LocaleLabError
from .lattice import (
    Frame,
    chain,
    downset_frame,
    frame_from_lattice,
    frame_from_relation,
    is_boolean,
    is_frame,
    lattice_from_poset,
    poset_from_relation,
    powerset_frame,
)
from .nuclei import (
    Nucleus,
    boolean_sublocale,
    double_negation,
    enumerate_nuclei,
    generated_by_closure,
    generated_by_set,
    is_dense,
    is_strongly_dense,
    min_strongly_dense,
    rx_nucleus,
    sub_omega_frame,
)
from .oalgebra import is_oalgebra, oalgebra_from_overlap, overlap_axioms_check
from .omega import OmegaFrame, classical_omega_frame, discrete_omega_frame, omega_frame
from .spaces import FiniteSpace, brouwer_counterexample, frame_of_opens, points_of_frame, space

__version__ = "0.1.0"
