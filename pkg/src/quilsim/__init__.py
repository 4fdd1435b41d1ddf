"""quilsim: a dense statevector simulator, a Quil-subset text format, and a
small library of textbook quantum algorithms built on top of both."""

from .algorithms import (
    AlgorithmError,
    BVResult,
    DeutschResult,
    DJResult,
    GroverResult,
    SimonsResult,
    bernstein_vazirani,
    deutsch,
    deutsch_jozsa,
    grover,
    grover_via_qft,
    optimal_grover_iterations,
    simons,
    simons_solver,
)
from .blackbox import (
    BlackboxError,
    BlackboxInstance,
    BVHidden,
    DeutschHidden,
    DeutschKind,
    DJHidden,
    SimonHidden,
    bv_blackbox,
    deutsch_g,
    dj_blackbox,
    eval_f,
    make_simon_table,
    simon_blackbox,
    simon_fragment,
)
from .composite import (
    CompositeError,
    ControlSpec,
    hadamard_layer,
    n_control_u,
    n_not,
    qft,
    qft_dagger,
    x_transformation,
)
from .gates import (
    STANDARD_GATE_NAMES,
    GateDef,
    def_gate,
    gate_arity,
    is_parametric,
    is_unitary,
    standard_gate,
    tensor,
)
from .kernels import BACKEND
from .program import (
    DefGateDecl,
    GateApp,
    Measure,
    Program,
    ProgramError,
    gate_app,
)
from .quiltext import SourceError, parse, print_program
from .rng import Rng
from .simulator import (
    DisplayOptions,
    SimulationError,
    TrialResults,
    apply_fragment,
    execute,
    measure_collapse,
    measurement_histogram,
    run,
    wavefunction,
)
from .statevector import (
    InvalidStateError,
    NormDriftError,
    StateVector,
    amplitude,
    apply_unitary,
    approx_eq_up_to_global_phase,
    index_to_label,
    label_to_index,
    new_zero_state,
)

__version__ = "0.1.0"
