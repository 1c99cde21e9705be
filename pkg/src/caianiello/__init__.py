"""Borrow-save counters, threshold networks with exponential cycles, and their
memory-k Caianiello simulators."""

from .bs_arith import (
    BSCode,
    BSDigit,
    BSError,
    StageOutputs,
    bs_increment,
    code_value,
    codes_identical,
    format_code,
    parse_code,
    stage_one,
    truncate,
)
from .counter_seq import (
    VWord,
    u_from_v,
    u_initial,
    u_next,
    u_term,
    v_forbidden_ok,
    v_from_u,
    v_successor,
)
from .dynamics import OrbitSummary, detect_orbit, sequence_period
from .memory_net import (
    MemoryNet,
    MemoryWindow,
    alignment_check,
    build_initial_memory,
    build_simulating_net,
    caianiello_step,
)
from .threshold_net import (
    COUNTER_PARAMS,
    FamilyParams,
    ThresholdNet,
    build_family_net,
    build_theorem1_net,
    heaviside,
    mcp_step,
)

__version__ = "0.1.0"
