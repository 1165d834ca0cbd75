# -*- coding: utf-8 -*-
from .series import PowerSeries
from .activation import (
    Activation, ACTIVATIONS, RECENTER, SUBTRACT, get_activation, polynomial, custom)
from .functional import (
    NetworkParams, preactivation, forward, jacobian_wrt_W,
    finite_difference_jacobian, assemble_doubled, doubled_output)
from .model import TwoLayerNetwork, jacobian_full
from .capacity import (
    CapacityVerdict, capacity_verdict, capacity_verdict_multioutput,
    polynomial_rank_bound, rank_at_initialization, radius_scale)
from .solver import (
    SOLVER_DEFAULTS, SolverConfig, InterpolationResult, MultiOutputResult,
    levenberg_marquardt, pad_odd_width, interpolate, interpolate_multioutput)
