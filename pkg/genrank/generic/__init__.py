# -*- coding: utf-8 -*-
from .laws import (
    LAW_KINDS, RankLaw, predicted_rank, analytic_truncation_degree,
    zhang_strictly_smaller)
from .sampling import Sampler, sample_generic_pair
from .experiment import (
    REPORT_FIELDS, RankReport, blockdiag_b, build_target, trial_seed, run_trial,
    empirical_rank_experiment)
