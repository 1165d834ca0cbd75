# -*- coding: utf-8 -*-
from .decomposition import KINDS, Decomposition, verify_reconstruction
from .builders import (
    BUILDERS, monomial_column, tensor_power, matmul_target, power_target,
    poly_target, khatri_power_target, khatri_poly_target, decompose_matmul,
    decompose_hadamard_power, decompose_poly, decompose_khatri_power,
    decompose_khatri_poly, decompose_tensor_directsum, decompose_tensor_inner)
