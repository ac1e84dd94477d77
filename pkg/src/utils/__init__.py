"""
Ring arithmetic, metrics, Gray map and code algorithms.
"""

from .zps_ring import make_ring, valuation, order
from .lee_metric import lee_weight, lee_weight_vec, lee_distance, hamming_weight, general_weight
from .gray_map import GrayConvention, gray_scalar, gray_vec, gray_image, gray_preimage
from .linear_code import code_from_rows, code_from_lists, enumerate_codewords, contains
from .duality import inner_product, dual_code, is_self_orthogonal, is_self_dual, rank_nullity_check
from .bounds import min_lee_distance, min_hamming_distance, classify, general_singleton_report
from .kernel import (
    kernel_of_gray_image, is_gray_image_linear, kernel_dim_bounds,
    modular_independent, phi_independent, check_sum_identity, self_orthogonal_image,
)
from .matrix_io import parse_matrix_file, format_matrix

__all__ = [
    'make_ring', 'valuation', 'order',
    'lee_weight', 'lee_weight_vec', 'lee_distance', 'hamming_weight', 'general_weight',
    'GrayConvention', 'gray_scalar', 'gray_vec', 'gray_image', 'gray_preimage',
    'code_from_rows', 'code_from_lists', 'enumerate_codewords', 'contains',
    'inner_product', 'dual_code', 'is_self_orthogonal', 'is_self_dual', 'rank_nullity_check',
    'min_lee_distance', 'min_hamming_distance', 'classify', 'general_singleton_report',
    'kernel_of_gray_image', 'is_gray_image_linear', 'kernel_dim_bounds',
    'modular_independent', 'phi_independent', 'check_sum_identity', 'self_orthogonal_image',
    'parse_matrix_file', 'format_matrix',
]
