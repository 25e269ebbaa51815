"""Exact hook-Schur multiplicities, constant-term residues, and Poincare
series for hook tensor sums, with machine verification suites."""

from .characters import (KroneckerCache, class_size, default_cache, dimension,
                         kronecker, m_bar_lambda, m_lambda, mn_character)
from .hookschur import (Alphabet, f_lambda, hook_schur_def, hook_schur_eval,
                        hook_schur_factorized, hook_schur_jp, schur_by_tableaux,
                        schur_eval, skew_schur_by_tableaux, skew_schur_eval)
from .laurent import LaurentPoly, VarTable, divide_exact
from .partitions import (Hook, HookClass, Partition, add_box_successors,
                         classify_hook, conjugate, enumerate_partitions,
                         format_partition, in_hook, is_self_conjugate,
                         is_typical, parse_partition, square_split,
                         typical_split)
from .poincare import (budzik_suite, check_derivative_relation,
                       m_bar_prime_char, m_prime_char, p_series,
                       univariate_coefficients, verify_budzik)
from .qseries import (TruncatedSeries, check_limit_identity,
                      closed_form_series, expand_product, gf_partitions,
                      u2_factorial_factors)
from .residue import (constant_term_with_delta, delta_numerator, inner_product,
                      m_bar_prime_residue, m_prime_residue, residue_table,
                      z_alphabets)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
