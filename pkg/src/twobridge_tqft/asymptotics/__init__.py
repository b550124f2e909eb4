"""Families K(p_n, q_n) seeded by a level-2 matrix and their large-n behaviour."""
from .seed import (H1_SIGN, HTriple, LimitAlgebra, SeedMatrix, alpha_sequence, build_limit_algebra,
                   condition_H, enumerate_seeds, h_polynomials, kappa, limit_trace, minimal_seed,
                   normalized_h1)
from .signatures import (RatioRow, finite_difference_degree, finite_differences, leading_constant,
                         leading_trace, polynomiality_check, ratio_table, signature_direct,
                         signature_reciprocal, signature_sequence, verlinde_dim)
from .bivariate import (BivariateTriple, QlemmaReport, block_description, bivariate_polys,
                        description_check, evaluate_at_x_of_t, q_eta_sum, qlemma_report,
                        specialization_check)
