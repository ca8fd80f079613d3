"""qkflag: exact equivariant Schubert calculus on generalized flag
varieties, Gromov-Witten invariants of degree zero and line degrees via
their classical reductions, and big quantum K-theory products modulo
degrees beyond line degrees.

All arithmetic is exact (rational coefficients, Laurent characters); no
floating point is used anywhere.
"""

from .cartan import (build_root_system, parse_root_system, parse_parabolic,
                     weyl_enumerate, weyl_group, min_coset_rep, bruhat_leq,
                     flag_variety, FlagVariety, RootSystem, WeylElement,
                     CartanError)
from .algebra import (LaurentPoly, LocalizationFraction, TSeries,
                      SeriesContext, RationalCoeffs, CharacterCoeffs,
                      lp_mul, lp_exact_div, ts_exp, ts_solve_linear,
                      ExactDivisionError)
from .kgkm import (GKMClassK, SchubertExpansionK, schubert_class_k,
                   schubert_classes_k, unit_k, k_multiply, euler_char_k,
                   pullback_k, pushforward_k, expand_schubert_k, assemble_k,
                   specialize_nonequivariant, gkm_compatible_k)
from .hgkm import (GKMClassH, SchubertExpansionH, schubert_class_h,
                   schubert_classes_h, unit_h, h_multiply, integrate_h,
                   pullback_h, pushforward_h, expand_schubert_h, assemble_h,
                   specialize_nonequivariant_h)
from .lines import (LineDegreeData, is_line_degree, line_parabolic,
                    line_degrees, qp_transfer, kgw_line, kgw_zero,
                    peterson_check, count_lines, NotLineDegreeError,
                    NotEnumerativeError)
from .qkbig import (QKElement, three_point_form, potential_g0,
                    quantum_metric, quantum_product, small_qk_product,
                    star_extend, series_context, tvariable_elements)
from .labels import basis_label, element_from_word, element_from_partition
from .cache import set_cache_dir, get_cache_dir

__version__ = "0.1.0"
