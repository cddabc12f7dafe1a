"""
Core algorithms: torus actions, column matroids, Tutte polynomials, quotient
topology and classification.
"""

from .action import (parse_action,
                     smith_normal_form,
                     is_effective,
                     require_effective,
                     reduce_noneffective,
                     canonical_moves,
                     apply_move,
                     apply_moves,
                     canonicalize,
                     isotropy_of_circle,
                     isotropy_of_subset,
                     isotropy_spectrum,
                     is_rationally_singular)
from .matroid import RepresentedMatroid, matroid_of, flat_lattice_json
from .tutte import (tutte,
                    tutte_oracle,
                    tutte_at,
                    specialize_y,
                    substitute_t_squared,
                    check_coefficient_structure,
                    is_direct_sum_of_circuits_by_tutte)
from .topology import (poincare_quotient,
                       reduced_poincare,
                       is_simply_connected,
                       poincare_singular,
                       singular_wedge,
                       singular_strata,
                       singular_summary,
                       convolution_check,
                       join_poincare,
                       sphere_wedge_poincare,
                       poincare_deletion_contraction,
                       poincare_duality_defect)
from .classify import (join_decomposition,
                       is_homology_sphere,
                       normalize_weights,
                       classify_rank_one,
                       classify)
