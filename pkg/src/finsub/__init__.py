"""finsub: exact topology of symmetric products and finite subset spaces.

Builds finite simplicial complexes into combinatorial simplicial sets,
forms symmetric products SP^n(X) and finite subset spaces Sub_n(X) as
levelwise quotients, and computes integral and mod-p homology, induced
maps and fundamental-group presentations, all over exact integers.
"""

from .spaces import ComplexError, OrderedComplexSpec, builtin_space, load_complex
from .simplicial import (CellCapExceeded, SSetMap, SimplicialError,
                         TruncatedSimplicialSet, cell_cap, collapse,
                         compose_maps, apply_map, from_ordered_complex,
                         identity_map, power, quotient, sub_object)
from .homology import (AbelianQuotient, ChainComplexZ, HomologyCoordinates,
                       HomologyError, HomologyGroup, HomologyResult,
                       SmithNormalForm, SparseIntMatrix, chain_map_matrices,
                       euler_characteristic, homology, homology_of_sset,
                       induced_map, invariant_factors, normalized_chains,
                       rank_mod_p, smith_normal_form,
                       universal_coefficients_consistent)
from .fundamental import (GroupPresentation, abelianization,
                          fundamental_presentation, tietze_simplify)
from .constructions import (ConstructionResult, CoproductModelResult,
                            based_subset3, cylinder_chain_model,
                            default_truncation, direct_subset_quotient,
                            fat_diagonal, finite_subset_space, reduced,
                            sub3_homology_via_coproduct, symmetric_product)
from .surface import (MonomialCell, SurfacePresentation, TopHomologyReport,
                      builtin_presentation, load_surface_presentation,
                      monomial_cells, sp_chain_complex, top_homology_report)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
