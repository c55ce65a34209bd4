"""Exact homotopy invariants of finite directed multigraphs.

Cycle censuses, zeta series, Witt/necklace decompositions, morphism
classifiers and lifting, cycle resolutions, and a decision procedure for
homotopy equivalence (equivalently, equality of the reversed
characteristic polynomial det(I - uA)).
"""

from .errors import (BudgetExceeded, GphomError, IntegralityViolation,
                     InternalInconsistency, InvalidGraph, InvalidInput,
                     NotAnNGraph, NotRealizable)
from .graphs import (Arc, Budget, EMPTY, Graph, GraphMorphism, arrow_graph,
                     component_count, connected_components, coproduct,
                     coproduct_with_injections, cross_graph, cycle_graph,
                     dot_graph, enumerate_morphisms, figure_eight,
                     graph_from_json, graph_to_json, identity, is_isomorphic,
                     morphism_from_json, morphism_to_json, path_graph,
                     product, pushout, undirected_cycle)
from .spectral import (IntPolynomial, ZetaSeries, adjacency_matrix, char_poly,
                       cycle_count, reversed_char_poly, zeta_series)
from .witt import (AlmostFiniteZSet, burnside_add, burnside_mul, from_ghost,
                   from_graph, from_witt, ghost_to_witt, witt_to_ghost,
                   zeta_product_form)
from .model import (CycleResolution, GeneratorSet, LiftingProblem,
                    aperiodic_necklaces, closed_walks, cofibrant_replacement,
                    cycle_fold, cycle_projection, factorize_bounded, find_lift,
                    initial_to_cycle, is_acyclic_bounded, is_cofibrant,
                    is_fibrant, is_surjecting, is_whiskering, source_inclusion)
from .dynamics import (FinNSet, FinZSet, NSetMap, cayley_graph,
                       cayley_morphism, classify_nset_map, cyclic_zset,
                       graph_to_nset, nset_fibrancy, periodic_part,
                       zset_is_acyclic)
from .homotopy import (HomotopySignature, derived_components, explore,
                       hom_count_bounded, homotopy_equivalent, signature)

__version__ = "0.1.0"
