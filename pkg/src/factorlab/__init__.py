"""Perfect-matching Hamiltonicity, 2-factor Hamiltonicity and malleable
vertices of small multigraphs, with the star-product and 2-cut constructions."""

from __future__ import annotations

from .constructions import (PAIRINGS, Composite, StarSpec, StarStep, TwoCutSpec, make_named,
                            repeated_star, star_product, two_cut_connection, y_extension)
from .errors import (BadParams, DegreeNotThree, EdgeMissing, FactorLabError, InfeasibleSize,
                     LoopRejected, MultiedgeAtVertex, NoPerfectMatching, NotPerfect, ParseError,
                     ScopeTooLarge, StaleVertex, UnknownName, UnknownTheoremId)
from .factors import (Budget, Extension, PropertyReport, TwoFactor, enumerate_perfect_matchings,
                      enumerate_two_factors, extends_through_edge, extension_count, extensions_of,
                      find_unique_extension_pm, is_2fh, is_e2f, is_malleable, is_pmh, is_tight_cut,
                      iter_extensions, malleability_witnesses, malleable_vertices,
                      two_factor_conditions)
from .graph import (Edge, EdgeCut, Graph, HalfEdge, girth, is_bipartite, is_connected,
                    is_cyclically_k_edge_connected, parse_edge_list, parse_graph6, write_edge_list,
                    write_graph6)
from .verifier import (Catalog, ScanFilter, TheoremCheck, haggkvist_condition, scan, verify_paper,
                       verify_theorem)

__version__ = "0.1.0"
