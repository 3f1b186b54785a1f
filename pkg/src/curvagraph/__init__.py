"""curvagraph: discrete curvature, geometry and spectra of planar graphs.

Planar graphs are represented as oriented combinatorial maps (rotation
systems over half-edges), with frontier marking for faithful balls of
infinite graphs.  Curvature is exact rational arithmetic throughout; the
spectral module is the only place floating point appears.
"""

from .core import (INF, BallDecomposition, CombinatorialMap, FaceOrbit,
                   FaceTable, FaithfulnessError, MapBuilder, MapError, ball,
                   distances_from, induced_submap, is_connected_in,
                   trace_faces, vertex_degree)
from .io import ParseError, parse_map, serialize_map
from .generators import (GeneratorSpec, generate, increasing_tree,
                         line_graph, octahedron_hub, platonic_solid, pq_ball,
                         regular_tree)
from .curvature import (CurvatureReport, HIGUCHI_GAP, MINUS_INFINITY_HINT,
                        corner_curvature, curvature_report, face_curvature,
                        gauss_bonnet, higuchi_gap, vertex_curvature)
from .classify import (ClassificationResult, ExtendedEdge, classify,
                       degenerate_faces, degenerate_pairs, extended_edges,
                       nonpositive_side_conditions)
from .embedding import (EmbeddingResult, closing_parameter, embed,
                        serialize_embedding, verify_properties)
from .metric import (Bigon, GrowthReport, SphereEnumeration,
                     check_admissibility, cut_locus, growth_check,
                     minimal_bigons, sphere_enumeration)
from .isoperimetry import (CheegerBounds, CheegerEstimate,
                           cheeger_at_infinity_profile,
                           cheeger_at_infinity_proxy, cheeger_bruteforce,
                           cheeger_lower_bounds,
                           check_isoperimetric_inequality)
from .spectral import (NearestNeighborOperator, PolarOperator,
                       bottom_of_spectrum, check_E_structure,
                       essential_spectrum_proxy,
                       finitely_supported_eigenfunctions, laplacian,
                       laplacian_operator, polar_decompose,
                       random_rational_operator, verify_spectral_bounds)

__version__ = "0.1.0"
