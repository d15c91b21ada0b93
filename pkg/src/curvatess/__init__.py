"""Combinatorial maps, exact discrete curvatures and positively curved tessellations."""

from .canonical import (
    CanonicalCode,
    Isomorphism,
    MapAutomorphism,
    Mode,
    are_isomorphic,
    automorphism_group,
    canonical_code,
)
from .codecs import CodecError, decode, encode, from_ascii, to_ascii
from .curvature import (
    CurvatureReport,
    combinatorial_curvature,
    corner_curvature,
    curvature_report,
    edge_mean_curvature,
    face_pattern,
    forman_definitional,
    forman_formula,
    gauss_bonnet_total,
    vertex_pattern,
)
from .maps import EmbeddedMap, MapError, build_map, connectivity, euler_characteristic, faces
from .projective import QuotientMap, antipodal_involutions, classify_rp2, quotient, quotient_is_tessellation
from .tessellation import TessellationReport, face_closure_intersection, is_tessellation
from .transforms import DualPair, FaceBipartition, dual, face_two_coloring, inverse_medial, is_self_dual, medial

__version__ = "0.1.0"

__all__ = [
    "CanonicalCode", "Isomorphism", "MapAutomorphism", "Mode", "are_isomorphic",
    "automorphism_group", "canonical_code",
    "CodecError", "decode", "encode", "from_ascii", "to_ascii",
    "CurvatureReport", "combinatorial_curvature", "corner_curvature", "curvature_report",
    "edge_mean_curvature", "face_pattern", "forman_definitional", "forman_formula",
    "gauss_bonnet_total", "vertex_pattern",
    "EmbeddedMap", "MapError", "build_map", "connectivity", "euler_characteristic", "faces",
    "QuotientMap", "antipodal_involutions", "classify_rp2", "quotient", "quotient_is_tessellation",
    "TessellationReport", "face_closure_intersection", "is_tessellation",
    "DualPair", "FaceBipartition", "dual", "face_two_coloring", "inverse_medial", "is_self_dual", "medial",
]
