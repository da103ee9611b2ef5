"""Enumeration of prime connected k-tangle projections via cascade codes."""

from .cascade import (
    Code,
    CodeError,
    CodeFormatError,
    NonzeroFirstShift,
    P,
    Q,
    ShiftOutOfRange,
    WidthUnderflow,
    X,
    expand,
    format_code,
    parse_code,
    validate,
    width_profile,
)
from .canonical import (
    Genealogy,
    NoParentError,
    NotCanonicalError,
    canonical_code,
    genealogy,
    parent,
    peel,
)
from .enumeration import (
    CountsTable,
    ExtensionSite,
    attach,
    children,
    enumerate_all,
    extension_sites,
    generate_levels,
    weak_filter,
)
from .flype import (
    FlypeError,
    FlypeSite,
    alternating_counts,
    apply_flype,
    flype_class,
    flype_sites,
)
from .maps import (
    BOUNDARY,
    Face,
    MapStructureError,
    PlanarMap,
    boundary_vertices,
    cut_vertices,
    faces,
    is_composite,
    is_connected,
    is_reduced,
    transform,
    validate_structure,
)
from .rootcode import (
    DihedralElement,
    ProjectionDefectError,
    Root,
    candidate_roots,
    face_code,
    invariant_root_code,
    label_vertices,
    root_code,
    symmetries,
)

__version__ = "0.1.0"
