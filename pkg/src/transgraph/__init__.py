"""Classical and (r, s)-generalised transformation graphs, degree-based
indices, and an oracle harness for closed-form first Zagreb formulas."""

__version__ = "0.1.0"

from .closed_form import (
    ClosedFormInput,
    Variant,
    corollary_minus,
    corollary_plus,
    m1_minus_family,
    m1_plus_family,
)
from .errors import (
    DuplicateEdgeWarning,
    GenerationError,
    IndexOverflowError,
    ParseError,
    TransgraphError,
    ValidationError,
)
from .graph import (
    Graph,
    canonical_edges,
    complement,
    degree,
    format_edge_list,
    parse_edge_list,
    random_graph,
)
from .indices import IndexBundle, first_zagreb, forgotten, index_bundle, second_zagreb
from .transform import (
    Family,
    FamilySpec,
    LabeledVertex,
    Sign,
    TransformSpec,
    TransformedGraph,
    classical_transform,
    expected_degree,
    family_to_spec,
    generalized_transform,
    permute_copies,
)
from .verify import (
    SweepReport,
    VerificationRecord,
    sweep,
    verify_complement_pairs,
    verify_degree_formulas,
    verify_instance,
)
