"""RDF Surfaces: nested positive/negative surfaces over RDF with a Peirce-style calculus."""

from .calculus import (
    DerivationTrace,
    FuseReport,
    LimitExceeded,
    Limits,
    Rule,
    RuleApplication,
    RuleError,
    apply_r1_insert,
    apply_r2_erase,
    apply_r3_insert_double_cut,
    apply_r3_remove_double_cut,
    apply_r4_deiterate,
    apply_r4_iterate,
    check_proof,
    detect_fuse,
    saturate,
    unify_item,
)
from .normalize import (
    FreshLabelSource,
    PrefixCollision,
    ScopedDocument,
    existential_closure,
    isomorphic,
    merge_documents,
    normalize,
    resolve_scopes,
    standardize_apart,
)
from .parser import ErrorKind, ParseError, SourceSpan, expand_iri, parse_document, serialize_document
from .query import (
    NoQuerySurface,
    ProofResult,
    QueryAnswer,
    Verdict,
    answer_query_surfaces,
    prove_by_contradiction,
    prove_by_negation,
)
from .terms import (
    BlankNode,
    Document,
    Iri,
    Literal,
    Surface,
    SurfaceKind,
    Triple,
    containment,
    parity,
    structural_equal,
)

__version__ = "0.1.0"
