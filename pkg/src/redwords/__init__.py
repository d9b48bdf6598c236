"""Reduced words in symmetric groups: insertion, bumps, and the LS map."""

from .errors import (
    DomainError,
    InternalError,
    NotFoundError,
    NotGrassmannianError,
    NotReducedError,
    ParseError,
)
from .insertion import (
    CKMove,
    InsertionResult,
    InsertionStep,
    apply_ck,
    ck_class,
    ck_moves_at,
    eg,
    eg_insert_letter,
    eg_intermediates,
    tau,
)
from .littlemap import (
    BumpStep,
    BumpTrace,
    GrassmannianData,
    WiringDiagram,
    crossing_of_values,
    grassmannian_data,
    grassmannian_tab,
    inverse_bump,
    little_bump,
    little_bump_at_values,
    ls,
    minimal_grassmannian_normalize,
    rs,
    rs_embedding_word,
    valid_bump_starts,
    wiring_diagram,
)
from .perms import (
    Perm,
    Word,
    degree_of,
    descent_set,
    enumerate_reduced_words,
    identity,
    inverse,
    inversion_count,
    inversions,
    is_grassmannian,
    is_reduced,
    perm_from_word,
    reverse,
)
from .tableaux import (
    Shape,
    Tableau,
    column_reading_word,
    halve_entries,
    hook_length_count,
    is_increasing,
    is_standard,
    shape_of,
    staircase,
    swap_labels,
)
from .textio import (
    parse_perm_text,
    parse_tableau_text,
    parse_word_text,
    perm_text,
    tableau_text,
    word_text,
)

__version__ = "0.1.0"
