"""Statistics on words driven by a directed relation.

Replace the comparison x > y with membership in an arbitrary relation U on
the alphabet and the classical permutation statistics inv, maj and sor turn
into families of statistics on words.  This package computes them, decides
the structural conditions under which they are equidistributed over a
rearrangement class, produces the closed-form generating functions, and
ships the exhaustive brute-force sweeps that verify the equivalences on
small alphabets, plus an invertible code whose part sum is the sorting
index.
"""

from .errors import (
    AlphabetMismatch,
    ClassTooLarge,
    ConditionsNotSatisfied,
    InvalidArguments,
    InvalidBipartition,
    InvalidCode,
    LetterOutOfRange,
    MahonianError,
    MultiplicityMismatch,
    SearchSpaceTooLarge,
    SizeCapExceeded,
    UniverseTooLarge,
)
from .words import (
    DEFAULT_MAX_CLASS,
    MultiplicityVector,
    Word,
    class_size,
    infer_alpha,
    make_word,
    parse_letters,
    rearrangement_class,
    rearrangement_class_range,
    render_letters,
    unrank_word,
)
from .relations import (
    EssentialWitness,
    OrderedBipartition,
    Relation,
    complement,
    decompose,
    effective_core,
    from_ordered_bipartition,
    full_relation,
    is_bipartitional,
    is_essentially_bipartitional,
    is_transitive,
    natural_order,
    relation_from_json_dict,
    relation_from_text,
    relation_to_json_dict,
    relation_to_text,
    satisfies_sorting_conditions,
    to_ordered_bipartition,
)
from .statistics import (
    DEFAULT_TIE_RULE,
    TIE_COPY_LABEL_MAX,
    TIE_LEFTMOST,
    TIE_RIGHTMOST,
    TIE_RULES,
    SortStep,
    SortTrace,
    graphical_descent_count,
    graphical_descent_set,
    graphical_inversions,
    graphical_major_index,
    graphical_sorting_index,
    graphical_sorting_trace,
    maximal_chain_word,
    replay_trace,
)
from .qseries import (
    QPolynomial,
    box_partition_counts,
    gf_bipartitional,
    gf_sorting,
    multinomial,
    q_binomial,
    q_multinomial,
)
from .bcode import (
    BCODE_TIE_RULE,
    BCode,
    bcode_decode,
    bcode_encode,
    code_count,
    enumerate_codes,
    validate_code,
)
from .oracle import (
    STAT_IDS,
    Disagreement,
    VerificationReport,
    distribution,
    equidistributed,
    relation_from_mask,
    relation_to_mask,
    relation_universe,
    verify_theorem1,
    verify_theorem2,
)
from .cli import main, run_cli

__version__ = "0.1.0"

__all__ = [
    "AlphabetMismatch",
    "BCODE_TIE_RULE",
    "BCode",
    "ClassTooLarge",
    "ConditionsNotSatisfied",
    "DEFAULT_MAX_CLASS",
    "DEFAULT_TIE_RULE",
    "Disagreement",
    "EssentialWitness",
    "InvalidArguments",
    "InvalidBipartition",
    "InvalidCode",
    "LetterOutOfRange",
    "MahonianError",
    "MultiplicityMismatch",
    "MultiplicityVector",
    "OrderedBipartition",
    "QPolynomial",
    "Relation",
    "STAT_IDS",
    "SearchSpaceTooLarge",
    "SizeCapExceeded",
    "SortStep",
    "SortTrace",
    "TIE_COPY_LABEL_MAX",
    "TIE_LEFTMOST",
    "TIE_RIGHTMOST",
    "TIE_RULES",
    "UniverseTooLarge",
    "VerificationReport",
    "Word",
    "bcode_decode",
    "bcode_encode",
    "box_partition_counts",
    "class_size",
    "code_count",
    "complement",
    "decompose",
    "distribution",
    "effective_core",
    "enumerate_codes",
    "equidistributed",
    "from_ordered_bipartition",
    "full_relation",
    "gf_bipartitional",
    "gf_sorting",
    "graphical_descent_count",
    "graphical_descent_set",
    "graphical_inversions",
    "graphical_major_index",
    "graphical_sorting_index",
    "graphical_sorting_trace",
    "infer_alpha",
    "is_bipartitional",
    "is_essentially_bipartitional",
    "is_transitive",
    "main",
    "make_word",
    "maximal_chain_word",
    "multinomial",
    "natural_order",
    "parse_letters",
    "q_binomial",
    "q_multinomial",
    "rearrangement_class",
    "rearrangement_class_range",
    "relation_from_json_dict",
    "relation_from_mask",
    "relation_from_text",
    "relation_to_json_dict",
    "relation_to_mask",
    "relation_to_text",
    "relation_universe",
    "render_letters",
    "replay_trace",
    "run_cli",
    "satisfies_sorting_conditions",
    "to_ordered_bipartition",
    "unrank_word",
    "verify_theorem1",
    "verify_theorem2",
]
