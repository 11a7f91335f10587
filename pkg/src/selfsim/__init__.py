"""Finite-state self-similar groups and their prefix-replacement groups.

The package builds the wreath-recursion action of BS(1,n) on the (n+1)-ary
tree, decides word problems by section search and independently by an exact
affine model, manipulates Röver–Nekrashevych style prefix tables over any
machine, and measures relation areas for the one-relator presentation at
desk scale.
"""

from .algebra import GroupWord, NPowerRational, Permutation, word
from .automata import (
    DEFAULT_MAX_TUPLES,
    Element,
    MealyMachine,
    Vertex,
    is_persistent,
    random_element,
    random_vertex,
    state_closure,
)
from .baumslag import (
    AbelImage,
    AffineForm,
    WeakDiagonalReport,
    WeakDiagonalRow,
    abelianize,
    affine_of_powers,
    affine_of_word,
    bs_equal,
    build_alpha,
    build_beta,
    build_machine,
    check_weakly_diagonal,
    normal_form,
)
from .dehn import (
    AreaResult,
    GrowthRow,
    Presentation,
    area_oracle,
    area_strategy,
    bs_presentation,
    format_growth_table,
    growth_table,
    is_relation,
    relator,
    witness_word,
    word_length,
)
from .errors import (
    AreaBudgetExceeded,
    DegreeError,
    FormatError,
    LetterError,
    NeedDeeperPrefix,
    SearchBudgetExceeded,
)
from .formats import parse_machine, parse_table, serialize_machine, serialize_table
from .rn import RNElement, conjugator, iota, verify_sigma_identity
from .verify import CheckResult, RunReport, run_verification

__all__ = [
    "AbelImage",
    "AffineForm",
    "AreaBudgetExceeded",
    "AreaResult",
    "CheckResult",
    "DEFAULT_MAX_TUPLES",
    "DegreeError",
    "Element",
    "FormatError",
    "GroupWord",
    "GrowthRow",
    "LetterError",
    "MealyMachine",
    "NPowerRational",
    "NeedDeeperPrefix",
    "Permutation",
    "Presentation",
    "RNElement",
    "RunReport",
    "SearchBudgetExceeded",
    "Vertex",
    "WeakDiagonalReport",
    "WeakDiagonalRow",
    "abelianize",
    "affine_of_powers",
    "affine_of_word",
    "area_oracle",
    "area_strategy",
    "bs_equal",
    "bs_presentation",
    "build_alpha",
    "build_beta",
    "build_machine",
    "check_weakly_diagonal",
    "conjugator",
    "format_growth_table",
    "growth_table",
    "iota",
    "is_persistent",
    "is_relation",
    "normal_form",
    "parse_machine",
    "parse_table",
    "random_element",
    "random_vertex",
    "relator",
    "run_verification",
    "serialize_machine",
    "serialize_table",
    "state_closure",
    "verify_sigma_identity",
    "witness_word",
    "word",
    "word_length",
]
