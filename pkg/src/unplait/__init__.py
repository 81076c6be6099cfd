"""Braid-group engine deciding which pure braids unplait with tied ends.

The pipeline: write a braid as a word in the Artin generators, straighten the
last strand by inserting flips, remove it, and test whether the remainder is
a power of the full twist on the smaller strand count.  Canonical (Garside
left-greedy) forms supply exact word-problem answers and the classification
of inequivalent braids by coset representatives modulo the center.
"""

from .braidtext import (
    Fixture,
    ParseError,
    bundled_fixtures,
    load_fixtures,
    parse,
    parse_fixtures,
    serialize,
)
from .garside import (
    NormalForm,
    SimpleFactor,
    center_coset_rep,
    equals,
    half_twist,
    is_identity,
    normal_form,
    to_word,
)
from .generators import (
    belt_element,
    conjugated_flip,
    flip,
    full_twist,
    ribbon_flip,
)
from .triviality import (
    Mark,
    StraightenTrace,
    TrivialityReport,
    behind_check,
    classify,
    is_topologically_trivial,
    remove_last_strand,
    straighten,
    writhe_prefilter,
)
from .words import (
    BraidWord,
    Letter,
    Permutation,
    compose,
    free_reduce,
    inverse,
    is_pure,
    permutation,
    power,
    writhe,
)

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "Letter",
    "Permutation",
    "compose",
    "inverse",
    "power",
    "free_reduce",
    "permutation",
    "is_pure",
    "writhe",
    "SimpleFactor",
    "NormalForm",
    "half_twist",
    "normal_form",
    "is_identity",
    "equals",
    "center_coset_rep",
    "to_word",
    "full_twist",
    "flip",
    "belt_element",
    "ribbon_flip",
    "conjugated_flip",
    "Mark",
    "StraightenTrace",
    "TrivialityReport",
    "straighten",
    "behind_check",
    "remove_last_strand",
    "is_topologically_trivial",
    "classify",
    "writhe_prefilter",
    "ParseError",
    "parse",
    "serialize",
    "Fixture",
    "parse_fixtures",
    "load_fixtures",
    "bundled_fixtures",
    "__version__",
]
