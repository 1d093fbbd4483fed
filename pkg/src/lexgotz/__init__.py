"""Exact classification of lexsegment monomial ideals.

Macaulay expansions, lexsegments and shadows, Hilbert functions of monomial
ideals, and closed-form Gotzmann / linear-quotients / Taylor-minimality tests
checked against brute-force enumeration.
"""

from lexgotz.macaulay import (
    MacaulayExpansion,
    binomial,
    derivative,
    lemma31_predicate,
    lemma32_predicate,
    macaulay_expand,
    upper_shift,
)
from lexgotz.monomial import (
    LexSegment,
    Monomial,
    enumerate_Md,
    is_completely_lexsegment,
    lex_compare,
    lexsegment_set,
    parse_monomial,
    rank_after,
    shadow,
)
from lexgotz.ideal import (
    MonomialIdeal,
    graded_component,
    hilbert,
    is_componentwise_lexsegment,
    is_gotzmann_oracle,
    lexify,
    minimalize,
)
from lexgotz.classify import ClassificationReport, classify

__version__ = "0.1.0"
