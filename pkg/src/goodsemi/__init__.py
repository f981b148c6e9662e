"""Good semigroups, their ideals and duality, and value semigroups of
explicitly parametrized algebroid curves."""

from .points import INF, Box, meet, join, delta, delta_set
from .rep import (
    AxiomReport,
    GoodSemigroup,
    SemigroupIdealRep,
    check_axioms,
    is_subset,
    normalize,
)
from .arith import (
    DecompositionResult,
    conductor_ideal,
    decompose,
    difference,
    ideal_sum,
    localize,
    maximal_ideals,
    product,
    projection,
    shift,
    upper_truncation,
)
from .duality import (
    ClassificationResult,
    canonical_ideal,
    classify_tower,
    dual,
    has_symmetric_tower,
    is_canonical_ideal,
    is_self_dual,
    is_stable,
    is_symmetric,
    punctured_difference,
)
from .enumeration import intermediate_good_semigroups, numerical_semigroups
from .series import BranchVector
from .curves import (
    AlgebroidCurve,
    BlowupChain,
    ExtensionsReport,
    FractionalIdeal,
    GorensteinReport,
    TruncatedModule,
    blowup_chain,
    colon_module,
    colon_values,
    extensions_report,
    gorenstein_report,
    span_ideal,
    span_ring,
    value_semigroup,
    value_semigroup_ideal,
)
from .render import render_grid

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
