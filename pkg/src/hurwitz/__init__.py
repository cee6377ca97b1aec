"""Hurwitz equivalence of monodromy factorizations over symmetric groups:
moves, exhaustive orbit enumeration, normal forms, and component counts for
branched coverings, at desk scale.
"""

from .cayley import (
    CayleyStructureReport,
    GroupTable,
    automorphisms,
    cayley_embed,
    cayley_structure_check,
    cyclic_table,
    direct_product_table,
    galois_components,
    klein_four_table,
    symmetric3_table,
)
from .components import ComponentReport, count_components
from .npsemi import OriginSet, intersect, member, origins, union
from .orbits import (
    InconclusiveSearchError,
    OrbitResult,
    SearchLimits,
    enumerate_elements,
    hurwitz_equivalent,
    hurwitz_orbit,
    orbit_count_mod_conjugation,
)
from .perm import Perm, canonical_representative, compare, transposition_length
from .sigma3 import (
    Sigma3Form,
    conjugacy_class_form,
    count_components_deg3,
    representative_word,
    sigma3_generators,
    sigma3_normal_form,
)
from .transpositions import (
    IdentityTranspositionNormalForm,
    StableCanonicalForm,
    clebsch_hurwitz,
    hurwitz_element,
    reduce_identity_transpositions,
    regenerate,
    regenerate_word,
    split_tilde_bar,
    stable_canonical_form,
)
from .words import (
    SubgroupCapExceeded,
    SubgroupInfo,
    TranspositionGraph,
    Word,
    make_word,
    pull_letter_left,
    pull_letter_right,
)

__version__ = "0.1.0"

__all__ = [
    "CayleyStructureReport",
    "ComponentReport",
    "GroupTable",
    "IdentityTranspositionNormalForm",
    "InconclusiveSearchError",
    "OrbitResult",
    "OriginSet",
    "Perm",
    "SearchLimits",
    "Sigma3Form",
    "StableCanonicalForm",
    "SubgroupCapExceeded",
    "SubgroupInfo",
    "TranspositionGraph",
    "Word",
    "automorphisms",
    "canonical_representative",
    "cayley_embed",
    "cayley_structure_check",
    "clebsch_hurwitz",
    "compare",
    "conjugacy_class_form",
    "count_components",
    "count_components_deg3",
    "cyclic_table",
    "direct_product_table",
    "enumerate_elements",
    "galois_components",
    "hurwitz_element",
    "hurwitz_equivalent",
    "hurwitz_orbit",
    "intersect",
    "klein_four_table",
    "make_word",
    "member",
    "orbit_count_mod_conjugation",
    "origins",
    "pull_letter_left",
    "pull_letter_right",
    "reduce_identity_transpositions",
    "regenerate",
    "regenerate_word",
    "representative_word",
    "sigma3_generators",
    "sigma3_normal_form",
    "split_tilde_bar",
    "stable_canonical_form",
    "symmetric3_table",
    "transposition_length",
    "union",
]
