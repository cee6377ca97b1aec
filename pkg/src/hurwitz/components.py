"""Component counts for strata of branched coverings at general degree.

A stratum is the set of words of one degree and length, optionally filtered
by an exact letter-type multiset, a global-monodromy constraint, and a
generated-subgroup tag.  Marked counts are plain Hurwitz-orbit counts;
unmarked counts fuse orbits under simultaneous conjugation.  Coverings of
the line are the identity-product case.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .orbits import SearchLimits, enumerate_elements, orbit_count_mod_conjugation
from .perm import Perm
from .words import Word

__all__ = ["ComponentReport", "count_components"]


@dataclass(frozen=True)
class ComponentReport:
    degree: int
    length: int
    space: str
    marked: bool
    letter_types: tuple | None
    global_type: tuple | None
    galois: str | None
    count: int
    representatives: tuple[Word, ...]
    exhausted: bool = True


def count_components(
    degree: int,
    length: int,
    *,
    letter_types: Counter | None = None,
    product: Perm | None = None,
    product_type: tuple | None = None,
    galois: str | None = None,
    transitive: bool | None = None,
    space: str = "disc",
    marked: bool = False,
    limits: SearchLimits | None = None,
) -> ComponentReport:
    """Count stratum components by exhaustive enumeration.

    ``space="line"`` forces the identity product (and rejects conflicting
    constraints); ``marked=True`` counts Hurwitz orbits without conjugation
    fusion.  Budget exhaustion raises rather than returning a partial count.
    """
    limits = limits or SearchLimits()
    if space not in ("line", "disc"):
        raise ValueError("space must be 'line' or 'disc'")
    if space == "line":
        identity = Perm.identity(degree)
        if product is not None and product != identity:
            raise ValueError("coverings of the line have identity global monodromy")
        if product_type not in (None, ()):
            raise ValueError("coverings of the line have identity global monodromy")
        product, product_type = identity, None
    kwargs = dict(
        letter_types=letter_types,
        product=product,
        product_type=product_type,
        galois=galois,
        transitive=transitive,
        limits=limits,
    )
    if marked:
        representatives = enumerate_elements(degree, length, **kwargs)
        count = len(representatives)
    else:
        count, representatives = orbit_count_mod_conjugation(degree, length, **kwargs)
    frozen_types = (
        tuple(sorted(Counter(letter_types).items())) if letter_types is not None else None
    )
    global_type = None
    if product is not None:
        global_type = product.cycle_type()
    elif product_type is not None:
        global_type = tuple(product_type)
    return ComponentReport(
        degree=degree,
        length=length,
        space=space,
        marked=marked,
        letter_types=frozen_types,
        global_type=global_type,
        galois=galois,
        count=count,
        representatives=tuple(representatives),
    )
