"""
Simplicial complexes on [n] stored by their minimal nonfaces.
"""
import logging
from dataclasses import dataclass
from typing import Iterable, List, Tuple

from ..core.budget import ensure_within_budget
from ..core.ideal import MonomialIdeal
from ..core.monomial import Monomial, VarSet, check_indices

logger = logging.getLogger(__name__)


def set_key(members: VarSet) -> Tuple[int, Tuple[int, ...]]:
    return len(members), tuple(sorted(members))


def antichain(sets: Iterable[VarSet]) -> Tuple[VarSet, ...]:
    """Inclusion-minimal members, sorted by size then lexicographically."""
    kept: List[VarSet] = []
    for candidate in sorted(set(sets), key=set_key):
        if not any(smaller <= candidate for smaller in kept):
            kept.append(candidate)
    return tuple(kept)


def minimal_transversals(family: Iterable[VarSet], n: int) -> Tuple[VarSet, ...]:
    """Minimal sets meeting every member of the family.

    Sets are added one at a time; each partial transversal that misses the new
    set is extended by each of its elements, then the antichain is restored.
    """
    members = antichain(check_indices(s, n) for s in family)
    transversals: Tuple[VarSet, ...] = (frozenset(),)
    for edge in members:
        grown = []
        for partial in transversals:
            if partial & edge:
                grown.append(partial)
            else:
                grown.extend(partial | {v} for v in edge)
        ensure_within_budget(len(grown), "transversal enumeration")
        transversals = antichain(grown)
    logger.debug(f"{len(transversals)} minimal transversals of {len(members)} sets")
    return transversals


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex on [n]; singletons need not be faces."""

    nvars: int
    minimal_nonfaces: Tuple[VarSet, ...] = ()

    def __post_init__(self):
        normal = antichain(
            check_indices(face, self.nvars) for face in self.minimal_nonfaces
        )
        object.__setattr__(self, "minimal_nonfaces", normal)

    def is_face(self, members: Iterable[int]) -> bool:
        candidate = check_indices(members, self.nvars)
        return not any(nonface <= candidate for nonface in self.minimal_nonfaces)

    def is_nonface(self, members: Iterable[int]) -> bool:
        return not self.is_face(members)

    def facets(self) -> Tuple[VarSet, ...]:
        """Complements of the minimal transversals of the minimal nonfaces."""
        everything = frozenset(range(1, self.nvars + 1))
        covers = minimal_transversals(self.minimal_nonfaces, self.nvars)
        return tuple(sorted((everything - c for c in covers), key=set_key))

    def __str__(self) -> str:
        rendered = ", ".join(
            "{" + ",".join(str(i) for i in sorted(face)) + "}"
            for face in self.minimal_nonfaces
        )
        return f"complex(n={self.nvars}; nonfaces: {rendered})"


def alexander_dual(complex_: SimplicialComplex) -> SimplicialComplex:
    """The dual complex {[n] - B : B not a face}."""
    nonfaces = minimal_transversals(complex_.minimal_nonfaces, complex_.nvars)
    return SimplicialComplex(complex_.nvars, nonfaces)


def stanley_reisner(complex_: SimplicialComplex) -> MonomialIdeal:
    n = complex_.nvars
    return MonomialIdeal(
        n, tuple(Monomial.from_support(face, n) for face in complex_.minimal_nonfaces)
    )
