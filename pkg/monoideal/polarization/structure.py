"""
Structure of ideals whose polarization is squarefree strongly stable.

With a = exponent vector and W its support, A collects the j in W where every
generator has exponent 0 or a_j at x_j, and B = W - A. Walking W in order
splits it into alternating runs A_1, B_1, A_2, B_2, ... and the ideal is
rebuilt as

    sum over t of  L_t * M_t * prod_{s<t} (L_s * M'_s)

with L_t = prod_{j in A_t} x_j^{a_j}, M'_t = prod_{j in B_t} x_j^{a_j - 1} and
M_t the full universal lexsegment ideal on the variables of B_t.
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, List, Sequence, Tuple

from ..classes.predicates import is_squarefree_strongly_stable
from ..core.budget import ensure_within_budget
from ..core.errors import (
    PreconditionError,
    UnitIdealError,
    UnsupportedShapeError,
    ZeroIdealError,
)
from ..core.ideal import MonomialIdeal
from ..core.monomial import Monomial, VarSet
from .polarized import PolarizedIdeal, exponent_vector, polarize

logger = logging.getLogger(__name__)

Block = Tuple[VarSet, VarSet]


def split_blocks(support: Sequence[int], pure: VarSet) -> List[Block]:
    """Alternating (A_t, B_t) runs of the sorted support.

    The first A-run and the last B-run may be empty.
    """
    blocks: List[Block] = []
    a_run: List[int] = []
    b_run: List[int] = []
    for j in sorted(support):
        if j in pure:
            if b_run:
                blocks.append((frozenset(a_run), frozenset(b_run)))
                a_run, b_run = [], []
            a_run.append(j)
        else:
            b_run.append(j)
    if a_run or b_run:
        blocks.append((frozenset(a_run), frozenset(b_run)))
    return blocks


def _full_universal_lexsegment(
    variables: Sequence[int], a: Sequence[int], n: int
) -> List[Monomial]:
    if not variables:
        return [Monomial.unit(n)]
    gens = []
    prefix = [0] * n
    for j in variables:
        exponents = list(prefix)
        exponents[j - 1] = a[j - 1]
        gens.append(Monomial(tuple(exponents)))
        prefix[j - 1] = a[j - 1] - 1
    return gens


def build_from_structure(
    a: Sequence[int], pure: VarSet, n: int
) -> MonomialIdeal:
    """The ideal determined by an exponent vector and a choice of A."""
    support = [j for j in range(1, n + 1) if a[j - 1]]
    carried = Monomial.unit(n)
    gens: List[Monomial] = []
    for a_block, b_block in split_blocks(support, pure):
        leading = Monomial(
            tuple(a[i] if i + 1 in a_block else 0 for i in range(n))
        )
        gens.extend(
            carried * leading * u
            for u in _full_universal_lexsegment(sorted(b_block), a, n)
        )
        trailing = Monomial(
            tuple(a[i] - 1 if i + 1 in b_block else 0 for i in range(n))
        )
        carried = carried * leading * trailing
    return MonomialIdeal(n, tuple(gens))


@dataclass(frozen=True)
class StructureReport:
    exponent_vector: Tuple[int, ...]
    W: VarSet
    A: VarSet
    B: VarSet
    blocks: List[Block]
    candidate: MonomialIdeal
    reconstructs: bool
    polarization_sss: bool

    @property
    def consistent(self) -> bool:
        """A squarefree strongly stable polarization forces reconstruction."""
        return self.reconstructs or not self.polarization_sss


def _pure_variables(ideal: MonomialIdeal, a: Sequence[int]) -> FrozenSet[int]:
    return frozenset(
        j
        for j in range(1, ideal.nvars + 1)
        if a[j - 1] and all(g.exponents[j - 1] in (0, a[j - 1]) for g in ideal.gens)
    )


def analyze_structure(ideal: MonomialIdeal) -> StructureReport:
    if ideal.is_zero:
        raise ZeroIdealError("structure of the zero ideal")
    if ideal.is_unit:
        raise UnitIdealError("structure of the unit ideal")
    a = exponent_vector(ideal)
    if 1 in a:
        raise UnsupportedShapeError(
            f"exponent vector {list(a)} has an entry equal to 1"
        )
    support = frozenset(j for j in range(1, ideal.nvars + 1) if a[j - 1])
    pure = _pure_variables(ideal, a)
    candidate = build_from_structure(a, pure, ideal.nvars)
    report = StructureReport(
        exponent_vector=a,
        W=support,
        A=pure,
        B=support - pure,
        blocks=split_blocks(support, pure),
        candidate=candidate,
        reconstructs=candidate == ideal,
        polarization_sss=is_squarefree_strongly_stable(polarize(ideal)),
    )
    if not report.consistent:
        logger.warning(
            f"{ideal} has a squarefree strongly stable polarization "
            f"but rebuilds as {candidate}"
        )
    return report


def satisfies_super_stable_hypothesis(ideal: MonomialIdeal) -> bool:
    """No a_j equals 1, W = {1..r}, and every j < r is mixed.

    j is mixed when some generator has 0 < a_ij < a_j. Under this hypothesis a
    squarefree strongly stable polarization means universal lexsegment.
    """
    a = exponent_vector(ideal)
    if ideal.is_zero or ideal.is_unit or 1 in a:
        return False
    r = max(j for j in range(1, ideal.nvars + 1) if a[j - 1])
    if any(a[j - 1] == 0 for j in range(1, r + 1)):
        return False
    return all(
        any(0 < g.exponents[j - 1] < a[j - 1] for g in ideal.gens) for j in range(1, r)
    )


@dataclass(frozen=True)
class DepolarizationReport:
    ideals: List[MonomialIdeal]
    candidates_checked: int
    predicted: int

    @property
    def matches_prediction(self) -> bool:
        return len(self.ideals) == self.predicted


def depolarize_enumerate(polarized: PolarizedIdeal) -> DepolarizationReport:
    """All ideals I built from (extension, A) over A subset of W with T(I) = J."""
    if not polarized.gens:
        raise ZeroIdealError("depolarization of the zero ideal")
    if polarized.gens == (frozenset(),):
        raise UnitIdealError("depolarization of the unit ideal")
    if not polarized.is_prefix_closed():
        raise PreconditionError(f"{polarized} is not a polarization")
    if 1 in polarized.extension:
        raise UnsupportedShapeError(
            f"extension vector {list(polarized.extension)} has an entry equal to 1"
        )
    if not is_squarefree_strongly_stable(polarized):
        raise PreconditionError(f"{polarized} is not squarefree strongly stable")
    n = polarized.nvars
    b = polarized.extension
    support = [j for j in range(1, n + 1) if b[j - 1]]
    ensure_within_budget(2 ** len(support), "depolarization candidates")
    found: List[MonomialIdeal] = []
    checked = 0
    for size in range(len(support) + 1):
        for pure in combinations(support, size):
            checked += 1
            candidate = build_from_structure(b, frozenset(pure), n)
            if polarize(candidate) == polarized and candidate not in found:
                found.append(candidate)
    report = DepolarizationReport(found, checked, 2 ** len(support))
    if not report.matches_prediction:
        logger.warning(
            f"{polarized} has {len(found)} verified preimages, "
            f"the 2^t count predicts {report.predicted}"
        )
    return report
