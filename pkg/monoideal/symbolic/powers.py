"""
Symbolic powers I^(k) = intersection of J(I, P)^k over the minimal primes P.
"""
import logging
from dataclasses import dataclass
from functools import reduce
from typing import List

from ..core.errors import NonSquarefreeError, PreconditionError
from ..core.ideal import MonomialIdeal, intersect, power
from ..decompositions.primes import (
    MonomialPrime,
    ass_primes,
    localization_kernel,
    min_primes,
)

logger = logging.getLogger(__name__)


def _check_power(k: int) -> None:
    if k < 1:
        raise PreconditionError(f"symbolic power needs k >= 1, got {k}")


def symbolic_power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    _check_power(k)
    kernels = [localization_kernel(ideal, p) for p in min_primes(ideal)]
    return reduce(intersect, (power(kernel, k) for kernel in kernels))


def symbolic_power_by_powers(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """Same ideal through the kernels J(I^k, P)."""
    _check_power(k)
    primes = min_primes(ideal)
    ordinary = power(ideal, k)
    return reduce(intersect, (localization_kernel(ordinary, p) for p in primes))


def symbolic_power_squarefree(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """Intersection of P^k over the minimal primes of a squarefree ideal."""
    _check_power(k)
    if not ideal.is_squarefree:
        raise NonSquarefreeError(f"{ideal} is not squarefree")
    return reduce(intersect, (power(p.as_ideal(), k) for p in min_primes(ideal)))


@dataclass(frozen=True)
class SymbolicCertificate:
    """Whether I^(k) = I^k, with the associated-prime evidence."""

    equal: bool
    ass_in_min: bool
    ass_in_ass: bool
    ass_power: List[MonomialPrime]
    min_primes: List[MonomialPrime]
    ass_primes: List[MonomialPrime]


def symbolic_equals_ordinary(ideal: MonomialIdeal, k: int) -> SymbolicCertificate:
    """I^(k) = I^k holds exactly when Ass(I^k) has no embedded prime."""
    symbolic = symbolic_power(ideal, k)
    ordinary = power(ideal, k)
    minimal = min_primes(ideal)
    associated = ass_primes(ideal)
    of_power = ass_primes(ordinary)
    certificate = SymbolicCertificate(
        equal=symbolic == ordinary,
        ass_in_min=set(of_power) <= set(minimal),
        ass_in_ass=set(of_power) <= set(associated),
        ass_power=of_power,
        min_primes=minimal,
        ass_primes=associated,
    )
    if certificate.equal != certificate.ass_in_min:
        logger.warning(
            f"symbolic power routes disagree for {ideal} at k={k}: "
            f"equal={certificate.equal}, Ass(I^k) in Min(I)={certificate.ass_in_min}"
        )
    return certificate
