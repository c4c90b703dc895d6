"""
Minimal prime decomposition results
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from app.models.ideal import GroebnerBasis, Ideal


class CertificateKind(str, Enum):
    """Sufficient conditions for primality of a leaf ideal"""
    GENERATED_BY_VARIABLES = "generated_by_variables"
    VARIABLES_PLUS_MONIC_LINEAR = "variables_plus_monic_linear"
    VARIABLES_PLUS_QUADRATIC_RANK3 = "variables_plus_quadratic_rank3"
    FROBENIUS_ROOT_REDUCED = "frobenius_root_reduced"
    MONOMIAL_COVER = "monomial_cover"


@dataclass(frozen=True)
class PrimeCertificate:
    kind: CertificateKind
    # for FROBENIUS_ROOT_REDUCED: the check passed by the reduced leaf
    base: Optional[CertificateKind] = None

    @property
    def checked_kind(self) -> CertificateKind:
        return self.base if self.kind == CertificateKind.FROBENIUS_ROOT_REDUCED else self.kind


@dataclass(frozen=True)
class PrimeComponent:
    ideal: Ideal
    basis: GroebnerBasis
    certificate: PrimeCertificate
    dim_of_quotient: int

    def rendered(self) -> str:
        return "(" + ", ".join(self.basis.rendered()) + ")"


@dataclass(frozen=True)
class MinimalPrimesResult:
    primes: Tuple[PrimeComponent, ...]
    complete: bool
    residuals: Tuple[Ideal, ...] = ()
