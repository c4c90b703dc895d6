"""
Domain Models Package
"""

from app.models.ring import FieldKind, FieldSpec, MonomialOrder, OrderKind, PolyRing, render_polynomial
from app.models.ideal import GroebnerBasis, Ideal
from app.models.primes import CertificateKind, MinimalPrimesResult, PrimeCertificate, PrimeComponent
from app.models.quotient import IdealInQuotient, QuotientRing

__all__ = [
    "FieldKind",
    "FieldSpec",
    "MonomialOrder",
    "OrderKind",
    "PolyRing",
    "render_polynomial",
    "GroebnerBasis",
    "Ideal",
    "CertificateKind",
    "MinimalPrimesResult",
    "PrimeCertificate",
    "PrimeComponent",
    "IdealInQuotient",
    "QuotientRing",
]
