"""
Quotient rings R = A/J and ideals of R given by representatives in A
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Tuple

from app.models.ideal import Ideal
from app.models.ring import PolyRing, Polynomial


@dataclass(frozen=True, eq=False)
class QuotientRing:
    """Ambient polynomial ring A, defining ideal J and d = dim A/J"""
    ambient: PolyRing
    defining: Ideal
    dim_r: int

    def __str__(self) -> str:
        if not self.defining.nonzero_generators():
            return str(self.ambient)
        return f"{self.ambient}/{self.defining}"


@dataclass(frozen=True, eq=False)
class IdealInQuotient:
    """Ideal a of R with preimage I = J + a in the ambient ring"""
    ring: QuotientRing
    generators: Tuple[Polynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        self.ring.ambient.require(*self.generators)

    @cached_property
    def preimage(self) -> Ideal:
        return self.ring.defining.extended(self.generators)

    @property
    def ambient(self) -> PolyRing:
        return self.ring.ambient

    def __str__(self) -> str:
        return str(Ideal(self.ring.ambient, self.generators))
