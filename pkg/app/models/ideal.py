"""
Ideals and Groebner bases
"""

import threading
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from app.models.ring import MonomialOrder, PolyRing, Polynomial, is_monomial, render_polynomial


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced monic Groebner basis, elements sorted by descending leading monomial"""
    ring: PolyRing
    elements: Tuple[Polynomial, ...]

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    @property
    def leading_monomials(self) -> List[tuple]:
        return [g.LM for g in self.elements]

    @property
    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0] == self.ring.one

    @property
    def is_zero(self) -> bool:
        return not self.elements

    def rendered(self) -> List[str]:
        return [render_polynomial(g, self.ring) for g in self.elements]

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return "{" + ", ".join(self.rendered()) + "}"


class Ideal:
    """Ideal given by generators, with write-once Groebner basis caches per order"""

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial] = ()):
        generators = tuple(generators)
        ring.require(*generators)
        self.ring = ring
        self.generators = generators
        self._bases: Dict[MonomialOrder, GroebnerBasis] = {}
        self._lock = threading.Lock()

    def cached_basis(self, order: MonomialOrder) -> Optional[GroebnerBasis]:
        return self._bases.get(order)

    def store_basis(self, basis: GroebnerBasis) -> GroebnerBasis:
        """Store a basis unless one is already cached; return the cached one"""
        with self._lock:
            return self._bases.setdefault(basis.order, basis)

    def nonzero_generators(self) -> List[Polynomial]:
        return [g for g in self.generators if g]

    def is_monomial(self) -> bool:
        return all(is_monomial(g) for g in self.nonzero_generators())

    def extended(self, extra: Iterable[Polynomial]) -> "Ideal":
        return Ideal(self.ring, self.generators + tuple(extra))

    def __add__(self, other: "Ideal") -> "Ideal":
        return self.extended(other.generators)

    def rendered(self) -> List[str]:
        return [render_polynomial(g, self.ring) for g in self.generators]

    def __str__(self) -> str:
        return "(" + ", ".join(self.rendered()) + ")"

    def __repr__(self) -> str:
        return f"<Ideal {self} in {self.ring}>"
