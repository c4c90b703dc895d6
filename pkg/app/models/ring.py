"""
Coefficient fields, monomial orders and polynomial rings

Polynomials are sympy sparse polynomials (``PolyElement``) living in the
sympy ring owned by a ``PolyRing``; monomials are exponent tuples.
"""

import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from typing import Dict, Optional, Sequence, Tuple

from sympy import Symbol, isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.orderings import MonomialOrder as SympyMonomialOrder
from sympy.polys.orderings import grevlex, lex
from sympy.polys.rings import PolyElement
from sympy.polys.rings import PolyRing as SympyPolyRing

from app.utils.exceptions import FieldSpecError, RingMismatchError

Monomial = Tuple[int, ...]
Polynomial = PolyElement

_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class FieldKind(str, Enum):
    RATIONALS = "rationals"
    PRIME_FIELD = "prime_field"


@lru_cache(maxsize=None)
def _prime_domain(p: int):
    return GF(p)


@dataclass(frozen=True)
class FieldSpec:
    """Exact coefficient field: Q or F_p"""
    kind: FieldKind = FieldKind.RATIONALS
    characteristic: int = 0

    def __post_init__(self):
        if self.kind == FieldKind.RATIONALS and self.characteristic != 0:
            raise FieldSpecError(self.label, "the rationals have characteristic 0")
        if self.kind == FieldKind.PRIME_FIELD and not isprime(self.characteristic):
            raise FieldSpecError(self.label, f"{self.characteristic} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(FieldKind.RATIONALS, 0)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(FieldKind.PRIME_FIELD, p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``Q``/``QQ`` or ``F<p>``/``GF<p>``"""
        label = text.strip()
        if label in ("Q", "QQ"):
            return cls.rationals()
        match = re.fullmatch(r"(?:F|GF)(\d+)", label)
        if not match:
            raise FieldSpecError(label, "expected Q or F<p>")
        return cls.prime(int(match.group(1)))

    @property
    def domain(self):
        """sympy coefficient domain"""
        if self.kind == FieldKind.RATIONALS:
            return QQ
        return _prime_domain(self.characteristic)

    @property
    def label(self) -> str:
        return "Q" if self.kind == FieldKind.RATIONALS else f"F{self.characteristic}"

    def __str__(self) -> str:
        return self.label


class OrderKind(str, Enum):
    LEX = "lex"
    GREVLEX = "grevlex"
    BLOCK_ELIMINATION = "block_elimination"


class BlockEliminationOrder(SympyMonomialOrder):
    """Lex between the first ``split`` variables and the rest, grevlex inside each block"""

    alias = "block_elimination"
    is_global = True
    is_default = False

    def __init__(self, split: int):
        self.split = split

    def __call__(self, monomial):
        return (grevlex(monomial[:self.split]), grevlex(monomial[self.split:]))

    def __repr__(self):
        return f"BlockEliminationOrder({self.split})"

    def __eq__(self, other):
        return isinstance(other, BlockEliminationOrder) and other.split == self.split

    def __hash__(self):
        return hash((type(self).__name__, self.split))


@dataclass(frozen=True)
class MonomialOrder:
    """Monomial order descriptor; ``block_split`` counts the eliminated leading variables"""
    kind: OrderKind = OrderKind.GREVLEX
    block_split: Optional[int] = None

    def __post_init__(self):
        if self.kind == OrderKind.BLOCK_ELIMINATION:
            if self.block_split is None or self.block_split < 0:
                raise ValueError("block elimination order needs a nonnegative block_split")
        elif self.block_split is not None:
            raise ValueError(f"{self.kind.value} order takes no block_split")

    @classmethod
    def parse(cls, name: str) -> "MonomialOrder":
        return cls(OrderKind(name))

    @classmethod
    def elimination(cls, split: int) -> "MonomialOrder":
        return cls(OrderKind.BLOCK_ELIMINATION, split)

    def sympy_order(self):
        if self.kind == OrderKind.LEX:
            return lex
        if self.kind == OrderKind.GREVLEX:
            return grevlex
        return BlockEliminationOrder(self.block_split)

    def key(self, monomial: Monomial):
        """Sort key: larger key means larger monomial"""
        return self.sympy_order()(monomial)


@dataclass(frozen=True)
class PolyRing:
    """Polynomial ring k[v1, ..., vn] with a fixed monomial order"""
    variables: Tuple[str, ...]
    field: FieldSpec = FieldSpec()
    order: MonomialOrder = MonomialOrder()

    def __post_init__(self):
        names = tuple(self.variables)
        object.__setattr__(self, "variables", names)
        if not names:
            raise ValueError("a polynomial ring needs at least one variable")
        for name in names:
            if not _IDENTIFIER.fullmatch(name):
                raise ValueError(f"invalid variable name '{name}'")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {list(names)}")
        if self.order.kind == OrderKind.BLOCK_ELIMINATION and self.order.block_split > len(names):
            raise ValueError("block_split exceeds the number of variables")

    @cached_property
    def sympy(self) -> SympyPolyRing:
        """Underlying sympy ring"""
        return SympyPolyRing([Symbol(name) for name in self.variables], self.field.domain, self.order.sympy_order())

    @property
    def ngens(self) -> int:
        return len(self.variables)

    @property
    def gens(self) -> Tuple[Polynomial, ...]:
        return tuple(self.sympy.gens)

    @property
    def zero(self) -> Polynomial:
        return self.sympy.zero

    @property
    def one(self) -> Polynomial:
        return self.sympy.one

    def index(self, name: str) -> int:
        return self.variables.index(name)

    def monomial(self, exponents: Sequence[int], coefficient=1) -> Polynomial:
        return self.sympy.from_dict({tuple(exponents): self.field.domain.convert(coefficient)})

    def from_terms(self, terms: Dict[Monomial, object]) -> Polynomial:
        return self.sympy.from_dict({tuple(m): c for m, c in terms.items()})

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.variables, self.field, order)

    def owns(self, f: Polynomial) -> bool:
        return f.ring == self.sympy

    def require(self, *polys: Polynomial) -> None:
        """Raise RingMismatchError unless every polynomial lives in this ring"""
        for f in polys:
            if not self.owns(f):
                raise RingMismatchError(self, f.ring)

    def convert(self, f: Polynomial, source: "PolyRing") -> Polynomial:
        """Move f from source into this ring, matching variables by name"""
        if source.field != self.field:
            raise RingMismatchError(self, source)
        positions = []
        for name in source.variables:
            positions.append(self.variables.index(name) if name in self.variables else None)
        terms = {}
        for monom, coeff in f.items():
            target = [0] * self.ngens
            for exp, pos in zip(monom, positions):
                if exp == 0:
                    continue
                if pos is None:
                    raise RingMismatchError(self, source)
                target[pos] = exp
            terms[tuple(target)] = coeff
        return self.sympy.from_dict(terms)

    def __str__(self) -> str:
        return f"{self.field.label}[{','.join(self.variables)}]"


def total_degree(monomial: Monomial) -> int:
    return sum(monomial)


def support(monomial: Monomial) -> frozenset:
    """Indices of variables with positive exponent"""
    return frozenset(i for i, e in enumerate(monomial) if e)


def is_monomial(f: Polynomial) -> bool:
    return len(f) == 1


def render_monomial(monomial: Monomial, variables: Sequence[str]) -> str:
    factors = []
    for name, exp in zip(variables, monomial):
        if exp == 1:
            factors.append(name)
        elif exp > 1:
            factors.append(f"{name}^{exp}")
    return "*".join(factors)


def render_polynomial(f: Polynomial, ring: PolyRing) -> str:
    """Render in the input grammar, terms in descending ring order"""
    if not f:
        return "0"
    domain = f.ring.domain
    pieces = []
    for monom, coeff in f.terms():
        value = domain.to_sympy(coeff)
        negative = value < 0
        magnitude = -value if negative else value
        body = render_monomial(monom, ring.variables)
        if not body:
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{magnitude}*{body}"
        if not pieces:
            pieces.append(f"-{text}" if negative else text)
        else:
            pieces.append(f"- {text}" if negative else f"+ {text}")
    return " ".join(pieces)
