"""
Minimal primes by recursive splitting with primality certificates
"""

import logging
import time
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from sympy import Symbol
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyRing as SympyPolyRing

from app.config import settings
from app.models.ideal import GroebnerBasis, Ideal
from app.models.primes import CertificateKind, MinimalPrimesResult, PrimeCertificate, PrimeComponent
from app.models.ring import PolyRing, Polynomial, is_monomial, support, total_degree
from app.services.groebner import contains, krull_dimension, reduced_groebner_basis
from app.services.linalg import exact_rank
from app.utils.exceptions import NonMonomialInputError, RingMismatchError
from app.utils.logging import performance_logger

logger = logging.getLogger(__name__)

Leaf = Tuple[Ideal, PrimeCertificate]


def is_variable(g: Polynomial) -> bool:
    """Monic polynomial equal to a single variable"""
    if len(g) != 1:
        return False
    monom, coeff = g.LT
    return total_degree(monom) == 1 and coeff == g.ring.domain.one


def _monomial_content(g: Polynomial) -> Tuple[int, ...]:
    """Largest monomial dividing every term of g"""
    monoms = list(g.keys())
    return tuple(min(m[i] for m in monoms) for i in range(len(monoms[0])))


def _involved(g: Polynomial) -> FrozenSet[int]:
    result = set()
    for monom in g.keys():
        result |= support(monom)
    return frozenset(result)


def is_monic_linear_in(g: Polynomial, index: int) -> bool:
    """Exactly one term of g involves the variable, and that term is the variable itself"""
    terms = [m for m in g.keys() if m[index]]
    if len(terms) != 1:
        return False
    monom = terms[0]
    return monom[index] == 1 and total_degree(monom) == 1


def _monic_linear_variable(g: Polynomial) -> Optional[int]:
    for index in sorted(_involved(g)):
        if is_monic_linear_in(g, index):
            return index
    return None


def quadratic_form_rank(f: Polynomial, ring: PolyRing) -> Optional[int]:
    """Rank of the symmetric matrix of a quadratic form, None if f is not one.

    Characteristic 2 has no symmetric matrix for a form and yields None.
    """
    if not f or any(total_degree(m) != 2 for m in f.keys()):
        return None
    if ring.field.characteristic == 2:
        return None
    domain = ring.field.domain
    n = ring.ngens
    half = domain.one / domain.convert(2)
    matrix = [[domain.zero] * n for _ in range(n)]
    for monom, coeff in f.items():
        indices = [i for i, e in enumerate(monom) for _ in range(e)]
        i, j = indices
        if i == j:
            matrix[i][i] += coeff
        else:
            matrix[i][j] += coeff * half
            matrix[j][i] += coeff * half
    return exact_rank(matrix, n, ring.field)


def check_leaf(basis: GroebnerBasis) -> Optional[CertificateKind]:
    """Whitelisted sufficient conditions for primality of a reduced basis"""
    others = [g for g in basis if not is_variable(g)]
    if not others:
        return CertificateKind.GENERATED_BY_VARIABLES
    if len(others) > 1:
        return None
    f = others[0]
    if _monic_linear_variable(f) is not None:
        return CertificateKind.VARIABLES_PLUS_MONIC_LINEAR
    rank = quadratic_form_rank(f, basis.ring)
    if rank is not None and rank >= 3:
        return CertificateKind.VARIABLES_PLUS_QUADRATIC_RANK3
    return None


def verify_certificate(component: PrimeComponent) -> bool:
    """Re-check the certificate of a returned prime on its basis"""
    kind = component.certificate.checked_kind
    if kind is None:
        return False
    if kind == CertificateKind.MONOMIAL_COVER:
        return all(is_variable(g) for g in component.basis)
    return check_leaf(component.basis) == kind


def minimal_variable_covers(supports: Sequence[FrozenSet[int]]) -> List[FrozenSet[int]]:
    """Minimal variable sets meeting every support, by branching on uncovered supports"""
    found = set()

    def branch(chosen: FrozenSet[int]) -> None:
        uncovered = next((s for s in supports if not s & chosen), None)
        if uncovered is None:
            found.add(chosen)
            return
        for index in sorted(uncovered):
            branch(chosen | {index})

    branch(frozenset())
    return sorted((c for c in found if not any(other < c for other in found)), key=sorted)


def _variable_ideal(ring: PolyRing, indices) -> Ideal:
    gens = ring.gens
    return Ideal(ring, [gens[i] for i in sorted(indices)])


def monomial_minimal_primes_oracle(ideal: Ideal) -> List[Ideal]:
    """Brute force over variable subsets in increasing size; independent of the splitter"""
    for g in ideal.nonzero_generators():
        if not is_monomial(g):
            raise NonMonomialInputError("oracle generator", str(g))
    supports = [support(g.LM) for g in ideal.nonzero_generators()]
    n = ideal.ring.ngens
    covers: List[FrozenSet[int]] = []
    for size in range(n + 1):
        for subset in combinations(range(n), size):
            chosen = frozenset(subset)
            if all(s & chosen for s in supports) and not any(c <= chosen for c in covers):
                covers.append(chosen)
    return [_variable_ideal(ideal.ring, c) for c in covers]


def _univariate_factors(g: Polynomial, ring: PolyRing, index: int) -> List[Tuple[Polynomial, int]]:
    name = ring.variables[index]
    univariate = SympyPolyRing([Symbol(name)], ring.field.domain, lex)
    h = univariate.from_dict({(m[index],): c for m, c in g.items()})
    _, factors = h.factor_list()
    result = []
    for factor, multiplicity in factors:
        terms = {}
        for (e,), c in factor.items():
            monom = [0] * ring.ngens
            monom[index] = e
            terms[tuple(monom)] = c
        result.append((ring.from_terms(terms), multiplicity))
    return result


def _frobenius_root(g: Polynomial, p: int) -> Optional[Polynomial]:
    if g.is_ground or any(e % p for m in g.keys() for e in m):
        return None
    return g.ring.from_dict({tuple(e // p for e in m): c for m, c in g.items()})


class _Splitter:
    def __init__(self, ring: PolyRing):
        self.ring = ring
        self.leaves: List[Leaf] = []
        self.residuals: List[Ideal] = []

    def run(self, ideal: Ideal, depth: int = 0, frobenius: bool = False) -> None:
        basis = reduced_groebner_basis(ideal)
        if basis.is_unit:
            return
        if depth > settings.DECOMPOSE_MAX_DEPTH:
            logger.warning(f"Splitting depth {depth} exceeded; {ideal} kept as residual")
            self.residuals.append(ideal)
            return
        elements = list(basis)

        def with_basis(extra: Polynomial) -> Ideal:
            return Ideal(self.ring, elements + [extra])

        if all(is_monomial(g) for g in elements):
            if all(is_variable(g) for g in elements):
                self.leaf(ideal, CertificateKind.GENERATED_BY_VARIABLES, frobenius)
                return
            for cover in minimal_variable_covers([support(g.LM) for g in elements]):
                self.leaf(_variable_ideal(self.ring, cover), CertificateKind.MONOMIAL_COVER, frobenius)
            return

        for g in elements:
            if is_variable(g):
                continue
            content = _monomial_content(g)
            if any(content):
                index = next(i for i, e in enumerate(content) if e)
                x = self.ring.gens[index]
                cofactor = g.exquo(x)
                logger.debug(f"Splitting on monomial content {x} of {g}")
                self.run(with_basis(x), depth + 1, frobenius)
                self.run(with_basis(cofactor), depth + 1, frobenius)
                return

        for g in elements:
            involved = _involved(g)
            if len(involved) != 1 or g.degree(next(iter(involved))) < 2:
                continue
            factors = _univariate_factors(g, self.ring, next(iter(involved)))
            if len(factors) > 1 or any(m > 1 for _, m in factors):
                logger.debug(f"Splitting {g} into {len(factors)} univariate factors")
                for factor, _ in factors:
                    self.run(with_basis(factor), depth + 1, frobenius)
                return

        p = self.ring.field.characteristic
        if p:
            for position, g in enumerate(elements):
                root = _frobenius_root(g, p)
                if root is not None:
                    replaced = elements[:position] + [root] + elements[position + 1:]
                    self.run(Ideal(self.ring, replaced), depth + 1, True)
                    return

        kind = check_leaf(basis)
        if kind is None:
            self.residuals.append(ideal)
            return
        self.leaf(ideal, kind, frobenius)

    def leaf(self, ideal: Ideal, kind: CertificateKind, frobenius: bool) -> None:
        if frobenius:
            certificate = PrimeCertificate(CertificateKind.FROBENIUS_ROOT_REDUCED, base=kind)
        else:
            certificate = PrimeCertificate(kind)
        self.leaves.append((ideal, certificate))


def minimal_primes(ambient: PolyRing, ideal: Ideal) -> MinimalPrimesResult:
    """Certified minimal primes over ideal; uncertified branches come back as residuals"""
    if ideal.ring != ambient:
        raise RingMismatchError(ambient, ideal.ring)
    start = time.perf_counter()
    splitter = _Splitter(ambient)
    splitter.run(ideal)

    unique: Dict[str, Tuple[Ideal, GroebnerBasis, PrimeCertificate]] = {}
    for leaf, certificate in splitter.leaves:
        basis = reduced_groebner_basis(leaf)
        unique.setdefault(str(basis), (leaf, basis, certificate))

    candidates = list(unique.values())
    minimal = []
    for prime, basis, certificate in candidates:
        if any(other is not prime and contains(prime, other) for other, _, _ in candidates):
            continue
        minimal.append(PrimeComponent(prime, basis, certificate, krull_dimension(ambient, prime)))
    minimal.sort(key=lambda component: component.rendered())

    performance_logger.log_computation("decompose", time.perf_counter() - start, len(ideal.generators))
    if splitter.residuals:
        logger.info(f"Decomposition of {ideal} incomplete: {len(splitter.residuals)} residual branch(es)")
    return MinimalPrimesResult(tuple(minimal), not splitter.residuals, tuple(splitter.residuals))
