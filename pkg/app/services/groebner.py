"""
Groebner bases with Buchberger's algorithm, normal forms, elimination,
ideal predicates and Krull dimension via independent variable sets
"""

import logging
import time
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from sympy.polys.monomials import monomial_div, monomial_divides, monomial_lcm, monomial_mul

from app.config import settings
from app.models.ideal import GroebnerBasis, Ideal
from app.models.ring import MonomialOrder, OrderKind, PolyRing, Polynomial, support
from app.utils.exceptions import (
    InvariantViolationError,
    RingMismatchError,
    TooManyVariablesError,
    UnknownVariableError,
)
from app.utils.logging import performance_logger

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


def spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    """Return the s-polynomial of monic polynomials f and g."""
    lcm = monomial_lcm(f.LM, g.LM)
    return f.mul_monom(monomial_div(lcm, f.LM)) - g.mul_monom(monomial_div(lcm, g.LM))


def _clear_denominators(f: Polynomial) -> Polynomial:
    # no-op over finite fields
    _, cleared = f.clear_denoms()
    return cleared


def _update(G: List[Polynomial], P: Set[Pair], f: Polynomial) -> Tuple[List[Polynomial], Set[Pair]]:
    """Add f to G and update the pair set with the Gebauer-Moeller criteria.

    Covers the coprime leading term criterion and the chain criterion.
    """
    order = f.ring.order
    lmf = f.LM
    lmG = [g.LM for g in G]

    P = {p for p in P
         if (not monomial_divides(lmf, monomial_lcm(lmG[p[0]], lmG[p[1]]))
             or monomial_lcm(lmG[p[0]], lmG[p[1]]) == monomial_lcm(lmG[p[0]], lmf)
             or monomial_lcm(lmG[p[0]], lmG[p[1]]) == monomial_lcm(lmG[p[1]], lmf))}

    lcm_groups = {}
    for i in range(len(G)):
        lcm_groups.setdefault(monomial_lcm(lmG[i], lmf), []).append(i)
    minimal_lcms = []
    for lcm in sorted(lcm_groups, key=order):
        if all(not monomial_divides(other, lcm) for other in minimal_lcms):
            minimal_lcms.append(lcm)

    new_pairs = set()
    for lcm in minimal_lcms:
        if not any(monomial_lcm(lmG[i], lmf) == monomial_mul(lmG[i], lmf) for i in lcm_groups[lcm]):
            new_pairs.add((min(lcm_groups[lcm]), len(G)))

    return G + [f], P | new_pairs


def _select(G: List[Polynomial], P: Set[Pair]) -> Pair:
    """Normal strategy: smallest lcm first, ties broken by indices"""
    order = G[0].ring.order
    return min(P, key=lambda p: (order(monomial_lcm(G[p[0]].LM, G[p[1]].LM)), p))


def _minimalize(G: List[Polynomial]) -> List[Polynomial]:
    """Return a minimal Groebner basis from arbitrary Groebner basis G."""
    order = G[0].ring.order
    Gmin = []
    for f in sorted(G, key=lambda h: order(h.LM)):
        if all(not monomial_divides(g.LM, f.LM) for g in Gmin):
            Gmin.append(f)
    return Gmin


def _interreduce(G: List[Polynomial]) -> List[Polynomial]:
    """Return the reduced Groebner basis from a minimal Groebner basis G."""
    Gred = []
    for i in range(len(G)):
        others = G[:i] + G[i+1:]
        g = G[i].rem(others) if others else G[i]
        Gred.append(g.monic())
    return Gred


def buchberger(F: Sequence[Polynomial]) -> List[Polynomial]:
    """Return the reduced Groebner basis of the nonzero polynomials F.

    Uses the order of the ring the polynomials live in.
    """
    F = [f for f in F if f]
    if not F:
        return []
    ring = F[0].ring
    if any(f.is_ground for f in F):
        return [ring.one]

    G: List[Polynomial] = []
    P: Set[Pair] = set()
    for f in F:
        G, P = _update(G, P, f.monic())

    while P:
        i, j = _select(G, P)
        P.remove((i, j))
        s = _clear_denominators(spoly(G[i], G[j]))
        r = s.rem(G)
        if r:
            if r.is_ground:
                return [ring.one]
            G, P = _update(G, P, r.monic())

    reduced = _interreduce(_minimalize(G))
    return sorted(reduced, key=lambda g: ring.order(g.LM), reverse=True)


def reduced_groebner_basis(ideal: Ideal, order: Optional[MonomialOrder] = None) -> GroebnerBasis:
    """Reduced monic Groebner basis of ideal for order (default: the ring's order)"""
    order = order or ideal.ring.order
    cached = ideal.cached_basis(order)
    if cached is not None:
        return cached

    target = ideal.ring if order == ideal.ring.order else ideal.ring.with_order(order)
    generators = [target.convert(g, ideal.ring) if target is not ideal.ring else g for g in ideal.nonzero_generators()]

    start = time.perf_counter()
    elements = buchberger(generators)
    basis = GroebnerBasis(target, tuple(elements))
    performance_logger.log_computation("groebner", time.perf_counter() - start, len(generators))

    for g in generators:
        if normal_form(g, basis):
            raise InvariantViolationError(
                "input generator does not reduce to zero modulo its Groebner basis",
                details={"generator": str(g)},
            )
    return ideal.store_basis(basis)


def normal_form(f: Polynomial, basis: GroebnerBasis) -> Polynomial:
    """Remainder of f on division by the basis; first dividing element wins"""
    if f.ring != basis.ring.sympy:
        if f.ring.symbols != basis.ring.sympy.symbols or f.ring.domain != basis.ring.sympy.domain:
            raise RingMismatchError(f.ring, basis.ring)
        f = f.set_ring(basis.ring.sympy)
    if not basis.elements or not f:
        return f
    return f.rem(list(basis.elements))


def ideal_membership(f: Polynomial, ideal: Ideal) -> bool:
    if not f:
        return True
    ideal.ring.require(f)
    return not normal_form(f, reduced_groebner_basis(ideal))


def contains(big: Ideal, small: Ideal) -> bool:
    """small is contained in big"""
    return all(ideal_membership(g, big) for g in small.nonzero_generators())


def same_ideal(first: Ideal, second: Ideal) -> bool:
    return reduced_groebner_basis(first).elements == reduced_groebner_basis(second).elements


def is_unit_ideal(ideal: Ideal) -> bool:
    return reduced_groebner_basis(ideal).is_unit


def eliminate(ideal: Ideal, drop_vars: Iterable[str]) -> Ideal:
    """Intersection of ideal with the subring on the variables not in drop_vars.

    The dropped variables are moved in front and a block elimination order
    is used; the result lives in a ring on the kept variables.
    """
    ring = ideal.ring
    drop_set = set(drop_vars)
    for name in drop_set:
        if name not in ring.variables:
            raise UnknownVariableError(f"unknown variable {name}", 0)
    if not drop_set:
        return ideal
    drop = [v for v in ring.variables if v in drop_set]
    keep = [v for v in ring.variables if v not in drop_set]
    if not keep:
        raise ValueError("cannot eliminate every variable")

    elimination_ring = PolyRing(tuple(drop + keep), ring.field, MonomialOrder.elimination(len(drop)))
    moved = Ideal(elimination_ring, [elimination_ring.convert(g, ring) for g in ideal.generators])
    basis = reduced_groebner_basis(moved)

    kept_order = ring.order if ring.order.kind != OrderKind.BLOCK_ELIMINATION else MonomialOrder()
    kept_ring = PolyRing(tuple(keep), ring.field, kept_order)
    survivors = [g for g in basis if all(m[i] == 0 for m in g.keys() for i in range(len(drop)))]
    logger.debug(f"Eliminated {drop}: {len(survivors)} of {len(basis)} basis elements survive")
    return Ideal(kept_ring, [kept_ring.convert(g, elimination_ring) for g in survivors])


def krull_dimension(ambient: PolyRing, ideal: Ideal) -> Optional[int]:
    """Dimension of ambient/ideal, or None when the ideal is the unit ideal.

    Maximum size of a variable subset S such that no leading monomial of the
    reduced basis lives in the subring on S.
    """
    if ideal.ring.variables != ambient.variables or ideal.ring.field != ambient.field:
        raise RingMismatchError(ambient, ideal.ring)
    n = ambient.ngens
    if n > settings.MAX_DIMENSION_VARIABLES:
        raise TooManyVariablesError(n, settings.MAX_DIMENSION_VARIABLES)

    basis = reduced_groebner_basis(ideal)
    if basis.is_unit:
        return None
    supports = [support(m) for m in basis.leading_monomials]
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            chosen = set(subset)
            if all(not s <= chosen for s in supports):
                return size
    return 0
