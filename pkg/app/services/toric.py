"""
Toric presentations of monomial subrings by elimination
"""

import logging
import string
from typing import Dict, List, Optional, Sequence, Tuple

from app.models.ideal import Ideal
from app.models.ring import FieldSpec, MonomialOrder, PolyRing, Polynomial, render_polynomial
from app.schemas.invariants import ToricReport
from app.services.groebner import eliminate
from app.utils.exceptions import ToricInputError

logger = logging.getLogger(__name__)

Weights = Sequence[Sequence[int]]


def parameter_names(arity: int) -> List[str]:
    if arity == 1:
        return ["s"]
    if arity == 2:
        return ["s", "t"]
    return [f"s{i}" for i in range(1, arity + 1)]


def default_variable_names(count: int) -> List[str]:
    letters = [c for c in string.ascii_lowercase if c not in "st"]
    if count <= len(letters):
        return letters[:count]
    return [f"x{i}" for i in range(1, count + 1)]


def _validate(weights: Weights) -> Tuple[Tuple[int, ...], ...]:
    if not weights:
        raise ToricInputError("at least one weight vector is required")
    vectors = tuple(tuple(int(e) for e in w) for w in weights)
    arity = len(vectors[0])
    if arity == 0:
        raise ToricInputError("weight vectors must be nonempty")
    for w in vectors:
        if len(w) != arity:
            raise ToricInputError(f"weight {w} has length {len(w)}, expected {arity}")
        if any(e < 0 for e in w):
            raise ToricInputError(f"weight {w} has a negative exponent")
        if not any(w):
            raise ToricInputError("zero weight vectors are not monomial generators")
    return vectors


def toric_presentation(weights: Weights, variables: Optional[Sequence[str]] = None,
                       field: FieldSpec = FieldSpec()) -> Tuple[PolyRing, Ideal]:
    """Kernel of k[v1..vk] -> k[s, t, ...], v_j -> parameter monomial of weight j.

    The presentation ring carries the default grevlex order.
    """
    vectors = _validate(weights)
    params = parameter_names(len(vectors[0]))
    names = list(variables) if variables is not None else default_variable_names(len(vectors))
    if len(names) != len(vectors):
        raise ToricInputError(f"{len(vectors)} weights need as many variables, got {len(names)}")
    clash = set(names) & set(params)
    if clash:
        raise ToricInputError(f"presentation variables clash with parameters: {sorted(clash)}")

    graph_ring = PolyRing(tuple(params + names), field)
    gens = dict(zip(graph_ring.variables, graph_ring.gens))
    graph = []
    for name, w in zip(names, vectors):
        graph.append(gens[name] - graph_ring.monomial(list(w) + [0] * len(names)))
    presentation = eliminate(Ideal(graph_ring, graph), params)

    ring = PolyRing(tuple(names), field, MonomialOrder())
    ideal = Ideal(ring, [ring.convert(g, presentation.ring) for g in presentation.generators])
    logger.info(f"Toric presentation of {len(vectors)} monomials: {len(ideal.generators)} generator(s)")
    return ring, ideal


def substitution_check(ring: PolyRing, ideal: Ideal, weights: Weights) -> bool:
    """Every generator vanishes under the monomial map"""
    vectors = _validate(weights)
    return all(not _substitute(g, vectors, ring.field) for g in ideal.generators)


def _substitute(g: Polynomial, vectors: Sequence[Tuple[int, ...]], field: FieldSpec) -> Dict[Tuple[int, ...], object]:
    image: Dict[Tuple[int, ...], object] = {}
    arity = len(vectors[0])
    for monom, coeff in g.items():
        target = tuple(sum(e * w[i] for e, w in zip(monom, vectors)) for i in range(arity))
        image[target] = image.get(target, field.domain.zero) + coeff
    return {m: c for m, c in image.items() if c}


def lift_monomial(exponents: Sequence[int], weights: Weights) -> Optional[Tuple[int, ...]]:
    """Exponents c with sum c_j * w_j = exponents, or None outside the semigroup"""
    vectors = _validate(weights)
    target = tuple(exponents)
    if len(target) != len(vectors[0]):
        raise ToricInputError(f"exponent vector {target} does not match weight length {len(vectors[0])}")

    def search(index: int, remaining: Tuple[int, ...]) -> Optional[List[int]]:
        if index == len(vectors):
            return [] if not any(remaining) else None
        w = vectors[index]
        most = min(r // e for r, e in zip(remaining, w) if e)
        for count in range(most, -1, -1):
            rest = search(index + 1, tuple(r - count * e for r, e in zip(remaining, w)))
            if rest is not None:
                return [count] + rest
        return None

    found = search(0, target)
    return tuple(found) if found is not None else None


def toric_report(ring: PolyRing, ideal: Ideal, weights: Weights) -> ToricReport:
    vectors = _validate(weights)
    return ToricReport(
        weights=[list(w) for w in vectors],
        parameters=parameter_names(len(vectors[0])),
        variables=list(ring.variables),
        generators=[render_polynomial(g, ring) for g in ideal.generators],
        substitution_ok=substitution_check(ring, ideal, vectors),
    )
