"""
Exact linear algebra over the coefficient field
"""

from typing import Optional, Sequence

from sympy.polys.matrices import DomainMatrix

from app.models.ring import FieldSpec


def domain_matrix(rows: Sequence[Sequence[object]], n_cols: int, field: FieldSpec) -> Optional[DomainMatrix]:
    """Dense matrix over the field, or None when it has no rows or no columns"""
    n_rows = len(rows)
    if n_rows == 0 or n_cols == 0:
        return None
    domain = field.domain
    converted = [[domain.convert(entry) for entry in row] for row in rows]
    return DomainMatrix(converted, (n_rows, n_cols), domain)


def exact_rank(rows: Sequence[Sequence[object]], n_cols: int, field: FieldSpec) -> int:
    """Rank of a dense matrix whose entries are ints or domain elements"""
    matrix = domain_matrix(rows, n_cols, field)
    return matrix.rank() if matrix is not None else 0


def matrix_rank(matrix: Optional[DomainMatrix]) -> int:
    return matrix.rank() if matrix is not None else 0


def kernel_dimension(matrix: Optional[DomainMatrix], n_cols: int) -> int:
    """Dimension of {v : matrix * v = 0}, read off a nullspace basis"""
    if matrix is None:
        return n_cols
    return matrix.nullspace().shape[0]


def composes_to_zero(first: Optional[DomainMatrix], second: Optional[DomainMatrix]) -> bool:
    """True when second * first vanishes; a missing matrix is a zero map"""
    if first is None or second is None:
        return True
    return (second * first).to_Matrix().is_zero_matrix
