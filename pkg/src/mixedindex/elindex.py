"""Signed local degree of an isolated root from the local algebra.

The absolute degree is ``dim A - 2 dim I_max``; the sign comes from the
signature of the symmetric form ``(a, b) -> phi(a b)`` on ``A`` where ``phi``
is any linear functional positive on the class of the Jacobian determinant.
"""

from dataclasses import dataclass

from .errors import InternalError, JacobianClassZero, NonRoot, NotSquare, ZeroPolynomial
from .exactnum import RationalMatrix, inertia
from .localpoly import LocalOrder, jacobian_determinant
from .standardbasis import build_local_algebra, compute_standard_basis


@dataclass(frozen=True)
class DegreeResult:
    dimension: int
    signature: int
    abs_degree: int
    signed_degree: int
    i_max_dimension: int
    jacobian_class_coordinates: tuple
    inertia: tuple
    phi_monomial: tuple
    algebra: object = None


def jacobian_class_support(algebra, J):
    """Indices of standard monomials carrying the class of ``J``, largest first."""
    coords = algebra.coordinates(J)
    return coords, [i for i, c in enumerate(coords) if c != 0]


def bilinear_form_matrix(algebra, J, phi_index=None):
    """Gram matrix of ``(a, b) -> phi(a b)`` on the standard monomials.

    By default ``phi`` is the dual of the largest standard monomial (in the
    local order) on which the class of ``J`` has a nonzero coordinate ``c``,
    divided by ``c`` so that ``phi(J) = 1``.  ``phi_index`` selects a
    different admissible monomial.
    """
    coords, support = jacobian_class_support(algebra, J)
    if not support:
        raise JacobianClassZero("the Jacobian determinant vanishes in the local algebra")
    k = support[0] if phi_index is None else phi_index
    c = coords[k]
    if c == 0:
        raise JacobianClassZero(f"class of J has no component on standard monomial {k}")
    d = algebra.dimension
    rows = [[0] * d for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            rows[i][j] = rows[j][i] = algebra.product_coordinates(i, j)[k] / c
    return RationalMatrix(rows)


def signed_degree(system, order=None, degree_cap=64, phi_index=None, algebra=None):
    """Full :class:`DegreeResult` for the root of ``system`` at the origin."""
    if not system.is_square():
        raise NotSquare(f"{len(system.polys)} equations in {system.nvars} variables")
    if order is None:
        order = LocalOrder.default(system.nvars)
    if algebra is None:
        algebra = build_local_algebra(compute_standard_basis(system.polys, order), degree_cap)
    J = jacobian_determinant(system)
    coords = algebra.coordinates(J)
    support = [i for i, c in enumerate(coords) if c != 0]
    B = bilinear_form_matrix(algebra, J, phi_index)
    pos, neg, zero = inertia(B)
    if zero:
        raise InternalError("degenerate Eisenbud-Levine form on a finite algebra")
    signature = pos - neg
    d = algebra.dimension
    if (d - abs(signature)) % 2:
        raise InternalError("dimension and signature have different parity")
    k = support[0] if phi_index is None else phi_index
    return DegreeResult(
        dimension=d,
        signature=signature,
        abs_degree=abs(signature),
        signed_degree=signature,
        i_max_dimension=(d - abs(signature)) // 2,
        jacobian_class_coordinates=tuple(coords),
        inertia=(pos, neg, zero),
        phi_monomial=algebra.standard_monomials[k],
        algebra=algebra,
    )


def one_variable_degree(g):
    """Local degree at 0 of a one-variable polynomial with ``g(0) = 0``.

    Zero for even order, otherwise the sign of the lowest-order coefficient.
    """
    if g.is_zero():
        raise ZeroPolynomial("zero polynomial")
    if g.nvars != 1:
        raise NotSquare("expected a polynomial in one variable")
    if g.constant_term() != 0:
        raise NonRoot("g(0) != 0")
    k = g.order()
    if k % 2 == 0:
        return 0
    return 1 if g.coefficient((k,)) > 0 else -1
