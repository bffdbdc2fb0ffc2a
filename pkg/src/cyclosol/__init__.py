"""Cyclotomic Solomon algebras of the groups G(r,1,n).

Signed compositions index a family of reflection subgroups; sums of their
minimal coset representatives span a subalgebra of the group algebra whose
structure constants are polynomials in r.  This package computes those
polynomials, the deformed algebras Sol_q(n), their one-dimensional
representations, and the Hopf structure on the direct sum over n.
"""

__version__ = "0.1.0"

from .combinat import SignedComposition, enumerate_signed_compositions, signed_partitions
from .poly import IntPolynomial
from .wreath import GroupElement
from .cosets import coset_transversal, double_coset_families, mak_transversal
from .structconst import StructureConstants, structure_constants
from .solalg import AlgebraElement, SolomonAlgebra, algebra, algebra_multiply
from .reptheory import character_table, radical_basis
from .hopf import GradedElement, coproduct, antipode, primitive_generator

__all__ = [
    "AlgebraElement",
    "GradedElement",
    "GroupElement",
    "IntPolynomial",
    "SignedComposition",
    "SolomonAlgebra",
    "StructureConstants",
    "algebra",
    "algebra_multiply",
    "antipode",
    "character_table",
    "coproduct",
    "coset_transversal",
    "double_coset_families",
    "enumerate_signed_compositions",
    "mak_transversal",
    "primitive_generator",
    "radical_basis",
    "signed_partitions",
    "structure_constants",
]
