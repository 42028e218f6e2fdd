"""psilab: exact-arithmetic constructions and checks for principal symmetric
ideals, their Macaulay inverse systems, betti tables, and symmetric-group
equivariant structure."""

from .fields import QQ, ConfigError, PrimeField, RationalField, field_from_spec
from .poly import DualElement, Polynomial, contract, parse_element
from .partitions import monomial_symmetric, partitions_of
from .psi import PsiIdeal, build_construction_f, orbit_span, sample_general_f
from .inverse import QuotientAlgebra, classify, hilbert_and_socle, linear_relations
from .homology import closed_form_betti, koszul_betti, matlis_betti_duality

__all__ = [
    "QQ",
    "ConfigError",
    "PrimeField",
    "RationalField",
    "field_from_spec",
    "DualElement",
    "Polynomial",
    "contract",
    "parse_element",
    "monomial_symmetric",
    "partitions_of",
    "PsiIdeal",
    "build_construction_f",
    "orbit_span",
    "sample_general_f",
    "QuotientAlgebra",
    "classify",
    "hilbert_and_socle",
    "linear_relations",
    "closed_form_betti",
    "koszul_betti",
    "matlis_betti_duality",
]
__version__ = "0.1.0"
