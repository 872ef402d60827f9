"""Exact Groebner-basis certification of tensoriality ideals.

The package has three layers: an exact sparse-polynomial core with ranked lex
orders (``poly``, ``xyz``, ``parse``), a plain-Buchberger engine with ordered
division and canonical reduced bases (``groebner``), and the domain layer:
the tensoriality ideals with their oracles (``ideals``), a symbolic Courant
model over polynomial charts (``chart``, ``courant``, ``fleet``), suite
verifiers (``verify``) and the ``tensorcert`` CLI (``cli``, ``report``).
"""

__version__ = "0.1.0"

from .poly import (
    MonomialOrder,
    OrderMismatchError,
    Polynomial,
    PolyRing,
    RingMismatchError,
    compare_monomials,
    leading_term,
    monic,
)
from .xyz import (
    Signature,
    apply_index_map,
    apply_s3,
    elimination_order,
    index_desc_order,
    letter_block_order,
    multidegree_components,
    pair_order,
    xyz_ring,
)
from .parse import ParseError, parse_polynomial, render_polynomial
from .groebner import (
    BudgetExceededError,
    GroebnerBasis,
    IdealPresentation,
    MonomialIdeal,
    StepBudget,
    buchberger,
    buchberger_criterion,
    eliminate,
    initial_ideal,
    membership,
    normal_form,
    reduce_basis,
    reduce_standard_form,
    s_polynomial,
)
from .ideals import (
    build_axis_ideals,
    candidate_basis,
    generator_P,
    generator_T,
    intersect_pair,
    is_universally_tensorial_linear,
    knutson_F,
    product_ideal,
    vanishes_on_variety,
)
from .chart import Chart, CommutingFamily, Endomorphism, GeneralizedSection, validate_family
from .courant import (
    GaussianRational,
    TrilinearForm,
    courant_bracket,
    courant_element,
    inner_product,
    polynomial_action,
    semiconcomitant,
    tensor_P,
    tensoriality_check,
    torsion_T,
    whitney_star_condition,
)

__all__ = [name for name in dir() if not name.startswith("_")]
