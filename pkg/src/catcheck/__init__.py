"""Exact checks of enriched category theory over finite index categories.

Two symmetric monoidal closed bases are provided: finite sets
(:class:`FinSet`) and finite-dimensional vector spaces over a prime field
(:class:`FinVect`).  Functor categories ``M^I`` are built on top, with ends,
coends, the Yoneda isomorphism, density, Kan extensions and the closed
monoidal structure, each paired with a verifier returning a :class:`Report`.
"""

from .basecat import Base, FinSet, FinVect, Mor, make_base
from .errors import CapExceeded, CatCheckError, InputError, PreconditionError
from .fincat import (
    CatFunctor,
    FinCat,
    arrow,
    chain,
    commutative_square,
    discrete,
    empty,
    hom_set,
    opposite,
    point,
    terminal,
    to_terminal,
    validate_category,
    validate_functor,
    walking_idempotent,
)
from .ends import Bifunctor, check_end_continuity, compute_coend, compute_end
from .funcat import (
    MFunctor,
    NatTrans,
    act,
    end_of_hom_equals_nat,
    enumerate_functors,
    exponent,
    map_functors,
    nat_transformations,
    tensor_pointwise,
    unit_functor,
    verify_closed_module,
    verify_module_functor,
)
from .yoneda import (
    build_h,
    density,
    free_U,
    V,
    verify_density,
    verify_eval_adjunction,
    verify_lemma_eq1,
    verify_UV_adjunction,
    verify_yoneda,
)
from .adjoint import (
    AdjunctionWitness,
    internal_hom_functorcat,
    right_adjoint_of_precomposition,
    verify_closed_monoidal_functorcat,
    verify_precomposition_adjunction,
)
from .coherence import verify_coherence
from .report import Check, Report
from .suites import SuiteConfig, run_suite

__version__ = "0.1.0"
