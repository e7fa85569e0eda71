"""Finite-model toolkit for autometrized lattice-ordered monoids.

Represent small algebras by operation tables, check the defining laws,
evaluate the metric-geometry predicates and theorems, reproduce the
canonical examples (Boolean algebras, chains, integer windows, closed
interval sets), and enumerate or search small models.
"""

__version__ = "0.1.0"

from almg.core import (  # noqa: F401
    AlgebraError,
    CheckReport,
    Classification,
    FiniteAlgebra,
    PartialAlgebra,
    check_add_distributive,
    check_axiom2,
    check_axiom4,
    check_contractions,
    check_lattice,
    check_metric,
    check_monoid,
    check_semiregular,
    check_star_monotone,
    classify,
    drl_difference,
    is_drl_compatible,
    leq,
)
from almg.geometry import (  # noqa: F401
    TheoremSuiteReport,
    Triangle,
    atoms,
    check_beta,
    check_chain_theorems,
    check_four_way_equivalence,
    check_L_implies_M,
    check_no_equilateral,
    check_ptolemaic,
    check_quadrilateral_lemma,
    check_t1,
    check_t2,
    find_equilateral,
    find_fixty_triangles,
    find_isosceles,
    fixty_equivalence_check,
    has_fixty,
    is_B_linear,
    is_chain,
    is_D_linear,
    is_metrically_convex,
    is_subgeometry,
    lattice_between,
    metric_between,
    run_theorem_suite,
)
from almg.intervals import (  # noqa: F401
    IntervalSet,
    demo_axiom4_failure,
    demo_fixty_nonzero_meet,
    iv_add,
    iv_check_axiom2_sample,
    iv_intersect,
    iv_star,
    iv_union,
)
from almg.models import (  # noqa: F401
    ModelSpec,
    make_boolean,
    make_chain,
    make_product,
    make_z_window_u,
    make_z_window_uv,
)
from almg.search import (  # noqa: F401
    EnumerationResult,
    SearchSpec,
    canonical_form,
    enumerate_al_monoids,
    enumerate_lattice_orders,
    search_counterexample,
)
