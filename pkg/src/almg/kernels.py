"""Kernel selection: compiled extension if present, pure Python otherwise.

Set ALMG_PURE=1 to force the pure-Python kernels even when the compiled
module is installed (the benchmark and the parity tests rely on importing
both implementations side by side).
"""

import os

from almg import _kernels_py

if os.environ.get("ALMG_PURE"):
    _impl = _kernels_py
else:
    try:
        from almg import _kernels_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

ACTIVE = "compiled" if _impl.__name__.endswith("_cy") else "pure"

UNDEF = _kernels_py.UNDEF

F_MONOID = _kernels_py.F_MONOID
F_METRIC = _kernels_py.F_METRIC
F_AXIOM2 = _kernels_py.F_AXIOM2
F_AXIOM4 = _kernels_py.F_AXIOM4
F_CONTRACTIONS = _kernels_py.F_CONTRACTIONS
F_SEMIREGULAR = _kernels_py.F_SEMIREGULAR
ALL_FAMILIES = _kernels_py.ALL_FAMILIES

scan_commutative = _impl.scan_commutative
scan_associative = _impl.scan_associative
scan_idempotent = _impl.scan_idempotent
scan_absorption = _impl.scan_absorption
scan_order_consistency = _impl.scan_order_consistency
scan_identity = _impl.scan_identity
scan_isotone = _impl.scan_isotone
scan_add_distributive = _impl.scan_add_distributive
scan_m1 = _impl.scan_m1
scan_m3 = _impl.scan_m3
scan_axiom2 = _impl.scan_axiom2
scan_axiom4 = _impl.scan_axiom4
scan_contractions = _impl.scan_contractions
scan_semiregular = _impl.scan_semiregular
scan_monotone_star = _impl.scan_monotone_star
scan_t1 = _impl.scan_t1
scan_t2 = _impl.scan_t2
scan_beta = _impl.scan_beta
scan_lattice_implies_metric = _impl.scan_lattice_implies_metric
scan_quad_identity = _impl.scan_quad_identity
scan_between_meetjoin = _impl.scan_between_meetjoin
scan_monotone_between = _impl.scan_monotone_between
scan_ptolemaic = _impl.scan_ptolemaic
scan_fixty = _impl.scan_fixty
scan_equilateral = _impl.scan_equilateral
scan_isosceles = _impl.scan_isosceles
scan_convexity = _impl.scan_convexity
complete_tables = _impl.complete_tables
