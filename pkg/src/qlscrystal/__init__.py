"""Quantum LS path crystals over parabolic quantum Bruhat graphs.

Exact-arithmetic construction of finite root systems, Weyl groups and their
parabolic quotients, the quantum Bruhat graph, piecewise-linear rational
paths with root operators, and the crystal generated by operator closure,
together with brute-force enumerations and verification harnesses that
cross-check all of it at small rank.
"""

from .crystal import (
    CrystalGraph,
    character,
    closure,
    verify_charls,
    verify_concat,
    verify_main,
    verify_properties,
    verify_scaling,
)
from .errors import InternalInconsistencyError, NodeCapError, PathDomainError
from .pathcore import (
    HFunction,
    PLPath,
    concatenate,
    epsilon,
    h_function,
    is_integrally_minimal,
    phi,
    pl_path,
    root_e,
    root_f,
    scale,
    straight_path,
)
from .qbg import (
    BRUHAT,
    QUANTUM,
    Qbg,
    QbgEdge,
    build_qbg,
    classify_edge,
    qbg_distance,
    sigma_path_witness,
    sigma_reachable,
)
from .qlspaths import (
    RationalPath,
    ShapeData,
    admissible_times,
    combinatorial_f,
    e_on_rational,
    enumerate_paths,
    eta_straight,
    f_on_rational,
    is_member,
    seed_path,
    shape_of,
    to_pl_path,
)
from .rootsys import CartanType, RootSystem, build_root_system, root_system
from .weylgroup import (
    WeylElem,
    enumerate_minimal_reps,
    from_word,
    identity,
    min_coset_rep,
    reflection_of_root,
    simple_reflection,
    weyl_group,
)

__version__ = "0.1.0"
