"""Single-valued Hamiltonians from non-convex Lagrangians via the
Legendre-Fenchel transform."""

from ._core import (
    Branch,
    BranchSet,
    ConjugateResult,
    ConvexRegimeError,
    DomainKind,
    EffectiveDomain,
    HullSegments,
    ModelParams,
    PolynomialLagrangian,
    RealRoot,
    RootSelector,
    SampledFunction,
    SlopeGrid,
    TangentPoint,
    VacuumState,
    XiRemap,
    biconjugate,
    conjugate_bruteforce,
    conjugate_fast,
    cusp_momenta,
    effective_domain,
    enumerate_branches,
    flat_regions,
    hamiltonian_closed_form,
    hamiltonian_subgradient,
    invert_legendre_map,
    lagrangian_eval,
    legendre_map,
    momentum_of_velocity_revised,
    multivalued_hamiltonian,
    revised_lagrangian,
    supporting_line,
    swallow_tail_curve,
    tangent_point_left,
    tangent_point_right,
    vacuum_cusp,
    vacuum_lft,
    xi_multiplicity_audit,
    xi_remap,
)

__all__ = [name for name in dir() if not name.startswith("_")]
