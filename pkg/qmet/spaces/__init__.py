from .relations import (
    Partition,
    OrderRel,
)

from .qmetric import (
    GQSpace,
    validate_gqm,
    conjugate,
    symmetrise,
    components,
    specialisation_order,
    check_dpc,
    disjoint_union,
    check_monotonicity,
    check_convex_components,
)

__all__ = [
    'Partition',
    'OrderRel',
    'GQSpace',
    'validate_gqm',
    'conjugate',
    'symmetrise',
    'components',
    'specialisation_order',
    'check_dpc',
    'disjoint_union',
    'check_monotonicity',
    'check_convex_components',
]
