from .carriers import (
    DEFAULT_ELEMENT_BUDGET,
    Carrier,
    FiniteCarrier,
    PowerSetCarrier,
    Subgroup,
    SubgroupCarrier,
    format_set,
    vector,
)

from .endomorphisms import (
    SLEndo,
    identity,
    integer_shift,
    coordinate_shift,
    meet_endomorphisms,
    respects,
    diamond_endomorphism,
)

from .entropy import (
    DEFAULT_HORIZON,
    DEFAULT_WINDOW,
    EntropyEstimate,
    EntropySup,
    GenNorm,
    RepresentativeReport,
    trajectories,
    trajectory,
    is_inert,
    inertness_criteria,
    entropy_point,
    entropy_sup,
    cardinality_norm,
    log_order_norm,
    gennorm_entropy,
    distance_from_seed,
    weight_value,
    representative_dependence,
    exhaustive_inertness_check,
)

__all__ = [
    'DEFAULT_ELEMENT_BUDGET',
    'Carrier',
    'FiniteCarrier',
    'PowerSetCarrier',
    'Subgroup',
    'SubgroupCarrier',
    'format_set',
    'vector',
    'SLEndo',
    'identity',
    'integer_shift',
    'coordinate_shift',
    'meet_endomorphisms',
    'respects',
    'diamond_endomorphism',
    'DEFAULT_HORIZON',
    'DEFAULT_WINDOW',
    'EntropyEstimate',
    'EntropySup',
    'GenNorm',
    'RepresentativeReport',
    'trajectories',
    'trajectory',
    'is_inert',
    'inertness_criteria',
    'entropy_point',
    'entropy_sup',
    'cardinality_norm',
    'log_order_norm',
    'gennorm_entropy',
    'distance_from_seed',
    'weight_value',
    'representative_dependence',
    'exhaustive_inertness_check',
]
