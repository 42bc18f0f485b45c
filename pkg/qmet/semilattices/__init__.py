from .semilattice import (
    MeetSL,
    semilattice_from_order,
    join_semilattice_from_order,
    check_congruence,
    congruence_closure,
)

from .valuations import (
    FLAVOURS,
    Monotonicity,
    ValuationVerdict,
    check_valuation,
    dual_flavour,
)

from .correspondence import (
    InvarianceVerdict,
    DpcWeightReport,
    MSpaceVerdict,
    check_invariant,
    dist_from_covaluation,
    synth_wx,
    synth_wX,
    check_dpc_iff_ww,
    check_mspace,
    correspondence_roundtrip,
    check_top_bottom_signs,
    exhaustive_dpc_ww_check,
    random_correspondence_check,
)

from .generators import (
    enumerate_meet_semilattices,
    family_semilattice,
    random_union_closed_family,
    random_congruence,
    all_congruences,
    random_covaluation,
    truncate,
)

__all__ = [
    'MeetSL',
    'semilattice_from_order',
    'join_semilattice_from_order',
    'check_congruence',
    'congruence_closure',
    'FLAVOURS',
    'Monotonicity',
    'ValuationVerdict',
    'check_valuation',
    'dual_flavour',
    'InvarianceVerdict',
    'DpcWeightReport',
    'MSpaceVerdict',
    'check_invariant',
    'dist_from_covaluation',
    'synth_wx',
    'synth_wX',
    'check_dpc_iff_ww',
    'check_mspace',
    'correspondence_roundtrip',
    'check_top_bottom_signs',
    'exhaustive_dpc_ww_check',
    'random_correspondence_check',
    'enumerate_meet_semilattices',
    'family_semilattice',
    'random_union_closed_family',
    'random_congruence',
    'all_congruences',
    'random_covaluation',
    'truncate',
]
