from .weights import (
    WeakWeight,
    CWeakWeight,
    WeightClassification,
    synth_weak_weight,
    synth_cweak_weight,
    verify_weight,
    classify_bounds,
    check_ww_implies_dpc,
)

__all__ = [
    'WeakWeight',
    'CWeakWeight',
    'WeightClassification',
    'synth_weak_weight',
    'synth_cweak_weight',
    'verify_weight',
    'classify_bounds',
    'check_ww_implies_dpc',
]
