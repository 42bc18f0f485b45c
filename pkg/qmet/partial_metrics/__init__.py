from .partial_metric import (
    WPMSpace,
    validate_wpm,
    p_from_dw,
    d_from_p,
    roundtrip_check,
    order_from_p,
)

__all__ = [
    'WPMSpace',
    'validate_wpm',
    'p_from_dw',
    'd_from_p',
    'roundtrip_check',
    'order_from_p',
]
