from .system import DirectedSystem, validate_system
from .direct import (
    LimitElement,
    DirectLimit,
    direct_limit,
    limit_elements,
    cofinal_restriction_check,
    check_limit_factoring,
    check_limit_elements_unique,
    check_unique_lifting,
    mediating_map,
    check_mediating_factoring,
)
