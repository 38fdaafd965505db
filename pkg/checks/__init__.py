from .base_check import BaseCheck
from .complex_checks import FComplexCheck, GComplexCheck
from .pachner_checks import (
    Pachner33Check, TheoremD1Check, TheoremBCheck, Explore24Check,
)

CHECKS = {
    check.name: check
    for check in (
        FComplexCheck, GComplexCheck, Pachner33Check,
        TheoremD1Check, TheoremBCheck, Explore24Check,
    )
}
