from ._mdlmon import (
    Monitor,
    Verdict,
    VerdictState,
    explain,
    parse_formula,
    positive_form,
    translate,
)

__all__ = [
    "Monitor",
    "Verdict",
    "VerdictState",
    "explain",
    "parse_formula",
    "positive_form",
    "translate",
]
