"""Verification outcomes shared by all checkers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

VALID = "valid"
VALID_UP_TO_BOUND = "valid_up_to_bound"
COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True)
class CheckReport:
    """Outcome of an exhaustive, bounded, or sampled verification.

    ``verdict`` is one of ``valid``, ``valid_up_to_bound``, ``counterexample``.
    ``witness`` is only present for counterexamples and names the failing
    instance (axiom plus elements, or a valuation).  ``checked`` counts the
    instances actually evaluated.
    """

    verdict: str
    checked: int
    witness: Any = None
    mode: str = "exhaustive"
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.verdict != COUNTEREXAMPLE
