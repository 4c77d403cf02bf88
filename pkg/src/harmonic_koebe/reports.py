"""Report records produced by checks and estimators."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class BoundReport:
    """A named closed-form bound, its inputs, and an optional measurement.

    `passed` is present exactly when `measured` is present; its direction
    (measured above or below `value`) is part of the named bound's contract.
    `witness` is the grid point where the measured extremum occurred.
    """

    name: str
    inputs: dict = field(default_factory=dict)
    value: float = 0.0
    measured: float | None = None
    passed: bool | None = None
    witness: complex | None = None

    def __post_init__(self):
        if (self.measured is None) != (self.passed is None):
            raise ValueError("measured and passed must be supplied together")

    def to_dict(self) -> dict:
        """JSON-ready dict; the pass flag serializes under the key 'pass'."""
        out: dict = {
            "name": self.name,
            "inputs": dict(self.inputs),
            "value": self.value,
        }
        out["measured"] = self.measured
        out["pass"] = self.passed
        if self.witness is None:
            out["witness"] = None
        else:
            out["witness"] = [self.witness.real, self.witness.imag]
        return out
