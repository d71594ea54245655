"""Structured bound results."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from ..counts import Huge, to_decimal


class FormulaPath(str, Enum):
    ACKERMANN_RECURSION = "ackermann-recursion"
    GREEDY_LENGTH = "greedy-length"
    CLOSED_FORM = "closed-form"
    DOUBLING_GROWTH = "doubling-growth"
    RECURSIVE_TOWER = "recursive-tower-m2"
    SHIFTED_ACKERMANN = "shifted-ackermann"
    ITERATED_ACKERMANN = "iterated-ackermann"
    CHAR_SET = "char-set-order"
    COMPONENT_ORDER = "component-order"
    NULLSTELLENSATZ = "nullstellensatz-T"
    BEZOUT = "bezout-exponents"


def _parse(text):
    if isinstance(text, int):
        return text
    if "/" in text:
        return Fraction(text)
    return int(text)


@dataclass
class BoundReport:
    value: object
    formula_path: FormulaPath
    intermediates: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def to_json(self):
        return {
            "value": to_decimal(self.value),
            "formula_path": self.formula_path.value,
            "intermediates": {k: to_decimal(v) for k, v in sorted(self.intermediates.items())},
            "notes": list(self.notes),
        }

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        if any(isinstance(v, str) and "^" in v for v in [data["value"], *data["intermediates"].values()]):
            raise ValueError("symbolic values do not round-trip to integers")
        return cls(
            _parse(data["value"]),
            FormulaPath(data["formula_path"]),
            {k: _parse(v) for k, v in data["intermediates"].items()},
            list(data.get("notes", [])),
        )

    def is_symbolic(self):
        return isinstance(self.value, Huge)
