"""Result record for oracle sweeps."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    claim: str
    params: dict = field(default_factory=dict)
    checked: int = 0
    skipped: int = 0
    failures: list = field(default_factory=list)
    facts: dict = field(default_factory=dict)

    @property
    def ok(self):
        return not self.failures

    def fail(self, payload):
        self.failures.append(payload)

    def to_json(self):
        return {
            "claim": self.claim,
            "params": self.params,
            "checked": self.checked,
            "skipped": self.skipped,
            "failures": sorted(self.failures, key=lambda f: json.dumps(f, sort_keys=True, default=str)),
            "facts": self.facts,
        }

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True, default=str)

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["claim"], data["params"], data["checked"], data["skipped"], data["failures"], data["facts"])

    def merge(self, other):
        self.checked += other.checked
        self.skipped += other.skipped
        self.failures.extend(other.failures)
        return self
