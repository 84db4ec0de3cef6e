"""Structured pass/fail reports with stable JSON rendering.

Reports collect named boolean assertions plus free-form notes and data.
Rendering is deterministic: insertion order is preserved and no wall-clock
or host information is ever included, so identical runs produce identical
bytes.
"""

import json

SCHEMA_VERSION = 1


class Report:
    """An ordered map of named assertions with notes and supporting data."""

    def __init__(self, name: str, seed: int | None = None):
        self.name = name
        self.seed = seed
        self.assertions: dict[str, bool] = {}
        self.details: dict[str, object] = {}
        self.notes: list[str] = []
        self.data: dict[str, object] = {}

    def record(self, label: str, ok: bool, detail=None) -> bool:
        """Record one assertion; failing details are kept for the output."""
        ok = bool(ok)
        if label in self.assertions:
            self.assertions[label] = self.assertions[label] and ok
        else:
            self.assertions[label] = ok
        if detail is not None and not ok:
            self.details.setdefault(label, detail)
        return ok

    def note(self, text: str):
        self.notes.append(text)

    @property
    def passed(self) -> bool:
        return all(self.assertions.values())

    def failing(self) -> list[str]:
        return [k for k, v in self.assertions.items() if not v]

    def to_json_dict(self) -> dict:
        out = {
            "schema": SCHEMA_VERSION,
            "name": self.name,
            "passed": self.passed,
            "assertions": dict(self.assertions),
        }
        if self.seed is not None:
            out["seed"] = self.seed
        if self.details:
            out["details"] = self.details
        if self.notes:
            out["notes"] = list(self.notes)
        if self.data:
            out["data"] = self.data
        return out


def dump_json(payload: dict) -> str:
    """Canonical JSON text: fixed separators and key order as constructed."""
    return json.dumps(payload, indent=2, sort_keys=False)
