"""Schema-versioned JSON reports produced by the CLI."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields

SCHEMA_VERSION = "cayvol.report/1"


@dataclass
class Report:
    field: str
    matrix: list[list[str]]
    flags: dict
    determinant: str
    schema: str = SCHEMA_VERSION
    group: str | None = None
    support: list[str] | None = None
    weights: dict | None = None
    simple_reason: str | None = None
    hypotheses: dict | None = None
    aut: dict | None = None
    extension: dict | None = None
    diagnostics: dict | None = None
    timings: dict | None = None

    def to_dict(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        if data.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in data.items() if k in known})

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))
