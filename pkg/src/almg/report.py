"""Report documents: stable machine-readable output for the CLI.

A document is a plain dict of JSON-compatible values.  Serialization sorts
keys, so two runs with identical inputs produce byte-identical JSON except
for the isolated "timing" section, which is the only place wall-clock
values appear.
"""

from __future__ import annotations

import json
from typing import Optional

from almg import __version__
from almg.core import CheckReport
from almg.kernels import ACTIVE


def _plain(value):
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)


def entry_for(report: CheckReport) -> dict:
    return {
        "name": report.name,
        "passed": report.passed,
        "checked": report.checked_count,
        "skipped": report.skipped_count,
        "witness_total": report.witness_total,
        "witnesses": _plain(report.witnesses),
        "extra": _plain(report.extra),
    }


def build_document(command: str, input_desc: dict, entries, timing: dict,
                   sections: Optional[dict] = None, passed: Optional[bool] = None) -> dict:
    doc = {
        "tool": {"name": "almg", "version": __version__, "kernel": ACTIVE},
        "command": command,
        "input": _plain(input_desc),
        "entries": [entry_for(e) if isinstance(e, CheckReport) else _plain(e)
                    for e in entries],
        "timing": timing,
    }
    if sections:
        for key, value in sections.items():
            doc[key] = _plain(value)
    if passed is not None:
        doc["summary"] = {"passed": passed, "exit_code": 0 if passed else 1}
    return doc


def dumps_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def render_text(doc: dict) -> str:
    lines = []
    inp = doc.get("input", {})
    desc = inp.get("path") or inp.get("descriptor") or ""
    lines.append(f"almg {doc['command']} {desc}".rstrip())
    for key in ("classification", "flags", "result"):
        if key in doc:
            pairs = ", ".join(f"{k}={v}" for k, v in doc[key].items())
            lines.append(f"{key}: {pairs}")
    for entry in doc.get("entries", []):
        if "name" not in entry:
            continue
        state = "pass" if entry["passed"] else f"FAIL ({entry['witness_total']})"
        skip = f", skipped {entry['skipped']}" if entry.get("skipped") else ""
        lines.append(f"  {entry['name']}: {state} [checked {entry['checked']}{skip}]")
        for w in entry.get("witnesses", [])[:8]:
            lines.append(f"    witness {tuple(w)}")
        for k, v in entry.get("extra", {}).items():
            lines.append(f"    {k}: {v}")
    if "summary" in doc:
        lines.append("summary: " + ("PASS" if doc["summary"]["passed"] else "FAIL"))
    return "\n".join(lines) + "\n"
