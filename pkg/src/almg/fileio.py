"""Line-oriented text format for algebra tables.

Layout::

    almg v1
    size 3
    zero 0
    table add
    0 1 2
    1 2 2
    2 2 2
    table join
    ...

Entries are decimal element indices or ``?`` for an undefined cell
(windowed algebras only).  ``#`` starts a comment; blank lines are
ignored.  Parsing is strict: wrong row or column counts, out-of-range
entries, and missing or duplicated tables are errors carrying the
offending line number.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

from almg.core import OPS, FiniteAlgebra, PartialAlgebra

HEADER = "almg v1"


class AlgebraFormatError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def loads(text: str) -> Union[FiniteAlgebra, PartialAlgebra]:
    lines = []
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((no, body))
    if not lines:
        raise AlgebraFormatError("empty file", 1)

    pos = 0
    no, body = lines[pos]
    if body != HEADER:
        raise AlgebraFormatError(f"expected header {HEADER!r}, got {body!r}", no)
    pos += 1

    def next_line(what):
        nonlocal pos
        if pos >= len(lines):
            last = lines[-1][0]
            raise AlgebraFormatError(f"unexpected end of file, expected {what}", last + 1)
        item = lines[pos]
        pos += 1
        return item

    no, body = next_line("size directive")
    parts = body.split()
    if len(parts) != 2 or parts[0] != "size":
        raise AlgebraFormatError(f"expected 'size n', got {body!r}", no)
    try:
        size = int(parts[1])
    except ValueError:
        raise AlgebraFormatError(f"size is not an integer: {parts[1]!r}", no) from None
    if size < 1:
        raise AlgebraFormatError(f"size must be positive, got {size}", no)

    no, body = next_line("zero directive")
    parts = body.split()
    if len(parts) != 2 or parts[0] != "zero":
        raise AlgebraFormatError(f"expected 'zero k', got {body!r}", no)
    try:
        zero = int(parts[1])
    except ValueError:
        raise AlgebraFormatError(f"zero is not an integer: {parts[1]!r}", no) from None
    if not 0 <= zero < size:
        raise AlgebraFormatError(f"zero {zero} not in [0, {size})", no)

    tables = {}
    partial = False
    while pos < len(lines):
        no, body = next_line("table block")
        parts = body.split()
        if len(parts) != 2 or parts[0] != "table":
            raise AlgebraFormatError(f"expected 'table <op>', got {body!r}", no)
        op = parts[1]
        if op not in OPS:
            raise AlgebraFormatError(f"unknown table {op!r}, expected one of {', '.join(OPS)}", no)
        if op in tables:
            raise AlgebraFormatError(f"duplicate table {op!r}", no)
        rows = []
        for _ in range(size):
            rno, rbody = next_line(f"row {len(rows)} of table {op}")
            entries = rbody.split()
            if entries and entries[0] in ("table", "size", "zero") and len(entries) == 2:
                raise AlgebraFormatError(
                    f"table {op} ended early: expected {size} rows, found {len(rows)}", rno)
            if len(entries) != size:
                raise AlgebraFormatError(
                    f"table {op} row {len(rows)}: expected {size} entries, got {len(entries)}", rno)
            row = []
            for ent in entries:
                if ent == "?":
                    row.append(None)
                    partial = True
                    continue
                try:
                    v = int(ent)
                except ValueError:
                    raise AlgebraFormatError(f"bad entry {ent!r}", rno) from None
                if not 0 <= v < size:
                    raise AlgebraFormatError(f"entry {v} not in [0, {size})", rno)
                row.append(v)
            rows.append(row)
        tables[op] = rows

    missing = [op for op in OPS if op not in tables]
    if missing:
        last = lines[-1][0]
        raise AlgebraFormatError(f"missing tables: {', '.join(missing)}", last + 1)

    cls = PartialAlgebra if partial else FiniteAlgebra
    return cls(size, zero, tables["add"], tables["join"], tables["meet"], tables["star"])


def dumps(alg) -> str:
    out = [HEADER, f"size {alg.size}", f"zero {alg.zero}"]
    for op in OPS:
        out.append(f"table {op}")
        for row in alg.table(op):
            out.append(" ".join("?" if v is None else str(v) for v in row))
    return "\n".join(out) + "\n"


def load(path) -> Union[FiniteAlgebra, PartialAlgebra]:
    return loads(Path(path).read_text(encoding="utf-8"))


def dump(alg, path) -> None:
    Path(path).write_text(dumps(alg), encoding="utf-8")
