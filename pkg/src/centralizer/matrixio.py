"""JSON matrix files: ``{"field": {...}, "n": 3, "entries": [["1", "0", ...], ...]}``."""
from __future__ import annotations

import json
import re

from .fields import FieldError, field_from_dict
from .matrix import Matrix
from .parsing import GeneratorMismatchError, ParseError, parse_element


class MatrixFileError(ParseError):
    pass


_STRING = re.compile(r'"(?:[^"\\]|\\.)*"')


def _entry_positions(text: str) -> list[tuple[int, int]]:
    """(line, column) of each string literal after the "entries" key, in order."""
    start = text.find('"entries"')
    if start < 0:
        return []
    out = []
    for m in _STRING.finditer(text, start + len('"entries"')):
        line = text.count("\n", 0, m.start()) + 1
        col = m.start() - (text.rfind("\n", 0, m.start()) + 1) + 1
        out.append((line, col))
    return out


def matrix_from_json_text(text: str, source: str = "<input>") -> Matrix:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFileError(f"{source}: invalid JSON: {exc.msg}", "", exc.colno, exc.lineno) from None
    if not isinstance(data, dict) or not {"field", "entries"} <= data.keys():
        raise MatrixFileError(f"{source}: expected an object with 'field' and 'entries'")
    try:
        field = field_from_dict(data["field"])
    except (KeyError, TypeError, FieldError) as exc:
        raise MatrixFileError(f"{source}: bad field declaration: {exc}") from None
    rows = data["entries"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise MatrixFileError(f"{source}: 'entries' must be a nonempty list of rows")
    n = len(rows)
    for i, r in enumerate(rows):
        if len(r) != n:
            raise MatrixFileError(f"{source}: matrix is not square: {n} rows but row {i + 1} has {len(r)} entries")
    if "n" in data and data["n"] != n:
        raise MatrixFileError(f"{source}: declared n = {data['n']} but entries are {n}x{n}")
    positions = _entry_positions(text)
    out = []
    k = 0
    for i, r in enumerate(rows):
        row = []
        for j, entry in enumerate(r):
            line, col = positions[k] if k < len(positions) else (0, 0)
            k += 1
            if not isinstance(entry, str):
                raise MatrixFileError(f"{source}: entry ({i + 1},{j + 1}) must be a string", "", col, line)
            try:
                row.append(parse_element(entry, field))
            except GeneratorMismatchError as exc:
                raise GeneratorMismatchError(
                    f"{source}: entry ({i + 1},{j + 1}): {exc.message}", entry, col + exc.column, line) from None
            except ParseError as exc:
                raise MatrixFileError(
                    f"{source}: entry ({i + 1},{j + 1}): {exc.message}", entry, col + exc.column, line) from None
        out.append(row)
    return Matrix._raw(field, out)


def read_matrix_file(path: str) -> Matrix:
    with open(path, encoding="utf-8") as fh:
        return matrix_from_json_text(fh.read(), path)


def matrix_to_dict(m: Matrix) -> dict:
    fmt = m.field.format
    return {"field": m.field.to_dict(), "n": m.n, "entries": [[fmt(a) for a in r] for r in m.rows]}


def dump_matrix(m: Matrix) -> str:
    return json.dumps(matrix_to_dict(m), sort_keys=True) + "\n"
