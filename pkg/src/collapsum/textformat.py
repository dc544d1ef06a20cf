"""Plain-text matrix documents.

A document is a group header line (``int`` or ``zmod <k>``) followed by one
line per row of whitespace-separated tokens.  A token is a decimal integer or
``*`` for a blank cell.  Empty lines are ignored.  Canonical output separates
tokens with single spaces and ends every line with a newline.
"""

from __future__ import annotations

import re

from .errors import GroupOverflowError, ParseError
from .groups import parse_group
from .matrix import Matrix, PartialMatrix

_INT_RE = re.compile(r"^[+-]?\d+$")


def _tokens(line: str):
    for match in re.finditer(r"\S+", line):
        yield match.start() + 1, match.group()


def parse(text: str, partial: bool = False) -> Matrix | PartialMatrix:
    """Parse a document.  ``*`` tokens are only accepted when ``partial`` is set.

    With ``partial`` the result is always a :class:`PartialMatrix`.
    """
    lines = [(no, line) for no, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if not lines:
        raise ParseError("empty document")
    header_no, header = lines[0]
    try:
        group = parse_group(header)
    except ParseError as exc:
        raise ParseError(str(exc), header_no) from None
    if len(lines) < 2:
        raise ParseError("document has no matrix rows", header_no)

    rows = []
    width = None
    for no, line in lines[1:]:
        row = []
        for col, tok in _tokens(line):
            if tok == "*":
                if not partial:
                    raise ParseError("blank '*' not allowed in a dense matrix", no, col)
                row.append(None)
            elif _INT_RE.match(tok):
                try:
                    row.append(group.coerce(int(tok)))
                except GroupOverflowError as exc:
                    raise GroupOverflowError(f"line {no}, column {col}: {exc}") from None
            else:
                raise ParseError(f"invalid token {tok!r}", no, col)
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(f"ragged row: {len(row)} entries, expected {width}", no)
        rows.append(row)
    return PartialMatrix(group, rows) if partial else Matrix(group, rows)


def parse_dense(text: str) -> Matrix:
    return parse(text, partial=False)


def parse_partial(text: str) -> PartialMatrix:
    return parse(text, partial=True)


def format_row(row) -> str:
    return " ".join("*" if v is None else str(v) for v in row)


def format_inline(a: Matrix | PartialMatrix) -> str:
    """All rows on one line separated by ``; `` (no header)."""
    return "; ".join(format_row(row) for row in a.rows)


def dumps(a: Matrix | PartialMatrix) -> str:
    return a.group.spec() + "\n" + "".join(format_row(row) + "\n" for row in a.rows)
