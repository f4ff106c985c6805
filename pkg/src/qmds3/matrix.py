"""Two-row generator matrices and their line-oriented text format.

The file format is bit-exact:

    p=<p> r=<r> n=<n> modulus=<c0>,<c1>,...,<c_2r>
    <n space-separated element encodings>   (row 1)
    <n space-separated element encodings>   (row 2)
    case=<tag> repaired=<0|1>               (optional)
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf
from .errors import MatrixParseError


@dataclass(frozen=True)
class GeneratorMatrix:
    """A claimed generator matrix of an [n, 2] code over GF(q^2)."""

    ctx: gf.FieldCtx
    rows: tuple

    def __post_init__(self):
        if len(self.rows) != 2:
            raise ValueError("exactly 2 rows required")
        r1, r2 = self.rows
        if len(r1) != len(r2):
            raise ValueError("rows must have equal length")
        if len(r1) < 2:
            raise ValueError("n must be at least 2")
        for row in self.rows:
            for e in row:
                if not 0 <= e < self.ctx.order:
                    raise ValueError(f"entry {e} outside field of order {self.ctx.order}")
        object.__setattr__(self, "rows", (tuple(r1), tuple(r2)))

    @property
    def n(self):
        return len(self.rows[0])

    def column(self, j):
        return (self.rows[0][j], self.rows[1][j])

    def columns(self):
        return [self.column(j) for j in range(self.n)]


def to_text(m: GeneratorMatrix, case: str | None = None, repaired: bool | None = None) -> str:
    ctx = m.ctx
    lines = [
        f"p={ctx.p} r={ctx.r} n={m.n} modulus={','.join(str(c) for c in ctx.modulus)}",
        " ".join(str(e) for e in m.rows[0]),
        " ".join(str(e) for e in m.rows[1]),
    ]
    if case is not None:
        lines.append(f"case={case} repaired={1 if repaired else 0}")
    return "\n".join(lines) + "\n"


def _parse_int(tok, line_no, col, what):
    try:
        return int(tok)
    except ValueError:
        raise MatrixParseError(line_no, col, f"{what}: not an integer: {tok!r}") from None


def _split_with_cols(line):
    toks = []
    col = 0
    i = 0
    while i < len(line):
        if line[i] == " ":
            i += 1
            continue
        start = i
        while i < len(line) and line[i] != " ":
            i += 1
        toks.append((line[start:i], start + 1))
    return toks


def from_text(text: str):
    """Parse a matrix file; returns (GeneratorMatrix, case, repaired).

    Raises MatrixParseError with the line/column of the first problem.
    """
    lines = text.splitlines()
    if not lines:
        raise MatrixParseError(1, 1, "empty file")

    header = dict()
    for tok, col in _split_with_cols(lines[0]):
        if "=" not in tok:
            raise MatrixParseError(1, col, f"expected key=value, got {tok!r}")
        key, val = tok.split("=", 1)
        header[key] = (val, col)
    for key in ("p", "r", "n", "modulus"):
        if key not in header:
            raise MatrixParseError(1, 1, f"missing header field {key!r}")
    p = _parse_int(header["p"][0], 1, header["p"][1], "p")
    r = _parse_int(header["r"][0], 1, header["r"][1], "r")
    n = _parse_int(header["n"][0], 1, header["n"][1], "n")
    mod_val, mod_col = header["modulus"]
    modulus = tuple(_parse_int(t, 1, mod_col, "modulus") for t in mod_val.split(","))

    ctx = gf.make_field(p, r, allow_even=True)
    if ctx.modulus != modulus:
        raise MatrixParseError(
            1, mod_col, f"modulus {mod_val} does not match the canonical modulus for p={p}, r={r}"
        )

    rows = []
    for line_no in (2, 3):
        if line_no - 1 >= len(lines):
            raise MatrixParseError(line_no, 1, "missing matrix row")
        toks = _split_with_cols(lines[line_no - 1])
        if len(toks) != n:
            raise MatrixParseError(line_no, 1, f"expected {n} entries, found {len(toks)}")
        row = []
        for tok, col in toks:
            e = _parse_int(tok, line_no, col, "entry")
            if not 0 <= e < ctx.order:
                raise MatrixParseError(line_no, col, f"entry {e} outside [0, {ctx.order})")
            row.append(e)
        rows.append(tuple(row))

    case = None
    repaired = False
    if len(lines) > 3 and lines[3].strip():
        trailer = dict()
        for tok, col in _split_with_cols(lines[3]):
            if "=" not in tok:
                raise MatrixParseError(4, col, f"expected key=value, got {tok!r}")
            key, val = tok.split("=", 1)
            trailer[key] = (val, col)
        if "case" in trailer:
            case = trailer["case"][0]
        if "repaired" in trailer:
            val, col = trailer["repaired"]
            if val not in ("0", "1"):
                raise MatrixParseError(4, col, f"repaired must be 0 or 1, got {val!r}")
            repaired = val == "1"

    return GeneratorMatrix(ctx, (rows[0], rows[1])), case, repaired
