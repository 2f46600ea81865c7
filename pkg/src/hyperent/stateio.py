"""Line-based exact text formats for states, local operations and points.

State file::

    # GHZ on three qubits
    format: 2 2 2
    0 0 0 : 1
    1 1 1 : 1

Omitted entries are zero.  Operation file (parties not listed act as the
identity; party labels are 1-based)::

    party 1
    1 1
    0 0

Point file (one vector per party)::

    party 1
    0 1
    party 2
    0 1

Scalars use the grammar of :func:`hyperent.scalars.parse_scalar`.  ``#``
starts a comment; LF and CRLF are both accepted, LF is emitted.
"""

from __future__ import annotations

from typing import Sequence

from .linalg import Matrix
from .scalars import GaussianRational, ScalarParseError, format_scalar, parse_scalar
from .tensor import FormatError, LocalOperation, Tensor, TensorFormat

__all__ = [
    "StateFileError",
    "parse_state",
    "serialize_state",
    "parse_operation",
    "serialize_operation",
    "parse_point",
    "serialize_point",
]


class StateFileError(ValueError):
    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")


def _lines(text: str):
    for no, raw in enumerate(text.replace("\r\n", "\n").split("\n"), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _scalar(token: str, no: int) -> GaussianRational:
    try:
        return parse_scalar(token)
    except ScalarParseError as exc:
        raise StateFileError(no, f"bad scalar {token!r} ({exc.reason} at position {exc.position})") from None


def _parse_format(line: str, no: int) -> TensorFormat:
    key, sep, rest = line.partition(":")
    if not sep or key.strip() != "format":
        raise StateFileError(no, f"expected 'format: d1 d2 ...', got {line!r}")
    try:
        dims = tuple(int(tok) for tok in rest.split())
        return TensorFormat(dims)
    except ValueError as exc:
        raise StateFileError(no, f"bad dims: {exc}") from None


def parse_state(text: str) -> Tensor:
    lines = list(_lines(text))
    if not lines:
        raise StateFileError(1, "empty state file")
    no, first = lines[0]
    fmt = _parse_format(first, no)
    coeffs: dict[tuple[int, ...], GaussianRational] = {}
    for no, line in lines[1:]:
        left, sep, right = line.partition(":")
        if not sep:
            raise StateFileError(no, f"expected 'i1 ... in : scalar', got {line!r}")
        try:
            idx = tuple(int(tok) for tok in left.split())
        except ValueError:
            raise StateFileError(no, f"unknown key or bad index {left.strip()!r}") from None
        if len(idx) != fmt.n:
            raise StateFileError(no, f"index {idx} has {len(idx)} components, format has {fmt.n}")
        if any(not 0 <= i < d for i, d in zip(idx, fmt.dims)):
            raise StateFileError(no, f"index {idx} out of range for format {fmt}")
        if idx in coeffs:
            raise StateFileError(no, f"duplicate index {idx}")
        tokens = right.split()
        if len(tokens) != 1:
            raise StateFileError(no, f"expected one scalar, got {right.strip()!r}")
        coeffs[idx] = _scalar(tokens[0], no)
    return Tensor.from_dict(fmt, coeffs)


def serialize_state(a: Tensor) -> str:
    out = [f"format: {' '.join(map(str, a.dims))}"]
    for idx, v in a.nonzero_items():
        out.append(f"{' '.join(map(str, idx))} : {format_scalar(v)}")
    return "\n".join(out) + "\n"


def _party_blocks(text: str, n: int):
    """Yield ``(party, header_line, [(line_no, tokens), ...])`` blocks."""
    blocks: list[tuple[int, int, list]] = []
    seen = set()
    for no, line in _lines(text):
        head = line.split()
        if head[0] == "party":
            if len(head) != 2 or not head[1].isdigit():
                raise StateFileError(no, f"expected 'party <j>', got {line!r}")
            j = int(head[1])
            if not 1 <= j <= n:
                raise StateFileError(no, f"party {j} out of range 1..{n}")
            if j in seen:
                raise StateFileError(no, f"duplicate party {j}")
            seen.add(j)
            blocks.append((j, no, []))
        else:
            if not blocks:
                raise StateFileError(no, "data before any 'party <j>' header")
            blocks[-1][2].append((no, head))
    return blocks


def parse_operation(text: str, dims: Sequence[int]) -> LocalOperation:
    dims = tuple(dims)
    mats = [Matrix.identity(d) for d in dims]
    for j, hno, rows in _party_blocks(text, len(dims)):
        d = dims[j - 1]
        if len(rows) != d:
            raise StateFileError(hno, f"party {j} needs {d} rows, got {len(rows)}")
        parsed = []
        for no, tokens in rows:
            if len(tokens) != d:
                raise StateFileError(no, f"party {j} rows need {d} scalars, got {len(tokens)}")
            parsed.append([_scalar(t, no) for t in tokens])
        mats[j - 1] = Matrix(parsed)
    return LocalOperation(mats)


def serialize_operation(op: LocalOperation) -> str:
    out = []
    for j, m in enumerate(op.matrices, 1):
        out.append(f"party {j}")
        for r in range(m.rows):
            out.append(" ".join(format_scalar(v) for v in m.row(r)))
    return "\n".join(out) + "\n"


def parse_point(text: str, dims: Sequence[int]) -> tuple[tuple[GaussianRational, ...], ...]:
    dims = tuple(dims)
    vecs: list = [None] * len(dims)
    last_line = 1
    for j, hno, rows in _party_blocks(text, len(dims)):
        last_line = hno
        d = dims[j - 1]
        if len(rows) != 1 or len(rows[0][1]) != d:
            raise StateFileError(hno, f"party {j} needs one row of {d} scalars")
        no, tokens = rows[0]
        vecs[j - 1] = tuple(_scalar(t, no) for t in tokens)
    missing = [j for j, v in enumerate(vecs, 1) if v is None]
    if missing:
        raise StateFileError(last_line, f"point is missing parties {missing}")
    return tuple(vecs)


def serialize_point(x: Sequence[Sequence]) -> str:
    out = []
    for j, v in enumerate(x, 1):
        out.append(f"party {j}")
        out.append(" ".join(format_scalar(c) for c in v))
    return "\n".join(out) + "\n"


def check_format(a: Tensor, dims: Sequence[int]):
    if a.dims != tuple(dims):
        raise FormatError(f"expected format {'x'.join(map(str, dims))}, got {a.format}")
