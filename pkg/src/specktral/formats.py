"""Text formats for codes and dense functions.

Code file::

    q n k
    <k rows of n field elements>
    + <n field elements>      # optional coset offset

Function file::

    q n
    index re im               # one line per nonzero value; missing indices are 0

Blank lines and lines starting with ``#`` are ignored in both.
"""

from __future__ import annotations

import numpy as np

from specktral.codes import AffineCode, LinearCode, affine, from_generators
from specktral.fourier import DenseFunction


def _lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def read_code(text: str) -> LinearCode | AffineCode:
    lines = _lines(text)
    if not lines:
        raise ValueError("empty code file")
    try:
        q, n, k = (int(a) for a in lines[0].split())
    except ValueError:
        raise ValueError(f"bad header {lines[0]!r}; expected 'q n k'") from None
    body = lines[1:]
    offset = None
    if body and body[-1].startswith("+"):
        offset = [int(a) for a in body[-1][1:].split()]
        body = body[:-1]
    if len(body) != k:
        raise ValueError(f"header says {k} rows, found {len(body)}")
    rows = [[int(a) for a in ln.split()] for ln in body]
    code = from_generators(q, rows, n)
    if offset is not None:
        return affine(code, offset)
    return code


def write_code(c: LinearCode | AffineCode) -> str:
    lin = c.linear if isinstance(c, AffineCode) else c
    out = [f"{lin.q} {lin.n} {lin.k}"]
    out += [" ".join(map(str, row)) for row in lin.gen]
    if isinstance(c, AffineCode) and not c.is_linear:
        out.append("+ " + " ".join(map(str, c.offset)))
    return "\n".join(out) + "\n"


def read_function(text: str) -> DenseFunction:
    lines = _lines(text)
    if not lines:
        raise ValueError("empty function file")
    try:
        q, n = (int(a) for a in lines[0].split())
    except ValueError:
        raise ValueError(f"bad header {lines[0]!r}; expected 'q n'") from None
    entries = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) not in (2, 3):
            raise ValueError(f"bad line {ln!r}; expected 'index re im'")
        entries.append((int(parts[0]), parts[1], parts[2] if len(parts) == 3 else "0"))
    size = q**n
    if any(not 0 <= i < size for i, _, _ in entries):
        raise ValueError(f"index outside [0, {size})")
    try:
        ints = [(i, int(re), int(im)) for i, re, im in entries]
        exact = all(im == 0 for _, _, im in ints)
    except ValueError:
        exact = False
    if exact:
        values = np.zeros(size, dtype=np.int64)
        for i, re, _ in ints:
            values[i] = re
    else:
        values = np.zeros(size, dtype=complex)
        for i, re, im in entries:
            values[i] = complex(float(re), float(im))
    return DenseFunction(q, n, values)


def _fmt(x: float) -> str:
    return f"{x + 0.0:.12g}"  # folds -0.0 into 0.0


def write_function(f: DenseFunction, tol: float = 0.0) -> str:
    out = [f"{f.q} {f.n}"]
    if f.is_exact and f.values.dtype != object:
        for i in np.flatnonzero(f.values):
            out.append(f"{i} {int(f.values[i])} 0")
    else:
        v = f.as_complex()
        for i in np.flatnonzero(np.abs(v) > tol):
            out.append(f"{i} {_fmt(v[i].real)} {_fmt(v[i].imag)}")
    return "\n".join(out) + "\n"
