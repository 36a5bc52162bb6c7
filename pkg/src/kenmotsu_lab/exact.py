"""Exact rational scalars, arrays and Gaussian elimination.

Scalars are :class:`fractions.Fraction` (always reduced, positive
denominator). Tensors are numpy arrays of ``dtype=object`` holding
Fractions, so every numpy contraction stays exact.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import SingularMatrix, StructuralError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"3"``, ``"-4/7"`` or ``"+1/2"`` exactly.

    Floats are refused: they would smuggle rounding into exact data.
    """
    if isinstance(text, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"expected a rational string, got {type(text).__name__}")
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational literal: {text!r}")
    num, _, den = s.partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(q: Fraction | int) -> str:
    return str(Fraction(q))


def fraction_array(data, shape: tuple[int, ...] | None = None) -> np.ndarray:
    """Object array of Fractions built from nested sequences or an array."""
    arr = np.array(data, dtype=object)
    if shape is not None and arr.shape != shape:
        raise StructuralError(f"expected shape {shape}, got {arr.shape}")
    out = np.empty(arr.shape, dtype=object)
    for idx, v in np.ndenumerate(arr):
        out[idx] = parse_rational(v) if isinstance(v, str) else Fraction(v)
    return out


def zeros(shape: int | tuple[int, ...]) -> np.ndarray:
    if isinstance(shape, int):
        shape = (shape,)
    out = np.empty(shape, dtype=object)
    out.fill(Fraction(0))
    return out


def identity(n: int) -> np.ndarray:
    out = zeros((n, n))
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def unit_vector(n: int, i: int) -> np.ndarray:
    out = zeros(n)
    out[i] = Fraction(1)
    return out


def normalize(arr: np.ndarray) -> np.ndarray:
    """Coerce every entry to Fraction (einsum may hand back plain ints)."""
    arr = np.asarray(arr, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for idx, v in np.ndenumerate(arr):
        out[idx] = Fraction(v)
    return out


def einsum(subscripts: str, *operands: np.ndarray) -> np.ndarray:
    return normalize(np.einsum(subscripts, *operands))


def is_zero(arr: np.ndarray) -> bool:
    return all(v == 0 for v in np.asarray(arr, dtype=object).flat)


def exactly_equal(a: np.ndarray, b: np.ndarray) -> bool:
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def first_mismatch(a: np.ndarray, b: np.ndarray) -> tuple[int, ...] | None:
    """Index of the first entry (C order) where ``a`` and ``b`` differ."""
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    if a.shape != b.shape:
        raise StructuralError(f"shape mismatch {a.shape} vs {b.shape}")
    for idx in np.ndindex(a.shape):
        if a[idx] != b[idx]:
            return idx
    return None


def to_strings(arr) -> object:
    """Nested lists of rational strings (JSON-friendly)."""
    if isinstance(arr, (Fraction, int)):
        return format_rational(arr)
    arr = np.asarray(arr, dtype=object)
    if arr.ndim == 0:
        return format_rational(arr.item())
    return [to_strings(x) for x in arr]


# --- Gaussian elimination ---------------------------------------------------


def row_reduce(rows: Sequence[Sequence[Fraction]], n_cols: int | None = None):
    """Reduced row echelon form over Q.

    Returns ``(rref, pivots)`` where ``rref`` is a list of Fraction rows and
    ``pivots`` the pivot column of each nonzero row. Pivot search is
    restricted to the first ``n_cols`` columns (default: all), which lets an
    augmented matrix be reduced without pivoting on its right-hand side.
    """
    m = [[Fraction(v) for v in row] for row in rows]
    if not m:
        return m, []
    width = len(m[0])
    n_cols = width if n_cols is None else n_cols
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        m[r] = [v / p for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(matrix) -> int:
    return len(row_reduce(np.asarray(matrix, dtype=object).tolist())[1])


def solve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve ``a @ x = b`` exactly for square nonsingular ``a``.

    ``b`` may be a vector or a matrix of right-hand sides.
    """
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    n = a.shape[0]
    if a.shape != (n, n):
        raise StructuralError(f"solve needs a square matrix, got {a.shape}")
    vector = b.ndim == 1
    rhs = b.reshape(n, 1) if vector else b
    aug = [list(a[i]) + list(rhs[i]) for i in range(n)]
    red, pivots = row_reduce(aug, n_cols=n)
    if len(pivots) < n:
        raise SingularMatrix("matrix is singular")
    x = fraction_array([row[n:] for row in red])
    return x.reshape(n) if vector else x


def inverse(a: np.ndarray) -> np.ndarray:
    return solve(a, identity(np.asarray(a).shape[0]))


def determinant(a: np.ndarray) -> Fraction:
    a = np.asarray(a, dtype=object)
    n = a.shape[0]
    m = [[Fraction(v) for v in row] for row in a.tolist()]
    det = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        p = m[c][c]
        det *= p
        for i in range(c + 1, n):
            f = m[i][c] / p
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


def leading_principal_minors(a: np.ndarray) -> list[Fraction]:
    a = np.asarray(a, dtype=object)
    return [determinant(a[:k, :k]) for k in range(1, a.shape[0] + 1)]


def solve_affine(columns: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]):
    """Solve the overdetermined system ``sum_c x_c * columns[c] = rhs``.

    Returns ``(rank, particular, null_basis, witness_row)``. ``particular``
    is ``None`` when the system is inconsistent; ``witness_row`` is then the
    first row whose inclusion makes the prefix system inconsistent.
    """
    n_unknowns = len(columns)
    n_rows = len(rhs)
    rows = [[Fraction(columns[c][r]) for c in range(n_unknowns)] + [Fraction(rhs[r])]
            for r in range(n_rows)]
    red, pivots = row_reduce(rows, n_cols=n_unknowns)
    consistent = all(row[-1] == 0 for row in red[len(pivots):])
    coeff_rank = len(pivots)
    if not consistent:
        witness = None
        for k in range(1, n_rows + 1):
            sub, piv = row_reduce(rows[:k], n_cols=n_unknowns)
            if any(row[-1] != 0 for row in sub[len(piv):]):
                witness = k - 1
                break
        return coeff_rank, None, [], witness
    particular = [Fraction(0)] * n_unknowns
    for row, c in zip(red, pivots):
        particular[c] = row[-1]
    free = [c for c in range(n_unknowns) if c not in pivots]
    null_basis = []
    for f in free:
        v = [Fraction(0)] * n_unknowns
        v[f] = Fraction(1)
        for row, c in zip(red, pivots):
            v[c] = -row[f]
        null_basis.append(v)
    return coeff_rank, particular, null_basis, None


def as_vector(values: Iterable, n: int | None = None) -> np.ndarray:
    v = fraction_array(list(values))
    if v.ndim != 1 or (n is not None and v.shape[0] != n):
        raise StructuralError(f"expected a vector of length {n}, got shape {v.shape}")
    return v
