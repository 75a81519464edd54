"""Dense exact matrices over Q(i) and the elimination toolkit.

Everything here reduces to one primitive: reduced row echelon form with a
fixed pivoting rule (first nonzero entry scanning down the column).  In
exact arithmetic that rule costs nothing in accuracy and makes every
derived basis, and therefore every downstream decomposition,
byte-deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import DependentInput, DimensionMismatch, SingularMatrix, ZeroVector
from .polynomials import Polynomial
from .scalars import ONE, ZERO, GaussianRational, format_scalar, parse_scalar


def _entry(value) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"cannot use {type(value).__name__} as a matrix entry")


class ExactMatrix:
    """An immutable dense matrix of Gaussian rationals.

    Equality is entrywise exact equality.  Arithmetic never rounds; entry
    growth under elimination is accepted (target sizes are small).
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable], cols: Optional[int] = None):
        table = tuple(tuple(_entry(x) for x in row) for row in data)
        object.__setattr__(self, "rows", len(table))
        if table:
            width = len(table[0])
            if any(len(row) != width for row in table):
                raise DimensionMismatch("rows of unequal length")
            if cols is not None and cols != width:
                raise DimensionMismatch("explicit column count does not match data")
        else:
            width = cols or 0
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "_data", table)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "ExactMatrix":
        return cls(rows)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls([[ZERO] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def column(cls, entries: Iterable) -> "ExactMatrix":
        return cls([[x] for x in entries])

    @classmethod
    def basis_vector(cls, n: int, index: int) -> "ExactMatrix":
        return cls.column([ONE if i == index else ZERO for i in range(n)])

    @classmethod
    def hstack(cls, mats: Sequence["ExactMatrix"]) -> "ExactMatrix":
        if not mats:
            raise DimensionMismatch("hstack of an empty sequence")
        rows = mats[0].rows
        if any(m.rows != rows for m in mats):
            raise DimensionMismatch("hstack of matrices with different row counts")
        return cls(
            [[x for m in mats for x in m._data[i]] for i in range(rows)],
            cols=sum(m.cols for m in mats),
        )

    def __getitem__(self, key: Tuple[int, int]) -> GaussianRational:
        i, j = key
        return self._data[i][j]

    def row(self, i: int) -> Tuple[GaussianRational, ...]:
        return self._data[i]

    def col(self, j: int) -> "ExactMatrix":
        return ExactMatrix.column([self._data[i][j] for i in range(self.rows)])

    def columns(self) -> List["ExactMatrix"]:
        return [self.col(j) for j in range(self.cols)]

    def column_entries(self, j: int = 0) -> Tuple[GaussianRational, ...]:
        return tuple(self._data[i][j] for i in range(self.rows))

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "ExactMatrix":
        return ExactMatrix(
            [row[c0:c1] for row in self._data[r0:r1]], cols=c1 - c0
        )

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            [[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def trace(self) -> GaussianRational:
        if self.rows != self.cols:
            raise DimensionMismatch("trace of a non-square matrix")
        total = ZERO
        for i in range(self.rows):
            total = total + self._data[i][i]
        return total

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self._data for x in row)

    def is_upper_triangular(self) -> bool:
        return all(
            self._data[i][j].is_zero()
            for i in range(self.rows)
            for j in range(min(i, self.cols))
        )

    def __add__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix addition with different shapes")
        return ExactMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._data, other._data)
            ],
            cols=self.cols,
        )

    def __sub__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return ExactMatrix([[-x for x in row] for row in self._data], cols=self.cols)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            factor = _entry(other)
            return ExactMatrix(
                [[x * factor for x in row] for row in self._data], cols=self.cols
            )
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        other_t = list(zip(*other._data)) if other._data else []
        out = []
        for row in self._data:
            out_row = []
            for col in range(other.cols):
                acc = ZERO
                column = other_t[col] if other_t else ()
                for a, b in zip(row, column):
                    acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return ExactMatrix(out, cols=other.cols)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self._data == other._data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def entries_str(self) -> List[List[str]]:
        return [[format_scalar(x) for x in row] for row in self._data]

    def __repr__(self):
        return f"ExactMatrix({self.entries_str()!r})"


def shift_by(matrix: ExactMatrix, scalar: GaussianRational) -> ExactMatrix:
    """matrix - scalar * identity."""
    if not matrix.is_square():
        raise DimensionMismatch("shift of a non-square matrix")
    return matrix - ExactMatrix.identity(matrix.rows) * scalar


@dataclass(frozen=True)
class Basis:
    """An ordered, linearly independent family of column vectors.

    Bases produced in this package are canonical: they come out of the RREF
    free-variable construction (or a fixed completion rule), so the same
    subspace always gets byte-identical vectors.
    """

    ambient_dim: int
    vectors: Tuple[ExactMatrix, ...]

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def as_matrix(self) -> ExactMatrix:
        if not self.vectors:
            return ExactMatrix.zeros(self.ambient_dim, 0)
        return ExactMatrix.hstack(self.vectors)

    def contains(self, vector: ExactMatrix) -> bool:
        if not self.vectors:
            return vector.is_zero()
        return solve(self.as_matrix(), vector) is not None


def rref(matrix: ExactMatrix) -> Tuple[ExactMatrix, List[int]]:
    """Reduced row echelon form together with the pivot column indices.

    The pivot in each column is the first nonzero entry scanning downward;
    magnitude pivoting is pointless in exact arithmetic, and the fixed rule
    keeps every derived basis reproducible.
    """
    data = [list(row) for row in (matrix.row(i) for i in range(matrix.rows))]
    pivots: List[int] = []
    pivot_row = 0
    for col in range(matrix.cols):
        if pivot_row == matrix.rows:
            break
        sel = None
        for r in range(pivot_row, matrix.rows):
            if not data[r][col].is_zero():
                sel = r
                break
        if sel is None:
            continue
        data[pivot_row], data[sel] = data[sel], data[pivot_row]
        inv = ONE / data[pivot_row][col]
        data[pivot_row] = [x * inv for x in data[pivot_row]]
        for r in range(matrix.rows):
            if r == pivot_row or data[r][col].is_zero():
                continue
            factor = data[r][col]
            data[r] = [x - factor * y for x, y in zip(data[r], data[pivot_row])]
        pivots.append(col)
        pivot_row += 1
    return ExactMatrix(data, cols=matrix.cols), pivots


def rank(matrix: ExactMatrix) -> int:
    return len(rref(matrix)[1])


def rank_of_columns(columns: Sequence[ExactMatrix]) -> int:
    if not columns:
        return 0
    return rank(ExactMatrix.hstack(list(columns)))


def nullspace_basis(matrix: ExactMatrix) -> Basis:
    """Canonical basis of the kernel, one vector per free column of the RREF.

    For free column f the vector carries 1 at f, 0 at every other free
    column, and the negated RREF entry at each pivot column; vectors are
    ordered by free-column index.
    """
    reduced, pivots = rref(matrix)
    pivot_set = set(pivots)
    vectors = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        entries = [ZERO] * matrix.cols
        entries[free] = ONE
        for k, pivot_col in enumerate(pivots):
            entries[pivot_col] = -reduced[k, free]
        vectors.append(ExactMatrix.column(entries))
    return Basis(matrix.cols, tuple(vectors))


def colspace_basis(matrix: ExactMatrix) -> Basis:
    """Basis of the column space: the original columns at the pivot indices."""
    _, pivots = rref(matrix)
    return Basis(matrix.rows, tuple(matrix.col(j) for j in pivots))


def solve(matrix: ExactMatrix, rhs: ExactMatrix) -> Optional[ExactMatrix]:
    """One exact solution of matrix * x = rhs, or None when inconsistent.

    When the system is underdetermined, all free variables are set to zero,
    which makes the returned representative canonical.
    """
    if rhs.cols != 1 or rhs.rows != matrix.rows:
        raise DimensionMismatch(
            f"solve needs a {matrix.rows}x1 right-hand side, got {rhs.rows}x{rhs.cols}"
        )
    reduced, pivots = rref(ExactMatrix.hstack([matrix, rhs]))
    if matrix.cols in pivots:
        return None
    entries = [ZERO] * matrix.cols
    for k, pivot_col in enumerate(pivots):
        entries[pivot_col] = reduced[k, matrix.cols]
    return ExactMatrix.column(entries)


def inverse(matrix: ExactMatrix) -> ExactMatrix:
    """Exact inverse; raises SingularMatrix when the rank is deficient."""
    if not matrix.is_square():
        raise DimensionMismatch("inverse of a non-square matrix")
    n = matrix.rows
    reduced, pivots = rref(ExactMatrix.hstack([matrix, ExactMatrix.identity(n)]))
    if pivots != list(range(n)):
        raise SingularMatrix(f"matrix of rank {len([p for p in pivots if p < n])} < {n}")
    return reduced.submatrix(0, n, n, 2 * n)


def complete_basis(partial: Basis) -> ExactMatrix:
    """Extend a partial basis to an invertible square matrix.

    The given vectors stay in front; the remaining columns are standard
    basis vectors taken greedily in index order, skipping any that is
    already dependent on the columns collected so far.
    """
    n = partial.ambient_dim
    count = len(partial.vectors)
    if count and rank_of_columns(partial.vectors) < count:
        raise DependentInput("the given vectors are not linearly independent")
    columns = list(partial.vectors)
    current_rank = count
    for index in range(n):
        if len(columns) == n:
            break
        candidate = ExactMatrix.basis_vector(n, index)
        grown = rank_of_columns(columns + [candidate])
        if grown > current_rank:
            columns.append(candidate)
            current_rank = grown
    return ExactMatrix.hstack(columns)


def krylov_annihilator(matrix: ExactMatrix, vector: ExactMatrix) -> Polynomial:
    """Monic polynomial of least degree with P(matrix) * vector = 0.

    Builds vector, A*vector, A^2*vector, ... and stops at the first power
    that is linearly dependent on its predecessors; since the retained
    powers are independent, the solved coefficients are unique and the
    degree is minimal.
    """
    if not matrix.is_square():
        raise DimensionMismatch("krylov_annihilator needs a square matrix")
    if vector.cols != 1 or vector.rows != matrix.rows:
        raise DimensionMismatch("vector shape does not match the matrix")
    if vector.is_zero():
        raise ZeroVector("krylov_annihilator of the zero vector")
    powers = [vector]
    current = vector
    for _ in range(matrix.rows):
        current = matrix * current
        combination = solve(ExactMatrix.hstack(powers), current)
        if combination is not None:
            coefficients = [-combination[k, 0] for k in range(len(powers))]
            coefficients.append(ONE)
            return Polynomial(coefficients)
        powers.append(current)
    raise AssertionError("n+1 Krylov vectors cannot stay independent")
