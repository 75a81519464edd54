"""The decomposition pipeline: triangularization, generalized-eigenspace
block diagonalization, blockwise triangularization, and the Jordan form.

Every stage returns a Decomposition (V, M) with A * V = V * M exactly.  All
choices that the underlying theorems leave open (eigenvector picks, basis
completions, chain seeds, block layout) are pinned to canonical rules, so
identical inputs always produce identical output matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence, Tuple

from .errors import InternalInvariantViolation, NotAnEigenvalue
from .matrices import (
    Basis,
    ExactMatrix,
    complete_basis,
    inverse,
    nullspace_basis,
    rank,
    rank_of_columns,
    shift_by,
)
from .scalars import ONE, ZERO, GaussianRational, format_scalar
from .spectral import spectrum, spectrum_with_ladders


class Block(NamedTuple):
    eigenvalue: GaussianRational
    size: int


@dataclass(frozen=True)
class StageLadder:
    """The nested kernels of (A - lambda*I)^k for k = 1..L.

    stage_bases[k-1] is the canonical basis of the k-th kernel; dimensions
    grow strictly until they stabilize at stage L, whose kernel is the
    generalized eigenspace.
    """

    eigenvalue: GaussianRational
    stage_bases: Tuple[Basis, ...]

    @property
    def max_stage(self) -> int:
        return len(self.stage_bases)

    @property
    def top(self) -> Basis:
        return self.stage_bases[-1]

    def dims(self) -> List[int]:
        return [basis.dimension for basis in self.stage_bases]


@dataclass(frozen=True)
class JordanChain:
    """Vectors v_1, ..., v_len with (A - lambda*I) v_k = v_{k-1} and v_1 an
    eigenvector; v_k has stage exactly k."""

    eigenvalue: GaussianRational
    vectors: Tuple[ExactMatrix, ...]

    @property
    def length(self) -> int:
        return len(self.vectors)


@dataclass(frozen=True)
class Decomposition:
    """A similarity A = V * M * V^-1 with block metadata in layout order."""

    kind: str  # "schur" | "blockdiag" | "blocktri" | "jordan"
    V: ExactMatrix
    M: ExactMatrix
    blocks: Tuple[Block, ...]

    def is_diagonal_form(self) -> bool:
        return all(block.size == 1 for block in self.blocks)


def stage_ladder(matrix: ExactMatrix, eigenvalue: GaussianRational) -> StageLadder:
    """Kernel ladder of (A - lambda*I)^k, stopping at stabilization.

    Powers are built incrementally (one extra multiplication per stage) and
    the iteration never runs past k = n, where the ladder must have
    stabilized.
    """
    shifted = shift_by(matrix, eigenvalue)
    first = nullspace_basis(shifted)
    if first.dimension == 0:
        raise NotAnEigenvalue(
            f"{format_scalar(eigenvalue)} has a trivial eigenspace"
        )
    bases = [first]
    power = shifted
    n = matrix.rows
    while bases[-1].dimension < n and len(bases) < n:
        power = power * shifted
        basis = nullspace_basis(power)
        if basis.dimension == bases[-1].dimension:
            break
        bases.append(basis)
    return StageLadder(eigenvalue, tuple(bases))


def _embed_tail(inner: ExactMatrix) -> ExactMatrix:
    """diag(1, inner)."""
    n = inner.rows + 1
    rows = [[ONE] + [ZERO] * (n - 1)]
    for i in range(inner.rows):
        rows.append([ZERO] + list(inner.row(i)))
    return ExactMatrix(rows)


def _triangularize(
    matrix: ExactMatrix, candidates: Sequence[GaussianRational]
) -> Tuple[ExactMatrix, ExactMatrix]:
    # candidates is a validated superset of this block's spectrum, so the
    # block's eigenvalues are exactly the candidates where A - cI loses
    # rank; no root discovery is needed below the top level.
    n = matrix.rows
    if n == 1:
        return ExactMatrix.identity(1), matrix
    lam = min(
        c for c in candidates if rank(shift_by(matrix, c)) < n
    )
    eigvec = nullspace_basis(shift_by(matrix, lam)).vectors[0]
    base = complete_basis(Basis(n, (eigvec,)))
    conjugated = inverse(base) * matrix * base
    head_row = conjugated.submatrix(0, 1, 1, n)
    tail = conjugated.submatrix(1, n, 1, n)
    inner_v, inner_u = _triangularize(tail, candidates)
    v = base * _embed_tail(inner_v)
    top = [lam] + list((head_row * inner_v).row(0))
    rows = [top]
    for i in range(n - 1):
        rows.append([ZERO] + list(inner_u.row(i)))
    return v, ExactMatrix(rows)


def trigonalize(
    matrix: ExactMatrix,
    eigenvalues: Optional[Sequence[GaussianRational]] = None,
) -> Decomposition:
    """Similarity to an upper triangular matrix by recursive deflation.

    Each step takes the canonically smallest eigenvalue of the current
    block, the first vector of its canonical eigenspace basis, completes it
    to a basis, and recurses on the trailing (n-1) x (n-1) block.
    """
    spect = spectrum(matrix, eigenvalues)
    v, u = _triangularize(matrix, spect.eigenvalues())
    blocks = tuple(Block(u[i, i], 1) for i in range(u.rows))
    return Decomposition("schur", v, u, blocks)


def block_diagonalize(
    matrix: ExactMatrix,
    eigenvalues: Optional[Sequence[GaussianRational]] = None,
) -> Decomposition:
    """Similarity to a block diagonal matrix via generalized eigenspaces.

    V concatenates the canonical top-stage ladder bases in canonical
    eigenvalue order; block j has the size of the j-th multiplicity.
    """
    spect, ladders = spectrum_with_ladders(matrix, eigenvalues)
    columns: List[ExactMatrix] = []
    blocks = []
    for entry, ladder in zip(spect.entries, ladders):
        columns.extend(ladder.top.vectors)
        blocks.append(Block(entry.eigenvalue, entry.multiplicity))
    v = ExactMatrix.hstack(columns)
    m = inverse(v) * matrix * v
    return Decomposition("blockdiag", v, m, tuple(blocks))


def _block_diagonal(mats: Sequence[ExactMatrix]) -> ExactMatrix:
    n = sum(m.rows for m in mats)
    rows = []
    offset = 0
    for m in mats:
        for i in range(m.rows):
            row = [ZERO] * offset + list(m.row(i)) + [ZERO] * (n - offset - m.cols)
            rows.append(row)
        offset += m.cols
    return ExactMatrix(rows)


def blockwise_trigonalize(
    matrix: ExactMatrix,
    eigenvalues: Optional[Sequence[GaussianRational]] = None,
) -> Decomposition:
    """Block diagonalization with each diagonal block triangularized in place.

    Every block's spectrum is its single eigenvalue, so the result is upper
    triangular with a constant diagonal inside each block.
    """
    base = block_diagonalize(matrix, eigenvalues)
    v_parts, u_parts = [], []
    offset = 0
    for block in base.blocks:
        end = offset + block.size
        sub = base.M.submatrix(offset, end, offset, end)
        inner_v, inner_u = _triangularize(sub, [block.eigenvalue])
        v_parts.append(inner_v)
        u_parts.append(inner_u)
        offset = end
    v = base.V * _block_diagonal(v_parts)
    return Decomposition("blocktri", v, _block_diagonal(u_parts), base.blocks)


def jordan_chains(matrix: ExactMatrix, ladder: StageLadder) -> List[JordanChain]:
    """All Jordan chains for one eigenvalue, from its stage ladder.

    Working from the top stage down, every existing chain is first extended
    by one application of (A - lambda*I); then the canonical basis of the
    current stage is scanned in order, and a candidate seeds a new chain
    when it is independent of the previous stage's basis plus all chain
    vectors already placed at this stage.  Chains therefore come out in
    decreasing length, in construction order.
    """
    shifted = shift_by(matrix, ladder.eigenvalue)
    chains_topdown: List[List[ExactMatrix]] = []
    for stage in range(ladder.max_stage, 0, -1):
        used: List[ExactMatrix] = []
        if stage >= 2:
            used.extend(ladder.stage_bases[stage - 2].vectors)
        for chain in chains_topdown:
            extension = shifted * chain[-1]
            chain.append(extension)
            used.append(extension)
        base_rank = rank_of_columns(used)
        for candidate in ladder.stage_bases[stage - 1].vectors:
            grown = rank_of_columns(used + [candidate])
            if grown > base_rank:
                chains_topdown.append([candidate])
                used.append(candidate)
                base_rank = grown
    chains = [
        JordanChain(ladder.eigenvalue, tuple(reversed(vectors)))
        for vectors in chains_topdown
    ]
    dims = ladder.dims()
    if len(chains) != dims[0] or sum(c.length for c in chains) != dims[-1]:
        raise InternalInvariantViolation(
            f"chain counts for {format_scalar(ladder.eigenvalue)} disagree with "
            f"the ladder dimensions {dims}"
        )
    return chains


def jordan_matrix(blocks: Sequence[Block]) -> ExactMatrix:
    """The Jordan matrix with the given blocks, in the given order."""
    n = sum(block.size for block in blocks)
    rows = [[ZERO] * n for _ in range(n)]
    offset = 0
    for block in blocks:
        for k in range(block.size):
            rows[offset + k][offset + k] = block.eigenvalue
            if k + 1 < block.size:
                rows[offset + k][offset + k + 1] = ONE
        offset += block.size
    return ExactMatrix(rows)


def jordan_decomposition(
    matrix: ExactMatrix,
    eigenvalues: Optional[Sequence[GaussianRational]] = None,
) -> Decomposition:
    """The canonical Jordan decomposition A = V * J * V^-1.

    V concatenates, per eigenvalue in canonical order, the Jordan chains in
    decreasing length, each contributing its vectors in ascending stage
    order; J carries one Jordan block per chain.
    """
    spect, ladders = spectrum_with_ladders(matrix, eigenvalues)
    columns: List[ExactMatrix] = []
    blocks: List[Block] = []
    for entry, ladder in zip(spect.entries, ladders):
        for chain in jordan_chains(matrix, ladder):
            columns.extend(chain.vectors)
            blocks.append(Block(entry.eigenvalue, chain.length))
    v = ExactMatrix.hstack(columns)
    return Decomposition("jordan", v, jordan_matrix(blocks), tuple(blocks))


def is_jordan_matrix(matrix: ExactMatrix) -> Tuple[bool, List[Block]]:
    """Whether the matrix is a Jordan matrix, with the implied block list.

    A Jordan matrix is zero except for its diagonal and a superdiagonal of
    entries in {0, 1}, where each 1 couples equal diagonal values.
    """
    if not matrix.is_square():
        return False, []
    n = matrix.rows
    for i in range(n):
        for j in range(n):
            entry = matrix[i, j]
            if i == j:
                continue
            if j == i + 1:
                if entry.is_zero():
                    continue
                if entry != ONE or matrix[i, i] != matrix[j, j]:
                    return False, []
            elif not entry.is_zero():
                return False, []
    blocks: List[Block] = []
    start = 0
    for i in range(n):
        if i + 1 == n or matrix[i, i + 1].is_zero():
            blocks.append(Block(matrix[start, start], i + 1 - start))
            start = i + 1
    return True, blocks
