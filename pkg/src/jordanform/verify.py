"""Structural checks and the round-trip test-case generator.

check_decomposition re-derives every structural claim a decomposition makes
(similarity, invertibility, shape, trace, block counts) from scratch, and
generate_case inverts the pipeline: it conjugates a known Jordan matrix
with an exactly invertible transform, giving an independent oracle for
what the decomposition must recover.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Sequence, Tuple

from .decomp import Block, Decomposition, is_jordan_matrix, jordan_matrix
from .errors import DimensionMismatch, InvalidStructure, ParseError, SingularMatrix
from .matrices import ExactMatrix, inverse, nullspace_basis, rank, shift_by
from .scalars import ZERO, GaussianRational, format_scalar, parse_scalar

# Order decides which eigenvalue each partition group receives during
# enumeration; the imaginary unit exercises the Gaussian arithmetic paths.
PALETTE: Tuple[GaussianRational, ...] = (
    GaussianRational(0),
    GaussianRational(1),
    GaussianRational(2),
    GaussianRational(-1),
    GaussianRational(0, 1),
)


@dataclass(frozen=True)
class JordanStructure:
    """Target block structure: per eigenvalue, a multiset of chain lengths.

    Stored canonically (eigenvalues ascending, lengths descending), so two
    descriptions of the same structure compare equal.
    """

    entries: Tuple[Tuple[GaussianRational, Tuple[int, ...]], ...]

    def __post_init__(self):
        seen = set()
        canonical = []
        if not self.entries:
            raise InvalidStructure("a structure needs at least one eigenvalue")
        for eigenvalue, lengths in self.entries:
            if eigenvalue in seen:
                raise InvalidStructure(
                    f"duplicate eigenvalue {format_scalar(eigenvalue)}"
                )
            seen.add(eigenvalue)
            if not lengths:
                raise InvalidStructure(
                    f"eigenvalue {format_scalar(eigenvalue)} has no chain lengths"
                )
            if any(not isinstance(size, int) or size < 1 for size in lengths):
                raise InvalidStructure("chain lengths must be integers >= 1")
            canonical.append((eigenvalue, tuple(sorted(lengths, reverse=True))))
        canonical.sort(key=lambda item: item[0])
        object.__setattr__(self, "entries", tuple(canonical))

    @property
    def n(self) -> int:
        return sum(sum(lengths) for _, lengths in self.entries)

    def blocks(self) -> Tuple[Block, ...]:
        return tuple(
            Block(eigenvalue, size)
            for eigenvalue, lengths in self.entries
            for size in lengths
        )


def parse_structure(text: str) -> JordanStructure:
    """Parse ``lambda:len(,len)*(;lambda:len(,len)*)*``, e.g. ``0:2,1;1:1``."""
    entries = []
    for part in text.split(";"):
        part = part.strip()
        if ":" not in part:
            raise ParseError(f"malformed structure component {part!r}")
        scalar_text, lengths_text = part.split(":", 1)
        eigenvalue = parse_scalar(scalar_text.strip())
        try:
            lengths = tuple(int(tok) for tok in lengths_text.split(","))
        except ValueError as exc:
            raise ParseError(f"malformed chain lengths in {part!r}") from exc
        entries.append((eigenvalue, lengths))
    return JordanStructure(tuple(entries))


def _elementary_ops(n: int, seed: int, entry_bound: int) -> List[tuple]:
    rng = random.Random(seed)
    ops = []
    if n < 2:
        return ops
    for _ in range(2 * n):
        target = rng.randrange(n)
        source = rng.randrange(n - 1)
        if source >= target:
            source += 1
        if rng.randrange(4) == 0:
            ops.append(("swap", target, source))
        else:
            magnitude = rng.randrange(1, entry_bound + 1)
            if rng.randrange(2):
                magnitude = -magnitude
            ops.append(("add", target, source, magnitude))
    return ops


def _apply_ops(n: int, ops: Sequence[tuple]) -> ExactMatrix:
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for op in ops:
        if op[0] == "swap":
            _, a, b = op
            rows[a], rows[b] = rows[b], rows[a]
        else:
            _, target, source, factor = op
            rows[target] = [
                x + factor * y for x, y in zip(rows[target], rows[source])
            ]
    return ExactMatrix(rows)


def _invert_op(op: tuple) -> tuple:
    if op[0] == "swap":
        return op
    kind, target, source, factor = op
    return (kind, target, source, -factor)


def elementary_conjugator(
    n: int, seed: int, entry_bound: int = 3
) -> Tuple[ExactMatrix, ExactMatrix]:
    """A seeded integer matrix S with its exact inverse.

    S is a product of elementary row operations, so invertibility is
    structural: the inverse is the reversed product of the inverted
    operations, no elimination involved.
    """
    ops = _elementary_ops(n, seed, entry_bound)
    s = _apply_ops(n, ops)
    s_inv = _apply_ops(n, [_invert_op(op) for op in reversed(ops)])
    return s, s_inv


def generate_case(
    structure: JordanStructure, seed: int, entry_bound: int
) -> Tuple[ExactMatrix, ExactMatrix]:
    """Build (A, J_expected) with A = S * J * S^-1, deterministically.

    The returned pair is the round-trip oracle: running the Jordan pipeline
    on A must reproduce J_expected byte for byte.
    """
    if entry_bound < 1:
        raise InvalidStructure("entry_bound must be >= 1")
    expected = jordan_matrix(structure.blocks())
    s, s_inv = elementary_conjugator(structure.n, seed, entry_bound)
    return s * expected * s_inv, expected


def _partitions(total: int) -> List[Tuple[int, ...]]:
    """Partitions of total as descending tuples, in descending lex order."""
    if total == 0:
        return [()]
    out = []

    def grow(remaining: int, bound: int, prefix: Tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(bound, remaining), 0, -1):
            grow(remaining - part, part, prefix + (part,))

    grow(total, total, ())
    return out


def _group_order_key(partition: Tuple[int, ...]) -> tuple:
    return (-sum(partition), tuple(-p for p in partition))


def exhaustive_structures(n: int) -> List[JordanStructure]:
    """Every block structure of total size n, over the fixed palette.

    Structures are enumerated as multisets of partitions (so structures
    equal up to eigenvalue renaming appear once) and the palette values are
    assigned to the groups in canonical group order.
    """
    if not 1 <= n <= 6:
        raise InvalidStructure("exhaustive_structures supports 1 <= n <= 6")
    pool = sorted(
        (p for total in range(1, n + 1) for p in _partitions(total)),
        key=_group_order_key,
    )
    structures = []

    def grow(remaining: int, slots: int, start: int, groups: List[Tuple[int, ...]]):
        if slots == 0:
            if remaining == 0:
                structures.append(
                    JordanStructure(
                        tuple(
                            (PALETTE[j], group) for j, group in enumerate(groups)
                        )
                    )
                )
            return
        for index in range(start, len(pool)):
            candidate = pool[index]
            weight = sum(candidate)
            if weight > remaining - (slots - 1):
                continue
            grow(remaining - weight, slots - 1, index, groups + [candidate])

    for count in range(1, min(n, len(PALETTE)) + 1):
        grow(n, count, 0, [])
    return structures


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class CheckReport:
    results: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def failures(self) -> List[CheckResult]:
        return [result for result in self.results if not result.passed]


def _shape_ok(decomposition: Decomposition) -> Tuple[bool, str]:
    m = decomposition.M
    kind = decomposition.kind
    if kind == "schur":
        if m.is_upper_triangular():
            return True, "upper triangular"
        return False, "nonzero entry below the diagonal"
    mask_ok = True
    offset = 0
    spans = []
    for block in decomposition.blocks:
        spans.append((offset, offset + block.size, block.eigenvalue))
        offset += block.size
    for i in range(m.rows):
        for j in range(m.cols):
            inside = any(r0 <= i < r1 and r0 <= j < r1 for r0, r1, _ in spans)
            if not inside and not m[i, j].is_zero():
                mask_ok = False
    if not mask_ok:
        return False, "nonzero entry outside the declared blocks"
    if kind == "blockdiag":
        return True, "zero outside blocks"
    if kind == "blocktri":
        for r0, r1, lam in spans:
            sub = m.submatrix(r0, r1, r0, r1)
            if not sub.is_upper_triangular():
                return False, "block not upper triangular"
            if any(sub[k, k] != lam for k in range(sub.rows)):
                return False, "block diagonal is not its eigenvalue"
        return True, "triangular blocks with constant diagonals"
    if kind == "jordan":
        ok, implied = is_jordan_matrix(m)
        if not ok:
            return False, "M is not a Jordan matrix"
        if tuple(implied) != decomposition.blocks:
            return False, "declared blocks disagree with M"
        return True, "Jordan matrix matching the declared blocks"
    return False, f"unknown kind {kind!r}"


def _ladder_dims(matrix: ExactMatrix, eigenvalue: GaussianRational) -> List[int]:
    # Recomputed from ranks on purpose: independent of the StageLadder path.
    n = matrix.rows
    shifted = shift_by(matrix, eigenvalue)
    power = shifted
    dims = [n - rank(power)]
    while dims[-1] < n and len(dims) < n:
        power = power * shifted
        dim = n - rank(power)
        if dim == dims[-1]:
            break
        dims.append(dim)
    return dims


def check_decomposition(
    matrix: ExactMatrix, decomposition: Decomposition
) -> CheckReport:
    """Re-verify every structural claim of a decomposition, from scratch.

    Failures never raise; each check contributes exactly one entry to the
    report.
    """
    n = matrix.rows
    results: List[CheckResult] = []
    shapes_match = (
        decomposition.V.rows == n
        and decomposition.V.cols == n
        and decomposition.M.rows == n
        and decomposition.M.cols == n
    )

    if shapes_match:
        similar = matrix * decomposition.V == decomposition.V * decomposition.M
        results.append(
            CheckResult("similarity", similar, "A*V == V*M" if similar else "A*V != V*M")
        )
    else:
        results.append(CheckResult("similarity", False, "V or M has the wrong shape"))

    try:
        inverse(decomposition.V)
        results.append(CheckResult("invertible", True, "V has an exact inverse"))
    except (SingularMatrix, DimensionMismatch) as exc:
        results.append(CheckResult("invertible", False, f"V not invertible: {exc}"))

    total = sum(block.size for block in decomposition.blocks)
    results.append(
        CheckResult(
            "multiplicity-sum",
            total == n,
            f"block sizes sum to {total} of {n}",
        )
    )

    shape_ok, shape_detail = _shape_ok(decomposition) if shapes_match else (
        False,
        "wrong shape",
    )
    results.append(CheckResult("shape", shape_ok, shape_detail))

    weighted = ZERO
    for block in decomposition.blocks:
        weighted = weighted + block.eigenvalue * block.size
    trace_ok = matrix.is_square() and matrix.trace() == weighted
    results.append(
        CheckResult(
            "trace",
            trace_ok,
            "trace(A) equals the multiplicity-weighted eigenvalue sum"
            if trace_ok
            else "trace identity failed",
        )
    )

    if decomposition.kind == "jordan":
        per_eigenvalue: Dict[GaussianRational, List[int]] = {}
        for block in decomposition.blocks:
            per_eigenvalue.setdefault(block.eigenvalue, []).append(block.size)
        counts_ok = True
        detail = "chain counts match the kernel dimensions"
        for eigenvalue, sizes in per_eigenvalue.items():
            geometric = nullspace_basis(shift_by(matrix, eigenvalue)).dimension
            dims = _ladder_dims(matrix, eigenvalue)
            if len(sizes) != geometric or sum(sizes) != dims[-1]:
                counts_ok = False
                detail = (
                    f"{format_scalar(eigenvalue)}: {len(sizes)} blocks / "
                    f"{sum(sizes)} total vs geometric {geometric} / "
                    f"multiplicity {dims[-1]}"
                )
                break
        results.append(CheckResult("chain-counts", counts_ok, detail))

    return CheckReport(tuple(results))
