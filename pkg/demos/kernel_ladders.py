"""Kernel ladders and block diagonalization.

For each eigenvalue, the kernels of (A - lambda*I)^k grow strictly until
they stabilize; the stabilized kernel is the generalized eigenspace.
Concatenating those bases gives a change of basis to block diagonal form,
one block per eigenvalue, sized by its multiplicity.
"""

from jordanform import (
    block_diagonalize,
    generate_case,
    parse_structure,
    spectrum,
    stage_ladder,
)
from jordanform.cli import pretty_matrix

# A 4x4 with a size-2 nilpotent coupling at eigenvalue 0 and two simple
# eigenvalues, conjugated by a seeded integer transform.
A, _ = generate_case(parse_structure("0:2;1:1;2:1"), seed=12, entry_bound=3)

print("A:")
print(pretty_matrix(A))
print()

for entry in spectrum(A).entries:
    ladder = stage_ladder(A, entry.eigenvalue)
    print(
        f"lambda = {entry.eigenvalue}: kernel dimensions {ladder.dims()} "
        f"(stabilizes at stage {ladder.max_stage}, multiplicity {entry.multiplicity})"
    )
    for k, basis in enumerate(ladder.stage_bases, start=1):
        vectors = ["(" + ", ".join(map(str, v.column_entries())) + ")" for v in basis.vectors]
        print(f"  stage {k}: {' '.join(vectors)}")
print()

decomposition = block_diagonalize(A)
print("M = V^-1 A V (zero outside the diagonal blocks):")
print(pretty_matrix(decomposition.M))
print()
print("block layout:", ", ".join(f"{b.eigenvalue} size {b.size}" for b in decomposition.blocks))

assert A * decomposition.V == decomposition.V * decomposition.M
print("checked exactly: A*V == V*M")
