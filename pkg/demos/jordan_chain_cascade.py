"""Build Jordan chains by cascading down the kernel ladder.

A chain starts at a generalized eigenvector of the highest stage and is
extended downward by multiplying with (A - lambda*I) until it reaches an
eigenvector.  Written as columns of V, each chain contributes one Jordan
block: lambda on the diagonal, 1s on the superdiagonal.
"""

from jordanform import (
    ExactMatrix,
    jordan_chains,
    jordan_decomposition,
    shift_by,
    spectrum,
    stage_ladder,
)
from jordanform.cli import pretty_matrix

A = ExactMatrix.from_rows([[2, 1, 1], [-4, 5, 4], [1, 0, 2]])
entry = spectrum(A).entries[0]
lam = entry.eigenvalue
print(f"A has the single eigenvalue {lam} with multiplicity {entry.multiplicity}")
print()

ladder = stage_ladder(A, lam)
print(f"kernel dimensions of (A - {lam}I)^k: {ladder.dims()}")
print()

(chain,) = jordan_chains(A, ladder)
shifted = shift_by(A, lam)
print(f"one chain of length {chain.length}, from stage {chain.length} down to 1:")
for k in range(chain.length, 0, -1):
    v = chain.vectors[k - 1]
    print(f"  v{k} = ({', '.join(map(str, v.column_entries()))})")
assert (shifted * chain.vectors[0]).is_zero()
for k in range(1, chain.length):
    assert shifted * chain.vectors[k] == chain.vectors[k - 1]
print("checked exactly: (A - lambda I) v_k == v_(k-1) and v_1 is an eigenvector")
print()

decomposition = jordan_decomposition(A)
print("V (chain vectors as columns, ascending stage):")
print(pretty_matrix(decomposition.V))
print()
print("J = V^-1 A V:")
print(pretty_matrix(decomposition.M))
assert A * decomposition.V == decomposition.V * decomposition.M
