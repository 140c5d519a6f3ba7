"""
Random integer matrices for the verify harness.
"""

import numpy as np

from ..linalg import Matrix


def random_matrix(rng: np.random.Generator, n: int, entry_min: int, entry_max: int) -> Matrix:
    """Uniform integer entries in [entry_min, entry_max]."""
    draws = rng.integers(entry_min, entry_max + 1, size=(n, n))
    return Matrix.from_rows([[int(x) for x in row] for row in draws])


def planted_z_matrix(rng: np.random.Generator, n: int, entry_min: int, entry_max: int) -> Matrix:
    """
    A Z-matrix with a singular principal block on a random support σ.

    Off-diagonal entries are drawn from [min(entry_min, 0), 0]. Each diagonal
    entry of σ is set so that the σ rows of A_σσ sum to zero, which puts the
    all-ones vector in ker A_σσ. With probability one half the block A_σ̄σ is
    zeroed as well, so that vector also has A z = 0 on the whole matrix.

    Args:
        rng (Generator): Source of randomness.
        n (int): Matrix order.
        entry_min (int): Lower bound for entries.
        entry_max (int): Upper bound for the diagonal outside σ.

    Returns:
        Matrix: The drawn matrix.
    """
    low = min(entry_min, 0)
    rows = [[int(x) for x in row] for row in rng.integers(low, 1, size=(n, n))]
    mask = rng.integers(0, 2, size=n)
    sigma = [i for i in range(n) if mask[i]] or [int(rng.integers(0, n))]
    isolate = bool(rng.integers(0, 2))

    for j in range(n):
        if j in sigma:
            rows[j][j] = -sum(rows[j][k] for k in sigma if k != j)
        else:
            rows[j][j] = int(rng.integers(entry_min, entry_max + 1))
            if isolate:
                for k in sigma:
                    rows[j][k] = 0
    return Matrix.from_rows(rows)
