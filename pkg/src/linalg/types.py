"""
Exact rational matrix, vector and index-set types.

All entries are fractions.Fraction; nothing in this package ever holds a float.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

from ..errors import DimensionMismatch, IndexSetParseError

Rational = Fraction
Vector = Tuple[Fraction, ...]
Scalar = Union[int, Fraction]
Rows = List[List[Fraction]]


def to_rational(value: Union[Scalar, str]) -> Fraction:
    """
    Converts an int, Fraction or rational string to a Fraction.

    Raises:
        TypeError: If value is a float or bool, which would smuggle rounding in.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact rational expected, got {type(value).__name__} {value!r}")
    return Fraction(value)


def vector(values: Iterable[Union[Scalar, str]]) -> Vector:
    return tuple(to_rational(v) for v in values)


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in v)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionMismatch(f"dot product of lengths {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def mat_vec(rows: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> Vector:
    """Row-by-row product; an empty row list gives the empty vector."""
    return tuple(dot(row, v) for row in rows)


def mat_mul(left: Sequence[Sequence[Fraction]], right: Sequence[Sequence[Fraction]], right_cols: int) -> Rows:
    """
    Product of two rectangular blocks given as row lists.

    right_cols is explicit so that blocks with no rows still have a shape.
    """
    inner = len(right)
    product = []
    for row in left:
        if len(row) != inner:
            raise DimensionMismatch(f"cannot multiply a row of length {len(row)} by {inner} rows")
        product.append([
            sum((row[k] * right[k][j] for k in range(inner)), Fraction(0))
            for j in range(right_cols)
        ])
    return product


def primitive(v: Sequence[Fraction]) -> Vector:
    """
    Scales a nonzero vector to the primitive integer vector on its ray.

    Denominators are cleared and the gcd divided out; the direction and
    orientation are kept. The zero vector is returned unchanged.
    """
    if is_zero_vector(v):
        return tuple(Fraction(x) for x in v)
    scale = lcm(*(Fraction(x).denominator for x in v))
    integers = [int(Fraction(x) * scale) for x in v]
    divisor = 0
    for value in integers:
        divisor = gcd(divisor, value)
    return tuple(Fraction(value // divisor) for value in integers)


def orient(v: Sequence[Fraction]) -> Vector:
    """Primitive form with the first nonzero entry positive."""
    p = primitive(v)
    for x in p:
        if x != 0:
            return p if x > 0 else tuple(-y for y in p)
    return p


@dataclass(frozen=True)
class IndexSet:
    """
    A subset of {0..ambient-1}, stored 0-based and sorted.

    Rendered 1-based ("{1,3}") to match the usual notation.
    """
    indices: Tuple[int, ...]
    ambient: int

    def __post_init__(self):
        if self.ambient < 0:
            raise ValueError(f"ambient dimension must be nonnegative, got {self.ambient}")
        if any(i < 0 or i >= self.ambient for i in self.indices):
            raise ValueError(f"index out of range 1..{self.ambient}: {[i + 1 for i in self.indices]}")
        if list(self.indices) != sorted(set(self.indices)):
            raise ValueError(f"indices must be strictly increasing: {[i + 1 for i in self.indices]}")

    @classmethod
    def of(cls, indices: Iterable[int], ambient: int) -> 'IndexSet':
        return cls(tuple(sorted(indices)), ambient)

    @classmethod
    def empty(cls, ambient: int) -> 'IndexSet':
        return cls((), ambient)

    @classmethod
    def parse(cls, text: str, ambient: int) -> 'IndexSet':
        """
        Parses the 1-based comma syntax, e.g. "1,3" or "" for the empty set.

        Raises:
            IndexSetParseError: On non-integer members, duplicates or out-of-range members.
        """
        stripped = text.strip().strip('{}')
        if not stripped:
            return cls.empty(ambient)
        try:
            members = [int(part) - 1 for part in stripped.split(',')]
        except ValueError as e:
            raise IndexSetParseError(f"index set must be comma separated integers, got {text!r}") from e
        if len(set(members)) != len(members):
            raise IndexSetParseError(f"duplicate index in {text!r}")
        try:
            return cls.of(members, ambient)
        except ValueError as e:
            raise IndexSetParseError(f"bad index set {text!r}: {e}") from e

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __contains__(self, index: object) -> bool:
        return index in self.indices

    def complement(self) -> 'IndexSet':
        return IndexSet(tuple(i for i in range(self.ambient) if i not in self.indices), self.ambient)

    def one_based(self) -> List[int]:
        return [i + 1 for i in self.indices]

    def label(self) -> str:
        return '{' + ','.join(str(i) for i in self.one_based()) + '}'

    def __str__(self) -> str:
        return self.label()


def subsets(n: int, include_empty: bool = False) -> Iterator[IndexSet]:
    """All subsets of {0..n-1} by cardinality, then lexicographically."""
    start = 0 if include_empty else 1
    for size in range(start, n + 1):
        for combo in combinations(range(n), size):
            yield IndexSet(combo, n)


def embed(values: Sequence[Fraction], support: IndexSet) -> Vector:
    """Places values on the positions of support, zeros elsewhere."""
    if len(values) != len(support):
        raise DimensionMismatch(f"{len(values)} values for a support of size {len(support)}")
    full = [Fraction(0)] * support.ambient
    for value, index in zip(values, support):
        full[index] = Fraction(value)
    return tuple(full)


def restrict(v: Sequence[Fraction], support: IndexSet) -> Vector:
    return tuple(v[i] for i in support)


@dataclass(frozen=True)
class Matrix:
    """Square matrix of exact rationals."""
    rows: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if n < 1:
            raise DimensionMismatch("a matrix needs dimension at least 1")
        if any(len(row) != n for row in self.rows):
            raise DimensionMismatch(f"matrix must be square, got row lengths {[len(r) for r in self.rows]}")
        if any(not isinstance(x, Fraction) for row in self.rows for x in row):
            raise TypeError("matrix entries must be Fractions; build with Matrix.from_rows")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Union[Scalar, str]]]) -> 'Matrix':
        return cls(tuple(vector(row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> 'Matrix':
        return cls(tuple(
            tuple(Fraction(1) if i == j else Fraction(0) for j in range(n))
            for i in range(n)
        ))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, position: Tuple[int, int]) -> Fraction:
        i, j = position
        return self.rows[i][j]

    def block(self, row_set: Union[IndexSet, Sequence[int]], col_set: Union[IndexSet, Sequence[int]]) -> Rows:
        """The submatrix A_{row_set, col_set} as a list of rows."""
        return [[self.rows[i][j] for j in col_set] for i in row_set]

    def principal(self, alpha: IndexSet) -> Rows:
        return self.block(alpha, alpha)

    def columns(self, sigma: IndexSet) -> Rows:
        """A[:, sigma]."""
        return self.block(range(self.n), sigma)

    def apply(self, z: Sequence[Fraction]) -> Vector:
        if len(z) != self.n:
            raise DimensionMismatch(f"vector of length {len(z)} for a matrix of order {self.n}")
        return mat_vec(self.rows, z)

    def permuted(self, permutation: Sequence[int]) -> 'Matrix':
        """P A P^T where (P z)_i = z_{permutation[i]}."""
        if sorted(permutation) != list(range(self.n)):
            raise ValueError(f"not a permutation of 0..{self.n - 1}: {list(permutation)}")
        return Matrix(tuple(
            tuple(self.rows[permutation[i]][permutation[j]] for j in range(self.n))
            for i in range(self.n)
        ))

    def scaled(self, diagonal: Sequence[Fraction]) -> 'Matrix':
        """D A D with D = diag(diagonal)."""
        if len(diagonal) != self.n:
            raise DimensionMismatch(f"{len(diagonal)} diagonal entries for order {self.n}")
        return Matrix(tuple(
            tuple(diagonal[i] * self.rows[i][j] * diagonal[j] for j in range(self.n))
            for i in range(self.n)
        ))

    def is_zero_on(self, z: Sequence[Fraction]) -> bool:
        return is_zero_vector(self.apply(z))

