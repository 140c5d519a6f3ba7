"""
LCP instances and solutions.

LCP(q, A): find w, z >= 0 with w - Az = q and w_i z_i = 0 for every i.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import DimensionMismatch, InvalidSolution
from ..linalg import Matrix, Vector, vector


@dataclass(frozen=True)
class LCPInstance:
    A: Matrix
    q: Vector

    def __post_init__(self):
        if len(self.q) != self.A.n:
            raise DimensionMismatch(f"q has {len(self.q)} entries for a matrix of order {self.A.n}")

    @property
    def n(self) -> int:
        return self.A.n

    def w_of(self, z: Sequence[Fraction]) -> Vector:
        """w = q + Az."""
        return tuple(qi + ai for qi, ai in zip(self.q, self.A.apply(z)))


@dataclass(frozen=True)
class Solution:
    w: Vector
    z: Vector


def psi(A: Matrix, z: Sequence[Fraction]) -> Vector:
    """Hadamard product z * (Az)."""
    return tuple(zi * ai for zi, ai in zip(z, A.apply(z)))


def f_map(A: Matrix, z: Sequence[Fraction]) -> Vector:
    """f_A(z) = z+ - A z-, with z+ = max(0, z) and z- = max(0, -z) componentwise."""
    if len(z) != A.n:
        raise DimensionMismatch(f"vector of length {len(z)} for a matrix of order {A.n}")
    plus = tuple(max(Fraction(0), Fraction(x)) for x in z)
    minus = tuple(max(Fraction(0), -Fraction(x)) for x in z)
    return tuple(p - a for p, a in zip(plus, A.apply(minus)))


def inversion_vector(solution: Solution) -> Vector:
    """
    u with f_A(u) = q for a solution (w, z).

    u_i = w_i where z_i = 0 (including w_i = z_i = 0) and u_i = -z_i otherwise.
    """
    return tuple(wi if zi == 0 else -zi for wi, zi in zip(solution.w, solution.z))


def solution_violations(inst: LCPInstance, w: Sequence[Fraction], z: Sequence[Fraction]) -> list:
    """Every way (w, z) fails to solve inst; empty for a valid solution."""
    if len(w) != inst.n or len(z) != inst.n:
        return [f"expected vectors of length {inst.n}, got w:{len(w)} z:{len(z)}"]
    problems = []
    expected = inst.w_of(z)
    for i in range(inst.n):
        label = i + 1
        if w[i] != expected[i]:
            problems.append(f"w_{label} = {w[i]} but (q + Az)_{label} = {expected[i]}")
        if w[i] < 0:
            problems.append(f"w_{label} = {w[i]} < 0")
        if z[i] < 0:
            problems.append(f"z_{label} = {z[i]} < 0")
        if w[i] * z[i] != 0:
            problems.append(f"w_{label} z_{label} = {w[i] * z[i]} != 0")
    return problems


def verify_solution(inst: LCPInstance, w: Sequence[Fraction], z: Sequence[Fraction]) -> Solution:
    """
    Re-verifies a candidate solution exactly.

    Returns:
        Solution: The verified pair.

    Raises:
        InvalidSolution: Listing every violated condition.
    """
    problems = solution_violations(inst, w, z)
    if problems:
        raise InvalidSolution('not a solution of LCP(q, A): ' + '; '.join(problems))
    return Solution(vector(w), vector(z))


def solution_from_z(inst: LCPInstance, z: Sequence[Fraction]) -> Solution:
    """Completes z with w = q + Az and verifies the pair."""
    return verify_solution(inst, inst.w_of(z), z)
