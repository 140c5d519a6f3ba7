"""
Complete enumeration of SOL(q, A) by complementary support.

For a support σ the piece P_σ is the polyhedron

    z_σ >= 0,  A_σσ z_σ = -q_σ,  w_σ̄ = q_σ̄ + A_σ̄σ z_σ >= 0,  z_σ̄ = 0,

and SOL(q, A) is the union of the P_σ. Each nonempty piece is described by
its lexicographically smallest vertex and the edge directions leaving it. A piece lying
inside another piece is dropped, so every solution is reported on the
inclusion-minimal description that still covers it.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from ..config import check_enumeration_cap
from ..constants import METHOD_AUTO, METHOD_ENUMERATE, METHOD_LEMKE, REL_EQ, REL_GE, REL_LE, SOLVE_METHODS
from ..linalg import (
    IndexSet,
    LinearConstraint,
    Vector,
    embed,
    lp_feasible,
    lp_maximize,
    mat_vec,
    null_space_basis,
    rank,
    solve_linear,
    subsets,
)
from ..linalg.simplex import STATUS_OPTIMAL
from ..linalg.types import dot, is_zero_vector, primitive
from .instance import LCPInstance, Solution, solution_from_z, solution_violations
from .lemke import RayTermination, lemke_solve


@dataclass(frozen=True)
class SolutionPiece:
    """
    One complementary-support piece of SOL(q, A).

    particular is a vertex of the piece. Every direction in ray_basis is
    supported on support, satisfies A_σσ d = 0 and leads along an edge, so
    particular + t d stays in the piece for small t >= 0. A piece with a
    single vertex is exactly particular + cone(ray_basis).
    fixed_z / fixed_w list the coordinates that vanish on the whole piece.
    """
    support: IndexSet
    particular: Solution
    ray_basis: List[Vector]
    w_constant: bool
    fixed_z: IndexSet
    fixed_w: IndexSet
    instance: Optional[LCPInstance] = field(repr=False, compare=False, default=None)

    @property
    def dimension(self) -> int:
        """Dimension of the piece: the rank of its edge directions."""
        if not self.ray_basis:
            return 0
        return rank([list(d) for d in self.ray_basis], len(self.ray_basis[0]))

    def contains(self, z: Sequence[Fraction]) -> bool:
        """Exact membership of z (with w = q + Az) in this piece."""
        if any(z[i] != 0 for i in self.support.complement()):
            return False
        w = self.instance.w_of(z)
        if solution_violations(self.instance, w, z):
            return False
        return all(w[i] == 0 for i in self.support)


@dataclass(frozen=True)
class WSolutionSet:
    """Either the finite list of distinct w-solutions or a piece along which w varies."""
    finite: Optional[List[Vector]] = None
    infinite_witness: Optional[SolutionPiece] = None

    @property
    def is_finite(self) -> bool:
        return self.infinite_witness is None


@dataclass(frozen=True)
class SolveOutcome:
    method: str
    solution: Optional[Solution] = None
    pieces: List[SolutionPiece] = field(default_factory=list)
    ray_termination: Optional[RayTermination] = None

    @property
    def solvable(self) -> bool:
        return self.solution is not None or bool(self.pieces)


def _piece_constraints(inst: LCPInstance, sigma: IndexSet) -> List[LinearConstraint]:
    """P_σ over the nonnegative variables z_σ."""
    constraints = []
    for i in sigma:
        constraints.append(LinearConstraint(tuple(inst.A.block([i], sigma)[0]), REL_EQ, -inst.q[i]))
    for j in sigma.complement():
        constraints.append(LinearConstraint(tuple(inst.A.block([j], sigma)[0]), REL_GE, -inst.q[j]))
    return constraints


def _gauges(inst: LCPInstance, sigma: IndexSet) -> List[Tuple[str, int, Vector, Fraction]]:
    """The coordinates that must stay >= 0 on P_σ, as (kind, index, coefficients, offset)."""
    size = len(sigma)
    gauges = [
        ('z', i, tuple(Fraction(int(k == pos)) for k in range(size)), Fraction(0))
        for pos, i in enumerate(sigma)
    ]
    gauges += [
        ('w', j, tuple(inst.A.block([j], sigma)[0]), inst.q[j])
        for j in sigma.complement()
    ]
    return gauges


def _implicit_equalities(
    constraints: List[LinearConstraint],
    gauges: List[Tuple[str, int, Vector, Fraction]],
) -> List[Tuple[str, int, Vector, Fraction]]:
    """
    The gauges vanishing on all of P_σ.

    Each gauge g is maximized subject to g <= 1; an optimum of 0 means g is an
    implicit equality. An infeasible capped problem means g > 1 on the whole piece.
    """
    implicit = []
    for gauge in gauges:
        _, _, coefficients, offset = gauge
        cap = LinearConstraint(coefficients, REL_LE, Fraction(1) - offset)
        optimum = lp_maximize(constraints + [cap], coefficients, nonnegative=True)
        if optimum.status == STATUS_OPTIMAL and optimum.value + offset == 0:
            implicit.append(gauge)
    return implicit


def _lexmin_vertex(constraints: List[LinearConstraint], size: int) -> Vector:
    """
    The lexicographically smallest point of a nonempty P_σ.

    z_1 is minimized and pinned, then z_2, and so on; P_σ lies in the
    nonnegative orthant, so every step is bounded and the result is a vertex.
    """
    pinned = list(constraints)
    point: Vector = tuple(Fraction(0) for _ in range(size))
    for k in range(size):
        unit = tuple(Fraction(int(i == k)) for i in range(size))
        optimum = lp_maximize(pinned, tuple(-x for x in unit), nonnegative=True)
        point = optimum.point
        pinned.append(LinearConstraint(unit, REL_EQ, point[k]))
    return point


def _edge_directions(principal: List[List[Fraction]], tight: List[Vector], size: int) -> List[Vector]:
    """
    Extreme rays of the cone {d : A_σσ d = 0, g . d >= 0 for every tight gauge g}.

    Each ray is cut out by the equalities together with a set of tight gauges
    that leaves a one-dimensional kernel. Rays are primitive and listed once.
    """
    equalities = [list(row) for row in principal]
    needed = size - 1 - rank(equalities, size)
    if needed < 0:
        return []
    rays: List[Vector] = []
    for chosen in combinations(tight, needed):
        kernel = null_space_basis(equalities + [list(g) for g in chosen], size)
        if len(kernel) != 1:
            continue
        for candidate in (kernel[0], tuple(-x for x in kernel[0])):
            if all(dot(g, candidate) >= 0 for g in tight):
                ray = primitive(candidate)
                if ray not in rays:
                    rays.append(ray)
    return rays


def _gauge_value(gauge: Tuple[str, int, Vector, Fraction], point: Vector) -> Fraction:
    _, _, coefficients, offset = gauge
    return dot(coefficients, point) + offset


def _piece(inst: LCPInstance, sigma: IndexSet) -> Optional[SolutionPiece]:
    if not sigma:
        if any(qj < 0 for qj in inst.q):
            return None
        z = tuple(Fraction(0) for _ in range(inst.n))
        fixed_w = IndexSet.of((j for j in range(inst.n) if inst.q[j] == 0), inst.n)
        return SolutionPiece(sigma, solution_from_z(inst, z), [], True, sigma, fixed_w, inst)

    principal = inst.A.principal(sigma)
    linear = solve_linear(principal, [-inst.q[i] for i in sigma])
    if not linear.consistent:
        return None

    gauges = _gauges(inst, sigma)
    if linear.unique:
        point = linear.particular
        if any(_gauge_value(g, point) < 0 for g in gauges):
            return None
        implicit = [g for g in gauges if _gauge_value(g, point) == 0]
    else:
        constraints = _piece_constraints(inst, sigma)
        feasible = lp_feasible(constraints, len(sigma), nonnegative=True)
        if not feasible.feasible:
            return None
        implicit = _implicit_equalities(constraints, gauges)
        point = _lexmin_vertex(constraints, len(sigma))

    fixed_z = IndexSet.of((index for kind, index, _, _ in implicit if kind == 'z'), inst.n)
    fixed_w = IndexSet.of((index for kind, index, _, _ in implicit if kind == 'w'), inst.n)

    tight = [g[2] for g in gauges if _gauge_value(g, point) == 0]
    directions = _edge_directions(principal, tight, len(sigma))
    columns = inst.A.columns(sigma)
    w_constant = all(is_zero_vector(mat_vec(columns, d)) for d in directions)

    return SolutionPiece(
        support=sigma,
        particular=solution_from_z(inst, embed(point, sigma)),
        ray_basis=[embed(d, sigma) for d in directions],
        w_constant=w_constant,
        fixed_z=fixed_z,
        fixed_w=fixed_w,
        instance=inst,
    )


def _inside(inner: SolutionPiece, outer: SolutionPiece) -> bool:
    """P_inner ⊆ P_outer: inner's z vanishes off outer's support and inner's w vanishes on it."""
    inner_set, outer_set = set(inner.support), set(outer.support)
    return (inner_set - outer_set) <= set(inner.fixed_z) and (outer_set - inner_set) <= set(inner.fixed_w)


def enumerate_solutions(inst: LCPInstance) -> List[SolutionPiece]:
    """
    Every piece of SOL(q, A), with contained pieces removed.

    Supports are visited by cardinality, then lexicographically; among equal
    pieces the first visited (smallest support) is kept.

    Raises:
        CapExceeded: If n is above the enumeration cap.
    """
    check_enumeration_cap(inst.n)
    logging.info(f"Enumerating LCP solutions over {2 ** inst.n} supports (n = {inst.n})")
    candidates = [piece for piece in (_piece(inst, s) for s in subsets(inst.n, include_empty=True)) if piece]

    kept = []
    for k, piece in enumerate(candidates):
        dominated = False
        for m, other in enumerate(candidates):
            if m == k or not _inside(piece, other):
                continue
            # equal pieces: keep the earlier one
            if not _inside(other, piece) or m < k:
                dominated = True
                break
        if not dominated:
            kept.append(piece)

    logging.info(f"Found {len(kept)} solution piece(s) from {len(candidates)} feasible supports")
    return kept


def w_solution_set(inst: LCPInstance, pieces: Optional[List[SolutionPiece]] = None) -> WSolutionSet:
    """
    The set of w-parts of all solutions.

    Returns:
        WSolutionSet: The distinct w vectors in piece order when every piece has
        constant w, otherwise the first piece along which w varies.
    """
    pieces = enumerate_solutions(inst) if pieces is None else pieces
    varying = next((piece for piece in pieces if not piece.w_constant), None)
    if varying is not None:
        return WSolutionSet(infinite_witness=varying)
    distinct: List[Vector] = []
    for piece in pieces:
        if piece.particular.w not in distinct:
            distinct.append(piece.particular.w)
    return WSolutionSet(finite=distinct)


def solve(inst: LCPInstance, method: str = METHOD_AUTO) -> SolveOutcome:
    """
    Solves LCP(q, A) by Lemke's method, by enumeration, or by Lemke with
    enumeration as the fallback on ray termination ('auto').
    """
    if method not in SOLVE_METHODS:
        raise ValueError(f"unknown solve method {method!r}; expected one of {SOLVE_METHODS}")
    if method == METHOD_ENUMERATE:
        return SolveOutcome(METHOD_ENUMERATE, pieces=enumerate_solutions(inst))

    outcome = lemke_solve(inst)
    if isinstance(outcome, Solution):
        return SolveOutcome(METHOD_LEMKE, solution=outcome)
    if method == METHOD_LEMKE:
        return SolveOutcome(METHOD_LEMKE, ray_termination=outcome)

    logging.warning("Falling back to complete enumeration after ray termination")
    return SolveOutcome(METHOD_ENUMERATE, pieces=enumerate_solutions(inst), ray_termination=outcome)
