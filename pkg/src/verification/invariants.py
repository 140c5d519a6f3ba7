"""
Invariant suite run by the verify harness.

Each invariant looks at one random trial (a matrix plus a seeded generator)
and answers PASS, SKIP (hypotheses not met) or a counterexample string.
Kinds:

* identity - an algebraic fact about the implementation's own operations
* theorem  - a proven result; a counterexample is a bug
* claim    - a stated result under test; a counterexample is a falsification
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, List, Optional, Tuple

import numpy as np

from ..classes import ClassificationReport, classify, is_column_adequate, is_column_competent, is_Z
from ..classes.report import (
    FLAG_COMPETENT_NONDEGENERATE_IMPLIES_R0,
    FLAG_NONDEGENERATE_IFF_TRIVIAL_KERNELS,
    FLAG_NONDEGENERATE_IMPLIES_COMPETENT,
)
from ..constants import (
    ADEQUACY_MODE_THEOREM,
    CLASS_COLUMN_ADEQUATE,
    CLASS_COLUMN_COMPETENT,
    CLASS_E0,
    CLASS_P,
    CLASS_R,
    CLASS_R0,
    INVARIANT_CLAIM,
    INVARIANT_IDENTITY,
    INVARIANT_THEOREM,
    METHOD_AUTO,
)
from ..degree import is_q_nondegenerate, local_degree, verify_ppt_degree_relation
from ..errors import CompmatError, ModeDisagreement
from ..lcp import LCPInstance, Solution, enumerate_solutions, f_map, inversion_vector, lemke_solve, psi, solve
from ..linalg import (
    IndexSet,
    Matrix,
    Vector,
    det,
    embed,
    null_space_basis,
    ppt,
    rank,
    schur_complement,
    solve_linear,
    subsets,
)
from ..linalg.types import is_zero_vector
from ..utils import format_rows, format_tuple
from .sampling import planted_z_matrix

# (applicable, counterexample)
Outcome = Tuple[bool, Optional[str]]
Sampler = Callable[[np.random.Generator, int, int, int], Matrix]
PASS: Outcome = (True, None)
SKIP: Outcome = (False, None)


def fail(detail: str) -> Outcome:
    return True, detail


@dataclass
class Trial:
    """One random matrix with the generator that drew it; expensive results are cached."""
    A: Matrix
    rng: object
    entry_min: int = -5
    entry_max: int = 5
    competence_samples: int = 2

    def integers(self, size: int) -> Vector:
        return tuple(Fraction(int(x)) for x in self.rng.integers(self.entry_min, self.entry_max + 1, size=size))

    def random_subset(self, nonempty: bool = True) -> IndexSet:
        while True:
            mask = self.rng.integers(0, 2, size=self.A.n)
            subset = IndexSet.of((i for i in range(self.A.n) if mask[i]), self.A.n)
            if subset or not nonempty:
                return subset

    @cached_property
    def report(self) -> ClassificationReport:
        return classify(self.A)

    @cached_property
    def q(self) -> Vector:
        return self.integers(self.A.n)

    @cached_property
    def pieces(self):
        return enumerate_solutions(LCPInstance(self.A, self.q))


@dataclass(frozen=True)
class Invariant:
    name: str
    kind: str
    check: Callable[[Trial], Outcome]
    max_n: Optional[int] = None
    description: str = field(default='', compare=False)
    # per requested trial: how many checks (and in-range draws) the run must reach
    min_checked: float = 0.0
    min_drawn: float = 0.0
    # draws matrices for the extra rounds; uniform random matrices otherwise
    sampler: Optional[Sampler] = field(default=None, compare=False)


def _rank_nullity(trial: Trial) -> Outcome:
    A = trial.A
    sigma = trial.random_subset()
    for block, width in ((A.rows, A.n), (A.columns(sigma), len(sigma)), (A.block(sigma, range(A.n)), A.n)):
        total = rank(block, width) + len(null_space_basis(block, width))
        if total != width:
            return fail(f"rank + nullity = {total} for a block with {width} columns")
    return PASS


def _solve_linear_exact(trial: Trial) -> Outcome:
    b = trial.integers(trial.A.n)
    result = solve_linear(trial.A, b)
    if not result.consistent:
        combined = [sum((y * trial.A[i, j] for i, y in enumerate(result.certificate)), Fraction(0))
                    for j in range(trial.A.n)]
        rhs = sum((y * bi for y, bi in zip(result.certificate, b)), Fraction(0))
        if not is_zero_vector(combined) or rhs == 0:
            return fail(f"bad inconsistency certificate for b = {format_tuple(b)}")
        return PASS
    if trial.A.apply(result.particular) != b:
        return fail(f"particular solution misses b = {format_tuple(b)}")
    if any(not trial.A.is_zero_on(v) for v in result.null_basis):
        return fail('null basis vector outside ker A')
    return PASS


def _nonsingular_subset(trial: Trial) -> Optional[IndexSet]:
    alpha = trial.random_subset()
    return alpha if det(trial.A.principal(alpha)) != 0 else None


def _ppt_involution(trial: Trial) -> Outcome:
    alpha = _nonsingular_subset(trial)
    if alpha is None:
        return SKIP
    twice = ppt(ppt(trial.A, alpha).transformed, alpha).transformed
    return PASS if twice == trial.A else fail(f"ppt twice on {alpha.label()} differs from A")


def _schur_identities(trial: Trial) -> Outcome:
    alpha = _nonsingular_subset(trial)
    if alpha is None:
        return SKIP
    beta = alpha.complement()
    complement = schur_complement(trial.A, alpha)
    if complement != ppt(trial.A, alpha).transformed.block(beta, beta):
        return fail(f"Schur complement on {alpha.label()} differs from the pivoted block")
    if det(trial.A) != det(trial.A.principal(alpha)) * det(complement):
        return fail(f"det A != det A_aa * det(A/A_aa) for alpha = {alpha.label()}")
    return PASS


def _adequacy_modes(trial: Trial) -> Outcome:
    try:
        is_column_adequate(trial.A, ADEQUACY_MODE_THEOREM, cross_check=True)
    except ModeDisagreement as e:
        return fail(str(e))
    return PASS


def _classification_consistent(trial: Trial) -> Outcome:
    try:
        trial.report
    except CompmatError as e:
        return fail(str(e))
    return PASS


def _flag(flag_name: str) -> Callable[[Trial], Outcome]:
    def check(trial: Trial) -> Outcome:
        try:
            flags = trial.report.consistency_flags
        except CompmatError as e:
            return fail(str(e))
        return PASS if flags[flag_name] else fail(f"{flag_name} is false")
    return check


def _e0_r0_iff_r(trial: Trial) -> Outcome:
    report = trial.report
    if not report.member(CLASS_E0):
        return SKIP
    r0, r = report.member(CLASS_R0), report.member(CLASS_R)
    return PASS if r0 == r else fail(f"E0 matrix with R0 = {r0} but R = {r}")


def _competence_witness(trial: Trial) -> Outcome:
    verdict = trial.report.verdicts[CLASS_COLUMN_COMPETENT]
    if verdict.member:
        return SKIP
    z = verdict.witness_vector
    if not is_zero_vector(psi(trial.A, z)) or trial.A.is_zero_on(z):
        return fail(f"witness {format_tuple(z)} does not violate competence")
    return PASS


def _competence_sampling(trial: Trial) -> Outcome:
    """For competent A, random combinations of null(A_σσ) vectors lie in ker A."""
    if not trial.report.member(CLASS_COLUMN_COMPETENT):
        return SKIP
    for _ in range(trial.competence_samples):
        sigma = trial.random_subset()
        basis = null_space_basis(trial.A.principal(sigma))
        if not basis:
            continue
        weights = trial.integers(len(basis))
        z_sigma = tuple(sum((w * v[k] for w, v in zip(weights, basis)), Fraction(0)) for k in range(len(sigma)))
        z = embed(z_sigma, sigma)
        if not is_zero_vector(psi(trial.A, z)):
            return fail(f"sampled z = {format_tuple(z)} has psi(z) != 0")
        if not trial.A.is_zero_on(z):
            return fail(f"competent but A z != 0 for z = {format_tuple(z)}")
    return PASS


def _permutation_invariance(trial: Trial) -> Outcome:
    permutation = [int(i) for i in trial.rng.permutation(trial.A.n)]
    before = trial.report.member(CLASS_COLUMN_COMPETENT)
    after = is_column_competent(trial.A.permuted(permutation)).member
    return PASS if before == after else fail(f"competence changes under permutation {permutation}")


def _diagonal_scaling(trial: Trial) -> Outcome:
    if not trial.report.member(CLASS_COLUMN_COMPETENT):
        return SKIP
    diagonal = [Fraction(int(x)) for x in trial.rng.integers(1, 6, size=trial.A.n)]
    if is_column_competent(trial.A.scaled(diagonal)).member:
        return PASS
    return fail(f"D A D not competent for D = diag{format_tuple(diagonal)}")


def _ppt_closure(trial: Trial) -> Outcome:
    if not trial.report.member(CLASS_COLUMN_COMPETENT):
        return SKIP
    alpha = _nonsingular_subset(trial)
    if alpha is None or (alpha.complement() and det(schur_complement(trial.A, alpha)) == 0):
        return SKIP
    if is_column_competent(ppt(trial.A, alpha).transformed).member:
        return PASS
    return fail(f"ppt on {alpha.label()} is not competent")


def _adequacy_claim(trial: Trial) -> Outcome:
    """Competent, E0 and R0 with A_αα and A/A_αα nonsingular, claimed to be adequate."""
    report = trial.report
    if not all(report.member(c) for c in (CLASS_COLUMN_COMPETENT, CLASS_E0, CLASS_R0)):
        return SKIP
    alpha = _nonsingular_subset(trial)
    if alpha is None or (alpha.complement() and det(schur_complement(trial.A, alpha)) == 0):
        return SKIP
    if report.member(CLASS_COLUMN_ADEQUATE):
        return PASS
    return fail('competent, E0 and R0 but not column adequate')


def _z_matrix_literal(trial: Trial) -> Outcome:
    """
    For Z-matrices: z*(Az) = 0, A|z| >= 0 and Az <= 0 claimed to force Az = 0.

    Candidates are the kernel basis of every singular A_σσ plus one random
    combination of it, embedded by zeros, so z*(Az) = 0 holds by construction.
    """
    if not is_Z(trial.A).member:
        return SKIP
    applicable = False
    for sigma in subsets(trial.A.n):
        basis = null_space_basis(trial.A.principal(sigma))
        if not basis:
            continue
        weights = trial.integers(len(basis))
        combination = tuple(sum((w * v[k] for w, v in zip(weights, basis)), Fraction(0)) for k in range(len(sigma)))
        for z_sigma in basis + [combination]:
            z = embed(z_sigma, sigma)
            if is_zero_vector(z):
                continue
            Az = trial.A.apply(z)
            if any(x < 0 for x in trial.A.apply(tuple(abs(x) for x in z))) or any(x > 0 for x in Az):
                continue
            applicable = True
            if not is_zero_vector(Az):
                return fail(f"z = {format_tuple(z)} gives Az = {format_tuple(Az)}")
    return PASS if applicable else SKIP


def _inversion_vector(trial: Trial) -> Outcome:
    for piece in trial.pieces:
        u = inversion_vector(piece.particular)
        if f_map(trial.A, u) != trial.q:
            return fail(f"f_A(u) != q for u = {format_tuple(u)}, q = {format_tuple(trial.q)}")
    return PASS


def _psi_on_homogeneous(trial: Trial) -> Outcome:
    zero = tuple(Fraction(0) for _ in range(trial.A.n))
    for piece in enumerate_solutions(LCPInstance(trial.A, zero)):
        if not is_zero_vector(psi(trial.A, piece.particular.z)):
            return fail(f"psi(z) != 0 at z = {format_tuple(piece.particular.z)} solving LCP(0, A)")
    return PASS


def _w_constant_rank(trial: Trial) -> Outcome:
    """rank equality forces constant w; without implicit equalities the converse holds too."""
    for piece in trial.pieces:
        sigma = piece.support
        equal = rank(trial.A.columns(sigma), len(sigma)) == rank(trial.A.principal(sigma), len(sigma))
        if equal and not piece.w_constant:
            return fail(f"support {sigma.label()}: ranks equal but w varies")
        free = not piece.fixed_z and not piece.fixed_w
        if free and piece.w_constant and not equal:
            return fail(f"support {sigma.label()}: w constant on a full piece but ranks differ")
    return PASS


def _solver_agreement(trial: Trial) -> Outcome:
    """Checked on instances that enumeration shows solvable."""
    inst = LCPInstance(trial.A, trial.q)
    outcome = lemke_solve(inst)
    if not trial.pieces:
        if isinstance(outcome, Solution):
            return fail(f"Lemke returns z = {format_tuple(outcome.z)} but enumeration finds no solution")
        return SKIP
    if isinstance(outcome, Solution) and not any(piece.contains(outcome.z) for piece in trial.pieces):
        return fail(f"Lemke solution z = {format_tuple(outcome.z)} is in no enumerated piece")
    if not solve(inst, METHOD_AUTO).solvable:
        return fail(f"auto solve finds nothing for q = {format_tuple(trial.q)}")
    return PASS


def _degree_count(trial: Trial) -> Outcome:
    if not is_q_nondegenerate(trial.A, trial.q):
        return SKIP
    result = local_degree(trial.A, trial.q)
    if len(result.contributions) != len(trial.pieces):
        return fail(f"{len(result.contributions)} interior cones but {len(trial.pieces)} pieces at q = {format_tuple(trial.q)}")
    if any(piece.dimension for piece in trial.pieces):
        return fail(f"positive-dimensional piece at non-degenerate q = {format_tuple(trial.q)}")
    return PASS


def _degree_stability(trial: Trial) -> Outcome:
    if not is_q_nondegenerate(trial.A, trial.q):
        return SKIP
    nudged = tuple(x * Fraction(1001, 1000) for x in trial.q)
    before, after = local_degree(trial.A, trial.q).value, local_degree(trial.A, nudged).value
    return PASS if before == after else fail(f"degree {before} changes to {after} under scaling q")


def _p_matrix_degree(trial: Trial) -> Outcome:
    if not trial.report.member(CLASS_P) or not is_q_nondegenerate(trial.A, trial.q):
        return SKIP
    value = local_degree(trial.A, trial.q).value
    return PASS if value == 1 else fail(f"P-matrix with degree {value}")


def _ppt_degree(trial: Trial) -> Outcome:
    beta = trial.random_subset(nonempty=False)
    report = verify_ppt_degree_relation(trial.A, trial.q, beta)
    if not report.applicable:
        return SKIP
    if report.holds:
        return PASS
    return fail(
        f"beta = {beta.label()}, q = {format_tuple(trial.q)}: deg' = {report.transformed.value}, "
        f"sign = {report.pivot_sign}, deg = {report.original.value}"
    )


INVARIANTS: List[Invariant] = [
    Invariant('rank_plus_nullity', INVARIANT_IDENTITY, _rank_nullity),
    Invariant('solve_linear_exact', INVARIANT_IDENTITY, _solve_linear_exact),
    Invariant('ppt_involution', INVARIANT_IDENTITY, _ppt_involution),
    Invariant('schur_block_and_determinant', INVARIANT_IDENTITY, _schur_identities),
    Invariant('classification_consistent', INVARIANT_THEOREM, _classification_consistent),
    Invariant('adequacy_modes_agree', INVARIANT_THEOREM, _adequacy_modes),
    Invariant('e0_r0_iff_r', INVARIANT_THEOREM, _e0_r0_iff_r, max_n=3, min_drawn=1.0),
    Invariant('nondegenerate_iff_trivial_kernels', INVARIANT_THEOREM,
              _flag(FLAG_NONDEGENERATE_IFF_TRIVIAL_KERNELS)),
    Invariant('nondegenerate_implies_competent', INVARIANT_THEOREM, _flag(FLAG_NONDEGENERATE_IMPLIES_COMPETENT)),
    Invariant('competent_nondegenerate_implies_r0', INVARIANT_THEOREM,
              _flag(FLAG_COMPETENT_NONDEGENERATE_IMPLIES_R0)),
    Invariant('competence_witness_valid', INVARIANT_IDENTITY, _competence_witness),
    Invariant('competence_kernel_sampling', INVARIANT_IDENTITY, _competence_sampling),
    Invariant('competence_permutation_invariance', INVARIANT_THEOREM, _permutation_invariance),
    Invariant('competence_diagonal_scaling', INVARIANT_THEOREM, _diagonal_scaling),
    Invariant('competence_ppt_closure', INVARIANT_THEOREM, _ppt_closure),
    Invariant('competent_e0_r0_implies_adequate', INVARIANT_CLAIM, _adequacy_claim),
    Invariant('z_matrix_literal_implication', INVARIANT_CLAIM, _z_matrix_literal,
              min_checked=0.2, sampler=planted_z_matrix),
    Invariant('f_map_inversion', INVARIANT_IDENTITY, _inversion_vector, max_n=3),
    Invariant('psi_zero_on_homogeneous_lcp', INVARIANT_IDENTITY, _psi_on_homogeneous, max_n=3),
    Invariant('piece_w_constant_rank', INVARIANT_THEOREM, _w_constant_rank, max_n=3),
    Invariant('solver_enumerator_agreement', INVARIANT_THEOREM, _solver_agreement, max_n=3, min_checked=0.4),
    Invariant('degree_solution_count', INVARIANT_THEOREM, _degree_count, max_n=3),
    Invariant('degree_stability', INVARIANT_THEOREM, _degree_stability, max_n=3),
    Invariant('p_matrix_degree_one', INVARIANT_THEOREM, _p_matrix_degree, max_n=3),
    Invariant('ppt_degree_relation', INVARIANT_THEOREM, _ppt_degree, max_n=3, min_checked=1.0),
]


def describe_matrix(A: Matrix) -> str:
    return str(format_rows(A.rows)).replace("'", '')
