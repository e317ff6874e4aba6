"""The combined solver: per-variable deletion + 2-SAT attempt, with a
permutation/unit-forcing step as fallback, plus the repeated-trial driver.

Each of the n loop steps first tries the literal-deletion route on the
current (partially substituted) formula; if the narrowed 2-CNF is
satisfiable the iteration exits there.  Otherwise the step's variable is
assigned like in the permutation solver (unit-forced, else fair coin) and
the formula is restricted.  The two exit sites are mutually exclusive by
construction and every returned assignment is re-verified against the
original input.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .cnf import Assignment, CnfFormula, evaluate, substitute_clauses
from .deletion import delete_clauses
from .rng import RandomSource
from .twosat import solve_2sat_clauses

# Worst-case single-iteration success bound used for the default trial
# budget when the instance's true success probability is unknown.
WORST_CASE_RATE = 1.5875

DEFAULT_BUDGET_CAP = 1_000_000


class Exit(enum.Enum):
    DEL = "del"
    PPZ = "ppz"
    FAILED = "failed"


@dataclass(frozen=True)
class SolverOutcome:
    assignment: Assignment | None
    exit: Exit
    exit_step: int | None = None  # 1..n, for Exit.DEL only
    trials: int | None = None  # filled by the repeated-trial driver

    def __post_init__(self):
        if (self.assignment is None) != (self.exit is Exit.FAILED):
            raise ValueError("assignment present iff the iteration succeeded")


@dataclass(frozen=True)
class DelPpzStep:
    variable: int
    forced: bool
    value: bool


@dataclass(frozen=True)
class DelPpzTrace:
    permutation: tuple[int, ...]
    # Critical-clause count of the current formula at the start of each
    # executed step, w.r.t. the tracked assignment; empty when untracked.
    # Counts are recorded only while every value assigned so far agrees
    # with the tracked assignment: past that point the count no longer
    # measures progress toward it (and can grow).  Within the recorded
    # prefix the sequence is non-increasing.
    critical_counts: tuple[int, ...]
    steps: tuple[DelPpzStep, ...]
    exit: Exit


def delppz_iteration(
    formula: CnfFormula,
    rng: RandomSource,
    track_alpha: Assignment | None = None,
) -> tuple[SolverOutcome, DelPpzTrace]:
    """One combined iteration.

    With ``track_alpha`` given, the trace records the critical-clause count
    of the evolving formula w.r.t. that assignment at the start of every
    executed step; the hot path carries no such overhead when untracked.
    """
    if not formula.is_3cnf():
        raise ValueError("delppz_iteration requires a 3-CNF formula")
    n = formula.num_vars
    perm = rng.permutation(n)
    clauses = list(formula.clauses)
    fixed: Assignment = {}
    steps: list[DelPpzStep] = []
    counts: list[int] = []
    # Substitution may falsify an original clause (recorded as a pending
    # conflict); from then on the narrowed 2-CNF conceptually contains an
    # empty clause, so the deletion route can no longer succeed.
    conflicted = False
    consistent = True
    for i, v in enumerate(perm, start=1):
        if track_alpha is not None and consistent:
            counts.append(_critical_count(clauses, track_alpha))
        narrowed = delete_clauses(clauses, rng)
        values = None if conflicted else solve_2sat_clauses(narrowed, n)
        if values is not None:
            alpha = {u: values[u] for u in range(1, n + 1)}
            alpha.update(fixed)
            assert evaluate(formula, alpha)
            outcome = SolverOutcome(alpha, Exit.DEL, exit_step=i)
            trace = DelPpzTrace(tuple(perm), tuple(counts), tuple(steps), Exit.DEL)
            return outcome, trace
        polarity = None
        for clause in clauses:
            if len(clause) == 1 and (clause[0] == v or clause[0] == -v):
                polarity = clause[0] > 0
                break
        if polarity is None:
            value = rng.coin()
            forced = False
        else:
            value = polarity
            forced = True
        fixed[v] = value
        steps.append(DelPpzStep(v, forced, value))
        if track_alpha is not None and value != track_alpha[v]:
            consistent = False
        clauses, conflict = substitute_clauses(clauses, v if value else -v)
        conflicted = conflicted or conflict
    if not conflicted and evaluate(formula, fixed):
        outcome = SolverOutcome(fixed, Exit.PPZ)
        exit_kind = Exit.PPZ
    else:
        outcome = SolverOutcome(None, Exit.FAILED)
        exit_kind = Exit.FAILED
    trace = DelPpzTrace(tuple(perm), tuple(counts), tuple(steps), exit_kind)
    return outcome, trace


def delppz_success(formula: CnfFormula, rng: RandomSource) -> bool:
    """Trace-free fast path making the same draws as delppz_iteration."""
    n = formula.num_vars
    perm = rng.permutation(n)
    clauses = list(formula.clauses)
    fixed: Assignment = {}
    conflicted = False
    for v in perm:
        narrowed = delete_clauses(clauses, rng)
        if not conflicted and solve_2sat_clauses(narrowed, n) is not None:
            return True
        polarity = None
        for clause in clauses:
            if len(clause) == 1 and (clause[0] == v or clause[0] == -v):
                polarity = clause[0] > 0
                break
        value = rng.coin() if polarity is None else polarity
        fixed[v] = value
        clauses, conflict = substitute_clauses(clauses, v if value else -v)
        conflicted = conflicted or conflict
    return not conflicted and evaluate(formula, fixed)


def default_omega(n: int, budget_cap: int = DEFAULT_BUDGET_CAP) -> int:
    """Trial count n * r^n for worst-case rate r, clipped to the budget cap.

    The instance-optimal trial count needs the unknown per-iteration
    success probability; the worst-case bound keeps the error contract
    while staying runnable.
    """
    raw = math.ceil(n * WORST_CASE_RATE**n)
    return max(1, min(raw, budget_cap))


def run_delppz(
    formula: CnfFormula,
    seed: int,
    omega: int | None = None,
    budget_cap: int = DEFAULT_BUDGET_CAP,
) -> SolverOutcome:
    """Run up to omega independent iterations; first success wins.

    A FAILED outcome after the full budget is *not* an unsatisfiability
    proof; it carries the trial count so callers can report it.
    """
    if not formula.is_3cnf():
        raise ValueError("run_delppz requires a 3-CNF formula")
    if omega is None:
        omega = default_omega(formula.num_vars, budget_cap)
    elif omega < 1:
        raise ValueError("omega must be >= 1")
    else:
        omega = min(omega, budget_cap)
    for trial in range(omega):
        outcome, _ = delppz_iteration(formula, RandomSource.for_trial(seed, trial))
        if outcome.exit is not Exit.FAILED:
            return SolverOutcome(
                outcome.assignment, outcome.exit, outcome.exit_step, trials=trial + 1
            )
    return SolverOutcome(None, Exit.FAILED, trials=omega)


def _critical_count(clauses, alpha: Assignment) -> int:
    count = 0
    for clause in clauses:
        satisfied = 0
        for lit in clause:
            if alpha[abs(lit)] == (lit > 0):
                satisfied += 1
                if satisfied > 1:
                    break
        if satisfied == 1:
            count += 1
    return count
