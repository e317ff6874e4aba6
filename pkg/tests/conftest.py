"""Shared test helpers: an independent brute-force oracle and instance corpora.

The brute-force code here deliberately does not reuse the package's
evaluation or enumeration routines, so it can serve as an independent
check of them.
"""

from __future__ import annotations

import itertools
import math
import random

import pytest

from satlab.cnf import CnfFormula
from satlab.generators import random_3cnf


def brute_force_solutions(formula: CnfFormula) -> set[int]:
    """All satisfying assignments as bitmasks (bit v-1 = value of var v)."""
    n = formula.num_vars
    out = set()
    for mask in range(1 << n):
        ok = True
        for clause in formula.clauses:
            sat = False
            for lit in clause:
                v = abs(lit)
                bit = (mask >> (v - 1)) & 1
                if (bit == 1) == (lit > 0):
                    sat = True
                    break
            if not sat:
                ok = False
                break
        if ok:
            out.add(mask)
    return out


def mask_to_dict(mask: int, n: int) -> dict[int, bool]:
    return {v: bool((mask >> (v - 1)) & 1) for v in range(1, n + 1)}


def binomial_sigma(p: float, trials: int) -> float:
    return math.sqrt(max(p * (1.0 - p), 0.0) / trials)


def random_2cnf(n: int, m: int, rng: random.Random) -> CnfFormula:
    clauses = []
    for _ in range(m):
        width = min(rng.choice((1, 2)), n)
        variables = rng.sample(range(1, n + 1), width)
        clauses.append(
            tuple(v if rng.getrandbits(1) else -v for v in variables)
        )
    return CnfFormula(n, tuple(clauses))


def unsat_corpus(count: int, n: int = 7, m: int = 45) -> list[CnfFormula]:
    """Deterministic corpus of brute-force-verified unsatisfiable 3-CNFs."""
    corpus = []
    seed = 0
    while len(corpus) < count:
        f = random_3cnf(n, m, seed)
        if not brute_force_solutions(f):
            corpus.append(f)
        seed += 1
    return corpus


def satisfiable_corpus(count: int) -> list[CnfFormula]:
    """Deterministic corpus of brute-force-verified satisfiable 3-CNFs, n <= 10."""
    corpus = []
    seed = 0
    sizes = itertools.cycle([(5, 12), (6, 15), (7, 18), (8, 20), (9, 22)])
    while len(corpus) < count:
        n, m = next(sizes)
        f = random_3cnf(n, m, seed)
        if brute_force_solutions(f):
            corpus.append(f)
        seed += 1
    return corpus


@pytest.fixture(scope="session")
def small_unsat_formulas() -> list[CnfFormula]:
    return unsat_corpus(10)
