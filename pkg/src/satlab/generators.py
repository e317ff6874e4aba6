"""Instance generators: the XOR-chain worst-case family and random 3-CNF."""

from __future__ import annotations

import random

from .cnf import CnfFormula


def xor_chain(m: int) -> CnfFormula:
    """Conjunction of m independent odd-parity triples over n = 3m variables.

    Each triple (a xor b xor c) expands to its four odd-parity clauses:
    (a|b|c), (a|~b|~c), (~a|b|~c), (~a|~b|c).  Every solution of the
    result has one critical clause per variable, making this the tight
    worst case for the permutation solver.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    clauses = []
    for i in range(m):
        a, b, c = 3 * i + 1, 3 * i + 2, 3 * i + 3
        clauses.append((a, b, c))
        clauses.append((a, -b, -c))
        clauses.append((-a, b, -c))
        clauses.append((-a, -b, c))
    return CnfFormula(3 * m, tuple(clauses))


def random_3cnf(n: int, m: int, seed: int) -> CnfFormula:
    """Uniform fixed-width random 3-CNF, deterministic in the seed.

    Each clause picks 3 distinct variables without replacement and
    fair-coin polarities, so no tautologies or duplicate variables occur
    by construction.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    if m < 0:
        raise ValueError("m must be >= 0")
    rng = random.Random(seed)
    variables = range(1, n + 1)
    clauses = []
    for _ in range(m):
        chosen = rng.sample(variables, 3)
        clauses.append(
            tuple(v if rng.getrandbits(1) else -v for v in chosen)
        )
    return CnfFormula(n, tuple(clauses))
