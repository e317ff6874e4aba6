"""Deterministic linear-time 2-SAT via implication-graph SCCs.

Each variable v contributes two vertices, one per literal.  A clause
(a or b) contributes the implications not-a -> b and not-b -> a; a unit
clause (a) contributes not-a -> a.  The formula is satisfiable iff no
variable shares a strongly connected component with its negation, and a
satisfying assignment is read off the reverse topological order of the
condensation.

The SCC pass is an iterative Tarjan so deep implication chains cannot
overflow the interpreter stack.  Variables not occurring in any clause are
assigned False so the output is deterministic.
"""

from __future__ import annotations

from .cnf import Assignment, CnfFormula


def solve_2sat(formula: CnfFormula) -> Assignment | None:
    """Satisfying total assignment of a width-<=2 formula, or None.

    A clause wider than 2 literals is a programming error, not an
    "unsatisfiable" verdict.
    """
    for clause in formula.clauses:
        if len(clause) > 2:
            raise ValueError(f"clause {clause} has width > 2; not a 2-CNF")
    values = solve_2sat_clauses(formula.clauses, formula.num_vars)
    if values is None:
        return None
    return {v: values[v] for v in range(1, formula.num_vars + 1)}


def solve_2sat_clauses(clauses, num_vars: int):
    """Hot-path 2-SAT on bare clauses.

    Returns a list ``values`` with ``values[v]`` the truth value of
    variable v (index 0 unused), or None if unsatisfiable.  Literal l is
    encoded as vertex 2*(|l|-1) + (1 if l negative), so a vertex's
    complement is ``vertex ^ 1``.
    """
    n2 = 2 * num_vars
    adj: list[list[int]] = [[] for _ in range(n2)]
    occurs = bytearray(num_vars + 1)
    for clause in clauses:
        if len(clause) == 2:
            a, b = clause
            na = _node(-a)
            nb = _node(-b)
            adj[na].append(_node(b))
            adj[nb].append(_node(a))
            occurs[abs(a)] = 1
            occurs[abs(b)] = 1
        else:
            (a,) = clause
            adj[_node(-a)].append(_node(a))
            occurs[abs(a)] = 1

    comp = _tarjan_scc(adj)

    values = [False] * (num_vars + 1)
    for v in range(1, num_vars + 1):
        if not occurs[v]:
            continue
        pos = 2 * (v - 1)
        cp = comp[pos]
        cn = comp[pos + 1]
        if cp == cn:
            return None
        # Tarjan emits sink components first, so a smaller component id
        # means later in topological order; pick that literal.
        values[v] = cp < cn
    return values


def _node(lit: int) -> int:
    return 2 * (lit - 1) if lit > 0 else 2 * (-lit - 1) + 1


def _tarjan_scc(adj: list[list[int]]) -> list[int]:
    """Component id per vertex, ids in order of SCC completion (sinks first)."""
    n = len(adj)
    UNVISITED = -1
    index = [UNVISITED] * n
    lowlink = [0] * n
    comp = [UNVISITED] * n
    on_stack = bytearray(n)
    stack: list[int] = []
    counter = 0
    num_comps = 0

    for root in range(n):
        if index[root] != UNVISITED:
            continue
        # work stack of (vertex, next-child position)
        work = [(root, 0)]
        while work:
            v, child_pos = work.pop()
            if child_pos == 0:
                index[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = 1
            else:
                # returned from exploring adj[v][child_pos - 1]
                w = adj[v][child_pos - 1]
                if lowlink[w] < lowlink[v]:
                    lowlink[v] = lowlink[w]
            neighbors = adj[v]
            advanced = False
            while child_pos < len(neighbors):
                w = neighbors[child_pos]
                child_pos += 1
                if index[w] == UNVISITED:
                    work.append((v, child_pos))
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w] and index[w] < lowlink[v]:
                    lowlink[v] = index[w]
            if advanced:
                continue
            if lowlink[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = 0
                    comp[w] = num_comps
                    if w == v:
                        break
                num_comps += 1
    return comp
