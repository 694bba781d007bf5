#!/usr/bin/env python3
"""Minimal DIMACS CNF solver speaking the standard s/v output protocol.

Intended as a stand-in external solver for `propb solve --external` (or the
PROPB_SAT_SOLVER environment variable) on small instances, and as a template
for wiring in a real solver. Exit codes follow the SAT-competition
convention: 10 satisfiable, 20 unsatisfiable.
"""
import sys


def parse(path):
    nvars = 0
    clauses = []
    with open(path) as f:
        lits = []
        for line in f:
            line = line.strip()
            if not line or line[0] == "c":
                continue
            if line[0] == "p":
                nvars = int(line.split()[2])
                continue
            for tok in line.split():
                lit = int(tok)
                if lit == 0:
                    clauses.append(lits)
                    lits = []
                else:
                    lits.append(lit)
    return nvars, clauses


def solve(nvars, clauses):
    assign = {}

    def propagate(trail):
        changed = True
        while changed:
            changed = False
            for clause in clauses:
                unassigned = None
                satisfied = False
                count = 0
                for lit in clause:
                    val = assign.get(abs(lit))
                    if val is None:
                        unassigned = lit
                        count += 1
                    elif (val > 0) == (lit > 0):
                        satisfied = True
                        break
                if satisfied:
                    continue
                if count == 0:
                    return False
                if count == 1:
                    assign[abs(unassigned)] = 1 if unassigned > 0 else -1
                    trail.append(abs(unassigned))
                    changed = True
        return True

    def search():
        trail = []
        if not propagate(trail):
            for v in trail:
                del assign[v]
            return False
        var = next((v for v in range(1, nvars + 1) if v not in assign), None)
        if var is None:
            return True
        for val in (-1, 1):
            assign[var] = val
            if search():
                return True
            del assign[var]
        for v in trail:
            del assign[v]
        return False

    if any(len(c) == 0 for c in clauses):
        return None
    return assign if search() else None


def main():
    if len(sys.argv) != 2:
        print("usage: dimacs_solver.py FILE.cnf", file=sys.stderr)
        return 1
    nvars, clauses = parse(sys.argv[1])
    model = solve(nvars, clauses)
    if model is None:
        print("s UNSATISFIABLE")
        return 20
    values = [v if model.get(v, -1) > 0 else -v for v in range(1, nvars + 1)]
    print("s SATISFIABLE")
    print("v " + " ".join(str(v) for v in values) + " 0")
    return 10


if __name__ == "__main__":
    sys.exit(main())
