"""
Auditing printed closed forms
=============================

Printed listings of the evolved matrix elements are compared with the
numeric channel entry by entry. Each audit names the entries that disagree.
"""

import math

from driven_entanglement import OneParam, QutritPure, TimeGrid, TwoParam, XState, audit_analytic, make_scenario

grid = TimeGrid(0, 2 * math.pi, 200)
cases = {
    "X state, qubit driven": make_scenario("qubit-qubit", XState(-0.8, -0.7, -0.6)),
    "one-param, qubit driven": make_scenario("qubit-qutrit/drive-qubit", OneParam(0.1)),
    "two-param, qubit driven": make_scenario("qubit-qutrit/drive-qubit", TwoParam(0.05, 0.1, 0.6)),
    "one-param, qutrit driven": make_scenario("qubit-qutrit/drive-qutrit", OneParam(0.1)),
    "two-param, qutrit driven": make_scenario("qubit-qutrit/drive-qutrit", TwoParam(0, 0, 1)),
    "qutrit pair": make_scenario("qutrit-qutrit", QutritPure(*[1 / math.sqrt(3)] * 3)),
}

for label, scenario in cases.items():
    printed = audit_analytic(scenario, grid)
    fixed = audit_analytic(scenario, grid, corrected=True)
    names = [c.name for c in printed.flagged]
    summary = "agrees" if printed.agrees else f"{len(names)} flagged, e.g. {', '.join(names[:4])}"
    print(f"{label:>26}: printed {summary}; corrected max error {fixed.max_error.max():.1e}")
    for d in printed.duplicates:
        print(f"{'':>28}duplicate label {d}")

# Full report for one case, as the CLI writes it.
print(audit_analytic(cases["one-param, qubit driven"], TimeGrid(0, math.pi, 20)).format())
