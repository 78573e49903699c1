"""
Qubit-qutrit one-parameter family
=================================

The family interpolates from a maximally entangled state (P = 0) through a
separable point (P = 1/3) to a partially entangled state (P = 1/2).
"""

import math

import numpy as np

from driven_entanglement import OneParam, TimeGrid, detect_events, make_one_param, make_scenario, negativity, sweep

# Initial negativity across the family; the zero sits at P = 1/3.
for P in np.linspace(0, 0.5, 7):
    print(f"P={P:.4f}  N={negativity(make_one_param(P)):.4f}")

# Drive the qubit. For P = 0 the curve dips to 0.0292 at tau = 0.8.
scenario = make_scenario("qubit-qutrit/drive-qubit", OneParam(0))
trace = sweep(scenario, TimeGrid(0, 1.6, 1001))
print(f"N(0.8) = {trace.at(0.8):.4f}, N(1.6) = {trace.at(1.6):.4f}")

events = detect_events(sweep(scenario, TimeGrid(0, math.pi, 1000)))
print("death intervals:", events.death_intervals)
print("minima:", [(round(t, 4), round(n, 5)) for t, n in events.minima()])

# Driving the qutrit instead keeps the pair well entangled.
qutrit_side = sweep(make_scenario("qubit-qutrit/drive-qutrit", OneParam(0)), TimeGrid())
print(f"qutrit driven: min N = {qutrit_side.values.min():.3f}")
