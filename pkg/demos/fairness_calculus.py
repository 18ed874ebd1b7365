"""Walk through the constriction-fairness calculus.

Computes the activation probability of the naive momentum scheme, shows
why restricting the momentum range cannot fix it, and derives the fair
parameter set used by the fairly constricted solver.
"""

import numpy as np

from fcpso import (
    ParameterScheme,
    activation_probability,
    monte_carlo_activation,
    scheme_for_unfairness,
    solve_fair_phi2,
    unfairness,
    unfairness_restricted,
)

print("=== the naive momentum scheme over-constricts ===")
naive = ParameterScheme(3, 5, 0, 1)  # c1, c2 ~ U(1.5, 2.5), beta ~ U(0, 1)
p = activation_probability(naive)
print(f"P(active) analytic     : {p:.6f}")
mc = monte_carlo_activation(naive, samples=1_000_000, seed=0)
print(f"P(active) monte carlo  : {mc.p_activation:.6f} +- {mc.std_error:.6f}")
print(f"unfairness mu          : {unfairness(naive):+.6f}   (fair would be 0)")

print()
print("=== restricting beta ~ U(0, eps) cannot reach mu = 0 ===")
for eps in (0.01, 0.1, 1 / 3, 0.5, 0.9, 0.999):
    print(f"  eps = {eps:<6.3f} ->  mu = {unfairness_restricted(eps):+.6f}")
print("mu(eps) stays positive and grows with eps: smaller momentum ranges")
print("are fairer but use less momentum; exact fairness needs another knob.")

print()
print("=== solving for the fair phi upper bound ===")
phi2 = solve_fair_phi2(2.0)
fair = ParameterScheme(2.0, phi2, 0.0, 1.0)
print(f"fair phi2              : {phi2:.6f}  (c1, c2 ~ U(1, {phi2 / 2:.4f}))")
print(f"unfairness of fair set : {unfairness(fair):+.2e}")

print()
print("=== schemes across the reachable unfairness range ===")
for mu in (-0.4, -0.2, 0.0, 0.2, 0.4):
    s = scheme_for_unfairness(mu)
    print(
        f"  mu = {mu:+.2f} -> phi ~ U({s.phi1:.3f}, {s.phi2:.3f}), "
        f"beta ~ U({s.beta1:.3f}, {s.beta2:.3f})   (checked mu = {unfairness(s):+.5f})"
    )
