"""Reading a belief structure off the lower quality of a space.

For the inclusion decider the masses are just the image frequencies.  A
cardinality threshold on three labels is a different story: its lower
quality is not a belief function and Möbius inversion exposes a negative
mass on the whole of W.
"""

from sapprox import belief_from_space, build_space, check_belief_axioms, lower_quality_map

ex1 = build_space(["u1", "u2"], ["a", "b"], {"u1": ["a"], "u2": ["a", "b"]}, "subseteq")
r = belief_from_space(ex1)
print("inclusion space:", {str(s): str(m) for s, m in r.masses.items()}, "valid =", r.valid)

ex2 = build_space(["v"], ["a", "b", "c"], {"v": ["a"]}, {"kind": "card_threshold", "k": 2})
r = belief_from_space(ex2)
print("threshold space:", {str(s): str(m) for s, m in r.masses.items()}, "valid =", r.valid)
for line in r.diagnostics:
    print("  ", line)

report = check_belief_axioms(lower_quality_map(ex2), 3)
cx = report.counterexample
print("worst family:", [str(s) for s in cx.family], f"q_lower(union) = {cx.union_value} < {cx.alternating_sum}")
