"""Moving evidence about observers over to evidence about the labels.

Each focal set on U shares its mass equally among its observers, and each
observer passes its share equally to its minimal accepted sets on W.
"""

from sapprox import build_belief_structure, build_space, induce_belief, inflection_set

g = build_space(["u1", "u2"], ["a", "b"], {"u1": ["a"], "u2": ["a", "b"]}, "subseteq")
print("minimal accepted sets:", {x: [str(s) for s in sets] for x, sets in inflection_set(g).points.items()})

for entries in ([(["u1", "u2"], 1)], [(["u1"], "1/3"), (["u1", "u2"], "2/3")], [(["u1"], 1)]):
    bu = build_belief_structure(g.u, entries)
    r = induce_belief(bu, g)
    print([f"{s}:{m}" for s, m in bu.focal], "->", {str(s): str(m) for s, m in r.masses.items()})
    for line in r.diagnostics:
        print("  ", line)
