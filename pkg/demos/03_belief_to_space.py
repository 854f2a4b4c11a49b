"""Building a space that realises a given belief structure.

The masses are scaled to a common denominator d; the space has d observers
and each focal set is the knowledge of m(X) * d of them.
"""

from sapprox import belief_from_space, build_belief_structure, evaluate, quality, space_from_belief

bs = build_belief_structure(["a", "b", "c"], [(["a"], "1/6"), (["b", "c"], "1/3"), (["a", "b", "c"], "1/2")])
g = space_from_belief(bs)
print("observers:", {x: str(g.image(x)) for x in g.u.labels})

print(f"{'X':8} {'Bel':>5} {'Pl':>5} {'q_lo':>5} {'q_up':>5}")
for x in g.w.subsets():
    r, q = evaluate(bs, x), quality(g, x)
    print(f"{x!s:8} {r.bel!s:>5} {r.pl!s:>5} {q.q_lower!s:>5} {q.q_upper!s:>5}")
    assert (r.bel, r.pl) == (q.q_lower, q.q_upper)

assert belief_from_space(g).structure() == bs
print("round trip recovers the original masses")
