"""Approximating a target set through two observers.

u1 only knows ``a`` holds; u2 knows ``a`` and ``b`` both hold.  The inclusion
decider accepts X for an observer when everything it knows lies inside X.
"""

from sapprox import build_space, decompose, lower_approx, quality, upper_approx

g = build_space(["u1", "u2"], ["a", "b"], {"u1": ["a"], "u2": ["a", "b"]}, "subseteq")

for x in g.w.subsets():
    d = decompose(g, x)
    q = quality(g, x)
    print(f"X={x!s:6} lower={lower_approx(g, x)!s:8} upper={upper_approx(g, x)!s:8} "
          f"POS={d.pos!s:8} NEG={d.neg!s:8} BR={d.br!s:8} q=({q.q_lower}, {q.q_upper})")

# the two qualities are dual: q_lower(X) = 1 - q_upper(complement of X)
for x in g.w.subsets():
    assert quality(g, x).q_lower == 1 - quality(g, x.complement()).q_upper
print("duality holds on every subset")
