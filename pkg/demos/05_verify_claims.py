"""Checking every claim on seeded random spaces and replaying the failures."""

from collections import Counter

from sapprox.serialize import dumps
from sapprox.verify import GeneratorConfig, replay, verify_claims

reports = verify_claims(GeneratorConfig(trials=200, seed=2024))
print(Counter(r.status for r in reports))
for r in reports:
    if r.status == "counterexample":
        print(r.claim, "replays:", replay(r))
        print("  ", dumps(r.witness)[:160])
