"""Seeded generators and an executable check of every proposition.

Each claim is searched exhaustively on a subject (a space, optionally with
belief structures on W and on U).  A failure is reported with a witness
document that holds everything needed to re-trigger it through the
public operations; see :func:`replay`.
"""

from __future__ import annotations

import random
import string
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

from .bridges import belief_from_space, induce_belief, space_from_belief
from .core import (
    DECIDER_KINDS,
    Decider,
    ElementSet,
    SApproxError,
    SApproxSpace,
    SizeCapError,
    Universe,
    eval_decider,
)
from .evidence import (
    BeliefStructure,
    evaluate,
    format_rational,
    mobius,
    mobius_table,
    worst_family_violation,
)
from .monotone import check_partial_monotone, trivial_elements
from .regions import _quality_tables, decompose, lower_approx, lower_quality_map, quality, upper_approx
from .serialize import belief_from_doc, belief_to_doc, space_from_doc, space_to_doc

CLAIM_IDS: tuple[str, ...] = tuple(f"P2.1-{i}" for i in range(1, 16)) + (
    "P3.2", "P3.3", "P3.4", "P3.5", "P3.6", "P3.7", "T3.8", "T3.9", "T3.10",
)
STATUSES = ("holds", "counterexample", "skipped-precondition")

MAX_RANDOM_U = 8
MAX_RANDOM_W = 5
MAX_RANDOM_DENOMINATOR = 36
FAMILY_ORDER = 3
FAMILY_MAX_W = 4


# -- generators ---------------------------------------------------------------


def _check_range(name: str, value: int, low: int, high: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SApproxError(f"{name} must be an integer")
    if not low <= value <= high:
        raise SizeCapError(f"{name}={value} outside [{low}, {high}]")


def _w_labels(size: int) -> tuple[str, ...]:
    return tuple(string.ascii_lowercase[:size])


def _minimal(masks: Iterable[int]) -> tuple[int, ...]:
    masks = sorted(set(masks))
    return tuple(m for m in masks if not any(o != m and o & ~m == 0 for o in masks))


def random_space(
    seed: int,
    u_size: int,
    w_size: int,
    decider_kind: str,
    *,
    allow_trivial: bool = False,
) -> SApproxSpace:
    """A seeded random space over ``U = u1..un`` and ``W = a, b, ...``.

    By default every generated space is partial monotone and irreducible:
    images are non-empty, thresholds stay within ``|W|`` and every table
    entry is a non-empty antichain of non-empty sets.  ``allow_trivial``
    lifts those guards so reducible spaces appear as well.
    """
    _check_range("u_size", u_size, 1, MAX_RANDOM_U)
    _check_range("w_size", w_size, 1, MAX_RANDOM_W)
    if decider_kind == "inclusion":
        decider_kind = "subseteq"
    if decider_kind not in DECIDER_KINDS:
        raise SApproxError(f"unknown decider kind {decider_kind!r}")
    rng = random.Random(seed)
    u = Universe(tuple(f"u{i}" for i in range(1, u_size + 1)))
    w = Universe(_w_labels(w_size))
    low = 0 if allow_trivial else 1
    images = tuple(w.from_mask(rng.randrange(low, 1 << w_size)) for _ in range(u_size))
    if decider_kind == "card_threshold":
        decider = Decider.card_threshold(rng.randint(1, w_size + (1 if allow_trivial else 0)))
    elif decider_kind == "table":
        rows = []
        for a in sorted({img.mask for img in images}):
            if allow_trivial and rng.random() < 0.25:
                continue
            picks = [rng.randrange(low, 1 << w_size) for _ in range(rng.randint(1, 3))]
            rows.append((a, _minimal(picks)))
        decider = Decider("table", entries=tuple(rows), universe=w)
    else:
        decider = Decider(decider_kind)
    return SApproxSpace(u, w, images, decider)


def _random_masses(rng: random.Random, universe: Universe, max_denominator: int) -> BeliefStructure:
    n_sets = (1 << universe.size) - 1
    k = rng.randint(1, min(4, n_sets, max_denominator))
    focal = rng.sample(range(1, n_sets + 1), k)
    d = rng.randint(k, max_denominator)
    cuts = sorted(rng.sample(range(1, d), k - 1))
    parts = [b - a for a, b in zip([0, *cuts], [*cuts, d])]
    return BeliefStructure(universe, tuple((universe.from_mask(m), Fraction(p, d)) for m, p in zip(focal, parts)))


def random_belief(seed: int, w_size: int, max_denominator: int = MAX_RANDOM_DENOMINATOR) -> BeliefStructure:
    """A seeded belief structure with 1-4 non-empty focal sets.

    All masses share a denominator of at most ``max_denominator``.
    """
    _check_range("w_size", w_size, 1, MAX_RANDOM_W)
    _check_range("max_denominator", max_denominator, 1, MAX_RANDOM_DENOMINATOR)
    return _random_masses(random.Random(seed), Universe(_w_labels(w_size)), max_denominator)


@dataclass(frozen=True)
class GeneratorConfig:
    """Settings for a batch of random subjects.

    Trial ``i`` draws its own seed from ``(seed, i)`` and uses decider kind
    ``kinds[i % len(kinds)]``, so trials are independent of each other and
    of evaluation order.
    """

    trials: int = 100
    seed: int = 0
    kinds: tuple[str, ...] = DECIDER_KINDS
    max_u: int = MAX_RANDOM_U
    max_w: int = MAX_RANDOM_W
    max_denominator: int = MAX_RANDOM_DENOMINATOR
    allow_trivial: bool = False


# -- subjects -----------------------------------------------------------------


@dataclass(frozen=True)
class Subject:
    space: SApproxSpace
    belief: BeliefStructure | None = None
    beliefs_u: tuple[BeliefStructure, ...] = ()


def default_beliefs_on_u(g: SApproxSpace) -> tuple[BeliefStructure, ...]:
    """The vacuous structure on U and the uniform one over singletons."""
    u = g.u
    vacuous = BeliefStructure(u, ((u.full, Fraction(1)),))
    if u.size == 1:
        return (vacuous,)
    uniform = BeliefStructure(u, tuple((u.from_mask(1 << i), Fraction(1, u.size)) for i in range(u.size)))
    return vacuous, uniform


def subject_for_space(g: SApproxSpace, beliefs_u: Sequence[BeliefStructure] = ()) -> Subject:
    """Wrap a space; its own induced structure (when valid) feeds the round-trip claim."""
    belief = None
    try:
        induced = belief_from_space(g, strict=False)
    except SApproxError:
        induced = None
    if induced is not None and induced.valid:
        belief = induced.structure()
    return Subject(g, belief, tuple(beliefs_u) or default_beliefs_on_u(g))


def subject_for_belief(bs: BeliefStructure) -> Subject:
    g = space_from_belief(bs)
    return Subject(g, bs, default_beliefs_on_u(g))


def generate_subjects(cfg: GeneratorConfig) -> Iterator[Subject]:
    for i in range(cfg.trials):
        rng = random.Random(f"{cfg.seed}:{i}")
        kind = cfg.kinds[i % len(cfg.kinds)]
        g = random_space(
            rng.getrandbits(64), rng.randint(1, cfg.max_u), rng.randint(1, cfg.max_w), kind,
            allow_trivial=cfg.allow_trivial,
        )
        bs = random_belief(rng.getrandbits(64), rng.randint(1, cfg.max_w), cfg.max_denominator)
        bu = _random_masses(random.Random(rng.getrandbits(64)), g.u, cfg.max_denominator)
        yield Subject(g, bs, (bu,))


# -- facts and tables ---------------------------------------------------------


@lru_cache(maxsize=512)
def _facts(g: SApproxSpace) -> tuple[bool, bool]:
    """(partial monotone, irreducible) for the space scope."""
    monotone = check_partial_monotone(g, "space").holds
    return monotone, monotone and not trivial_elements(g)


@lru_cache(maxsize=512)
def _region_tables(g: SApproxSpace) -> tuple[list[int], list[int], list[int], list[int]]:
    lo, up, pos, neg = [], [], [], []
    for x in g.w.subsets():
        lo.append(lower_approx(g, x).mask)
        up.append(upper_approx(g, x).mask)
        dec = decompose(g, x, check=True)
        pos.append(dec.pos.mask)
        neg.append(dec.neg.mask)
    return lo, up, pos, neg


def _sub(a: int, b: int) -> bool:
    return a & ~b == 0


def _prop21(item: int) -> Callable[[SApproxSpace, int, int], bool]:
    """Predicate that is true when item ``item`` fails at ``(X, Y)``."""

    def failing(g: SApproxSpace, x: int, y: int) -> bool:
        lo, up, pos, neg = _region_tables(g)
        wf, uf = g.w.full_mask, g.u.full_mask
        if item == 1:
            return _sub(x, y) and not _sub(up[x], up[y])
        if item == 2:
            return _sub(x, y) and not _sub(lo[x], lo[y])
        if item == 3:
            return not _sub(up[x] | up[y], up[x | y])
        if item == 4:
            return not _sub(up[x & y], up[x] & up[y])
        if item == 5:
            return not _sub(lo[x] | lo[y], lo[x | y])
        if item == 6:
            return not _sub(lo[x & y], lo[x] & lo[y])
        if item == 7:
            return up[x] != uf ^ lo[wf ^ x]
        if item == 8:
            return lo[x] != uf ^ up[wf ^ x]
        if item == 9:
            return _sub(x, y) and not _sub(pos[x], pos[y])
        if item == 10:
            return _sub(x, y) and not _sub(neg[y], neg[x])
        if item == 11:
            return not _sub(pos[x] | pos[y], pos[x | y])
        if item == 12:
            return not _sub(neg[x | y], neg[x] | neg[y])
        if item == 13:
            return not _sub(pos[x & y], pos[x] & pos[y])
        if item == 14:
            return not _sub(neg[x] & neg[y], neg[x & y])
        return not _sub(pos[x] & neg[y], pos[x] & neg[x & y])

    return failing


def _naive_inflection(g: SApproxSpace, i: int) -> list[int]:
    """Minimal accepted sets by checking every proper subset directly."""
    a = g.t[i]
    out = []
    for x in g.w.subsets():
        if not eval_decider(g.s, a, x):
            continue
        sub = (x.mask - 1) & x.mask if x.mask else -1
        minimal = True
        while sub >= 0:
            if eval_decider(g.s, a, g.w.from_mask(sub)):
                minimal = False
                break
            sub = (sub - 1) & x.mask if sub else -1
        if minimal:
            out.append(x.mask)
    return out


def naive_induced_masses(bs_u: BeliefStructure, g: SApproxSpace) -> dict[int, Fraction]:
    """Direct summation of the cross-universe mass formula, one target set at a time."""
    ips = [_naive_inflection(g, i) for i in range(g.u.size)]
    support = {m for ip in ips for m in ip}
    out = {}
    for y in range(1 << g.w.size):
        if y not in support:
            out[y] = Fraction(0)
            continue
        total = Fraction(0)
        for focal, mass in bs_u.focal:
            inner = sum((Fraction(1, len(ips[i])) for i in range(g.u.size) if focal.mask >> i & 1 and y in ips[i]), Fraction(0))
            total += mass / len(focal) * inner
        out[y] = total
    return out


# -- claims -------------------------------------------------------------------


@dataclass(frozen=True)
class ClaimReport:
    claim: str
    status: str
    trials: int
    witness: dict[str, Any] | None = None
    note: str | None = None

    def to_doc(self) -> dict[str, Any]:
        return {"claim": self.claim, "status": self.status, "trials": self.trials, "witness": self.witness, "note": self.note}

    @classmethod
    def from_doc(cls, doc: dict[str, Any]) -> ClaimReport:
        if set(doc) - {"claim", "status", "trials", "witness", "note"}:
            raise SApproxError("unknown keys in claim report")
        if doc.get("claim") not in CLAIM_IDS or doc.get("status") not in STATUSES:
            raise SApproxError("claim report has an unknown claim id or status")
        return cls(doc["claim"], doc["status"], int(doc["trials"]), doc.get("witness"), doc.get("note"))


@dataclass
class _Claim:
    gate: Callable[[Subject], str | None]
    search: Callable[[Subject], dict[str, Any] | None]
    failing: Callable[[Subject, dict[str, Any]], bool]
    with_belief: bool = False


def _gate_none(_: Subject) -> str | None:
    return None


def _gate_monotone(s: Subject) -> str | None:
    return None if _facts(s.space)[0] else "space is not partial monotone"


def _gate_irreducible(s: Subject) -> str | None:
    monotone, irreducible = _facts(s.space)
    if not monotone:
        return "space is not partial monotone"
    return None if irreducible else "space is reducible"


def _labels(g: SApproxSpace, mask: int) -> list[str]:
    return g.w.labels_of(mask)


def _mask(g: SApproxSpace, labels: list[str]) -> int:
    return g.w.subset(labels).mask


def _make_prop21(item: int) -> _Claim:
    failing = _prop21(item)
    pairs_needed = item not in (7, 8)

    def search(s: Subject) -> dict[str, Any] | None:
        g = s.space
        for x in range(1 << g.w.size):
            for y in range(1 << g.w.size) if pairs_needed else (0,):
                if failing(g, x, y):
                    return {"X": _labels(g, x), "Y": _labels(g, y)} if pairs_needed else {"X": _labels(g, x)}
        return None

    def replay(s: Subject, p: dict[str, Any]) -> bool:
        g = s.space
        return failing(g, _mask(g, p["X"]), _mask(g, p.get("Y", [])))

    return _Claim(_gate_none if not pairs_needed else _gate_monotone, search, replay)


def _p32_failing(s: Subject, p: dict[str, Any]) -> bool:
    x = s.space.w.subset(p["X"])
    return quality(s.space, x).q_lower != 1 - quality(s.space, x.complement()).q_upper


def _p32_search(s: Subject) -> dict[str, Any] | None:
    for x in s.space.w.subsets():
        p = {"X": x.labels}
        if _p32_failing(s, p):
            return p
    return None


def _p33_failing(s: Subject, _: dict[str, Any]) -> bool:
    return quality(s.space, s.space.w.empty).q_lower != 0


def _p34_failing(s: Subject, _: dict[str, Any]) -> bool:
    return quality(s.space, s.space.w.full).q_lower != 1


def _family_sums(g: SApproxSpace, family: list[int]) -> tuple[Fraction, Fraction]:
    union = 0
    for m in family:
        union |= m
    table: dict[int, Fraction] = {}

    def q(mask: int) -> Fraction:
        if mask not in table:
            table[mask] = quality(g, g.w.from_mask(mask)).q_lower
        return table[mask]

    lhs = q(union)
    rhs = Fraction(0)
    for pick in range(1, 1 << len(family)):
        inter = g.w.full_mask
        for j, m in enumerate(family):
            if pick >> j & 1:
                inter &= m
        rhs += q(inter) if pick.bit_count() % 2 else -q(inter)
    return lhs, rhs


def _p35_gate(s: Subject) -> str | None:
    if s.space.w.size > FAMILY_MAX_W:
        return f"family enumeration is capped at |W| <= {FAMILY_MAX_W}"
    return _gate_monotone(s)


def _p35_search(s: Subject) -> dict[str, Any] | None:
    g = s.space
    lower, _ = _quality_tables(g)
    worst, _ = worst_family_violation(lower, g.w, FAMILY_ORDER)
    if worst is None:
        return None
    return {
        "family": [x.labels for x in worst.family],
        "union_value": format_rational(worst.union_value),
        "alternating_sum": format_rational(worst.alternating_sum),
    }


def _p35_failing(s: Subject, p: dict[str, Any]) -> bool:
    family = [_mask(s.space, x) for x in p["family"]]
    if len(set(family)) != len(family):
        raise SApproxError("family members must be distinct")
    lhs, rhs = _family_sums(s.space, family)
    return lhs < rhs


def _lower_masses(g: SApproxSpace) -> dict[ElementSet, Fraction]:
    return mobius(lower_quality_map(g))


def _dual_belief_masses(g: SApproxSpace) -> dict[ElementSet, Fraction]:
    """Masses whose plausibility would equal the upper quality, if any such exist."""
    _, upper = _quality_tables(g)
    full = g.w.full_mask
    bel = [1 - upper[full ^ m] for m in range(full + 1)]
    return {g.w.from_mask(m): v for m, v in enumerate(mobius_table(bel))}


def _mass_search(masses_of: Callable[[SApproxSpace], dict[ElementSet, Fraction]]) -> Callable[[Subject], dict[str, Any] | None]:
    def search(s: Subject) -> dict[str, Any] | None:
        masses = masses_of(s.space)
        g = s.space
        if masses[g.w.empty] != 0:
            return {"boundary": "empty", "mass": format_rational(masses[g.w.empty])}
        total = sum(masses.values(), Fraction(0))
        if total != 1:
            return {"boundary": "total", "mass": format_rational(total)}
        negative = [(v, x.mask, x) for x, v in masses.items() if v < 0]
        if not negative:
            return None
        v, _, x = min(negative)
        return {"set": x.labels, "mass": format_rational(v)}

    return search


def _mass_failing(masses_of: Callable[[SApproxSpace], dict[ElementSet, Fraction]]) -> Callable[[Subject, dict[str, Any]], bool]:
    def failing(s: Subject, p: dict[str, Any]) -> bool:
        masses = masses_of(s.space)
        g = s.space
        if p.get("boundary") == "empty":
            return masses[g.w.empty] != 0
        if p.get("boundary") == "total":
            return sum(masses.values(), Fraction(0)) != 1
        return masses[g.w.subset(p["set"])] < 0

    return failing


def _p37_failing(s: Subject, p: dict[str, Any]) -> bool:
    if "X" in p:
        g = s.space
        x = g.w.subset(p["X"])
        return quality(g, x).q_upper != 1 - quality(g, x.complement()).q_lower
    return _mass_failing(_dual_belief_masses)(s, p)


def _p37_search(s: Subject) -> dict[str, Any] | None:
    for x in s.space.w.subsets():
        if _p37_failing(s, {"X": x.labels}):
            return {"X": x.labels}
    return _mass_search(_dual_belief_masses)(s)


def _t38_search(s: Subject) -> dict[str, Any] | None:
    g = s.space
    result = belief_from_space(g)
    if not result.valid:
        return {"invalid": True, "diagnostics": list(result.diagnostics)}
    bs = result.structure()
    for x in g.w.subsets():
        if evaluate(bs, x).bel != quality(g, x).q_lower:
            return {"X": x.labels}
    return None


def _t38_failing(s: Subject, p: dict[str, Any]) -> bool:
    g = s.space
    result = belief_from_space(g)
    if p.get("invalid"):
        return not result.valid
    x = g.w.subset(p["X"])
    return result.valid and evaluate(result.structure(), x).bel != quality(g, x).q_lower


def _t39_gate(s: Subject) -> str | None:
    return None if s.belief is not None else "no belief structure on W to rebuild"


def _t39_failing(s: Subject, p: dict[str, Any]) -> bool:
    bs = s.belief
    assert bs is not None
    built = space_from_belief(bs)
    if p.get("hypotheses"):
        return _facts(built) != (True, True)
    if p.get("roundtrip"):
        back = belief_from_space(built)
        return not back.valid or back.structure() != bs
    x = bs.w.subset(p["X"])
    reading = evaluate(bs, x)
    q = quality(built, x)
    return q.q_lower != reading.bel or q.q_upper != reading.pl


def _t39_search(s: Subject) -> dict[str, Any] | None:
    candidates: list[dict[str, Any]] = [{"hypotheses": True}]
    assert s.belief is not None
    candidates += [{"X": x.labels} for x in s.belief.w.subsets()]
    candidates.append({"roundtrip": True})
    for p in candidates:
        if _t39_failing(s, p):
            return p
    return None


def _t310_gate(s: Subject) -> str | None:
    if not s.beliefs_u:
        return "no belief structure on U"
    return _gate_irreducible(s)


def _t310_failing(s: Subject, p: dict[str, Any]) -> bool:
    g = s.space
    bu = belief_from_doc(p["belief_u"])
    result = induce_belief(bu, g)
    oracle = naive_induced_masses(bu, g)
    computed = {m: result.mass(g.w.from_mask(m)) for m in range(1 << g.w.size)}
    total = sum(computed.values(), Fraction(0))
    return computed[0] != 0 or total != 1 or computed != oracle


def _t310_search(s: Subject) -> dict[str, Any] | None:
    for bu in s.beliefs_u:
        p = {"belief_u": belief_to_doc(bu)}
        if _t310_failing(s, p):
            return p
    return None


def _single(failing: Callable[[Subject, dict[str, Any]], bool]) -> Callable[[Subject], dict[str, Any] | None]:
    def search(s: Subject) -> dict[str, Any] | None:
        return {} if failing(s, {}) else None

    return search


CLAIMS: dict[str, _Claim] = {f"P2.1-{i}": _make_prop21(i) for i in range(1, 16)}
CLAIMS.update(
    {
        "P3.2": _Claim(_gate_none, _p32_search, _p32_failing),
        "P3.3": _Claim(_gate_monotone, _single(_p33_failing), _p33_failing),
        "P3.4": _Claim(_gate_irreducible, _single(_p34_failing), _p34_failing),
        "P3.5": _Claim(_p35_gate, _p35_search, _p35_failing),
        "P3.6": _Claim(_gate_irreducible, _mass_search(_lower_masses), _mass_failing(_lower_masses)),
        "P3.7": _Claim(_gate_irreducible, _p37_search, _p37_failing),
        "T3.8": _Claim(_gate_irreducible, _t38_search, _t38_failing),
        "T3.9": _Claim(_t39_gate, _t39_search, _t39_failing, with_belief=True),
        "T3.10": _Claim(_t310_gate, _t310_search, _t310_failing),
    }
)


def _resolve(claims: Iterable[str] | None) -> list[str]:
    if claims is None:
        return list(CLAIM_IDS)
    out = []
    for c in claims:
        if c not in CLAIMS:
            raise SApproxError(f"unknown claim id {c!r}")
        if c not in out:
            out.append(c)
    return out


def _subjects(source: Any, beliefs_u: Sequence[BeliefStructure]) -> Iterable[Subject]:
    if isinstance(source, Subject):
        return [source]
    if isinstance(source, SApproxSpace):
        return [subject_for_space(source, beliefs_u)]
    if isinstance(source, BeliefStructure):
        return [subject_for_belief(source)]
    if isinstance(source, GeneratorConfig):
        return generate_subjects(source)
    if isinstance(source, Iterable):
        return [s for item in source for s in _subjects(item, beliefs_u)]
    raise SApproxError(f"cannot verify claims on {type(source).__name__}")


def verify_claims(
    source: Any,
    claims: Iterable[str] | None = None,
    *,
    beliefs_u: Sequence[BeliefStructure] = (),
) -> list[ClaimReport]:
    """Check the selected claims on a space, a belief structure or a generator batch.

    A claim whose hypotheses fail on a subject is skipped for that subject;
    ``trials`` counts the subjects where it was actually checked.  The
    witness of the first failing subject is kept.
    """
    selected = _resolve(claims)
    trials = dict.fromkeys(selected, 0)
    witness: dict[str, dict[str, Any]] = {}
    notes: dict[str, str] = {}
    for subject in _subjects(source, beliefs_u):
        for cid in selected:
            claim = CLAIMS[cid]
            reason = claim.gate(subject)
            if reason is not None:
                notes.setdefault(cid, reason)
                continue
            trials[cid] += 1
            if cid in witness:
                continue
            found = claim.search(subject)
            if found is not None:
                witness[cid] = _wrap(subject, cid, found)
    reports = []
    for cid in selected:
        if cid in witness:
            reports.append(ClaimReport(cid, "counterexample", trials[cid], witness[cid]))
        elif trials[cid]:
            reports.append(ClaimReport(cid, "holds", trials[cid]))
        else:
            reports.append(ClaimReport(cid, "skipped-precondition", 0, note=notes.get(cid)))
    return reports


def _wrap(subject: Subject, cid: str, params: dict[str, Any]) -> dict[str, Any]:
    doc: dict[str, Any] = {"space": space_to_doc(subject.space)}
    if CLAIMS[cid].with_belief and subject.belief is not None:
        doc["belief"] = belief_to_doc(subject.belief)
    doc.update(params)
    return doc


def replay(report: ClaimReport) -> bool:
    """Re-run a counterexample from its witness alone; true iff it fails again."""
    if report.status != "counterexample" or report.witness is None:
        raise SApproxError("only counterexample reports carry a witness to replay")
    w = report.witness
    g = space_from_doc(w["space"])
    belief = belief_from_doc(w["belief"]) if "belief" in w else None
    beliefs_u = (belief_from_doc(w["belief_u"]),) if "belief_u" in w else ()
    subject = Subject(g, belief, beliefs_u)
    claim = CLAIMS[report.claim]
    if claim.gate(subject) is not None:
        return False
    params = {k: v for k, v in w.items() if k not in ("space", "belief")}
    return claim.failing(subject, params)


def exit_code(reports: Iterable[ClaimReport]) -> int:
    return 2 if any(r.status == "counterexample" for r in reports) else 0
