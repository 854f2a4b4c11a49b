"""Constructions linking S-approximation spaces and belief structures."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import Decider, ElementSet, PreconditionError, SApproxSpace, Universe, UniverseMismatchError, require_enumerable
from .evidence import BeliefStructure, mobius_table
from .monotone import _inflection_masks, _is_trivial, check_partial_monotone, trivial_elements
from .regions import _quality_tables


@dataclass(frozen=True)
class InducedMassResult:
    """A candidate mass assignment on W together with a validity verdict.

    ``masses`` covers the declared support, which may include sets whose
    computed mass is zero (reported in ``diagnostics``).  ``valid`` is true
    iff the non-zero masses form a belief structure.
    """

    w: Universe
    masses: dict[ElementSet, Fraction]
    valid: bool
    diagnostics: tuple[str, ...] = ()

    @property
    def support(self) -> list[ElementSet]:
        return sorted(self.masses, key=lambda s: s.mask)

    def mass(self, x: ElementSet) -> Fraction:
        return self.masses.get(x, Fraction(0))

    def structure(self) -> BeliefStructure:
        if not self.valid:
            raise PreconditionError("induced masses do not form a belief structure: " + "; ".join(self.diagnostics))
        return BeliefStructure(self.w, tuple((s, m) for s, m in self.masses.items() if m != 0))


def _validity_problems(w: Universe, masses: dict[int, Fraction]) -> list[str]:
    problems = []
    if masses.get(0, 0) != 0:
        problems.append(f"mass {masses[0]} on the empty set")
    for m in sorted(masses):
        if masses[m] < 0:
            problems.append(f"negative mass {masses[m]} on {{{','.join(w.labels_of(m))}}}")
    total = sum(masses.values(), Fraction(0))
    if total != 1:
        problems.append(f"masses sum to {total}, not 1")
    return problems


def _hypothesis_problems(g: SApproxSpace) -> list[str]:
    report = check_partial_monotone(g, "space")
    if not report.holds:
        w = report.witness
        return [f"space is not partial monotone: S({w.a}, {w.x}) = 1 but S({w.a}, {w.y}) = 0"]
    trivial = trivial_elements(g)
    if trivial:
        return [f"space is reducible: trivial elements {trivial}"]
    return []


def belief_from_space(g: SApproxSpace, *, strict: bool = True) -> InducedMassResult:
    """Möbius inverse of the lower-quality function of ``g``.

    The support is every set with non-zero computed mass.  Negative masses
    are kept and flagged rather than hidden: whether they occur depends on
    the decider.  With ``strict=False`` non-monotone or reducible spaces
    are processed too and the failed hypotheses are listed.
    """
    require_enumerable(g.w.size)
    hypotheses = _hypothesis_problems(g)
    if strict and hypotheses:
        raise PreconditionError(hypotheses[0])
    lower, _ = _quality_tables(g)
    computed = {m: v for m, v in enumerate(mobius_table(lower)) if v != 0}
    problems = _validity_problems(g.w, computed)
    return InducedMassResult(
        g.w,
        {g.w.from_mask(m): v for m, v in computed.items()},
        not problems,
        tuple(hypotheses + problems),
    )


def space_from_belief(bs: BeliefStructure) -> SApproxSpace:
    """Inclusion-decider space whose qualities reproduce Bel and Pl.

    With ``d`` the least common denominator of the masses, U is
    ``e1 .. ed`` and each focal set X, in ascending mask order, receives
    the next ``m(X) * d`` consecutive elements, all mapped to X.
    """
    d = math.lcm(*(m.denominator for _, m in bs.focal))
    images: list[ElementSet] = []
    for s, m in bs.focal:
        images.extend([s] * int(m * d))
    u = Universe(tuple(f"e{i}" for i in range(1, d + 1)))
    return SApproxSpace(u, bs.w, tuple(images), Decider.inclusion())


def induce_belief(bs_u: BeliefStructure, g: SApproxSpace, *, strict: bool = True) -> InducedMassResult:
    """Carry a belief structure on U over to W through the inflection sets of ``g``.

    Every focal set X on U splits its mass equally among its elements; each
    element x passes its share in equal parts to the sets of its antichain
    of minimal accepted sets.  The support is the union of all antichains,
    even where the received mass is zero.
    """
    if bs_u.w != g.u:
        raise UniverseMismatchError("belief structure must live on the space's U")
    require_enumerable(g.w.size)
    antichains = _inflection_masks(g)
    trivial = [g.u.labels[i] for i, a in enumerate(antichains) if _is_trivial(a)]
    diagnostics = []
    if trivial:
        msg = f"space is reducible: trivial elements {{{','.join(trivial)}}}"
        if strict:
            raise PreconditionError(msg)
        diagnostics.append(msg)
    acc: dict[int, Fraction] = {m: Fraction(0) for a in antichains for m in a}
    for focal, mass in bs_u.focal:
        share = mass / len(focal)
        for i in range(g.u.size):
            if focal.mask >> i & 1 and antichains[i]:
                part = share / len(antichains[i])
                for y in antichains[i]:
                    acc[y] += part
    for m in sorted(acc):
        if acc[m] == 0:
            diagnostics.append(
                f"support mismatch: {{{','.join(g.w.labels_of(m))}}} is a minimal accepted set but receives no mass"
            )
    problems = _validity_problems(g.w, {m: v for m, v in acc.items() if v != 0})
    return InducedMassResult(
        g.w,
        {g.w.from_mask(m): acc[m] for m in sorted(acc)},
        not problems,
        tuple(diagnostics + problems),
    )
