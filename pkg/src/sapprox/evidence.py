"""Belief structures, belief/plausibility, Möbius inversion and belief axioms.

All quantities are :class:`fractions.Fraction`; Python integers are
unbounded, so no intermediate result can overflow or round.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any

from .core import ElementSet, SApproxError, SizeCapError, Universe, UniverseMismatchError, require_enumerable

_RATIONAL = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")


def to_rational(value: Any) -> Fraction:
    """Coerce ``value`` to an exact fraction.

    Accepts ``Fraction``, ``int`` and strings such as ``"3/4"`` or ``"-2"``.
    Floats, decimals and decimal strings are refused rather than rounded.
    """
    if isinstance(value, bool):
        raise SApproxError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL.match(value)
        if match:
            den = int(match.group(2)) if match.group(2) is not None else 1
            if den == 0:
                raise SApproxError(f"zero denominator in {value!r}")
            return Fraction(int(match.group(1)), den)
    raise SApproxError(f"masses must be exact rationals like '1/3'; got {value!r}")


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class BeliefStructure:
    """Focal elements of a basic probability assignment with their masses.

    Only non-zero masses are stored, sorted by canonical mask; the empty set
    never carries mass and the masses add up to exactly one.
    """

    w: Universe
    focal: tuple[tuple[ElementSet, Fraction], ...]
    _by_mask: dict[int, Fraction] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        focal = tuple(sorted(self.focal, key=lambda item: item[0].mask))
        object.__setattr__(self, "focal", focal)
        by_mask: dict[int, Fraction] = {}
        for s, m in focal:
            if s.universe != self.w:
                raise UniverseMismatchError("focal element outside the frame")
            if not isinstance(m, Fraction):
                raise SApproxError(f"mass for {s} is not a Fraction")
            if s.mask in by_mask:
                raise SApproxError(f"duplicate focal set {s}")
            if not s:
                raise SApproxError("the empty set cannot carry mass")
            if m <= 0:
                raise SApproxError(f"mass of {s} must be positive, got {m}")
            by_mask[s.mask] = m
        total = sum(by_mask.values(), Fraction(0))
        if total != 1:
            raise SApproxError(f"total mass is {total}, not 1")
        object.__setattr__(self, "_by_mask", by_mask)

    def mass(self, x: ElementSet) -> Fraction:
        if x.universe != self.w:
            raise UniverseMismatchError("set is not over the frame of this structure")
        return self._by_mask.get(x.mask, Fraction(0))

    @property
    def focal_elements(self) -> list[ElementSet]:
        return [s for s, _ in self.focal]

    def as_dict(self) -> dict[ElementSet, Fraction]:
        return dict(self.focal)

    def mass_by_mask(self) -> dict[int, Fraction]:
        return dict(self._by_mask)


def build_belief_structure(
    w_labels: Iterable[str] | Universe,
    mass_entries: Iterable[tuple[Iterable[str] | ElementSet, Any]],
) -> BeliefStructure:
    """Validate ``(set, mass)`` entries into a belief structure.

    >>> bs = build_belief_structure(["a", "b"], [(["a"], "1/2"), (["a", "b"], "1/2")])
    >>> [(s, str(m)) for s, m in bs.focal]
    [({a}, '1/2'), ({a,b}, '1/2')]
    """
    w = w_labels if isinstance(w_labels, Universe) else Universe(tuple(w_labels))
    entries = []
    for labels, value in mass_entries:
        if isinstance(labels, ElementSet):
            if labels.universe != w:
                raise UniverseMismatchError("focal set outside the frame")
            s = labels
        else:
            if isinstance(labels, str):
                raise SApproxError(f"focal set must be a list of labels, got {labels!r}")
            labels = list(labels)
            if len(set(labels)) != len(labels):
                raise SApproxError(f"repeated label in focal set {labels!r}")
            s = w.subset(labels)
        entries.append((s, to_rational(value)))
    return BeliefStructure(w, tuple(entries))


@dataclass(frozen=True)
class EvidenceReading:
    bel: Fraction
    pl: Fraction

    @property
    def ignorance(self) -> Fraction:
        return self.pl - self.bel

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        return self.bel, self.pl


def evaluate(bs: BeliefStructure, x: ElementSet) -> EvidenceReading:
    """Belief and plausibility of ``x``, summed over focal elements only."""
    if x.universe != bs.w:
        raise UniverseMismatchError("query set is not over the frame of this structure")
    bel = Fraction(0)
    pl = Fraction(0)
    for s, m in bs.focal:
        if s.mask & ~x.mask == 0:
            bel += m
        if s.mask & x.mask:
            pl += m
    return EvidenceReading(bel, pl)


def belief_function(bs: BeliefStructure) -> dict[ElementSet, Fraction]:
    return {x: evaluate(bs, x).bel for x in bs.w.subsets()}


def plausibility_function(bs: BeliefStructure) -> dict[ElementSet, Fraction]:
    return {x: evaluate(bs, x).pl for x in bs.w.subsets()}


def _as_table(f: Mapping[ElementSet, Any]) -> tuple[Universe, list[Fraction]]:
    if not f:
        raise SApproxError("set function is empty")
    universe = next(iter(f)).universe
    require_enumerable(universe.size)
    table: list[Fraction | None] = [None] * (1 << universe.size)
    for s, v in f.items():
        if s.universe != universe:
            raise UniverseMismatchError("set function mixes universes")
        table[s.mask] = to_rational(v)
    missing = [m for m, v in enumerate(table) if v is None]
    if missing:
        raise SApproxError(f"set function undefined on {len(missing)} subsets, e.g. {universe.labels_of(missing[0])}")
    return universe, table  # type: ignore[return-value]


def mobius_table(values: Sequence[Fraction]) -> list[Fraction]:
    """Möbius inverse on the subset lattice of a table indexed by mask.

    One differencing pass per coordinate: after the pass for bit ``i``
    every entry holds the alternating sum over that coordinate.
    """
    out = list(values)
    size = len(out).bit_length() - 1
    if len(out) != 1 << size:
        raise SApproxError("table length must be a power of two")
    for i in range(size):
        bit = 1 << i
        for m in range(len(out)):
            if m & bit:
                out[m] -= out[m ^ bit]
    return out


def zeta_table(values: Sequence[Fraction]) -> list[Fraction]:
    """Subset sums ``A -> sum over B subset of A``; inverse of :func:`mobius_table`."""
    out = list(values)
    size = len(out).bit_length() - 1
    if len(out) != 1 << size:
        raise SApproxError("table length must be a power of two")
    for i in range(size):
        bit = 1 << i
        for m in range(len(out)):
            if m & bit:
                out[m] += out[m ^ bit]
    return out


def mobius(f: Mapping[ElementSet, Any]) -> dict[ElementSet, Fraction]:
    """Möbius inverse ``n(A) = sum_{B <= A} (-1)^{|A - B|} f(B)`` of a total set function."""
    universe, table = _as_table(f)
    return {universe.from_mask(m): v for m, v in enumerate(mobius_table(table))}


def zeta(n: Mapping[ElementSet, Any]) -> dict[ElementSet, Fraction]:
    universe, table = _as_table(n)
    return {universe.from_mask(m): v for m, v in enumerate(zeta_table(table))}


def inclusion_exclusion(table: Sequence[Fraction], family: Sequence[int]) -> Fraction:
    """``sum over non-empty I of (-1)^{|I|+1} f(intersection of family[I])``."""
    total = Fraction(0)
    k = len(family)
    for pick in range(1, 1 << k):
        inter = -1
        for j in range(k):
            if pick >> j & 1:
                inter &= family[j]
        term = table[inter]
        total += term if pick.bit_count() % 2 else -term
    return total


@dataclass(frozen=True)
class FamilyViolation:
    """A family whose union scores below its inclusion-exclusion sum."""

    family: tuple[ElementSet, ...]
    union_value: Fraction
    alternating_sum: Fraction

    @property
    def gap(self) -> Fraction:
        return self.alternating_sum - self.union_value


def worst_family_violation(table: Sequence[Fraction], universe: Universe, max_order: int) -> tuple[FamilyViolation | None, int]:
    """Scan every family of at most ``max_order`` distinct subsets.

    Returns the violation with the largest gap (ties go to the smaller
    family, then the lexicographically first mask tuple) and the number
    of families checked.
    """
    best: FamilyViolation | None = None
    checked = 0
    masks = range(len(table))
    for order in range(1, max_order + 1):
        for family in combinations(masks, order):
            checked += 1
            union = 0
            for m in family:
                union |= m
            lhs = table[union]
            rhs = inclusion_exclusion(table, family)
            if rhs > lhs and (best is None or rhs - lhs > best.gap):
                best = FamilyViolation(tuple(universe.from_mask(m) for m in family), lhs, rhs)
    return best, checked


@dataclass(frozen=True)
class AxiomReport:
    empty_is_zero: bool
    whole_is_one: bool
    max_order: int
    families_checked: int
    counterexample: FamilyViolation | None
    negative_masses: dict[ElementSet, Fraction]

    @property
    def superadditive(self) -> bool:
        return self.counterexample is None

    @property
    def mobius_nonnegative(self) -> bool:
        return not self.negative_masses

    @property
    def passes(self) -> bool:
        """All checked axioms hold up to ``max_order``."""
        return self.empty_is_zero and self.whole_is_one and self.superadditive

    @property
    def is_belief_function(self) -> bool:
        """Complete certificate: boundary values plus non-negative Möbius masses."""
        return self.empty_is_zero and self.whole_is_one and self.mobius_nonnegative


def family_cap(max_order: int) -> int:
    if max_order < 1:
        raise SApproxError("max_order must be at least 1")
    return 4 if max_order >= 3 else 8


def check_belief_axioms(f: Mapping[ElementSet, Any], max_order: int = 3) -> AxiomReport:
    """Check the belief-function axioms on a total set function.

    Superadditivity is enumerated for families of up to ``max_order``
    distinct subsets; the Möbius masses are reported separately since
    their non-negativity settles the unbounded family of inequalities.
    """
    universe, table = _as_table(f)
    cap = family_cap(max_order)
    if universe.size > cap:
        raise SizeCapError(f"family enumeration up to order {max_order} is capped at |W| <= {cap}")
    violation, checked = worst_family_violation(table, universe, max_order)
    masses = mobius_table(table)
    negative = {universe.from_mask(m): v for m, v in enumerate(masses) if v < 0}
    return AxiomReport(table[0] == 0, table[-1] == 1, max_order, checked, violation, negative)
