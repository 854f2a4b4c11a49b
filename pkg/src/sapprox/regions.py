"""Lower/upper approximations, the three decision regions and quality measures."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import ElementSet, SApproxSpace, UniverseMismatchError, require_enumerable


def _query_mask(g: SApproxSpace, x: ElementSet) -> int:
    if x.universe != g.w:
        raise UniverseMismatchError("query set must be a subset of W")
    return x.mask


def _lower_mask(g: SApproxSpace, x_mask: int) -> int:
    out = 0
    for i in range(g.u.size):
        if g.accepts(i, x_mask):
            out |= 1 << i
    return out


def _upper_mask(g: SApproxSpace, x_mask: int) -> int:
    xc = g.w.full_mask ^ x_mask
    out = 0
    for i in range(g.u.size):
        if not g.accepts(i, xc):
            out |= 1 << i
    return out


def lower_approx(g: SApproxSpace, x: ElementSet) -> ElementSet:
    """Elements ``u`` of U with ``S(T(u), X) = 1``."""
    return ElementSet(g.u, _lower_mask(g, _query_mask(g, x)))


def upper_approx(g: SApproxSpace, x: ElementSet) -> ElementSet:
    """Elements ``u`` of U with ``S(T(u), X^c) = 0``."""
    return ElementSet(g.u, _upper_mask(g, _query_mask(g, x)))


@dataclass(frozen=True)
class RegionDecomposition:
    """Positive, negative and boundary regions of U for one query set."""

    query: ElementSet
    pos: ElementSet
    neg: ElementSet
    br: ElementSet

    def __post_init__(self) -> None:
        full = self.pos.universe.full_mask
        p, n, b = self.pos.mask, self.neg.mask, self.br.mask
        if p & n or p & b or n & b or (p | n | b) != full:
            raise AssertionError("regions do not partition U")


def _regions_raw(g: SApproxSpace, x_mask: int) -> tuple[int, int, int]:
    xc = g.w.full_mask ^ x_mask
    pos = neg = br = 0
    for i in range(g.u.size):
        on_x = g.accepts(i, x_mask)
        on_xc = g.accepts(i, xc)
        if on_x == on_xc:
            br |= 1 << i
        elif on_x:
            pos |= 1 << i
        else:
            neg |= 1 << i
    return pos, neg, br


def _regions_algebraic(g: SApproxSpace, x_mask: int) -> tuple[int, int, int]:
    lo = _lower_mask(g, x_mask)
    up = _upper_mask(g, x_mask)
    return lo & up, g.u.full_mask & ~(lo | up), lo ^ up


def decompose(g: SApproxSpace, x: ElementSet, *, check: bool = False) -> RegionDecomposition:
    """Split U into POS/NEG/BR for the query ``x``.

    The result is built from the lower and upper approximations.  With
    ``check=True`` the regions are also computed from the raw decider
    verdicts on ``x`` and ``x^c`` and the two forms must coincide.
    """
    mask = _query_mask(g, x)
    pos, neg, br = _regions_algebraic(g, mask)
    if check and (pos, neg, br) != _regions_raw(g, mask):
        raise AssertionError(f"region definitions disagree for X={x}")
    return RegionDecomposition(x, ElementSet(g.u, pos), ElementSet(g.u, neg), ElementSet(g.u, br))


@dataclass(frozen=True)
class QualityPair:
    q_lower: Fraction
    q_upper: Fraction

    def __post_init__(self) -> None:
        if not 0 <= self.q_lower <= self.q_upper <= 1:
            raise AssertionError(f"invalid quality pair ({self.q_lower}, {self.q_upper})")


def quality(g: SApproxSpace, x: ElementSet) -> QualityPair:
    """Qualities ``|POS|/|U|`` and ``(|POS|+|BR|)/|U|`` as exact fractions."""
    pos, _, br = _regions_algebraic(g, _query_mask(g, x))
    n = g.u.size
    return QualityPair(Fraction(pos.bit_count(), n), Fraction(pos.bit_count() + br.bit_count(), n))


@lru_cache(maxsize=256)
def _quality_tables(g: SApproxSpace) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    require_enumerable(g.w.size)
    n = g.u.size
    lower, upper = [], []
    for mask in range(1 << g.w.size):
        pos, _, br = _regions_algebraic(g, mask)
        p = pos.bit_count()
        lower.append(Fraction(p, n))
        upper.append(Fraction(p + br.bit_count(), n))
    return tuple(lower), tuple(upper)


def lower_quality_map(g: SApproxSpace) -> dict[ElementSet, Fraction]:
    """``X -> q_lower(X)`` for every subset X of W, in ascending mask order."""
    lower, _ = _quality_tables(g)
    return {g.w.from_mask(m): q for m, q in enumerate(lower)}


def upper_quality_map(g: SApproxSpace) -> dict[ElementSet, Fraction]:
    _, upper = _quality_tables(g)
    return {g.w.from_mask(m): q for m, q in enumerate(upper)}
