"""Partial monotonicity, inflection sets, trivial elements and reduction."""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass
from functools import lru_cache

from .core import ElementSet, PreconditionError, SApproxError, SApproxSpace, require_enumerable


@dataclass(frozen=True)
class MonotonicityWitness:
    """``S(a, x) = 1`` while ``S(a, y) = 0`` although ``x`` is a subset of ``y``."""

    a: ElementSet
    x: ElementSet
    y: ElementSet


@dataclass(frozen=True)
class MonotonicityReport:
    holds: bool
    witness: MonotonicityWitness | None = None

    def __bool__(self) -> bool:
        return self.holds


def find_violation(accepts: Callable[[int], bool], size: int) -> tuple[int, int] | None:
    """First ``(x, y)`` with ``accepts(x)`` true and ``accepts(y)`` false, ``y = x + one element``.

    Checking covering pairs is enough: any failure along a chain shows up
    on one of its steps, so the witness is as small as a witness can be.
    """
    accepted = [accepts(m) for m in range(1 << size)]
    for x in range(1 << size):
        if not accepted[x]:
            continue
        for bit in range(size):
            y = x | (1 << bit)
            if y != x and not accepted[y]:
                return x, y
    return None


def _candidate_keys(g: SApproxSpace, scope: str) -> Iterable[int]:
    if scope == "space":
        return sorted({img.mask for img in g.t})
    if scope == "decider":
        if g.s.kind == "table":
            # unlisted A reject everything, which is trivially monotone
            return [a for a, _ in g.s.entries]
        return range(1 << g.w.size)
    raise SApproxError(f"unknown monotonicity scope {scope!r}")


def check_partial_monotone(g: SApproxSpace, scope: str = "space") -> MonotonicityReport:
    """Check that ``X -> S(A, X)`` is upward closed.

    ``scope="space"`` only looks at the knowledge images ``A = T(x)``;
    ``scope="decider"`` covers every ``A`` the decider can distinguish,
    which for the analytic kinds means all of P(W) (quadratic in 2^|W|).
    """
    require_enumerable(g.w.size)
    n = g.w.size
    for a in _candidate_keys(g, scope):
        hit = find_violation(lambda x, a=a: g.s.accepts(a, x), n)
        if hit is not None:
            x, y = hit
            return MonotonicityReport(False, MonotonicityWitness(g.w.from_mask(a), g.w.from_mask(x), g.w.from_mask(y)))
    return MonotonicityReport(True)


@lru_cache(maxsize=4096)
def _ascending_masks(size: int) -> tuple[int, ...]:
    return tuple(sorted(range(1 << size), key=lambda m: (m.bit_count(), m)))


def minimal_accepted(accepts: Callable[[int], bool], size: int) -> tuple[int, ...]:
    """Minimal accepted masks of an upward-closed predicate.

    Sweeps by cardinality, then mask; a candidate containing an already
    found minimal set is accepted by monotonicity and never minimal, so
    it is skipped without evaluating the predicate.
    """
    found: list[int] = []
    for m in _ascending_masks(size):
        if any(f & ~m == 0 for f in found):
            continue
        if accepts(m):
            found.append(m)
    return tuple(found)


@lru_cache(maxsize=256)
def _inflection_masks(g: SApproxSpace) -> tuple[tuple[int, ...], ...]:
    require_enumerable(g.w.size)
    report = check_partial_monotone(g, "space")
    if not report.holds:
        raise PreconditionError(f"inflection sets need a partial monotone space; witness {report.witness}")
    by_image: dict[int, tuple[int, ...]] = {}
    for img in g.t:
        if img.mask not in by_image:
            by_image[img.mask] = minimal_accepted(lambda x, a=img.mask: g.s.accepts(a, x), g.w.size)
    return tuple(by_image[img.mask] for img in g.t)


def inflection_points(g: SApproxSpace, x: str) -> tuple[ElementSet, ...]:
    """The antichain of minimal X with ``S(T(x), X) = 1``, by cardinality then mask."""
    i = g.u.index(x)
    return tuple(g.w.from_mask(m) for m in _inflection_masks(g)[i])


@dataclass(frozen=True)
class InflectionSet:
    """Per-element antichains of minimal accepted sets."""

    universe_u: tuple[str, ...]
    points: dict[str, tuple[ElementSet, ...]]

    def pairs(self) -> list[tuple[str, ElementSet]]:
        """The flattened set of inflection points ``(x, X)``."""
        return [(x, s) for x in self.universe_u for s in self.points[x]]

    def support(self) -> list[ElementSet]:
        """Distinct sets occurring in any antichain, in ascending mask order."""
        seen = {s.mask: s for _, s in self.pairs()}
        return [seen[m] for m in sorted(seen)]


def inflection_set(g: SApproxSpace) -> InflectionSet:
    masks = _inflection_masks(g)
    return InflectionSet(
        g.u.labels, {x: tuple(g.w.from_mask(m) for m in masks[i]) for i, x in enumerate(g.u.labels)}
    )


def _is_trivial(antichain: tuple[int, ...]) -> bool:
    return len(antichain) == 0 or antichain == (0,)


def trivial_elements(g: SApproxSpace) -> ElementSet:
    """Elements whose antichain is empty or consists of the empty set alone."""
    mask = 0
    for i, antichain in enumerate(_inflection_masks(g)):
        if _is_trivial(antichain):
            mask |= 1 << i
    return g.u.from_mask(mask)


def is_irreducible(g: SApproxSpace) -> bool:
    return not trivial_elements(g)


def reduce(g: SApproxSpace) -> SApproxSpace:
    """Drop every trivial element of U.

    Triviality of one element does not depend on the others, so a single
    pass is enough and the result is irreducible.  Quality values are not
    preserved, since ``|U|`` shrinks.
    """
    trivial = trivial_elements(g)
    if not trivial:
        return g
    keep = trivial.complement()
    if not keep:
        raise PreconditionError("every element of U is trivial; reduction would empty U")
    return g.restrict(keep)
