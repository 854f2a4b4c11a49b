"""Finite universes, bitmask subsets, deciders and S-approximation spaces."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from typing import Any, Union

MAX_ENUM_SIZE = 20

DECIDER_KINDS = ("subseteq", "intersects", "card_threshold", "table")


class SApproxError(ValueError):
    """Base class for every validation error raised by this package."""


class UniverseMismatchError(SApproxError):
    pass


class SizeCapError(SApproxError):
    pass


class PreconditionError(SApproxError):
    """An operation was called on an input that violates its hypotheses."""


def require_enumerable(size: int, cap: int = MAX_ENUM_SIZE) -> None:
    if size > cap:
        raise SizeCapError(f"universe of size {size} exceeds the enumeration cap of {cap}")


@dataclass(frozen=True)
class Universe:
    """An ordered, finite, non-empty collection of distinct labels.

    The position of a label fixes its bit in every :class:`ElementSet`
    built over this universe.
    """

    labels: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise SApproxError("universe must be non-empty")
        index: dict[str, int] = {}
        for pos, label in enumerate(labels):
            if not isinstance(label, str) or not label:
                raise SApproxError(f"universe labels must be non-empty strings, got {label!r}")
            if label in index:
                raise SApproxError(f"duplicate label {label!r}")
            index[label] = pos
        object.__setattr__(self, "_index", index)

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def __len__(self) -> int:
        return len(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise SApproxError(f"unknown label {label!r}") from None

    def subset(self, labels: Iterable[str] = ()) -> ElementSet:
        if isinstance(labels, str):
            raise TypeError("pass an iterable of labels, not a single string")
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return ElementSet(self, mask)

    def from_mask(self, mask: int) -> ElementSet:
        return ElementSet(self, mask)

    @property
    def empty(self) -> ElementSet:
        return ElementSet(self, 0)

    @property
    def full(self) -> ElementSet:
        return ElementSet(self, self.full_mask)

    def subsets(self) -> Iterator[ElementSet]:
        """Every subset, in ascending mask order."""
        require_enumerable(self.size)
        for mask in range(1 << self.size):
            yield ElementSet(self, mask)

    def labels_of(self, mask: int) -> list[str]:
        return [label for pos, label in enumerate(self.labels) if mask >> pos & 1]


@dataclass(frozen=True, order=False)
class ElementSet:
    """A subset of a :class:`Universe`, stored as a membership bitmask."""

    universe: Universe
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask > self.universe.full_mask:
            raise SApproxError(f"mask {self.mask} out of range for universe of size {self.universe.size}")

    def _same(self, other: ElementSet) -> int:
        if not isinstance(other, ElementSet):
            return NotImplemented
        if other.universe != self.universe:
            raise UniverseMismatchError("set operation between different universes")
        return other.mask

    def __or__(self, other: ElementSet) -> ElementSet:
        return ElementSet(self.universe, self.mask | self._same(other))

    def __and__(self, other: ElementSet) -> ElementSet:
        return ElementSet(self.universe, self.mask & self._same(other))

    def __sub__(self, other: ElementSet) -> ElementSet:
        return ElementSet(self.universe, self.mask & ~self._same(other))

    def __xor__(self, other: ElementSet) -> ElementSet:
        return ElementSet(self.universe, self.mask ^ self._same(other))

    def __invert__(self) -> ElementSet:
        return self.complement()

    def complement(self) -> ElementSet:
        return ElementSet(self.universe, self.universe.full_mask ^ self.mask)

    def issubset(self, other: ElementSet) -> bool:
        return self.mask & ~self._same(other) == 0

    def __le__(self, other: ElementSet) -> bool:
        return self.issubset(other)

    def __lt__(self, other: ElementSet) -> bool:
        return self.issubset(other) and self.mask != other.mask

    def __ge__(self, other: ElementSet) -> bool:
        return other.issubset(self)

    def __gt__(self, other: ElementSet) -> bool:
        return other < self

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self.universe and bool(self.mask >> self.universe.index(label) & 1)  # type: ignore[arg-type]

    @property
    def labels(self) -> list[str]:
        return self.universe.labels_of(self.mask)

    def __repr__(self) -> str:
        return "{" + ",".join(self.labels) + "}"


@dataclass(frozen=True)
class Decider:
    """A mapping ``S(A, X) -> {0, 1}`` over subsets of a universe W.

    ``table`` deciders hold, for each listed ``A``, an antichain of minimal
    accepted sets; ``X`` is accepted iff it contains one of them.  Any ``A``
    not listed rejects every ``X``.  Table entries are kept as
    ``(a_mask, (minimal_mask, ...))`` pairs sorted by ``a_mask``.
    """

    kind: str
    k: int | None = None
    entries: tuple[tuple[int, tuple[int, ...]], ...] = ()
    universe: Universe | None = None
    _lookup: dict[int, tuple[int, ...]] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if self.kind not in DECIDER_KINDS:
            raise SApproxError(f"unknown decider kind {self.kind!r}")
        if self.kind == "card_threshold":
            if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 1:
                raise SApproxError(f"card_threshold needs a positive integer k, got {self.k!r}")
        elif self.k is not None:
            raise SApproxError(f"decider kind {self.kind!r} takes no k")
        lookup: dict[int, tuple[int, ...]] = {}
        if self.kind == "table":
            if self.universe is None:
                raise SApproxError("table decider needs its universe")
            for a_mask, minimal in self.entries:
                if a_mask in lookup:
                    raise SApproxError(f"duplicate table entry for A={self.universe.labels_of(a_mask)}")
                _check_antichain(self.universe, minimal)
                lookup[a_mask] = tuple(minimal)
        elif self.entries:
            raise SApproxError(f"decider kind {self.kind!r} takes no table entries")
        object.__setattr__(self, "_lookup", lookup)

    @classmethod
    def inclusion(cls) -> Decider:
        return cls("subseteq")

    @classmethod
    def intersects(cls) -> Decider:
        return cls("intersects")

    @classmethod
    def card_threshold(cls, k: int) -> Decider:
        return cls("card_threshold", k=k)

    @classmethod
    def table(
        cls,
        universe: Universe,
        entries: Mapping[ElementSet, Iterable[ElementSet]] | Iterable[tuple[ElementSet, Iterable[ElementSet]]],
    ) -> Decider:
        pairs = entries.items() if isinstance(entries, Mapping) else entries
        rows = []
        for a, minimal in pairs:
            minimal = list(minimal)
            for m in (a, *minimal):
                if m.universe != universe:
                    raise UniverseMismatchError("table entry over a different universe")
            masks = tuple(sorted(m.mask for m in minimal))
            if len(set(masks)) != len(masks):
                raise SApproxError(f"repeated minimal set in the table entry for A={a}")
            rows.append((a.mask, masks))
        rows.sort()
        return cls("table", entries=tuple(rows), universe=universe)

    def minimal_sets(self, a_mask: int) -> tuple[int, ...]:
        return self._lookup.get(a_mask, ())

    def accepts(self, a_mask: int, x_mask: int) -> bool:
        """Evaluate on raw masks; callers guarantee a common universe."""
        kind = self.kind
        if kind == "subseteq":
            return a_mask & ~x_mask == 0
        if kind == "intersects":
            return a_mask & x_mask != 0
        if kind == "card_threshold":
            return x_mask.bit_count() >= self.k  # type: ignore[operator]
        return any(m & ~x_mask == 0 for m in self._lookup.get(a_mask, ()))


def _check_antichain(universe: Universe, masks: Iterable[int]) -> None:
    masks = list(masks)
    for m in masks:
        if m < 0 or m > universe.full_mask:
            raise SApproxError(f"mask {m} out of range")
    for i, m in enumerate(masks):
        for other in masks[i + 1 :]:
            if m & ~other == 0 or other & ~m == 0:
                raise SApproxError(
                    f"table antichain holds comparable sets {universe.labels_of(m)} and {universe.labels_of(other)}"
                )


def eval_decider(s: Decider, a: ElementSet, x: ElementSet) -> int:
    """Return ``S(a, x)`` as 0 or 1."""
    if a.universe != x.universe:
        raise UniverseMismatchError("decider arguments live in different universes")
    if s.universe is not None and s.universe != a.universe:
        raise UniverseMismatchError("decider is defined over a different universe")
    return int(s.accepts(a.mask, x.mask))


@dataclass(frozen=True)
class SApproxSpace:
    """The quadruple ``(U, W, T, S)``.

    ``t[i]`` is the knowledge image of ``u.labels[i]``; instances are
    hashable and immutable so derived tables can be cached per space.
    """

    u: Universe
    w: Universe
    t: tuple[ElementSet, ...]
    s: Decider

    def __post_init__(self) -> None:
        object.__setattr__(self, "t", tuple(self.t))
        if len(self.t) != self.u.size:
            raise SApproxError("knowledge mapping must have one image per element of U")
        for img in self.t:
            if img.universe != self.w:
                raise UniverseMismatchError("knowledge images must be subsets of W")
        if self.s.universe is not None and self.s.universe != self.w:
            raise UniverseMismatchError("decider is defined over a different universe than W")

    def image(self, label: str) -> ElementSet:
        return self.t[self.u.index(label)]

    def accepts(self, i: int, x_mask: int) -> bool:
        """``S(T(u_i), X)`` on raw masks."""
        return self.s.accepts(self.t[i].mask, x_mask)

    def restrict(self, keep: ElementSet) -> SApproxSpace:
        """The subspace on the elements of ``keep`` (a non-empty subset of U)."""
        if keep.universe != self.u:
            raise UniverseMismatchError("restriction set must be a subset of U")
        if not keep:
            raise PreconditionError("cannot restrict to an empty universe")
        idx = [i for i in range(self.u.size) if keep.mask >> i & 1]
        return SApproxSpace(Universe(tuple(self.u.labels[i] for i in idx)), self.w, tuple(self.t[i] for i in idx), self.s)


DeciderSpec = Union[Decider, str, Mapping[str, Any]]


def parse_decider(spec: DeciderSpec, w: Universe) -> Decider:
    """Build a decider from a :class:`Decider`, a kind name or a JSON-style mapping.

    Accepted mappings: ``{"kind": "subseteq"}``, ``{"kind": "intersects"}``,
    ``{"kind": "card_threshold", "k": 2}`` and
    ``{"kind": "table", "entries": [{"A": [...], "minimal": [[...], ...]}]}``.
    Unknown keys are rejected.
    """
    if isinstance(spec, Decider):
        if spec.universe is not None and spec.universe != w:
            raise UniverseMismatchError("decider is defined over a different universe than W")
        return spec
    if isinstance(spec, str):
        spec = {"kind": spec}
    if not isinstance(spec, Mapping):
        raise SApproxError(f"malformed decider specification {spec!r}")
    kind = spec.get("kind")
    if kind == "inclusion":
        kind = "subseteq"
    allowed = {"subseteq": {"kind"}, "intersects": {"kind"}, "card_threshold": {"kind", "k"}, "table": {"kind", "entries"}}
    if kind not in allowed:
        raise SApproxError(f"unknown decider kind {kind!r}")
    extra = set(spec) - allowed[kind]
    if extra:
        raise SApproxError(f"unknown keys in decider specification: {sorted(extra)}")
    if kind == "card_threshold":
        if "k" not in spec:
            raise SApproxError("card_threshold decider needs k")
        return Decider.card_threshold(spec["k"])
    if kind != "table":
        return Decider(kind)
    entries = spec.get("entries", [])
    if not isinstance(entries, list):
        raise SApproxError("table entries must be a list")
    rows = []
    for entry in entries:
        if not isinstance(entry, Mapping) or set(entry) != {"A", "minimal"}:
            raise SApproxError(f"table entry must have exactly the keys 'A' and 'minimal': {entry!r}")
        rows.append((_labels_to_set(w, entry["A"]), [_labels_to_set(w, m) for m in entry["minimal"]]))
    return Decider.table(w, rows)


def _labels_to_set(universe: Universe, labels: Any) -> ElementSet:
    if isinstance(labels, ElementSet):
        if labels.universe != universe:
            raise UniverseMismatchError("set belongs to a different universe")
        return labels
    if isinstance(labels, str) or not isinstance(labels, Iterable):
        raise SApproxError(f"expected a list of labels, got {labels!r}")
    labels = list(labels)
    if len(set(labels)) != len(labels):
        raise SApproxError(f"repeated label in {labels!r}")
    return universe.subset(labels)


def build_space(
    u_labels: Iterable[str],
    w_labels: Iterable[str],
    t_map: Mapping[str, Iterable[str] | ElementSet],
    decider_spec: DeciderSpec,
) -> SApproxSpace:
    """Validate and assemble an S-approximation space.

    >>> g = build_space(["u1", "u2"], ["a", "b"], {"u1": ["a"], "u2": ["a", "b"]}, "subseteq")
    >>> g.image("u2")
    {a,b}
    """
    u = Universe(tuple(u_labels))
    w = Universe(tuple(w_labels))
    unknown = set(t_map) - set(u.labels)
    if unknown:
        raise SApproxError(f"knowledge mapping names labels outside U: {sorted(unknown)}")
    images = []
    for label in u.labels:
        if label not in t_map:
            raise SApproxError(f"missing knowledge image for {label!r}")
        images.append(_labels_to_set(w, t_map[label]))
    return SApproxSpace(u, w, tuple(images), parse_decider(decider_spec, w))
