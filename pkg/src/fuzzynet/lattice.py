"""Formal contexts and their Galois (concept) lattices.

Subsets are handled internally as integer bitmasks over the context's
object/property order; the public API speaks in frozensets of names.
Concepts are enumerated with Ganter's NextClosure over the objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DuplicateName, UnknownObject, UnknownProperty, ValidationError


@dataclass(frozen=True)
class BinaryContext:
    objects: tuple[str, ...]
    properties: tuple[str, ...]
    incidence: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        objects, properties = tuple(self.objects), tuple(self.properties)
        for kind, names in (("object", objects), ("property", properties)):
            if len(set(names)) != len(names):
                raise DuplicateName(f"duplicate {kind} identifier in context")
        rows = tuple(tuple(bool(c) for c in row) for row in self.incidence)
        if len(rows) != len(objects) or any(len(r) != len(properties) for r in rows):
            raise ValidationError(
                f"incidence must be {len(objects)}x{len(properties)}"
            )
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "properties", properties)
        object.__setattr__(self, "incidence", rows)

    @classmethod
    def from_pairs(cls, objects, properties, pairs: Iterable[tuple[str, str]]):
        objects, properties = list(objects), list(properties)
        oi = {o: i for i, o in enumerate(objects)}
        pi = {p: j for j, p in enumerate(properties)}
        rows = [[False] * len(properties) for _ in objects]
        for o, p in pairs:
            if o not in oi:
                raise UnknownObject(o)
            if p not in pi:
                raise UnknownProperty(p)
            rows[oi[o]][pi[p]] = True
        return cls(tuple(objects), tuple(properties), tuple(map(tuple, rows)))

    # bitmask views
    @cached_property
    def _rows(self) -> tuple[int, ...]:
        return tuple(sum(1 << j for j, c in enumerate(row) if c) for row in self.incidence)

    @cached_property
    def _cols(self) -> tuple[int, ...]:
        return tuple(
            sum(1 << i for i, row in enumerate(self.incidence) if row[j])
            for j in range(len(self.properties))
        )

    @property
    def all_objects(self) -> int:
        return (1 << len(self.objects)) - 1

    @property
    def all_properties(self) -> int:
        return (1 << len(self.properties)) - 1

    def objects_mask(self, names: Iterable[str]) -> int:
        index = {o: i for i, o in enumerate(self.objects)}
        mask = 0
        for n in names:
            if n not in index:
                raise UnknownObject(f"{n!r} is not an object of this context")
            mask |= 1 << index[n]
        return mask

    def properties_mask(self, names: Iterable[str]) -> int:
        index = {p: j for j, p in enumerate(self.properties)}
        mask = 0
        for n in names:
            if n not in index:
                raise UnknownProperty(f"{n!r} is not a property of this context")
            mask |= 1 << index[n]
        return mask

    def object_names(self, mask: int) -> frozenset[str]:
        return frozenset(o for i, o in enumerate(self.objects) if mask >> i & 1)

    def property_names(self, mask: int) -> frozenset[str]:
        return frozenset(p for j, p in enumerate(self.properties) if mask >> j & 1)

    def up(self, objs: int) -> int:
        """Properties shared by every object in the mask."""
        out = self.all_properties
        rows = self._rows
        i = 0
        while objs:
            if objs & 1:
                out &= rows[i]
            objs >>= 1
            i += 1
        return out

    def down(self, props: int) -> int:
        """Objects holding every property in the mask."""
        out = self.all_objects
        cols = self._cols
        j = 0
        while props:
            if props & 1:
                out &= cols[j]
            props >>= 1
            j += 1
        return out


def derive_objects(ctx: BinaryContext, objects: Iterable[str]) -> frozenset[str]:
    return ctx.property_names(ctx.up(ctx.objects_mask(objects)))


def derive_properties(ctx: BinaryContext, properties: Iterable[str]) -> frozenset[str]:
    return ctx.object_names(ctx.down(ctx.properties_mask(properties)))


@dataclass(frozen=True)
class FormalConcept:
    extent: frozenset[str]
    intent: frozenset[str]


def _extent_key(ctx: BinaryContext, mask: int):
    members = tuple(i for i in range(len(ctx.objects)) if mask >> i & 1)
    return (len(members), members)


def _concept_masks(ctx: BinaryContext) -> list[tuple[int, int]]:
    n = len(ctx.objects)
    closure = lambda a: ctx.down(ctx.up(a))  # noqa: E731
    found = []
    # NextClosure in lectic order; bit i is the i-th object, highest bit first
    a = closure(0)
    while True:
        found.append((a, ctx.up(a)))
        nxt = None
        for i in range(n - 1, -1, -1):
            bit = 1 << i
            if a & bit:
                a &= ~bit
                continue
            candidate = closure(a | bit)
            # new elements may only appear at positions above i
            if (candidate & ~a) & (bit - 1) == 0:
                nxt = candidate
                break
        if nxt is None:
            break
        a = nxt
    found.sort(key=lambda c: _extent_key(ctx, c[0]))
    return found


def enumerate_concepts(ctx: BinaryContext) -> list[FormalConcept]:
    """All formal concepts, ordered by (extent size, lexicographic extent)."""
    return [
        FormalConcept(ctx.object_names(e), ctx.property_names(i))
        for e, i in _concept_masks(ctx)
    ]


def _covers(masks: Sequence[int]) -> list[tuple[int, int]]:
    edges = []
    for lo, a in enumerate(masks):
        above = [k for k, b in enumerate(masks) if b != a and a & b == a]
        for hi in above:
            b = masks[hi]
            between = any(masks[k] != b and masks[k] & b == masks[k] for k in above)
            if not between:
                edges.append((lo, hi))
    return edges


def hasse_edges(concepts: Sequence[FormalConcept]) -> list[tuple[int, int]]:
    """Covering pairs ``(lower, upper)`` as indices into ``concepts``.

    ``lower``'s extent is a proper subset of ``upper``'s with no concept between.
    """
    universe = sorted(set().union(*(c.extent for c in concepts))) if concepts else []
    index = {o: i for i, o in enumerate(universe)}
    masks = [sum(1 << index[o] for o in c.extent) for c in concepts]
    return _covers(masks)


@dataclass(frozen=True)
class ConceptLattice:
    context: BinaryContext
    concepts: tuple[FormalConcept, ...]
    hasse: tuple[tuple[int, int], ...]

    def leq(self, i: int, j: int) -> bool:
        """Concept ``i`` is below ``j`` (its extent is contained in j's)."""
        return self.concepts[i].extent <= self.concepts[j].extent

    @property
    def top(self) -> int:
        tops = [i for i in range(len(self.concepts))
                if all(self.leq(j, i) for j in range(len(self.concepts)))]
        return tops[0]

    @property
    def bottom(self) -> int:
        bottoms = [i for i in range(len(self.concepts))
                   if all(self.leq(i, j) for j in range(len(self.concepts)))]
        return bottoms[0]

    def upper_covers(self, i: int) -> list[int]:
        return [hi for lo, hi in self.hasse if lo == i]

    def lower_covers(self, i: int) -> list[int]:
        return [lo for lo, hi in self.hasse if hi == i]


def build_lattice(ctx: BinaryContext) -> ConceptLattice:
    masks = _concept_masks(ctx)
    concepts = tuple(FormalConcept(ctx.object_names(e), ctx.property_names(i)) for e, i in masks)
    return ConceptLattice(ctx, concepts, tuple(_covers([e for e, _ in masks])))


def duality_check(lattice: ConceptLattice | Sequence[FormalConcept]) -> bool:
    """Extent containment holds exactly when intent containment holds reversed."""
    concepts = lattice.concepts if isinstance(lattice, ConceptLattice) else lattice
    for a in concepts:
        for b in concepts:
            if (a.extent <= b.extent) != (b.intent <= a.intent):
                return False
    return True


def concept_name(i: int) -> str:
    return f"concept_{i}"


def net_from_lattice(lattice: ConceptLattice):
    """Skeleton semantic net: one class per concept, one inclusion link per cover.

    Each class carries its concept's intent as procedures (goals), so the
    inherited procedures of a class equal its intent.
    """
    from .model import FuzzyClass
    from .net import SemanticNet, add_class

    net = SemanticNet()
    # larger extents first, so parents always exist when a class is added
    for i in sorted(range(len(lattice.concepts)),
                    key=lambda k: -len(lattice.concepts[k].extent)):
        net = add_class(
            net,
            FuzzyClass(concept_name(i)),
            procedures=lattice.concepts[i].intent,
            parents=[concept_name(j) for j in lattice.upper_covers(i)],
        )
    return net
