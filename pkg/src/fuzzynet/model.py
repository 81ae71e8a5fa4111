"""Domain types: discrete universes, fuzzy areas, attributes, classes, instances.

All objects are immutable once built. A :class:`FuzzyArea` is its own
membership function: total over the domain, with absent values at degree 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Literal, Mapping, Union

from .errors import (
    DegreeOutOfRange,
    DomainMismatch,
    DuplicateValue,
    EmptyArea,
    EmptyDomain,
    InconsistentValue,
    UnknownDomainValue,
    WrongAreaKind,
)

TOL = 1e-9

AreaKind = Literal["necessary", "possible", "user"]
AREA_KINDS = ("necessary", "possible", "user")


@dataclass(frozen=True)
class Domain:
    """A finite universe of linguistic values."""

    name: str
    values: tuple[str, ...]

    def __post_init__(self):
        values = tuple(self.values)
        if not values:
            raise EmptyDomain(f"domain {self.name!r} has no values")
        seen = set()
        for v in values:
            if v in seen:
                raise DuplicateValue(f"value {v!r} repeated in domain {self.name!r}")
            seen.add(v)
        object.__setattr__(self, "values", values)

    def __contains__(self, value) -> bool:
        return value in self.values


@dataclass(frozen=True, eq=True)
class FuzzyArea:
    kind: AreaKind
    domain: Domain
    entries: Mapping[str, float]

    def __hash__(self):
        return hash((self.kind, self.domain, frozenset(self.entries.items())))

    def __repr__(self):
        body = ", ".join(f"{v}: {d:g}" for v, d in self.entries.items())
        return f"FuzzyArea({self.kind}, {self.domain.name}, {{{body}}})"

    @property
    def support(self) -> frozenset[str]:
        return frozenset(self.entries)

    def total(self) -> float:
        return sum(self.entries.values())

    def __call__(self, y: str) -> float:
        return membership(self, y)

    def same_degrees(self, other: "FuzzyArea", tol: float = TOL) -> bool:
        """Support-plus-degrees equality, ignoring the area kind."""
        if self.domain != other.domain or self.support != other.support:
            return False
        return all(abs(d - other.entries[v]) <= tol for v, d in self.entries.items())

    def with_kind(self, kind: AreaKind) -> "FuzzyArea":
        return make_area(kind, self.domain, self.entries.items())


def _check_degree(value: str, degree) -> float:
    try:
        d = float(degree)
    except (TypeError, ValueError):
        raise DegreeOutOfRange(f"degree for {value!r} is not a number: {degree!r}") from None
    if math.isnan(d) or d < -TOL or d > 1 + TOL:
        raise DegreeOutOfRange(f"degree {degree!r} for {value!r} outside [0, 1]")
    return min(d, 1.0)


def make_area(
    kind: AreaKind, domain: Domain, entries: Iterable[tuple[str, float]]
) -> FuzzyArea:
    """Build a validated fuzzy area.

    Zero degrees are dropped; entries are stored in domain order.
    """
    if kind not in AREA_KINDS:
        raise WrongAreaKind(f"unknown area kind {kind!r}")
    raw: dict[str, float] = {}
    for value, degree in entries:
        if value not in domain:
            raise UnknownDomainValue(f"{value!r} is not in domain {domain.name!r}")
        if value in raw:
            raise DuplicateValue(f"value {value!r} listed twice")
        raw[value] = _check_degree(value, degree)
    kept = {v: raw[v] for v in domain.values if v in raw and raw[v] > TOL}
    if not kept:
        raise EmptyArea(f"{kind} area over {domain.name!r} has empty support")
    return FuzzyArea(kind, domain, MappingProxyType(kept))


def membership(area: FuzzyArea, y: str) -> float:
    if y not in area.domain:
        raise UnknownDomainValue(f"{y!r} is not in domain {area.domain.name!r}")
    return area.entries.get(y, 0.0)


@dataclass(frozen=True)
class SystemValue:
    """An expert-defined linguistic value with its necessary and possible areas."""

    name: str
    necessary: FuzzyArea
    possible: FuzzyArea

    def __post_init__(self):
        if self.necessary.kind != "necessary" or self.possible.kind != "possible":
            raise WrongAreaKind(f"{self.name!r}: expected (necessary, possible) areas")
        if self.necessary.domain != self.possible.domain:
            raise DomainMismatch(f"{self.name!r}: areas over different domains")
        for y, d in self.necessary.entries.items():
            if d > self.possible(y) + TOL:
                raise InconsistentValue(
                    f"{self.name!r}: necessity {d:g} exceeds possibility "
                    f"{self.possible(y):g} at {y!r}"
                )

    @property
    def domain(self) -> Domain:
        return self.necessary.domain

    def same_areas(self, other: "SystemValue") -> bool:
        return self.necessary.same_degrees(other.necessary) and self.possible.same_degrees(
            other.possible
        )


def system_value(
    name: str,
    domain: Domain,
    necessary: Iterable[tuple[str, float]],
    possible: Iterable[tuple[str, float]],
) -> SystemValue:
    return SystemValue(
        name, make_area("necessary", domain, necessary), make_area("possible", domain, possible)
    )


def _frozen_mapping(items, what: str) -> Mapping:
    out = {}
    for key, value in items:
        if key in out:
            raise DuplicateValue(f"{what} {key!r} repeated")
        out[key] = value
    return MappingProxyType(out)


def _items(values):
    if isinstance(values, Mapping):
        return values.items()
    return values


@dataclass(frozen=True)
class SystemAttribute:
    name: str
    domain: Domain
    values: Mapping[str, SystemValue] = field(default_factory=dict)

    def __post_init__(self):
        items = [(v.name, v) for v in self.values.values()] if isinstance(
            self.values, Mapping
        ) else [(v.name, v) for v in self.values]
        for _, v in items:
            if v.domain != self.domain:
                raise DomainMismatch(
                    f"value {v.name!r} is over {v.domain.name!r}, "
                    f"attribute {self.name!r} over {self.domain.name!r}"
                )
        object.__setattr__(self, "values", _frozen_mapping(items, "value"))

    def __hash__(self):
        return hash((self.name, self.domain, tuple(self.values)))

    def restrict(self, names: Iterable[str]) -> "SystemAttribute":
        """Sub-attribute holding only the named values."""
        picked = []
        for n in names:
            if n not in self.values:
                raise UnknownDomainValue(f"attribute {self.name!r} has no value {n!r}")
            picked.append(self.values[n])
        return SystemAttribute(self.name, self.domain, picked)


@dataclass(frozen=True)
class UserAttribute:
    name: str
    domain: Domain
    labels: Mapping[str, FuzzyArea] = field(default_factory=dict)

    def __post_init__(self):
        items = list(_items(self.labels))
        for label, area in items:
            if area.kind != "user":
                raise WrongAreaKind(f"label {label!r} needs a user area, got {area.kind}")
            if area.domain != self.domain:
                raise DomainMismatch(f"label {label!r} area is over {area.domain.name!r}")
        object.__setattr__(self, "labels", _frozen_mapping(items, "label"))

    def __hash__(self):
        return hash((self.name, self.domain, tuple(self.labels)))


@dataclass(frozen=True)
class FuzzyClass:
    """A class as the product of its system attributes."""

    name: str
    attributes: Mapping[str, SystemAttribute] = field(default_factory=dict)

    def __post_init__(self):
        items = (
            [(a.name, a) for a in self.attributes.values()]
            if isinstance(self.attributes, Mapping)
            else [(a.name, a) for a in self.attributes]
        )
        object.__setattr__(self, "attributes", _frozen_mapping(items, "attribute"))

    def __hash__(self):
        return hash((self.name, tuple(self.attributes)))


@dataclass(frozen=True)
class UserValue:
    """An instance slot filled with a user label and its elicited area."""

    label: str
    area: FuzzyArea

    def __post_init__(self):
        if self.area.kind != "user":
            raise WrongAreaKind(f"label {self.label!r} needs a user area")

    @property
    def domain(self) -> Domain:
        return self.area.domain


AttributeValue = Union[SystemValue, UserValue]


@dataclass(frozen=True)
class FuzzyInstance:
    name: str
    values: Mapping[str, AttributeValue] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen_mapping(_items(self.values), "attribute"))

    def __hash__(self):
        return hash((self.name, tuple(self.values)))
