"""Class/instance network with valued links, inheritance and label learning.

A :class:`SemanticNet` is an immutable snapshot. Every mutating operation
(`add_class`, `learn_user_label`, ...) returns a new net and leaves the
argument untouched, so readers may share a snapshot freely.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from types import MappingProxyType
from typing import Iterable, Literal, Mapping, Optional, Union

from . import inclusion as inc
from .errors import (
    CycleDetected,
    DomainMismatch,
    DuplicateName,
    NoPairableAttributes,
    UnknownAttribute,
    UnknownClass,
    UnknownInstance,
    UnknownLabel,
    UnknownParent,
    WrongAreaKind,
)
from .model import (
    TOL,
    Domain,
    FuzzyArea,
    FuzzyClass,
    FuzzyInstance,
    SystemAttribute,
    SystemValue,
    UserValue,
)

log = logging.getLogger(__name__)

LinkKind = Literal["kind-of", "is-a"]


def _frozen(d: Mapping) -> Mapping:
    return MappingProxyType(dict(d))


@dataclass(frozen=True)
class ValuedLink:
    kind: LinkKind
    source: str
    target: str
    necessity: float
    possibility: float

    @property
    def couple(self) -> tuple[float, float]:
        return (self.necessity, self.possibility)

    @property
    def consistent(self) -> bool:
        """False when necessity exceeds possibility.

        Computed links can break the ordering even though every input value
        respects it; such links are kept and flagged rather than rejected.
        """
        return self.necessity <= self.possibility + TOL


@dataclass(frozen=True)
class Match:
    target: str
    degree: float
    couple: tuple[float, float]
    attribute: Optional[str] = None


@dataclass(frozen=True)
class MatchResult:
    query: tuple[str, ...]
    entries: tuple[Match, ...]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def best(self) -> Optional[Match]:
        return self.entries[0] if self.entries else None


def _ranked(matches: Iterable[Match]) -> tuple[Match, ...]:
    return tuple(sorted(matches, key=lambda m: (-m.degree, m.target)))


@dataclass(frozen=True)
class SemanticNet:
    domains: Mapping[str, Domain] = field(default_factory=dict)
    attributes: Mapping[str, SystemAttribute] = field(default_factory=dict)
    classes: Mapping[str, FuzzyClass] = field(default_factory=dict)
    procedures: Mapping[str, frozenset[str]] = field(default_factory=dict)
    parents: Mapping[str, tuple[str, ...]] = field(default_factory=dict)
    instances: Mapping[str, FuzzyInstance] = field(default_factory=dict)
    lexicon: Mapping[str, tuple[str, FuzzyArea]] = field(default_factory=dict)

    def __post_init__(self):
        for f in ("domains", "attributes", "classes", "procedures", "parents",
                  "instances", "lexicon"):
            object.__setattr__(self, f, _frozen(getattr(self, f)))

    @property
    def inclusion_links(self) -> list[tuple[str, str]]:
        return [(child, parent) for child, ps in self.parents.items() for parent in ps]

    def get_class(self, cls: Union[str, FuzzyClass]) -> FuzzyClass:
        if isinstance(cls, FuzzyClass):
            return cls
        try:
            return self.classes[cls]
        except KeyError:
            raise UnknownClass(f"no class named {cls!r}") from None

    def get_instance(self, inst: Union[str, FuzzyInstance]) -> FuzzyInstance:
        if isinstance(inst, FuzzyInstance):
            return inst
        try:
            return self.instances[inst]
        except KeyError:
            raise UnknownInstance(f"no instance named {inst!r}") from None


def add_domain(net: SemanticNet, domain: Domain) -> SemanticNet:
    if domain.name in net.domains:
        raise DuplicateName(f"domain {domain.name!r} already defined")
    return replace(net, domains={**net.domains, domain.name: domain})


def add_attribute(net: SemanticNet, attribute: SystemAttribute) -> SemanticNet:
    if attribute.name in net.attributes:
        raise DuplicateName(f"attribute {attribute.name!r} already defined")
    domains = dict(net.domains)
    known = domains.setdefault(attribute.domain.name, attribute.domain)
    if known != attribute.domain:
        raise DomainMismatch(f"domain {attribute.domain.name!r} redefined by {attribute.name!r}")
    return replace(net, domains=domains, attributes={**net.attributes, attribute.name: attribute})


def _ancestors(net: SemanticNet, name: str, parents=None) -> set[str]:
    parents = net.parents if parents is None else parents
    seen: set[str] = set()
    stack = list(parents.get(name, ()))
    while stack:
        p = stack.pop()
        if p not in seen:
            seen.add(p)
            stack.extend(parents.get(p, ()))
    return seen


def add_class(
    net: SemanticNet,
    cls: FuzzyClass,
    procedures: Iterable[str] = (),
    parents: Iterable[str] = (),
) -> SemanticNet:
    if cls.name in net.classes:
        raise DuplicateName(f"class {cls.name!r} already defined")
    parents = tuple(sorted(set(parents)))
    if cls.name in parents:
        raise CycleDetected(f"class {cls.name!r} cannot be its own parent")
    for p in parents:
        if p not in net.classes:
            raise UnknownParent(f"parent {p!r} of {cls.name!r} is not a class")
    return replace(
        net,
        classes={**net.classes, cls.name: cls},
        procedures={**net.procedures, cls.name: frozenset(procedures)},
        parents={**net.parents, cls.name: parents},
    )


def add_link(net: SemanticNet, child: str, parent: str) -> SemanticNet:
    """Add an inclusion link between two existing classes."""
    net.get_class(child)
    if parent not in net.classes:
        raise UnknownParent(f"parent {parent!r} is not a class")
    if parent == child or child in _ancestors(net, parent):
        raise CycleDetected(f"{child!r} -> {parent!r} closes a cycle")
    current = net.parents.get(child, ())
    if parent in current:
        return net
    return replace(net, parents={**net.parents, child: tuple(sorted(current + (parent,)))})


def add_instance(net: SemanticNet, instance: FuzzyInstance) -> SemanticNet:
    if instance.name in net.instances:
        raise DuplicateName(f"instance {instance.name!r} already defined")
    return replace(net, instances={**net.instances, instance.name: instance})


def inherited_procedures(net: SemanticNet, cls: str) -> frozenset[str]:
    """Own procedures plus those of every ancestor, along all inclusion paths."""
    net.get_class(cls)
    out = set(net.procedures.get(cls, ()))
    for a in _ancestors(net, cls):
        out |= net.procedures.get(a, frozenset())
    return frozenset(out)


def value_kind_of_link(
    net: SemanticNet,
    child: Union[str, FuzzyClass],
    parent: Union[str, FuzzyClass],
    pairing: Optional[inc.Pairing] = None,
) -> ValuedLink:
    c1, c2 = net.get_class(child), net.get_class(parent)
    n, p = inc.class_couple(c1, c2, pairing)
    return ValuedLink("kind-of", c1.name, c2.name, n, p)


def value_is_a_link(
    net: SemanticNet,
    instance: Union[str, FuzzyInstance],
    cls: Union[str, FuzzyClass],
    target: inc.Target = "possible",
) -> ValuedLink:
    i, c = net.get_instance(instance), net.get_class(cls)
    n, p = inc.instance_couple(i, c, target)
    return ValuedLink("is-a", i.name, c.name, n, p)


def learn_user_label(
    net: SemanticNet, label: str, attribute: str, area: FuzzyArea
) -> SemanticNet:
    """Bind a user label to an area over ``attribute``'s domain; relearning overwrites."""
    if attribute not in net.attributes:
        raise UnknownAttribute(f"no attribute named {attribute!r}")
    if area.kind != "user":
        raise WrongAreaKind(f"label {label!r} needs a user area, got {area.kind}")
    if area.domain != net.attributes[attribute].domain:
        raise DomainMismatch(
            f"area for {label!r} is over {area.domain.name!r}, "
            f"attribute {attribute!r} over {net.attributes[attribute].domain.name!r}"
        )
    if label in net.lexicon:
        log.info("relearning label %r", label)
    return replace(net, lexicon={**net.lexicon, label: (attribute, area)})


def _system_hits(net: SemanticNet, label: str) -> list[tuple[str, SystemValue]]:
    return [
        (a.name, a.values[label]) for a in sorted(net.attributes.values(), key=lambda a: a.name)
        if label in a.values
    ]


def resolve_label(net: SemanticNet, label: str) -> tuple[str, Union[SystemValue, UserValue]]:
    """Attribute and slot value a query label stands for.

    System value names take precedence over learned labels.
    """
    hits = _system_hits(net, label)
    if hits:
        return hits[0]
    if label in net.lexicon:
        attribute, area = net.lexicon[label]
        return attribute, UserValue(label, area)
    raise UnknownLabel(f"{label!r} is neither a learned label nor a system value")


def _rank_values(net, label, target) -> list[Match]:
    hits = _system_hits(net, label)
    if hits:
        out = []
        for attr_name, t in hits:
            for name, s in net.attributes[attr_name].values.items():
                out.append(Match(name, inc.deg_system_value_inclusion(t, s),
                                 inc.pair_couple(t, s, target), attr_name))
        return out
    attr_name, value = resolve_label(net, label)
    out = []
    for name, s in net.attributes[attr_name].values.items():
        d = inc.deg_user_value_inclusion(value, s, target)
        out.append(Match(name, d, (d, d), attr_name))
    return out


def match_query(
    net: SemanticNet,
    goal: str,
    obj: Optional[str] = None,
    target: inc.Target = "possible",
) -> MatchResult:
    """Rank system items against a query's labels.

    With only a goal label the candidates are the system values of the
    attribute(s) the label belongs to. With an object label as well the query
    becomes a two-slot instance and the candidates are the classes it can be
    paired with.
    """
    if obj is None:
        return MatchResult((goal,), _ranked(_rank_values(net, goal, target)))
    slots: dict[str, Union[SystemValue, UserValue]] = {}
    for label in (goal, obj):
        attribute, value = resolve_label(net, label)
        if attribute in slots:
            raise ValueError(f"goal and object labels both resolve to attribute {attribute!r}")
        slots[attribute] = value
    query = FuzzyInstance("?query", slots)
    out = []
    for name, cls in net.classes.items():
        try:
            d = inc.deg_instance_membership(query, cls, target)
        except NoPairableAttributes:
            continue
        out.append(Match(name, d, inc.instance_couple(query, cls, target)))
    return MatchResult((goal, obj), _ranked(out))


def classify_instance(
    net: SemanticNet,
    instance: Union[str, FuzzyInstance],
    target: inc.Target = "possible",
) -> list[tuple[str, float]]:
    """Membership of the instance in every pairable class, best first."""
    inst = net.get_instance(instance)
    scored = []
    for name, cls in net.classes.items():
        try:
            scored.append((name, inc.deg_instance_membership(inst, cls, target)))
        except NoPairableAttributes:
            continue
    if not scored:
        raise NoPairableAttributes(f"instance {inst.name!r} pairs with no class")
    return sorted(scored, key=lambda x: (-x[1], x[0]))
