"""Fuzzy inclusion and membership degrees.

The numeric core is :func:`deg_area_inclusion`, the normalised overlap
``sum(min(T, S)) / sum(T)`` over a shared discrete universe. Everything else
composes it: value degrees average the necessary and possible overlaps,
attribute, class and instance degrees take minima over paired parts.

Two knobs shape the composites:

``target``
    Which area of a system value a user area is compared against:
    ``"possible"`` (default), ``"necessary"`` or ``"avg"`` (mean of both).
``pairing``
    How linguistic variables of two attributes are paired: ``"best"`` pairs
    each variable with the counterpart maximising its degree, ``"strict"``
    pairs identical names and scores unmatched variables 0.
"""

from __future__ import annotations

from typing import Iterable, Literal, Union

from .errors import (
    DomainMismatch,
    EmptyNumeratorBase,
    NoPairableAttributes,
    NoPairableVariables,
)
from .model import (
    TOL,
    FuzzyArea,
    FuzzyClass,
    FuzzyInstance,
    SystemAttribute,
    SystemValue,
    UserAttribute,
    UserValue,
)

Target = Literal["possible", "necessary", "avg"]
Pairing = Literal["best", "strict"]
Couple = tuple[float, float]


def _same_domain(t, s):
    if t.domain != s.domain:
        raise DomainMismatch(f"{t.domain.name!r} vs {s.domain.name!r}")


def _clip(x: float) -> float:
    return 0.0 if x < 0.0 else 1.0 if x > 1.0 else x


def area_intersection(t: FuzzyArea, s: FuzzyArea) -> dict[str, float]:
    """Pointwise minimum of two areas, as a plain ``value -> degree`` dict.

    The result may be empty, so it is not returned as a :class:`FuzzyArea`
    (which forbids empty support).
    """
    _same_domain(t, s)
    return {
        y: min(d, s.entries[y]) for y, d in t.entries.items() if y in s.entries
    }


def deg_area_inclusion(t: FuzzyArea, s: FuzzyArea) -> float:
    _same_domain(t, s)
    base = t.total()
    if base <= 0.0:
        raise EmptyNumeratorBase("inclusion of an area with zero total membership")
    return _clip(sum(area_intersection(t, s).values()) / base)


def value_couple(t: SystemValue, s: SystemValue) -> Couple:
    """(necessary, possible) inclusion degrees of ``t`` in ``s``."""
    _same_domain(t, s)
    return (
        deg_area_inclusion(t.necessary, s.necessary),
        deg_area_inclusion(t.possible, s.possible),
    )


def deg_system_value_inclusion(t: SystemValue, s: SystemValue) -> float:
    _same_domain(t, s)
    if t.same_areas(s):
        return 1.0
    n, p = value_couple(t, s)
    return (n + p) / 2


def deg_user_value_inclusion(
    t: Union[FuzzyArea, UserValue], s: SystemValue, target: Target = "possible"
) -> float:
    area = t.area if isinstance(t, UserValue) else t
    _same_domain(area, s)
    if target == "possible":
        return deg_area_inclusion(area, s.possible)
    if target == "necessary":
        return deg_area_inclusion(area, s.necessary)
    if target == "avg":
        return (deg_area_inclusion(area, s.necessary) + deg_area_inclusion(area, s.possible)) / 2
    raise ValueError(f"unknown target {target!r}")


def _variables(a: Union[SystemAttribute, UserAttribute]):
    if isinstance(a, UserAttribute):
        return list(a.labels.items())
    return list(a.values.items())


def pair_degree(t, s: SystemValue, target: Target) -> float:
    if isinstance(t, SystemValue):
        return deg_system_value_inclusion(t, s)
    return deg_user_value_inclusion(t, s, target)


def pair_couple(t, s: SystemValue, target: Target) -> Couple:
    if isinstance(t, SystemValue):
        if t.same_areas(s):
            return (1.0, 1.0)
        return value_couple(t, s)
    d = deg_user_value_inclusion(t, s, target)
    return (d, d)


def best_partner(t, b: SystemAttribute, target: Target = "possible"):
    """Value of ``b`` maximising the degree of ``t`` in it; ties go to the smaller name.

    Returns ``(name, degree)``.
    """
    if not b.values:
        raise NoPairableVariables(f"attribute {b.name!r} has no values")
    scored = [(pair_degree(t, s, target), name) for name, s in b.values.items()]
    deg, name = min(scored, key=lambda x: (-x[0], x[1]))
    return name, deg


def paired_variables(
    a: Union[SystemAttribute, UserAttribute],
    b: SystemAttribute,
    pairing: Pairing,
    target: Target = "possible",
):
    """Yield ``(variable, partner-or-None)`` for every variable of ``a``."""
    _same_domain(a, b)
    variables = _variables(a)
    if not variables or not b.values:
        raise NoPairableVariables(f"{a.name!r} or {b.name!r} has no linguistic variables")
    for name, t in variables:
        if pairing == "strict":
            yield t, b.values.get(name)
        elif pairing == "best":
            yield t, b.values[best_partner(t, b, target)[0]]
        else:
            raise ValueError(f"unknown pairing {pairing!r}")


def deg_attribute_inclusion(
    a: Union[SystemAttribute, UserAttribute],
    b: SystemAttribute,
    pairing: Pairing | None = None,
    target: Target = "possible",
) -> float:
    pairing = pairing or "best"
    return min(
        0.0 if s is None else pair_degree(t, s, target)
        for t, s in paired_variables(a, b, pairing, target)
    )


def attribute_couple(
    a: Union[SystemAttribute, UserAttribute],
    b: SystemAttribute,
    pairing: Pairing | None = None,
    target: Target = "possible",
) -> Couple:
    """Minimum necessary and minimum possible degree over paired variables."""
    pairing = pairing or "best"
    couples = [
        (0.0, 0.0) if s is None else pair_couple(t, s, target)
        for t, s in paired_variables(a, b, pairing, target)
    ]
    return min(c[0] for c in couples), min(c[1] for c in couples)


def shared_attributes(left: Iterable[str], right: Iterable[str], what: str) -> list[str]:
    right = set(right)
    names = [n for n in left if n in right]
    if not names:
        raise NoPairableAttributes(f"no attribute names in common for {what}")
    return names


def deg_class_inclusion(
    c1: FuzzyClass, c2: FuzzyClass, pairing: Pairing | None = None, target: Target = "possible"
) -> float:
    names = shared_attributes(c1.attributes, c2.attributes, f"{c1.name!r} in {c2.name!r}")
    return min(
        deg_attribute_inclusion(c1.attributes[n], c2.attributes[n], pairing, target)
        for n in names
    )


def class_couple(
    c1: FuzzyClass, c2: FuzzyClass, pairing: Pairing | None = None, target: Target = "possible"
) -> Couple:
    names = shared_attributes(c1.attributes, c2.attributes, f"{c1.name!r} in {c2.name!r}")
    couples = [attribute_couple(c1.attributes[n], c2.attributes[n], pairing, target) for n in names]
    return min(c[0] for c in couples), min(c[1] for c in couples)


def deg_value_membership(value, attribute: SystemAttribute, target: Target = "possible") -> float:
    """Degree to which one instance slot belongs to a class attribute.

    The slot is scored against its best-matching value of the attribute.
    """
    _same_domain(value, attribute)
    return best_partner(value, attribute, target)[1]


def value_membership_couple(value, attribute: SystemAttribute, target: Target = "possible") -> Couple:
    _same_domain(value, attribute)
    name, _ = best_partner(value, attribute, target)
    return pair_couple(value, attribute.values[name], target)


def deg_instance_membership(
    instance: FuzzyInstance, cls: FuzzyClass, target: Target = "possible"
) -> float:
    names = shared_attributes(
        instance.values, cls.attributes, f"instance {instance.name!r} in {cls.name!r}"
    )
    return min(deg_value_membership(instance.values[n], cls.attributes[n], target) for n in names)


def instance_couple(
    instance: FuzzyInstance, cls: FuzzyClass, target: Target = "possible"
) -> Couple:
    names = shared_attributes(
        instance.values, cls.attributes, f"instance {instance.name!r} in {cls.name!r}"
    )
    couples = [value_membership_couple(instance.values[n], cls.attributes[n], target) for n in names]
    return min(c[0] for c in couples), min(c[1] for c in couples)


def consistent(couple: Couple) -> bool:
    return couple[0] <= couple[1] + TOL
