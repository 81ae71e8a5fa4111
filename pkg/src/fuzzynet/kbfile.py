"""JSON knowledge-base documents.

A document has six top-level keys, all optional on input::

    {
      "domains":    {"procedure": ["EraseWithMenu", "EraseWithKey", ...]},
      "attributes": {"goal": {"domain": "procedure",
                              "values": {"Erase": {"necessary": {...}, "possible": {...}}}}},
      "classes":    {"Eraser": {"attributes": {"goal": ["Erase"]},
                                "procedures": ["erase"], "parents": []}},
      "instances":  {"gum-item": {"values": {"goal": {"user": "Gum", "area": {...}}}}},
      "lexicon":    {"Gum": {"attribute": "goal", "area": {...}}},
      "context":    {"objects": [...], "properties": [...], "incidence": [[0, 1], ...]}
    }

Instance slots are either ``{"system": NAME}`` (a value of the attribute),
``{"system": NAME, "necessary": {...}, "possible": {...}}`` (an inline
value), or ``{"user": LABEL, "area": {...}}``.

:func:`serialize_kb` writes a canonical form: sorted keys, two-space indent,
incidence rows on one line, degrees at full double precision.
"""

from __future__ import annotations

import json
import re
from typing import Any

from .errors import KbError, ParseError, ValidationError
from .lattice import BinaryContext
from .model import (
    Domain,
    FuzzyArea,
    FuzzyClass,
    FuzzyInstance,
    SystemAttribute,
    SystemValue,
    UserValue,
    make_area,
)
from .net import SemanticNet, add_class, add_instance, learn_user_label

TOP_KEYS = ("domains", "attributes", "classes", "instances", "lexicon", "context")


class _Reader:
    """Walks the decoded JSON, tracking the path for error messages."""

    def __init__(self):
        self.path: list[str] = []

    def where(self) -> str:
        return "/" + "/".join(self.path) if self.path else "/"

    def expect(self, value, kind, what):
        if not isinstance(value, kind):
            raise ParseError(f"{self.where()}: {what} must be {_kind_name(kind)}, got {type(value).__name__}")
        return value

    def mapping(self, doc, key, required=False) -> dict:
        if key not in doc:
            if required:
                raise ParseError(f"{self.where()}: missing key {key!r}")
            return {}
        return self.expect(doc[key], dict, repr(key))

    def seq(self, doc, key, required=False) -> list:
        if key not in doc:
            if required:
                raise ParseError(f"{self.where()}: missing key {key!r}")
            return []
        return self.expect(doc[key], list, repr(key))

    def string(self, doc, key) -> str:
        if key not in doc:
            raise ParseError(f"{self.where()}: missing key {key!r}")
        return self.expect(doc[key], str, repr(key))


def _kind_name(kind):
    return {dict: "an object", list: "an array", str: "a string"}.get(kind, kind.__name__)


def _guard(reader: _Reader, fn, *args):
    try:
        return fn(*args)
    except ParseError:
        raise
    except KbError as exc:
        raise ValidationError(f"{reader.where()}: {type(exc).__name__}: {exc}") from exc


def _area(reader: _Reader, kind, domain: Domain, raw) -> FuzzyArea:
    reader.expect(raw, dict, f"{kind} area")
    for v, d in raw.items():
        if isinstance(d, bool) or not isinstance(d, (int, float)):
            raise ParseError(f"{reader.where()}: degree of {v!r} must be a number")
    return _guard(reader, make_area, kind, domain, raw.items())


def _system_value(reader: _Reader, name, domain, raw) -> SystemValue:
    reader.expect(raw, dict, f"value {name!r}")
    reader.path.append("necessary")
    necessary = _area(reader, "necessary", domain, reader.mapping(raw, "necessary", True))
    reader.path[-1] = "possible"
    possible = _area(reader, "possible", domain, reader.mapping(raw, "possible", True))
    reader.path.pop()
    return _guard(reader, SystemValue, name, necessary, possible)


def _context(reader: _Reader, raw) -> BinaryContext:
    objects = reader.seq(raw, "objects")
    properties = reader.seq(raw, "properties")
    rows = reader.seq(raw, "incidence")
    for i, row in enumerate(rows):
        reader.path.append(f"incidence[{i}]")
        reader.expect(row, list, "incidence row")
        for c in row:
            if c not in (0, 1) or isinstance(c, float):
                raise ParseError(f"{reader.where()}: incidence cells must be 0 or 1")
        reader.path.pop()
    for n in objects + properties:
        reader.expect(n, str, "object/property identifier")
    return _guard(reader, BinaryContext, tuple(objects), tuple(properties),
                  tuple(tuple(bool(c) for c in r) for r in rows))


def _add_classes(reader: _Reader, net: SemanticNet, specs: dict) -> SemanticNet:
    pending = dict(specs)
    while pending:
        ready = [n for n, (_, _, parents) in pending.items()
                 if all(p in net.classes for p in parents)]
        if not ready:
            name = min(pending)
            missing = [p for p in pending[name][2] if p not in net.classes and p not in pending]
            reader.path[:] = ["classes", name]
            if missing:
                raise ValidationError(
                    f"{reader.where()}: UnknownParent: {missing[0]!r} is not a class")
            raise ValidationError(f"{reader.where()}: CycleDetected: inclusion links form a cycle")
        for name in sorted(ready):
            cls, procedures, parents = pending.pop(name)
            reader.path[:] = ["classes", name]
            net = _guard(reader, add_class, net, cls, procedures, parents)
    return net


def load_document(doc: Any) -> tuple[SemanticNet, BinaryContext]:
    """Validate an already-decoded JSON document."""
    r = _Reader()
    r.expect(doc, dict, "document")
    unknown = sorted(set(doc) - set(TOP_KEYS))
    if unknown:
        raise ParseError(f"/: unknown top-level key {unknown[0]!r}")

    domains: dict[str, Domain] = {}
    for name, values in r.mapping(doc, "domains").items():
        r.path[:] = ["domains", name]
        r.expect(values, list, "domain values")
        for v in values:
            r.expect(v, str, "linguistic value")
        domains[name] = _guard(r, Domain, name, tuple(values))

    attributes: dict[str, SystemAttribute] = {}
    r.path[:] = []
    for name, raw in r.mapping(doc, "attributes").items():
        r.path[:] = ["attributes", name]
        r.expect(raw, dict, f"attribute {name!r}")
        dname = r.string(raw, "domain")
        if dname not in domains:
            raise ValidationError(f"{r.where()}: UnknownDomain: {dname!r} is not declared")
        values = []
        for vname, vraw in r.mapping(raw, "values").items():
            r.path[2:] = ["values", vname]
            values.append(_system_value(r, vname, domains[dname], vraw))
        r.path[2:] = []
        attributes[name] = _guard(r, SystemAttribute, name, domains[dname], values)

    net = SemanticNet(domains=domains, attributes=attributes)

    r.path[:] = []
    class_specs = {}
    for name, raw in r.mapping(doc, "classes").items():
        r.path[:] = ["classes", name]
        r.expect(raw, dict, f"class {name!r}")
        parts = []
        for aname, vnames in r.mapping(raw, "attributes").items():
            r.path[2:] = ["attributes", aname]
            if aname not in attributes:
                raise ValidationError(f"{r.where()}: UnknownAttribute: {aname!r}")
            r.expect(vnames, list, "class attribute values")
            parts.append(_guard(r, attributes[aname].restrict, vnames))
        r.path[2:] = []
        procedures = r.seq(raw, "procedures")
        parents = r.seq(raw, "parents")
        for x in procedures + parents:
            r.expect(x, str, "procedure/parent name")
        class_specs[name] = (FuzzyClass(name, parts), procedures, parents)
    net = _add_classes(r, net, class_specs)

    r.path[:] = []
    for name, raw in r.mapping(doc, "instances").items():
        r.path[:] = ["instances", name]
        r.expect(raw, dict, f"instance {name!r}")
        slots = {}
        for aname, sraw in r.mapping(raw, "values").items():
            r.path[2:] = ["values", aname]
            if aname not in attributes:
                raise ValidationError(f"{r.where()}: UnknownAttribute: {aname!r}")
            slots[aname] = _slot(r, attributes[aname], sraw)
        r.path[2:] = []
        net = _guard(r, add_instance, net, FuzzyInstance(name, slots))

    r.path[:] = []
    for label, raw in r.mapping(doc, "lexicon").items():
        r.path[:] = ["lexicon", label]
        r.expect(raw, dict, f"lexicon entry {label!r}")
        aname = r.string(raw, "attribute")
        if aname not in attributes:
            raise ValidationError(f"{r.where()}: UnknownAttribute: {aname!r}")
        area = _area(r, "user", attributes[aname].domain, r.mapping(raw, "area", True))
        net = _guard(r, learn_user_label, net, label, aname, area)

    r.path[:] = []
    context = _context(r, r.mapping(doc, "context")) if "context" in doc else BinaryContext((), (), ())
    return net, context


def _slot(r: _Reader, attribute: SystemAttribute, raw):
    r.expect(raw, dict, "instance slot")
    if "user" in raw:
        label = r.string(raw, "user")
        area = _area(r, "user", attribute.domain, r.mapping(raw, "area", True))
        return UserValue(label, area)
    name = r.string(raw, "system")
    if "necessary" in raw or "possible" in raw:
        return _system_value(r, name, attribute.domain, raw)
    if name not in attribute.values:
        raise ValidationError(
            f"{r.where()}: UnknownDomainValue: attribute {attribute.name!r} has no value {name!r}")
    return attribute.values[name]


def parse_kb(text: str) -> tuple[SemanticNet, BinaryContext]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return load_document(doc)


def read_kb(path) -> tuple[SemanticNet, BinaryContext]:
    with open(path, encoding="utf-8") as fh:
        return parse_kb(fh.read())


# writing

def _area_doc(area: FuzzyArea) -> dict:
    return dict(area.entries)


def _value_doc(v: SystemValue) -> dict:
    return {"necessary": _area_doc(v.necessary), "possible": _area_doc(v.possible)}


def _slot_doc(net: SemanticNet, aname: str, value) -> dict:
    if isinstance(value, UserValue):
        return {"user": value.label, "area": _area_doc(value.area)}
    registered = net.attributes.get(aname)
    if registered is not None and registered.values.get(value.name) == value:
        return {"system": value.name}
    return {"system": value.name, **_value_doc(value)}


def context_doc(context: BinaryContext) -> dict:
    return {
        "objects": list(context.objects),
        "properties": list(context.properties),
        "incidence": [[int(c) for c in row] for row in context.incidence],
    }


def to_document(net: SemanticNet, context: BinaryContext | None = None) -> dict:
    context = context or BinaryContext((), (), ())
    return {
        "domains": {n: list(d.values) for n, d in net.domains.items()},
        "attributes": {
            n: {"domain": a.domain.name,
                "values": {vn: _value_doc(v) for vn, v in a.values.items()}}
            for n, a in net.attributes.items()
        },
        "classes": {
            n: {
                "attributes": {an: sorted(a.values) for an, a in c.attributes.items()},
                "procedures": sorted(net.procedures.get(n, ())),
                "parents": sorted(net.parents.get(n, ())),
            }
            for n, c in net.classes.items()
        },
        "instances": {
            n: {"values": {an: _slot_doc(net, an, v) for an, v in i.values.items()}}
            for n, i in net.instances.items()
        },
        "lexicon": {
            label: {"attribute": aname, "area": _area_doc(area)}
            for label, (aname, area) in net.lexicon.items()
        },
        "context": context_doc(context),
    }


_NUMERIC_ROW = re.compile(r"\[\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\]")


def dumps_canonical(doc: dict) -> str:
    text = json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False)
    text = _NUMERIC_ROW.sub(lambda m: "[" + ", ".join(re.split(r"\s*,\s*", m.group(1))) + "]", text)
    return text + "\n"


def serialize_kb(net: SemanticNet, context: BinaryContext | None = None) -> str:
    return dumps_canonical(to_document(net, context))


def write_kb(path, net: SemanticNet, context: BinaryContext | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_kb(net, context))


def read_context(path) -> BinaryContext:
    """A context file, or the ``context`` section of a knowledge-base file."""
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.loads(fh.read())
        except json.JSONDecodeError as exc:
            raise ParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if isinstance(doc, dict) and "context" in doc:
        doc = doc["context"]
    r = _Reader()
    r.expect(doc, dict, "context")
    return _context(r, doc)

