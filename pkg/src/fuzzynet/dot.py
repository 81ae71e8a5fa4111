"""Graphviz DOT rendering of concept lattices and semantic nets."""

from __future__ import annotations

import json
from typing import Union

from .errors import NoPairableAttributes
from .lattice import ConceptLattice, concept_name
from .net import SemanticNet, value_kind_of_link


def _q(text: str) -> str:
    # JSON string escaping is a valid DOT quoted string
    return json.dumps(text, ensure_ascii=False)


def _set(names) -> str:
    return "{" + ", ".join(sorted(names)) + "}"


def couple_label(necessity: float, possibility: float) -> str:
    return f"N={necessity:.3f} P={possibility:.3f}"


def lattice_dot(lattice: ConceptLattice, name: str = "lattice") -> str:
    lines = [f"digraph {_q(name)} {{", "  rankdir=BT;", "  node [shape=box];"]
    for i, c in enumerate(lattice.concepts):
        label = f"{_set(c.intent)}\n{_set(c.extent)}"
        lines.append(f"  {concept_name(i)} [label={_q(label)}];")
    for lo, hi in lattice.hasse:
        lines.append(f"  {concept_name(lo)} -> {concept_name(hi)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def net_dot(net: SemanticNet, name: str = "net") -> str:
    lines = [f"digraph {_q(name)} {{", "  rankdir=BT;", "  node [shape=box];"]
    for cname in sorted(net.classes):
        cls = net.classes[cname]
        rows = [cname]
        rows += [f"{a}: {_set(attr.values)}" for a, attr in cls.attributes.items()]
        procs = net.procedures.get(cname)
        if procs:
            rows.append(f"procedures: {_set(procs)}")
        label = "\n".join(rows)
        lines.append(f"  {_q(cname)} [label={_q(label)}];")
    for child, parent in sorted(net.inclusion_links):
        try:
            link = value_kind_of_link(net, child, parent)
        except NoPairableAttributes:
            lines.append(f"  {_q(child)} -> {_q(parent)};")
            continue
        label = couple_label(link.necessity, link.possibility)
        lines.append(f"  {_q(child)} -> {_q(parent)} [label={_q(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(graph: Union[ConceptLattice, SemanticNet], name: str | None = None) -> str:
    if isinstance(graph, ConceptLattice):
        return lattice_dot(graph, name or "lattice")
    return net_dot(graph, name or "net")
