"""Command-line interface and interactive query session.

Exit codes: 0 success, 1 knowledge-base or query error, 2 usage error.
"""

from __future__ import annotations

import argparse
import io
import logging
import sys
from typing import Iterable, Optional, TextIO

from . import inclusion as inc
from .dot import export_dot
from .errors import KbError, UnknownLabel
from .kbfile import read_context, read_kb, write_kb
from .lattice import build_lattice, concept_name
from .model import FuzzyArea, SystemValue, make_area
from .net import (
    MatchResult,
    SemanticNet,
    classify_instance,
    learn_user_label,
    match_query,
    resolve_label,
    value_is_a_link,
)


PROMPT = "fuzzynet> "


def _fmt(x: float) -> str:
    return f"{x:.3f}"


def format_table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in [headers] + rows) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in [headers] + rows]
    return "\n".join(lines)


def format_match(result: MatchResult) -> str:
    rows = [
        [str(k), m.target, _fmt(m.degree), _fmt(m.couple[0]), _fmt(m.couple[1])]
        for k, m in enumerate(result, 1)
    ]
    return format_table(["rank", "target", "degree", "necessity", "possibility"], rows)


def label_areas(net: SemanticNet, label: str) -> tuple[FuzzyArea, FuzzyArea, object]:
    """(necessary-side area, possible-side area, value) for a system or user label."""
    _, value = resolve_label(net, label)
    if isinstance(value, SystemValue):
        return value.necessary, value.possible, value
    return value.area, value.area, value


def label_degree(net: SemanticNet, source: str, target: str, mode: str = "avg") -> float:
    tn, tp, tv = label_areas(net, source)
    sn, sp, sv = label_areas(net, target)
    if mode == "n":
        return inc.deg_area_inclusion(tn, sn)
    if mode == "p":
        return inc.deg_area_inclusion(tp, sp)
    if isinstance(tv, SystemValue) and isinstance(sv, SystemValue):
        return inc.deg_system_value_inclusion(tv, sv)
    return (inc.deg_area_inclusion(tn, sn) + inc.deg_area_inclusion(tp, sp)) / 2


# interactive session

def parse_area_line(line: str) -> list[tuple[str, float]]:
    """``EraseWithMenu=1 CutWithMenu=0.5`` -> pairs. Commas also separate."""
    pairs = []
    for token in line.replace(",", " ").split():
        value, sep, degree = token.partition("=")
        if not sep or not value:
            raise ValueError(f"expected value=degree, got {token!r}")
        try:
            pairs.append((value, float(degree)))
        except ValueError:
            raise ValueError(f"degree {degree!r} is not a number") from None
    return pairs


class Session:
    """Line-driven query loop over one knowledge-base snapshot.

    Queries are ``goal [object]``. An unknown label starts an elicitation: the
    session asks which attribute the label belongs to and for its user area,
    learns it, then retries the query. Any failure leaves the snapshot as it was.
    """

    def __init__(self, net: SemanticNet, out: TextIO, echo: bool = True):
        self.net = net
        self.out = out
        self.echo = echo

    def _say(self, text: str = ""):
        self.out.write(text + "\n")

    def _ask(self, prompt: str, lines) -> Optional[str]:
        self.out.write(prompt)
        line = next(lines, None)
        if line is None:
            self._say()
            return None
        line = line.rstrip("\n")
        if self.echo:
            self._say(line)
        return line.strip()

    def _elicit(self, label: str, lines) -> Optional[SemanticNet]:
        self._say(f"What is [{label}]?")
        names = sorted(self.net.attributes)
        default = names[0] if len(names) == 1 else None
        hint = f" [{default}]" if default else f" ({', '.join(names)})"
        attribute = self._ask(f"attribute{hint}> ", lines)
        if attribute is None:
            return None
        attribute = attribute or default
        if attribute not in self.net.attributes:
            self._say(f"error: UnknownAttribute: {attribute!r}")
            return None
        domain = self.net.attributes[attribute].domain
        self._say(f"values: {' '.join(domain.values)}")
        raw = self._ask("area (value=degree ...)> ", lines)
        if raw is None:
            return None
        try:
            area = make_area("user", domain, parse_area_line(raw))
            net = learn_user_label(self.net, label, attribute, area)
        except (KbError, ValueError) as exc:
            self._say(f"error: {type(exc).__name__}: {exc}")
            return None
        self._say(f"learned {label} as {attribute}")
        return net

    def query(self, tokens: list[str], lines) -> None:
        if len(tokens) > 2:
            self._say("error: expected 'goal [object]'")
            return
        goal, obj = tokens[0], (tokens[1] if len(tokens) > 1 else None)
        tried: set[str] = set()
        while True:
            try:
                self._say(format_match(match_query(self.net, goal, obj)))
                return
            except UnknownLabel:
                label = next(t for t in tokens if _is_unknown(self.net, t))
                if label in tried:
                    return
                tried.add(label)
                learned = self._elicit(label, lines)
                if learned is None:
                    return
                self.net = learned
            except (KbError, ValueError) as exc:
                self._say(f"error: {type(exc).__name__}: {exc}")
                return

    def run(self, lines: Iterable[str]) -> None:
        lines = iter(lines)
        while True:
            line = self._ask(PROMPT, lines)
            if line is None:
                break
            if not line:
                continue
            if line in (":quit", ":q", ":exit"):
                self._say("bye")
                break
            if line == ":help":
                self._say("enter 'goal [object]' labels; :labels lists learned labels; :quit exits")
                continue
            if line == ":labels":
                for label, (attribute, _) in sorted(self.net.lexicon.items()):
                    self._say(f"{label}  ({attribute})")
                continue
            self.query(line.split(), lines)


def _is_unknown(net: SemanticNet, label: str) -> bool:
    try:
        resolve_label(net, label)
    except UnknownLabel:
        return True
    return False


def repl_session(
    net: SemanticNet, lines: Iterable[str], echo: bool = True
) -> tuple[SemanticNet, str]:
    """Run a session over ``lines``; returns the final snapshot and the transcript."""
    out = io.StringIO()
    session = Session(net, out, echo=echo)
    session.run(lines)
    return session.net, out.getvalue()


# commands

def cmd_lattice_build(args) -> int:
    context = read_context(args.context)
    lattice = build_lattice(context)
    for i, c in enumerate(lattice.concepts):
        print(f"{concept_name(i)}  extent={_braces(c.extent, context.objects)}"
              f"  intent={_braces(c.intent, context.properties)}")
    print(f"{len(lattice.concepts)} concepts, {len(lattice.hasse)} covering edges")
    if args.dot:
        _write(args.dot, export_dot(lattice))
    return 0


def _braces(names, order) -> str:
    return "{" + ", ".join(n for n in order if n in names) + "}"


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_deg(args) -> int:
    net, _ = read_kb(args.kb)
    print(_fmt(label_degree(net, args.source, args.target, args.mode)))
    return 0


def cmd_classify(args) -> int:
    net, _ = read_kb(args.kb)
    ranked = classify_instance(net, args.instance)
    rows = []
    for k, (cname, degree) in enumerate(ranked, 1):
        link = value_is_a_link(net, args.instance, cname)
        rows.append([str(k), cname, _fmt(degree), _fmt(link.necessity), _fmt(link.possibility)])
    print(format_table(["rank", "class", "degree", "necessity", "possibility"], rows))
    return 0


def cmd_match(args) -> int:
    net, _ = read_kb(args.kb)
    print(format_match(match_query(net, args.goal, args.object)))
    return 0


def cmd_repl(args) -> int:
    net, context = read_kb(args.kb)
    session = Session(net, sys.stdout, echo=not sys.stdin.isatty())
    session.run(sys.stdin)
    if args.save:
        write_kb(args.save, session.net, context)
        print(f"saved {args.save}")
    return 0


def cmd_validate(args) -> int:
    net, context = read_kb(args.kb)
    print(
        f"ok: {len(net.domains)} domains, {len(net.attributes)} attributes, "
        f"{len(net.classes)} classes, {len(net.instances)} instances, "
        f"{len(net.lexicon)} labels, context {len(context.objects)}x{len(context.properties)}"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzynet",
        description="Concept lattices and fuzzy inclusion degrees over a knowledge base",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    lattice = sub.add_parser("lattice", help="concept lattice tools")
    lsub = lattice.add_subparsers(dest="lattice_command", required=True)
    build = lsub.add_parser("build", help="enumerate the concepts of a binary context")
    build.add_argument("--context", required=True, help="context JSON (or a KB file)")
    build.add_argument("--dot", help="write the Hasse diagram as DOT ('-' for stdout)")
    build.set_defaults(func=cmd_lattice_build)

    deg = sub.add_parser("deg", help="inclusion degree between two labels")
    deg.add_argument("--kb", required=True)
    deg.add_argument("--from", dest="source", required=True, metavar="LABEL")
    deg.add_argument("--to", dest="target", required=True, metavar="VALUE")
    deg.add_argument("--mode", choices=["n", "p", "avg"], default="avg",
                     help="necessary areas, possible areas, or their mean (default)")
    deg.set_defaults(func=cmd_deg)

    classify = sub.add_parser("classify", help="rank classes for an instance")
    classify.add_argument("--kb", required=True)
    classify.add_argument("--instance", required=True)
    classify.set_defaults(func=cmd_classify)

    match = sub.add_parser("match", help="rank system items for query labels")
    match.add_argument("--kb", required=True)
    match.add_argument("--goal", required=True, metavar="LABEL")
    match.add_argument("--object", metavar="LABEL")
    match.set_defaults(func=cmd_match)

    repl = sub.add_parser("repl", help="interactive query session on stdin")
    repl.add_argument("--kb", required=True)
    repl.add_argument("--save", metavar="OUT", help="write the KB (with learned labels) on exit")
    repl.set_defaults(func=cmd_repl)

    validate = sub.add_parser("validate", help="load and check a KB file")
    validate.add_argument("--kb", required=True)
    validate.set_defaults(func=cmd_validate)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except KbError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
