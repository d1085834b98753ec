"""Text format for machines given by one equation per state.

Grammar (one statement per line; ';' also separates statements; '#' starts
a comment):

    alphabet = <k>                       # optional when inferable
    main = <name>                        # optional default root
    <name> = (<name>, ..., <name>)       # identity output map
    <name> = (<name>, ..., <name>) [<y1>, ..., <yk>]

Each equation lists the k sections of a state followed by its output map;
an omitted bracket denotes the identity output map.  Every referenced name
must be defined exactly once.  Letters are 1..k.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import (
    DuplicateDefinition,
    LetterOutOfRange,
    MissingDefinition,
    ParseError,
    UnknownStateName,
)
from .machine import MealyMachine, Transformation, canonicalize

__all__ = ["ParsedAutomaton", "parse_wreath", "wreath_text"]

_ALPHABET_RE = re.compile(r"^alphabet\s*=\s*(\d+)$")
_MAIN_RE = re.compile(r"^main\s*=\s*([A-Za-z_]\w*)$")
_EQUATION_RE = re.compile(
    r"^(?P<name>[A-Za-z_]\w*)\s*=\s*\((?P<sections>[^()]*)\)\s*"
    r"(?:\[(?P<outputs>[^\[\]]*)\])?$"
)
_KEYWORDS = {"alphabet", "main"}


@dataclass
class ParsedAutomaton:
    """All transformations declared in one source text."""

    alphabet_size: int
    transformations: dict = field(repr=False)
    main: str | None = None
    names: tuple = ()

    def __getitem__(self, name):
        try:
            return self.transformations[name]
        except KeyError:
            raise UnknownStateName("no state named %r" % name) from None

    def __contains__(self, name):
        return name in self.transformations

    def main_transformation(self):
        if self.main is None:
            raise UnknownStateName("source declares no main state")
        return self.transformations[self.main]


def parse_wreath(source):
    """Parse equations into one canonical Transformation per declared name."""
    declared_k = None
    main = None
    equations = {}  # name -> (sections, outputs or None, line)
    order = []

    for lineno, raw in enumerate(source.splitlines(), 1):
        line = raw.split("#", 1)[0]
        for statement in line.split(";"):
            statement = statement.strip()
            if not statement:
                continue
            m = _ALPHABET_RE.match(statement)
            if m:
                if declared_k is not None:
                    raise DuplicateDefinition("alphabet declared twice", lineno)
                if equations:
                    raise ParseError("alphabet declaration must precede equations", lineno)
                declared_k = int(m.group(1))
                if declared_k < 1:
                    raise ParseError("alphabet size must be at least 1", lineno)
                continue
            m = _MAIN_RE.match(statement)
            if m:
                if main is not None:
                    raise DuplicateDefinition("main declared twice", lineno)
                main = m.group(1)
                continue
            m = _EQUATION_RE.match(statement)
            if m is None:
                raise ParseError("cannot parse statement %r" % statement, lineno)
            name = m.group("name")
            if name in _KEYWORDS:
                raise ParseError("%r is a reserved word" % name, lineno)
            if name in equations:
                raise DuplicateDefinition("state %r defined twice" % name, lineno)
            sections = [s.strip() for s in m.group("sections").split(",")]
            if sections == [""]:
                raise ParseError("state %r has an empty section tuple" % name, lineno)
            outputs = None
            if m.group("outputs") is not None:
                try:
                    outputs = [int(s.strip()) for s in m.group("outputs").split(",")]
                except ValueError:
                    raise ParseError("output map of %r is not a list of integers" % name, lineno)
            equations[name] = (sections, outputs, lineno)
            order.append(name)

    if not order:
        raise ParseError("source declares no states")

    k = declared_k if declared_k is not None else len(equations[order[0]][0])
    for name in order:
        sections, outputs, lineno = equations[name]
        if len(sections) != k:
            raise ParseError(
                "state %r lists %d sections, expected %d" % (name, len(sections), k),
                lineno,
            )
        if outputs is not None:
            if len(outputs) != k:
                raise ParseError(
                    "output map of %r has %d entries, expected %d"
                    % (name, len(outputs), k),
                    lineno,
                )
            for y in outputs:
                if not 1 <= y <= k:
                    raise LetterOutOfRange(
                        "line %d: output letter %r of %r outside 1..%d"
                        % (lineno, y, name, k)
                    )
        for ref in sections:
            if ref not in equations:
                raise MissingDefinition(
                    "state %r references undefined %r" % (name, ref), lineno
                )

    if main is not None and main not in equations:
        raise UnknownStateName("main state %r is not defined" % main)

    state_index = {name: i for i, name in enumerate(order)}
    identity_row = list(range(1, k + 1))
    delta = []
    rho = []
    for name in order:
        sections, outputs, _ = equations[name]
        delta.append([state_index[ref] for ref in sections])
        rho.append(list(outputs) if outputs is not None else list(identity_row))
    machine = MealyMachine(k, delta, rho, state_names=list(order))

    transformations = {
        name: canonicalize(machine, state_index[name]) for name in order
    }
    return ParsedAutomaton(
        alphabet_size=k,
        transformations=transformations,
        main=main,
        names=tuple(order),
    )


def state_labels(t):
    """Presentation names for the canonical states of `t`.

    Uses parsed names when available, otherwise q0..qn-1 in canonical order.
    """
    if t.state_names is not None:
        return list(t.state_names)
    return ["q%d" % q for q in range(t.n_states)]


def wreath_text(t, name=None):
    """Re-parseable wreath presentation of a canonical transformation.

    The root state keeps `name` when given (and free of collisions); the
    output bracket is omitted for states with identity output maps.
    """
    k = t.alphabet_size
    labels = state_labels(t)
    if name is not None and name not in labels[1:]:
        labels[0] = name
    identity_row = list(range(1, k + 1))
    lines = ["alphabet = %d" % k, "main = %s" % labels[0]]
    for q in range(t.n_states):
        sections = ", ".join(labels[p] for p in t.machine.delta[q])
        row = t.machine.rho[q]
        if row == identity_row:
            lines.append("%s = (%s)" % (labels[q], sections))
        else:
            lines.append("%s = (%s)[%s]" % (labels[q], sections, ", ".join(map(str, row))))
    return "\n".join(lines) + "\n"
