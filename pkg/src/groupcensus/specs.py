"""Text grammar for group specs.

    spec := term { "x" term }
    term := NAME "(" INT { "," INT } ")"

NAME is one of C, D, S, A, PSL2, PSU3, H, Q; whitespace is insignificant;
"x" is the direct product, left-associative.
"""

from __future__ import annotations

from .constructors import (
    Alternating,
    Cyclic,
    Dicyclic,
    Dihedral,
    GroupSpec,
    Heisenberg,
    Product,
    PSL2,
    PSU3,
    Symmetric,
)

_FAMILIES = {
    "C": Cyclic,
    "D": Dihedral,
    "S": Symmetric,
    "A": Alternating,
    "PSL2": PSL2,
    "PSU3": PSU3,
    "H": Heisenberg,
    "Q": Dicyclic,
}

_NAMES = {
    Cyclic: "C",
    Dihedral: "D",
    Symmetric: "S",
    Alternating: "A",
    PSL2: "PSL2",
    PSU3: "PSU3",
    Heisenberg: "H",
    Dicyclic: "Q",
}


class SpecParseError(ValueError):
    def __init__(self, offset: int, expected: set[str], found: str):
        self.offset = offset
        self.expected = frozenset(expected)
        self.found = found
        exp = ", ".join(sorted(expected))
        super().__init__(f"parse error at offset {offset}: expected {exp}, found {found}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else "end of input"

    def _fail(self, expected: set[str]):
        raise SpecParseError(self.pos, expected, self._peek())

    def _expect(self, ch: str):
        self._skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            self._fail({repr(ch)})
        self.pos += 1

    def _int(self) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self._fail({"integer"})
        return int(self.text[start:self.pos])

    def _name(self) -> str:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() and self.text[self.pos] != "x"
        ):
            self.pos += 1
        name = self.text[start:self.pos]
        if name not in _FAMILIES:
            self.pos = start
            self._fail(set(_FAMILIES))
        return name

    def term(self) -> GroupSpec:
        name = self._name()
        self._expect("(")
        args = [self._int()]
        while True:
            self._skip_ws()
            if self.pos < len(self.text) and self.text[self.pos] == ",":
                self.pos += 1
                args.append(self._int())
            else:
                break
        self._expect(")")
        if len(args) != 1:
            raise SpecParseError(
                self.pos, {"1 argument"}, f"{len(args)} arguments to {name}"
            )
        return _FAMILIES[name](args[0])

    def spec(self) -> GroupSpec:
        node = self.term()
        while True:
            self._skip_ws()
            if self.pos < len(self.text) and self.text[self.pos] == "x":
                self.pos += 1
                node = Product(node, self.term())
            else:
                break
        self._skip_ws()
        if self.pos != len(self.text):
            self._fail({"'x'", "end of input"})
        return node


def parse_spec(text: str) -> GroupSpec:
    return _Parser(text).spec()


def format_spec(spec: GroupSpec) -> str:
    if isinstance(spec, Product):
        return f"{format_spec(spec.left)} x {format_spec(spec.right)}"
    (value,) = (getattr(spec, f) for f in spec.__dataclass_fields__)
    return f"{_NAMES[type(spec)]}({value})"
