"""Text grammar for braid words and the fixture corpus format.

Grammar (whitespace separates tokens):

    braid  :=  "B" <n> ":" word
    word   :=  term*
    term   :=  INT  |  "(" word ")" "^" INT

A positive integer k names sigma_k and a negative one its inverse; a group
exponent e repeats the bracketed word e times, with negative e repeating the
inverse word.  Serialization always emits the flat form "B<n>: l1 l2 ...".

Fixture corpora are line-oriented: ``name ; braid-text ; expected-trivial``
with '#' comments and blank lines ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .words import BraidWord

__all__ = [
    "ParseError",
    "parse",
    "serialize",
    "Fixture",
    "parse_fixtures",
    "load_fixtures",
    "bundled_fixtures",
]


class ParseError(ValueError):
    """Malformed braid text; ``position`` is the 1-based character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_HEADER_RE = re.compile(r"\s*B(\d+)\s*:")
_TOKEN_RE = re.compile(r"(-?\d+)|([()^])|(\S)")


def _tokenize(text: str, start: int) -> list[tuple[str, int, int]]:
    """Tokens as (kind, value, position); kind is 'int' or the literal char."""
    tokens = []
    for m in _TOKEN_RE.finditer(text, start):
        pos = m.start() + 1
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), pos))
        elif m.group(2) is not None:
            tokens.append((m.group(2), 0, pos))
        else:
            raise ParseError(f"unexpected character {m.group(3)!r}", pos)
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, int, int]], n: int, limit: int | None):
        self.tokens = tokens
        self.pos = 0
        self.n = n
        self.limit = limit

    def _peek(self) -> tuple[str, int, int] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self) -> tuple[str, int, int] | None:
        tok = self._peek()
        if tok is not None:
            self.pos += 1
        return tok

    def _check_size(self, count: int, position: int) -> None:
        if self.limit is not None and count > self.limit:
            raise ParseError(
                f"word exceeds the maximum of {self.limit} letters", position
            )

    def parse_word(self, closing: bool) -> list[int]:
        values: list[int] = []
        while True:
            tok = self._peek()
            if tok is None:
                if closing:
                    raise ParseError("missing ')'", self._end_position())
                return values
            kind, value, position = tok
            if kind == ")":
                if not closing:
                    raise ParseError("unmatched ')'", position)
                return values
            self._next()
            if kind == "int":
                if value == 0 or abs(value) > self.n - 1:
                    raise ParseError(
                        f"generator index {value} out of range for {self.n} strands",
                        position,
                    )
                values.append(value)
                self._check_size(len(values), position)
            elif kind == "(":
                group = self.parse_word(closing=True)
                self._next()  # the ')'
                caret = self._next()
                if caret is None or caret[0] != "^":
                    raise ParseError(
                        "expected '^' after ')'",
                        caret[2] if caret else self._end_position(),
                    )
                exp = self._next()
                if exp is None or exp[0] != "int":
                    raise ParseError(
                        "expected an integer exponent after '^'",
                        exp[2] if exp else self._end_position(),
                    )
                exponent = exp[1]
                if exponent == 0:
                    raise ParseError("zero exponent", exp[2])
                self._check_size(len(values) + len(group) * abs(exponent), exp[2])
                if exponent < 0:
                    group = [-v for v in reversed(group)]
                values.extend(group * abs(exponent))
            else:
                raise ParseError(f"unexpected {kind!r}", position)

    def _end_position(self) -> int:
        if self.tokens:
            return self.tokens[-1][2] + 1
        return 1


def parse(text: str, max_letters: int | None = None) -> BraidWord:
    """Parse braid text like ``"B5: (3 4 -2 -1)^5"`` into a word."""
    header = _HEADER_RE.match(text)
    if header is None:
        raise ParseError("expected header 'B<n>:'", 1)
    n = int(header.group(1))
    if n < 1:
        raise ParseError("strand count must be >= 1", header.start(1) + 1)
    tokens = _tokenize(text, header.end())
    parser = _Parser(tokens, n, max_letters)
    values = parser.parse_word(closing=False)
    return BraidWord.from_ints(n, values)


def serialize(b: BraidWord) -> str:
    """Flat text form; ``parse(serialize(b))`` reproduces ``b`` exactly."""
    head = f"B{b.n}:"
    if not b.letters:
        return head
    return head + " " + " ".join(str(v) for v in b.to_ints())


@dataclass(frozen=True, slots=True)
class Fixture:
    """One corpus entry: a named braid with its expected verdict."""

    name: str
    text: str
    expected_trivial: bool


def parse_fixtures(text: str) -> list[Fixture]:
    """Parse fixture lines ``name ; braid-text ; expected-trivial``."""
    fixtures = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [part.strip() for part in line.split(";")]
        if len(parts) != 3:
            raise ValueError(
                f"fixture line {lineno} must have 3 ';'-separated fields, got {len(parts)}"
            )
        name, braid_text, verdict = parts
        if verdict.lower() not in ("true", "false"):
            raise ValueError(
                f"fixture line {lineno}: expected-trivial must be true or false, got {verdict!r}"
            )
        fixtures.append(Fixture(name, braid_text, verdict.lower() == "true"))
    return fixtures


def load_fixtures(path: str | Path) -> list[Fixture]:
    return parse_fixtures(Path(path).read_text(encoding="utf-8"))


def bundled_fixtures() -> list[Fixture]:
    """The corpus shipped with the package (showcase braids and counterexamples)."""
    text = resources.files(__package__).joinpath("data/fixtures.txt").read_text("utf-8")
    return parse_fixtures(text)
