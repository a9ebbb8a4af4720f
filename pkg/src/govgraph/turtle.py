"""Parsing and serialization for the two interchange formats.

N-Triples (`.nt`) is the canonical line-based interchange format; a
Turtle subset (`.ttl`) is the format fixtures are written in by hand.
The Turtle subset covers `@prefix`, `@base`, prefixed names, `a`,
predicate lists with ";", object lists with ",", string escapes, and
integer/decimal shorthand. Collections and (nested) blank-node property
lists are rejected as unsupported constructs.

Blank node labels are store-scoped, so every parse suffixes them with a
per-document nonce; two files never share a blank node. "#" starts a
comment to end of line in both formats, outside IRIs and literals.

All functions are pure apart from the nonce counter and safe to call
concurrently.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping
from urllib.parse import urljoin

from govgraph import ns
from govgraph.rdf import Blank, Iri, Literal, Term, Triple, render_triple

# Prefix label -> namespace IRI; the empty label is a valid prefix.
PrefixMap = dict[str, str]


@dataclass(frozen=True, slots=True)
class ParseDiagnostic:
    """Position (1-based) of the first offending character, plus why."""

    line: int
    column: int
    message: str


class ParseError(Exception):
    def __init__(self, line: int, column: int, message: str) -> None:
        super().__init__(f"{line}:{column}: {message}")
        self.diagnostic = ParseDiagnostic(line, column, message)

    @property
    def line(self) -> int:
        return self.diagnostic.line

    @property
    def column(self) -> int:
        return self.diagnostic.column

    @property
    def message(self) -> str:
        return self.diagnostic.message


_SCHEME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.-]*:")
_IRI_BODY_RE = re.compile(r'^[^\x00-\x20<>"{}|^`\\]*$')
_BLANK_LABEL_RE = re.compile(r"[A-Za-z0-9_-]+")
_LANG_RE = re.compile(r"[A-Za-z]+(?:-[A-Za-z0-9]+)*")
_PNAME_PREFIX_RE = re.compile(r"[A-Za-z][A-Za-z0-9_-]*")
_WORD_RE = re.compile(r"[A-Za-z]*")
_PNAME_LOCAL_RE = re.compile(r"[A-Za-z0-9_][A-Za-z0-9_.-]*")
_NUMBER_RE = re.compile(r"[+-]?(?:\d+\.\d+|\.\d+|\d+)")

_ECHAR = {
    "t": "\t",
    "b": "\b",
    "n": "\n",
    "r": "\r",
    "f": "\f",
    '"': '"',
    "'": "'",
    "\\": "\\",
}

# Distinguishes blank nodes of one parsed document from every other's.
_doc_counter = itertools.count()


def _unescape(raw: str, line: int, col: int, *, iri: bool) -> str:
    """Decode \\-escapes; `col` is the column of raw[0] for diagnostics."""
    if "\\" not in raw:
        return raw
    out = []
    i = 0
    n = len(raw)
    while i < n:
        ch = raw[i]
        if ch != "\\":
            out.append(ch)
            i += 1
            continue
        if i + 1 >= n:
            raise ParseError(line, col + i, "dangling escape")
        esc = raw[i + 1]
        if esc in ("u", "U"):
            width = 4 if esc == "u" else 8
            hexpart = raw[i + 2 : i + 2 + width]
            if len(hexpart) < width or not all(c in "0123456789abcdefABCDEF" for c in hexpart):
                raise ParseError(line, col + i, f"bad \\{esc} escape")
            code = int(hexpart, 16)
            if code > 0x10FFFF:
                raise ParseError(line, col + i, f"bad \\{esc} escape")
            out.append(chr(code))
            i += 2 + width
        elif not iri and esc in _ECHAR:
            out.append(_ECHAR[esc])
            i += 2
        else:
            raise ParseError(line, col + i, f"unknown escape \\{esc}")
    return "".join(out)


def _check_absolute(iri: str, line: int, col: int) -> str:
    if not _SCHEME_RE.match(iri):
        raise ParseError(line, col, f"relative IRI <{iri}>")
    return iri


# ---------------------------------------------------------------------------
# N-Triples
# ---------------------------------------------------------------------------


class _LineScanner:
    """Scans one N-Triples line; positions reported as (line, index+1)."""

    __slots__ = ("text", "i", "line_no")

    def __init__(self, text: str, line_no: int) -> None:
        self.text = text
        self.i = 0
        self.line_no = line_no

    def error(self, message: str, at: int | None = None) -> ParseError:
        return ParseError(self.line_no, (self.i if at is None else at) + 1, message)

    def skip_space(self) -> None:
        text, i = self.text, self.i
        while i < len(text) and text[i] in " \t":
            i += 1
        self.i = i

    def at_end(self) -> bool:
        return self.i >= len(self.text)

    def peek(self) -> str:
        return self.text[self.i] if self.i < len(self.text) else ""

    def read_iri(self) -> Iri:
        start = self.i
        close = self.text.find(">", self.i + 1)
        if close < 0:
            raise self.error("unterminated IRI", start)
        raw = self.text[start + 1 : close]
        self.i = close + 1
        value = _unescape(raw, self.line_no, start + 2, iri=True)
        if not _IRI_BODY_RE.match(value):
            raise self.error("illegal character in IRI", start)
        return Iri(_check_absolute(value, self.line_no, start + 1))

    def read_blank(self, suffix: str) -> Blank:
        start = self.i
        m = _BLANK_LABEL_RE.match(self.text, self.i + 2)
        if self.text[self.i : self.i + 2] != "_:" or not m:
            raise self.error("malformed blank node label", start)
        self.i = m.end()
        return Blank(m.group() + suffix)

    def read_literal(self) -> Literal:
        start = self.i
        text = self.text
        i = self.i + 1
        while True:
            close = text.find('"', i)
            if close < 0:
                raise self.error("unterminated literal", start)
            backslashes = 0
            j = close - 1
            while j >= 0 and text[j] == "\\":
                backslashes += 1
                j -= 1
            if backslashes % 2 == 0:
                break
            i = close + 1
        lexical = _unescape(text[start + 1 : close], self.line_no, start + 2, iri=False)
        self.i = close + 1
        if self.peek() == "@":
            m = _LANG_RE.match(text, self.i + 1)
            if not m:
                raise self.error("malformed language tag")
            self.i = m.end()
            return Literal(lexical, lang=m.group())
        if text[self.i : self.i + 2] == "^^":
            self.i += 2
            if self.peek() != "<":
                raise self.error("expected datatype IRI")
            return Literal(lexical, datatype=self.read_iri().value)
        return Literal(lexical)


def parse_ntriples(text: str) -> list[Triple]:
    """Parse an N-Triples document, one triple per non-comment line.

    Raises ParseError carrying a 1-based line/column diagnostic on the
    first malformed statement. Input order is preserved.
    """
    suffix = f"_d{next(_doc_counter)}"
    triples: list[Triple] = []
    for line_no, raw_line in enumerate(text.split("\n"), start=1):
        sc = _LineScanner(raw_line.rstrip("\r"), line_no)
        sc.skip_space()
        if sc.at_end() or sc.peek() == "#":
            continue
        subject = _nt_term(sc, suffix, position="subject")
        sc.skip_space()
        if sc.peek() != "<":
            raise sc.error("expected IRI predicate")
        predicate = sc.read_iri()
        sc.skip_space()
        object_ = _nt_term(sc, suffix, position="object")
        sc.skip_space()
        if sc.peek() != ".":
            raise sc.error("missing terminating '.'")
        sc.i += 1
        sc.skip_space()
        if not sc.at_end() and sc.peek() != "#":
            raise sc.error("trailing content after '.'")
        triples.append(Triple(subject, predicate, object_))
    return triples


def _nt_term(sc: _LineScanner, suffix: str, *, position: str) -> Term:
    ch = sc.peek()
    if ch == "<":
        return sc.read_iri()
    if ch == "_":
        return sc.read_blank(suffix)
    if ch == '"':
        if position == "subject":
            raise sc.error("literal subject")
        return sc.read_literal()
    if sc.at_end():
        raise sc.error("missing terminating '.'")
    raise sc.error(f"expected {position} term")


# ---------------------------------------------------------------------------
# Turtle subset
# ---------------------------------------------------------------------------


class _TurtleParser:
    def __init__(self, text: str, *, prefixes: PrefixMap | None = None, rename_blanks: bool = True) -> None:
        self.text = text
        self.n = len(text)
        self.i = 0
        self.line = 1
        self.col = 1
        self.prefixes: PrefixMap = dict(prefixes or {})
        self.base: str | None = None
        self.suffix = f"_d{next(_doc_counter)}" if rename_blanks else ""
        self.triples: list[Triple] = []

    # -- low-level cursor -------------------------------------------------

    def error(self, message: str, pos: tuple[int, int] | None = None) -> ParseError:
        line, col = pos if pos else (self.line, self.col)
        return ParseError(line, col, message)

    def here(self) -> tuple[int, int]:
        return (self.line, self.col)

    def peek(self) -> str:
        return self.text[self.i] if self.i < self.n else ""

    def take(self) -> str:
        ch = self.text[self.i]
        self.i += 1
        if ch == "\n":
            self.line += 1
            self.col = 1
        else:
            self.col += 1
        return ch

    def take_span(self, length: int) -> str:
        # Only for spans known to contain no newline.
        span = self.text[self.i : self.i + length]
        self.i += length
        self.col += length
        return span

    def skip_ws(self) -> None:
        while self.i < self.n:
            ch = self.text[self.i]
            if ch in " \t\r\n":
                self.take()
            elif ch == "#":
                while self.i < self.n and self.text[self.i] != "\n":
                    self.take()
            else:
                return

    def expect(self, ch: str, what: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {what}")
        self.take()

    # -- document structure ----------------------------------------------

    def parse_document(self) -> list[Triple]:
        while True:
            self.skip_ws()
            if self.i >= self.n:
                return self.triples
            if self.peek() == "@":
                self.directive()
            else:
                self.statement()

    def directive(self) -> None:
        start = self.here()
        self.take()  # '@'
        word = self.word()
        if word == "prefix":
            self.skip_ws()
            label = self.pname_prefix()
            self.expect(":", "':' after prefix label")
            self.skip_ws()
            if self.peek() != "<":
                raise self.error("expected namespace IRI")
            namespace = self.iriref()
            self.skip_ws()
            self.expect(".", "'.' after @prefix")
            self.prefixes[label] = namespace.value
        elif word == "base":
            self.skip_ws()
            if self.peek() != "<":
                raise self.error("expected base IRI")
            base = self.iriref()
            self.skip_ws()
            self.expect(".", "'.' after @base")
            self.base = base.value
        else:
            raise self.error(f"unknown directive @{word}", start)

    def statement(self) -> None:
        subject = self.term(position="subject")
        while True:
            self.skip_ws()
            predicate = self.verb()
            while True:
                self.skip_ws()
                object_ = self.term(position="object")
                self.triples.append(Triple(subject, predicate, object_))
                self.skip_ws()
                if self.peek() == ",":
                    self.take()
                    continue
                break
            if self.peek() == ";":
                while self.peek() == ";":
                    self.take()
                    self.skip_ws()
                if self.peek() == ".":
                    self.take()
                    return
                continue
            if self.peek() == ".":
                self.take()
                return
            raise self.error("expected ';', ',' or '.'" if self.i < self.n else "unterminated statement")

    def verb(self) -> Iri:
        if self.peek() == "a":
            after = self.text[self.i + 1 : self.i + 2]
            if not after or after in " \t\r\n#<":
                self.take()
                return ns.RDF_TYPE
        term = self.term(position="predicate")
        if not isinstance(term, Iri):
            raise self.error("predicate must be an IRI")
        return term

    # -- terms --------------------------------------------------------------

    def term(self, *, position: str) -> Term:
        ch = self.peek()
        if not ch:
            raise self.error("unterminated statement")
        if ch == "<":
            return self.iriref()
        if ch == "_" and self.text[self.i + 1 : self.i + 2] == ":":
            if position == "predicate":
                raise self.error("predicate must be an IRI")
            return self.blank()
        if ch in "[(":
            raise self.error("unsupported construct")
        if ch == '"':
            if position != "object":
                raise self.error(f"literal {position}" if position == "subject" else "unexpected literal")
            return self.string_literal()
        if ch.isdigit() or (ch in "+-." and _NUMBER_RE.match(self.text, self.i)):
            if position != "object":
                raise self.error("unexpected number")
            return self.number()
        return self.pname()

    def iriref(self) -> Iri:
        start = self.here()
        self.take()  # '<'
        close = self.text.find(">", self.i)
        if close < 0 or "\n" in self.text[self.i : close]:
            raise self.error("unterminated IRI", start)
        raw = self.take_span(close - self.i)
        self.take()  # '>'
        value = _unescape(raw, start[0], start[1] + 1, iri=True)
        if not _IRI_BODY_RE.match(value):
            raise self.error("illegal character in IRI", start)
        if not _SCHEME_RE.match(value):
            if self.base is None:
                raise self.error(f"relative IRI <{value}>", start)
            value = urljoin(self.base, value)
            if not _SCHEME_RE.match(value):
                raise self.error(f"relative IRI <{value}>", start)
        return Iri(value)

    def blank(self) -> Blank:
        start = self.here()
        self.take_span(2)  # '_:'
        m = _BLANK_LABEL_RE.match(self.text, self.i)
        if not m:
            raise self.error("malformed blank node label", start)
        label = self.take_span(m.end() - self.i)
        return Blank(label + self.suffix)

    def word(self) -> str:
        m = _WORD_RE.match(self.text, self.i)
        return self.take_span(m.end() - self.i)

    def pname_prefix(self) -> str:
        m = _PNAME_PREFIX_RE.match(self.text, self.i)
        return self.take_span(m.end() - self.i) if m else ""

    def pname(self) -> Iri:
        start = self.here()
        label = self.pname_prefix()
        if self.peek() != ":":
            raise self.error("expected a term", start)
        self.take()
        m = _PNAME_LOCAL_RE.match(self.text, self.i)
        local = ""
        if m:
            end = m.end()
            # A trailing dot belongs to the statement, not the local name.
            while end > self.i and self.text[end - 1] == ".":
                end -= 1
            local = self.take_span(end - self.i)
        if label not in self.prefixes:
            raise self.error(f"unknown prefix {label}", start)
        value = self.prefixes[label] + local
        if not _SCHEME_RE.match(value):
            raise self.error(f"relative IRI <{value}>", start)
        return Iri(value)

    def string_literal(self) -> Literal:
        start = self.here()
        self.take()  # '"'
        body_start = self.i
        i = self.i
        while True:
            close = self.text.find('"', i)
            if close < 0 or "\n" in self.text[i:close]:
                raise self.error("unterminated literal", start)
            backslashes = 0
            j = close - 1
            while j >= body_start and self.text[j] == "\\":
                backslashes += 1
                j -= 1
            if backslashes % 2 == 0:
                break
            i = close + 1
        raw = self.take_span(close - self.i)
        self.take()  # closing '"'
        lexical = _unescape(raw, start[0], start[1] + 1, iri=False)
        if self.peek() == "@":
            self.take()
            m = _LANG_RE.match(self.text, self.i)
            if not m:
                raise self.error("malformed language tag")
            return Literal(lexical, lang=self.take_span(m.end() - self.i))
        if self.text[self.i : self.i + 2] == "^^":
            self.take_span(2)
            if self.peek() == "<":
                return Literal(lexical, datatype=self.iriref().value)
            return Literal(lexical, datatype=self.pname().value)
        return Literal(lexical)

    def number(self) -> Literal:
        # "5." scans as the integer 5; the dot stays for the terminator.
        m = _NUMBER_RE.match(self.text, self.i)
        raw = self.take_span(m.end() - self.i)
        datatype = ns.XSD_DECIMAL if "." in raw else ns.XSD_INTEGER
        return Literal(raw, datatype=datatype)


def parse_turtle(text: str) -> list[Triple]:
    """Parse a document in the Turtle subset.

    The result equals the N-Triples expansion of the document, in
    statement order (object lists expand left to right).
    """
    return _TurtleParser(text).parse_document()


def parse_term(text: str, prefixes: Mapping[str, str] | None = None) -> Term:
    """Parse one term: <iri>, "literal", _:label, number, or prefix:local.

    Blank labels are taken verbatim (no document nonce). Used by the CLI
    pattern-file and HTTP query front ends.
    """
    parser = _TurtleParser(text, prefixes=dict(prefixes or {}), rename_blanks=False)
    parser.skip_ws()
    term = parser.term(position="object")
    parser.skip_ws()
    if parser.i < parser.n:
        raise parser.error("trailing content after term")
    return term


def parse_file(path: str | Path) -> list[Triple]:
    """Parse a `.nt` or `.ttl` file (UTF-8) by extension."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".nt":
        return parse_ntriples(text)
    if path.suffix == ".ttl":
        return parse_turtle(text)
    raise ValueError(f"unsupported file extension: {path.name} (expected .nt or .ttl)")


def serialize_ntriples(triples: Iterable[Triple]) -> str:
    """Canonical N-Triples: unique statements sorted by their rendering.

    Equal triple sets serialize to byte-identical output regardless of
    input order or duplication.
    """
    lines = sorted({render_triple(t) for t in triples})
    return "\n".join(lines) + "\n" if lines else ""
